#ifndef JACKCONE_MONTE_CARLO_HPP
#define JACKCONE_MONTE_CARLO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jackcone/matrix.hpp"
#include "jackcone/partition.hpp"
#include "jackcone/rational.hpp"
#include "jackcone/wishart.hpp"

namespace jackcone {

/// Real non-central Wishart samples at the standardised scale I/2, stored
/// flat (m*m doubles per sample, row-major).
struct SampleBatch {
    int m = 0;
    long count = 0;
    std::uint64_t seed = 0;
    int chunk_size = 0;
    std::vector<double> data;

    std::span<const double> raw(long i) const {
        return {data.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(m * m),
                static_cast<std::size_t>(m * m)};
    }
    RealMatrix sample(long i) const;
};

struct SamplerOptions {
    int chunk_size = 4096;
    int threads = 1;
};

/// S = sum_{j=1}^{2 beta} x_j x_j^T with x_j ~ N(mu_j, I/2), where
/// mu_j = sqrt(omega_i) e_i for the j-th nonzero omega_i and 0 afterwards, so
/// sum mu_j mu_j^T = diag(omega). Chunk c draws from mt19937_64 seeded by
/// (seed, c), Gaussians by inverse CDF; the batch depends only on
/// (seed, chunk_size, count).
/// Throws NonHalfInteger unless 2 beta is a positive integer and
/// RankExceedsDegrees when omega has more than 2 beta nonzero entries.
SampleBatch sample_noncentral_wishart(int m, const Rational& beta, std::span<const double> omega, long count,
                                      std::uint64_t seed, SamplerOptions options = {});

/// Every sample symmetric with eigenvalues >= -1e-12 * (1 + trace).
bool batch_is_psd(const SampleBatch& batch);

struct Estimate {
    double mean = 0.0;
    double standard_error = 0.0;
    long count = 0;
};

/// Mean of Z_kappa(S) (real zonal, d = 1) from the power sums tr(S^j).
/// Throws DegreeTooHigh for |kappa| > 4.
Estimate empirical_moment(const SampleBatch& batch, const Partition& kappa, int threads = 1);

/// Mean of exp(-tr(u S)). Throws OutOfDomain unless I + u is positive definite.
Estimate empirical_laplace(const SampleBatch& batch, const RealMatrix& u, int threads = 1);

struct ComparisonRow {
    std::string name;
    double exact = 0.0;
    double empirical = 0.0;
    double standard_error = 0.0;
    double z_score = 0.0;
    double relative_error = 0.0;
    bool relative_gated = false;  // relative error must be <= 2%
    bool passed = false;
};

struct ComparisonReport {
    long count = 0;
    std::uint64_t seed = 0;
    std::vector<ComparisonRow> rows;
    bool passed() const;
};

constexpr double kZGate = 4.0;
constexpr double kRelativeGate = 0.02;

/// Empirical E Z_kappa(S(t)) against putative_moment for each kappa, where
/// S(t) has non-centrality t Omega'. Real cone only.
ComparisonReport verify_moment_formula(const WishartParams& params, const std::vector<Partition>& kappas,
                                       const Rational& t, long count, std::uint64_t seed, SamplerOptions options = {});

/// Empirical exp(-tr(u S)) against laplace_transform for each u. Real cone,
/// standardised scale, eigenvalue-vector Omega (so Omega = diag(omega)).
ComparisonReport verify_laplace(const WishartParams& params, const std::vector<RealMatrix>& points, long count,
                                std::uint64_t seed, SamplerOptions options = {});

}  // namespace jackcone

#endif  // JACKCONE_MONTE_CARLO_HPP
