#include "jackcone/monte_carlo.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include "jackcone/error.hpp"

namespace jackcone {

namespace {

// Welford accumulator; merge follows Chan et al.
struct Accumulator {
    long n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    static Accumulator merge(const Accumulator& a, const Accumulator& b) {
        if (a.n == 0) return b;
        if (b.n == 0) return a;
        Accumulator out;
        out.n = a.n + b.n;
        const double delta = b.mean - a.mean;
        const double nb = static_cast<double>(b.n) / static_cast<double>(out.n);
        out.mean = a.mean + delta * nb;
        out.m2 = a.m2 + b.m2 + delta * delta * static_cast<double>(a.n) * nb;
        return out;
    }
};

// Fixed-shape pairwise tree, so the result does not depend on scheduling.
Accumulator reduce_pairwise(std::vector<Accumulator> parts) {
    if (parts.empty()) return {};
    while (parts.size() > 1) {
        std::vector<Accumulator> next;
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(Accumulator::merge(parts[i], parts[i + 1]));
        if (parts.size() % 2 == 1) next.push_back(parts.back());
        parts = std::move(next);
    }
    return parts.front();
}

// Runs body(chunk) for every chunk; chunk c goes to worker c % threads.
void for_each_chunk(long chunks, int threads, const std::function<void(long)>& body) {
    threads = std::max(1, std::min<int>(threads, static_cast<int>(std::max<long>(chunks, 1))));
    if (threads == 1) {
        for (long c = 0; c < chunks; ++c) body(c);
        return;
    }
    std::vector<std::jthread> workers;
    for (int w = 0; w < threads; ++w)
        workers.emplace_back([&, w] {
            for (long c = w; c < chunks; c += threads) body(c);
        });
}

double uniform_open(std::mt19937_64& engine) {
    return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& engine) {
    return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * uniform_open(engine));
}

Estimate finish(const Accumulator& acc) {
    Estimate e;
    e.count = acc.n;
    e.mean = acc.mean;
    e.standard_error = acc.n > 1 ? std::sqrt(acc.m2 / static_cast<double>(acc.n - 1) / static_cast<double>(acc.n)) : 0.0;
    return e;
}

template <class Statistic>
Estimate estimate(const SampleBatch& batch, int threads, Statistic&& statistic) {
    const long chunk = std::max(1, batch.chunk_size);
    const long chunks = (batch.count + chunk - 1) / chunk;
    std::vector<Accumulator> parts(static_cast<std::size_t>(chunks));
    for_each_chunk(chunks, threads, [&](long c) {
        Accumulator acc;
        for (long i = c * chunk; i < std::min(batch.count, (c + 1) * chunk); ++i) acc.add(statistic(batch.raw(i)));
        parts[static_cast<std::size_t>(c)] = acc;
    });
    return finish(reduce_pairwise(std::move(parts)));
}

ComparisonRow make_row(std::string name, double exact, const Estimate& e, bool relative_gated) {
    ComparisonRow row;
    row.name = std::move(name);
    row.exact = exact;
    row.empirical = e.mean;
    row.standard_error = e.standard_error;
    const double diff = e.mean - exact;
    if (e.standard_error > 0.0)
        row.z_score = diff / e.standard_error;
    else
        row.z_score = diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff);
    row.relative_error = exact != 0.0 ? std::abs(diff) / std::abs(exact) : 0.0;
    row.relative_gated = relative_gated && exact != 0.0;
    row.passed = std::abs(row.z_score) <= kZGate && (!row.relative_gated || row.relative_error <= kRelativeGate);
    return row;
}

std::vector<double> standardised_eigenvalues(const WishartParams& params) {
    if (params.cone.family != ConeFamily::RealSymmetric)
        throw Error(ErrorCode::InvalidParams, "sampling is only available for the real symmetric cone");
    const WishartParams p = params.scale.is_unit() ? params : standardize(params);
    std::vector<double> omega;
    if (p.omega.kind == NonCentrality::Kind::Eigenvalues) {
        for (const auto& v : p.omega.eigenvalues) omega.push_back(to_double(v));
        return omega;
    }
    if (p.omega.kind == NonCentrality::Kind::SimilarMatrix)
        throw Error(ErrorCode::InvalidParams, "sampling needs a symmetric non-centrality");
    omega = symmetric_eigenvalues(p.omega.as_real_matrix());
    double largest = 0.0;
    for (double v : omega) largest = std::max(largest, std::abs(v));
    for (double& v : omega)
        if (v <= 1e-10 * largest) v = 0.0;
    return omega;
}

}  // namespace

RealMatrix SampleBatch::sample(long i) const {
    RealMatrix s(m, m);
    const auto r = raw(i);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) s(a, b) = r[static_cast<std::size_t>(a * m + b)];
    return s;
}

SampleBatch sample_noncentral_wishart(int m, const Rational& beta, std::span<const double> omega, long count,
                                      std::uint64_t seed, SamplerOptions options) {
    if (m < 1) throw Error(ErrorCode::InvalidSize, "matrix order must be >= 1");
    if (static_cast<int>(omega.size()) != m) throw Error(ErrorCode::DimensionMismatch, "need m non-centrality eigenvalues");
    if (count < 0) throw Error(ErrorCode::InvalidParams, "sample count must be >= 0");
    const Rational twice = 2 * beta;
    if (twice.get_den() != 1 || sgn(twice) <= 0)
        throw Error(ErrorCode::NonHalfInteger, "2 beta must be a positive integer, got beta = " + to_string(beta));
    const int n = static_cast<int>(twice.get_num().get_si());

    // Mean vectors: one coordinate direction per nonzero eigenvalue.
    std::vector<std::pair<int, double>> means;
    for (int i = 0; i < m; ++i) {
        const double w = omega[static_cast<std::size_t>(i)];
        if (w < 0.0) throw Error(ErrorCode::InvalidParams, "non-centrality eigenvalues must be >= 0");
        if (w > 0.0) means.emplace_back(i, std::sqrt(w));
    }
    if (static_cast<int>(means.size()) > n)
        throw Error(ErrorCode::RankExceedsDegrees, std::to_string(means.size()) + " nonzero non-centrality eigenvalues exceed 2 beta = " +
                                                       std::to_string(n));

    SampleBatch batch;
    batch.m = m;
    batch.count = count;
    batch.seed = seed;
    batch.chunk_size = std::max(1, options.chunk_size);
    batch.data.assign(static_cast<std::size_t>(count) * static_cast<std::size_t>(m * m), 0.0);

    const long chunk = batch.chunk_size;
    const long chunks = (count + chunk - 1) / chunk;
    const double scale = std::sqrt(0.5);
    for_each_chunk(chunks, options.threads, [&](long c) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) >> 32)};
        std::mt19937_64 engine(seq);
        std::vector<double> x(static_cast<std::size_t>(m));
        for (long s = c * chunk; s < std::min(count, (c + 1) * chunk); ++s) {
            double* out = batch.data.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(m * m);
            for (int j = 0; j < n; ++j) {
                for (auto& v : x) v = scale * standard_normal(engine);
                if (j < static_cast<int>(means.size())) x[static_cast<std::size_t>(means[static_cast<std::size_t>(j)].first)] += means[static_cast<std::size_t>(j)].second;
                for (int a = 0; a < m; ++a)
                    for (int b = a; b < m; ++b) out[a * m + b] += x[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(b)];
            }
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < a; ++b) out[a * m + b] = out[b * m + a];
        }
    });
    if (!batch_is_psd(batch)) throw Error(ErrorCode::NotPositiveDefinite, "sampled matrix is not positive semidefinite");
    return batch;
}

bool batch_is_psd(const SampleBatch& batch) {
    for (long i = 0; i < batch.count; ++i) {
        const RealMatrix s = batch.sample(i);
        if (!s.is_symmetric()) return false;
        if (batch.m == 1) {
            if (s(0, 0) < -1e-12) return false;
            continue;
        }
        const double tolerance = -1e-12 * (1.0 + std::abs(s.trace()));
        if (batch.m == 2) {
            // Closed form keeps the check cheap for the common case.
            const double tr = s.trace();
            const double det = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
            const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
            if (tr / 2.0 - disc < tolerance) return false;
            continue;
        }
        for (double v : symmetric_eigenvalues(s))
            if (v < tolerance) return false;
    }
    return true;
}

Estimate empirical_moment(const SampleBatch& batch, const Partition& kappa, int threads) {
    if (kappa.degree() > 4)
        throw Error(ErrorCode::DegreeTooHigh, "empirical moments are limited to |kappa| <= 4");
    if (kappa.empty()) {
        Estimate e;
        e.mean = 1.0;
        e.count = batch.count;
        return e;
    }
    const int m = batch.m;
    const int k = kappa.degree();
    const bool vanishes = kappa.length() > m;
    return estimate(batch, threads, [&](std::span<const double> s) {
        if (vanishes) return 0.0;
        // tr(S^j) by repeated products.
        std::vector<double> p(static_cast<std::size_t>(k));
        std::vector<double> power(s.begin(), s.end()), next(s.size());
        for (int j = 0; j < k; ++j) {
            double tr = 0.0;
            for (int a = 0; a < m; ++a) tr += power[static_cast<std::size_t>(a * m + a)];
            p[static_cast<std::size_t>(j)] = tr;
            if (j + 1 == k) break;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    double acc = 0.0;
                    for (int c = 0; c < m; ++c) acc += power[static_cast<std::size_t>(a * m + c)] * s[static_cast<std::size_t>(c * m + b)];
                    next[static_cast<std::size_t>(a * m + b)] = acc;
                }
            std::swap(power, next);
        }
        const double z = zonal_from_power_sums(kappa, m, 1, std::span<const double>(p));
        // 0 <= Z_kappa(S) <= tr(S)^k on the cone; values below roundoff are exact zeros.
        return std::abs(z) <= 1e-12 * std::pow(std::abs(p[0]), k) ? 0.0 : z;
    });
}

Estimate empirical_laplace(const SampleBatch& batch, const RealMatrix& u, int threads) {
    const int m = batch.m;
    if (u.rows() != m || u.cols() != m) throw Error(ErrorCode::DimensionMismatch, "u must be m x m");
    if (!cholesky_succeeds(RealMatrix::identity(m) + u))
        throw Error(ErrorCode::OutOfDomain, "I + u is not positive definite");
    return estimate(batch, threads, [&](std::span<const double> s) {
        double tr = 0.0;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) tr += u(a, b) * s[static_cast<std::size_t>(b * m + a)];
        return std::exp(-tr);
    });
}

bool ComparisonReport::passed() const {
    for (const auto& row : rows)
        if (!row.passed) return false;
    return true;
}

ComparisonReport verify_moment_formula(const WishartParams& params, const std::vector<Partition>& kappas,
                                       const Rational& t, long count, std::uint64_t seed, SamplerOptions options) {
    validate(params);
    if (sgn(t) < 0) throw Error(ErrorCode::InvalidParams, "t must be >= 0");
    std::vector<double> omega = standardised_eigenvalues(params);
    for (double& v : omega) v *= to_double(t);
    const SampleBatch batch = sample_noncentral_wishart(params.cone.rank, params.beta, omega, count, seed, options);
    ComparisonReport report;
    report.count = count;
    report.seed = seed;
    for (const auto& kappa : kappas) {
        const double exact = to_double(putative_moment(kappa, params, t));
        const Estimate e = empirical_moment(batch, kappa, options.threads);
        report.rows.push_back(make_row("Z" + to_string(kappa), exact, e, kappa.degree() <= 2));
    }
    return report;
}

ComparisonReport verify_laplace(const WishartParams& params, const std::vector<RealMatrix>& points, long count,
                                std::uint64_t seed, SamplerOptions options) {
    validate(params);
    if (!params.scale.is_unit() || params.omega.kind != NonCentrality::Kind::Eigenvalues)
        throw Error(ErrorCode::InvalidParams, "Laplace verification needs the standardised scale and an eigenvalue vector");
    const std::vector<double> omega = standardised_eigenvalues(params);
    const SampleBatch batch = sample_noncentral_wishart(params.cone.rank, params.beta, omega, count, seed, options);
    ComparisonReport report;
    report.count = count;
    report.seed = seed;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double exact = laplace_transform(params, points[i]).value;
        const Estimate e = empirical_laplace(batch, points[i], options.threads);
        report.rows.push_back(make_row("laplace[" + std::to_string(i) + "]", exact, e, false));
    }
    return report;
}

}  // namespace jackcone
