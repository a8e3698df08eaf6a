#ifndef JACKCONE_WISHART_HPP
#define JACKCONE_WISHART_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jackcone/cone.hpp"
#include "jackcone/matrix.hpp"
#include "jackcone/partition.hpp"
#include "jackcone/power_sums.hpp"
#include "jackcone/rational.hpp"
#include "jackcone/symmetric_polynomial.hpp"

namespace jackcone {

// ---------------------------------------------------------------------------
// Pochhammer symbols

/// prod_i (a - (i-1)/alpha)_{kappa_i} with the rising factorial
/// (b)_k = b (b+1) ... (b+k-1).
Rational pochhammer_general(const Rational& a, const Partition& kappa, const Rational& alpha);

/// (a)_kappa / (a)_sigma evaluated as the product
/// prod_i (a - (i-1)/alpha + sigma_i)_{kappa_i - sigma_i}, finite even when
/// (a)_sigma = 0. Throws NotNested unless sigma is contained in kappa.
Rational pochhammer_ratio(const Rational& a, const Partition& kappa, const Partition& sigma, const Rational& alpha);

// ---------------------------------------------------------------------------
// Zonal polynomials

/// Coefficients c_kappa (|kappa| = degree, l(kappa) <= rank) with
/// sum_kappa c_kappa J_kappa(x; 2/d) / J_kappa(1^r; 2/d) = (x_1 + ... + x_r)^degree.
struct ZonalNormalization {
    int degree = 0;
    int rank = 1;
    int peirce = 1;
    std::map<Partition, Rational> coefficients;
};

const ZonalNormalization& zonal_normalization(int degree, int rank, int peirce);

/// Z_kappa = c_kappa J_kappa(.; 2/d) / J_kappa(1^r; 2/d) in r variables, in
/// the monomial basis. Zero polynomial when l(kappa) > r.
const SymmetricPolynomial& zonal_polynomial(const Partition& kappa, int rank, int peirce);

/// The same polynomial in the power-sum basis.
const PowerSumExpansion& zonal_power_sums(const Partition& kappa, int rank, int peirce);

/// Z_kappa at a cone element with the given eigenvalues (r = eigenvalues.size()).
Rational zonal_value(const Partition& kappa, std::span<const Rational> eigenvalues, int peirce);

/// Z_kappa(e) = c_kappa.
Rational zonal_at_identity(const Partition& kappa, int rank, int peirce);

/// Z_kappa from power sums p_j = tr(x^j), j = 1..|kappa|.
Rational zonal_from_power_sums(const Partition& kappa, int rank, int peirce, std::span<const Rational> power_sums);
double zonal_from_power_sums(const Partition& kappa, int rank, int peirce, std::span<const double> power_sums);

// ---------------------------------------------------------------------------
// Parameters

/// Scale parameter Sigma. A scalar c means Sigma = c e and is valid for every
/// cone; the standardised ("unit") scale is e/2.
struct Scale {
    enum class Kind { Scalar, ExactMatrix, RealMatrix };
    Kind kind = Kind::Scalar;
    Rational scalar = Rational(1, 2);
    RationalMatrix exact;
    RealMatrix approx;

    static Scale unit() { return {}; }
    static Scale multiple_of_identity(const Rational& c) {
        Scale s;
        s.scalar = c;
        return s;
    }
    static Scale matrix(RationalMatrix m) {
        Scale s;
        s.kind = Kind::ExactMatrix;
        s.exact = std::move(m);
        return s;
    }
    static Scale matrix(RealMatrix m) {
        Scale s;
        s.kind = Kind::RealMatrix;
        s.approx = std::move(m);
        return s;
    }
    bool is_unit() const { return kind == Kind::Scalar && scalar == Rational(1, 2); }
};

/// Non-centrality parameter Omega. Only its spectrum enters the moment
/// formulas, so besides symmetric matrices it may be given by eigenvalues or
/// by any exact matrix similar to a PSD matrix (the form standardisation
/// produces: Sigma^{-1} Omega / 2 is similar to Sigma^{-1/2} Omega Sigma^{-1/2} / 2).
struct NonCentrality {
    enum class Kind { Eigenvalues, ExactMatrix, SimilarMatrix, RealMatrix };
    Kind kind = Kind::Eigenvalues;
    std::vector<Rational> eigenvalues;
    RationalMatrix exact;
    RealMatrix approx;

    static NonCentrality zero(int rank) { return from_eigenvalues(std::vector<Rational>(static_cast<std::size_t>(rank))); }
    static NonCentrality from_eigenvalues(std::vector<Rational> values) {
        NonCentrality o;
        o.eigenvalues = std::move(values);
        return o;
    }
    static NonCentrality from_matrix(RationalMatrix m) {
        NonCentrality o;
        o.kind = Kind::ExactMatrix;
        o.exact = std::move(m);
        return o;
    }
    static NonCentrality similar_to(RationalMatrix m) {
        NonCentrality o;
        o.kind = Kind::SimilarMatrix;
        o.exact = std::move(m);
        return o;
    }
    static NonCentrality from_matrix(RealMatrix m) {
        NonCentrality o;
        o.kind = Kind::RealMatrix;
        o.approx = std::move(m);
        return o;
    }

    int size() const;
    bool is_exact() const { return kind != Kind::RealMatrix; }
    NonCentrality scaled(const Rational& factor) const;
    /// Symmetric matrix form; eigenvalue vectors become diagonal matrices.
    /// Throws InvalidParams for SimilarMatrix.
    RealMatrix as_real_matrix() const;
};

struct WishartParams {
    ConeDescriptor cone;
    Rational beta;
    Scale scale;
    NonCentrality omega;
};

/// Checks beta >= 0, sizes against the rank, Sigma positive definite and Omega
/// positive semidefinite (exactly for exact inputs). Throws InvalidParams,
/// NotPositiveDefinite or NegativeShape.
void validate(const WishartParams& params);

/// Rank of Omega: exact elimination for exact inputs, singular values below
/// 1e-10 * largest treated as zero for floating-point inputs.
int noncentrality_rank(const NonCentrality& omega);

// ---------------------------------------------------------------------------
// Transformations

/// Moves Gamma(beta, Sigma; Omega) to the standardised scale e/2 by the
/// quadratic representation of Sigma^{-1/2}: Omega' = Sigma^{-1/2} Omega Sigma^{-1/2} / 2.
/// Rank is preserved. Exact inputs stay exact: scalar scales give an exact
/// symmetric Omega', general matrix scales give the similar matrix Sigma^{-1} Omega / 2.
WishartParams standardize(const WishartParams& params);

/// Exponential tilt: Gamma(beta, t e; Omega) becomes Gamma(beta, e; Omega / t^2).
/// The scale must be a multiple of e (InvalidParams otherwise); the result
/// always carries scale e, so tilt(tilt(p, 1), t) == tilt(p, t).
/// Throws NonPositiveT for t <= 0.
WishartParams tilt(const WishartParams& params, const Rational& t);

// ---------------------------------------------------------------------------
// Moments

/// L_kappa^beta(-t Omega) for Omega with the given eigenvalues.
Rational laguerre(const Partition& kappa, const Rational& beta, std::span<const Rational> omega_eigenvalues,
                  const Rational& t, const ConeDescriptor& cone);

/// Z_kappa(e) L_kappa^beta(-t Omega') with Omega' the standardised
/// non-centrality: the value E Z_kappa(S(t)) must take if the distribution
/// exists. Parameters are standardised first when needed. Zero when
/// l(kappa) > r, since Z_kappa vanishes on the cone.
Rational putative_moment(const Partition& kappa, const WishartParams& params, const Rational& t);

// ---------------------------------------------------------------------------
// Existence

enum class FailedCondition { GindikinWallach, RankCondition };
std::string_view to_string(FailedCondition c) noexcept;

struct Certificate {
    Partition kappa;
    Rational t;
    Rational value;  // putative moment, < 0
};

struct ExistenceVerdict {
    bool passes = true;
    std::optional<FailedCondition> failed_condition;
    std::optional<Certificate> certificate;
    int omega_rank = 0;
    /// Set when Omega was given in floating point: the rank (and hence the
    /// verdict) depends on the 1e-10 relative tolerance.
    std::optional<std::string> warning;
};

/// Decides the necessary conditions (beta in the Wallach set, and
/// d rank(Omega) <= 2 beta whenever 2 beta < d (r-1)); on failure produces a
/// negative putative moment for a column partition kappa = 1^(l+1).
ExistenceVerdict existence_check(const WishartParams& params);

/// Recomputes the certificate's putative moment.
bool verify_certificate(const WishartParams& params, const Certificate& certificate);

// ---------------------------------------------------------------------------
// Laplace transform

struct LaplaceValue {
    bool exact = false;
    Rational beta;
    Rational determinant;  // det(e + 2 P(sqrt Sigma) u), when exact
    Rational exponent;     // <(u^{-1} + 2 Sigma)^{-1}, Omega>, when exact
    double value = 0.0;

    /// Decimal expansion with `digits` significant digits (multiprecision
    /// when exact).
    std::string to_decimal(int digits) const;
};

/// det(e + 2 P(sqrt Sigma) u)^{-beta} exp(-<(u^{-1} + 2 Sigma)^{-1}, Omega>) for
/// matrix families, on the domain u + Sigma^{-1}/2 positive definite.
/// Throws OutOfDomain outside that domain.
template <class T>
LaplaceValue laplace_transform(const WishartParams& params, const Matrix<T>& u);

/// Membership of u in -Sigma^{-1}/2 + interior of the cone.
bool in_laplace_domain(const WishartParams& params, const RationalMatrix& u);
bool in_laplace_domain(const WishartParams& params, const RealMatrix& u);

}  // namespace jackcone

#endif  // JACKCONE_WISHART_HPP
