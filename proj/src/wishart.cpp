#include "jackcone/wishart.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "jackcone/binomial.hpp"
#include "jackcone/error.hpp"
#include "jackcone/jack.hpp"

namespace jackcone {

namespace {

constexpr double kRankTolerance = 1e-10;

Rational pow_int(const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

void require_peirce(int d) {
    if (d < 1) throw Error(ErrorCode::InvalidParams, "Peirce invariant must be >= 1");
}

// Thread-safe memo table with stable references.
template <class Key, class Value>
class Memo {
public:
    template <class Build>
    const Value& get(const Key& key, Build&& build) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return *it->second;
        }
        auto value = std::make_unique<Value>(build());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(key, std::move(value));
        return *it->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, std::unique_ptr<Value>> table_;
};

using ZonalKey = std::tuple<Partition, int, int>;

void collect_subpartitions(const Partition& kappa, int row, std::vector<int>& current, std::vector<Partition>& out) {
    out.emplace_back(current);
    if (row > kappa.length()) return;
    const int cap = row == 1 ? kappa.part(1) : std::min(kappa.part(row), current.back());
    for (int v = 1; v <= cap; ++v) {
        current.push_back(v);
        collect_subpartitions(kappa, row + 1, current, out);
        current.pop_back();
    }
}

std::vector<Partition> subpartitions(const Partition& kappa) {
    std::vector<Partition> out;
    std::vector<int> current;
    collect_subpartitions(kappa, 1, current, out);
    return out;
}

bool is_scalar_identity(const RationalMatrix& m, Rational* scalar) {
    if (!m.is_square() || m.rows() == 0) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i == j && m(i, i) != m(0, 0)) return false;
            if (i != j && sgn(m(i, j)) != 0) return false;
        }
    if (scalar) *scalar = m(0, 0);
    return true;
}

void require_matrix_family(const ConeDescriptor& cone, const char* what) {
    if (!cone.is_matrix_family())
        throw Error(ErrorCode::InvalidParams, std::string(what) + " is only available for matrix cones");
}

void require_order(int rows, int cols, int r, const char* what) {
    if (rows != r || cols != r)
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + " must be " + std::to_string(r) + "x" + std::to_string(r));
}

// Rationalised spectrum of a float symmetric matrix; eigenvalues below the
// relative tolerance become exact zeros.
std::vector<Rational> rationalised_eigenvalues(const RealMatrix& m) {
    auto ev = symmetric_eigenvalues(m);
    double largest = 0.0;
    for (double v : ev) largest = std::max(largest, std::abs(v));
    std::vector<Rational> out;
    for (double v : ev) out.push_back(v <= kRankTolerance * largest ? Rational(0) : from_double(v));
    return out;
}

// Z_sigma(Omega) for the spectral forms of Omega, with power sums computed once.
class OmegaZonals {
public:
    OmegaZonals(const NonCentrality& omega, int rank, int peirce, int max_degree)
        : rank_(rank), peirce_(peirce) {
        switch (omega.kind) {
            case NonCentrality::Kind::Eigenvalues: eigenvalues_ = omega.eigenvalues; break;
            case NonCentrality::Kind::RealMatrix: eigenvalues_ = rationalised_eigenvalues(omega.approx); break;
            case NonCentrality::Kind::ExactMatrix:
            case NonCentrality::Kind::SimilarMatrix:
                use_power_sums_ = true;
                power_sums_ = power_sums(omega.exact, std::max(max_degree, 1));
                break;
        }
    }

    Rational operator()(const Partition& sigma) const {
        if (sigma.empty()) return 1;
        if (use_power_sums_) return zonal_from_power_sums(sigma, rank_, peirce_, power_sums_);
        return zonal_value(sigma, eigenvalues_, peirce_);
    }

private:
    int rank_;
    int peirce_;
    bool use_power_sums_ = false;
    std::vector<Rational> eigenvalues_;
    std::vector<Rational> power_sums_;
};

Rational laguerre_with(const Partition& kappa, const Rational& beta, const Rational& t, const ConeDescriptor& cone,
                       const std::function<Rational(const Partition&)>& z_omega) {
    if (kappa.length() > cone.rank)
        throw Error(ErrorCode::LengthExceedsVars, "l(kappa) exceeds the rank of the cone");
    if (sgn(t) < 0) throw Error(ErrorCode::InvalidParams, "t must be >= 0");
    const Rational alpha = cone.alpha();
    Rational sum = 0;
    for (const auto& sigma : subpartitions(kappa)) {
        const Rational ratio = pochhammer_ratio(beta, kappa, sigma, alpha);
        if (sgn(ratio) == 0) continue;
        Rational z = 1;
        if (!sigma.empty()) {
            if (sgn(t) == 0) continue;
            z = z_omega(sigma);
            if (sgn(z) == 0) continue;
            z *= pow_int(t, sigma.degree());
            z /= zonal_at_identity(sigma, cone.rank, cone.peirce);
        }
        sum += general_binomial(kappa, sigma, alpha) * ratio * z;
    }
    return sum;
}

}  // namespace

// ---------------------------------------------------------------------------

Rational pochhammer_general(const Rational& a, const Partition& kappa, const Rational& alpha) {
    require_positive_alpha(alpha);
    Rational r = 1;
    for (int i = 1; i <= kappa.length(); ++i) r *= rising_factorial(a - Rational(i - 1) / alpha, kappa.part(i));
    return r;
}

Rational pochhammer_ratio(const Rational& a, const Partition& kappa, const Partition& sigma, const Rational& alpha) {
    require_positive_alpha(alpha);
    if (!sigma.is_subset_of(kappa))
        throw Error(ErrorCode::NotNested, to_string(sigma) + " is not contained in " + to_string(kappa));
    Rational r = 1;
    for (int i = 1; i <= kappa.length(); ++i) {
        const int s = sigma.part(i);
        r *= rising_factorial(a - Rational(i - 1) / alpha + s, kappa.part(i) - s);
    }
    return r;
}

// ---------------------------------------------------------------------------

const ZonalNormalization& zonal_normalization(int degree, int rank, int peirce) {
    static Memo<std::tuple<int, int, int>, ZonalNormalization> memo;
    if (degree < 0) throw Error(ErrorCode::InvalidParams, "degree must be >= 0");
    if (rank < 1) throw Error(ErrorCode::InvalidParams, "rank must be >= 1");
    require_peirce(peirce);
    return memo.get({degree, rank, peirce}, [&] {
        const Rational alpha = ratio(2, peirce);
        ZonalNormalization out;
        out.degree = degree;
        out.rank = rank;
        out.peirce = peirce;
        const auto shapes = enumerate_partitions(degree, rank);
        // (x_1 + ... + x_r)^k = sum_mu k! / prod mu_i! m_mu.
        SymmetricPolynomial residual(rank);
        for (const auto& mu : shapes) {
            Rational c = factorial(degree);
            for (int part : mu.parts()) c /= factorial(part);
            residual.add_term(mu, c);
        }
        // Leading monomial of J_kappa is m_kappa and every other term is
        // dominated, so peeling in reverse lexicographic order is triangular.
        for (const auto& kappa : shapes) {
            SymmetricPolynomial phi = jack(kappa, rank, alpha);
            phi *= Rational(1) / jack_at_ones(kappa, rank, alpha);
            const Rational lead = phi.coeff(kappa);
            if (sgn(lead) == 0) throw Error(ErrorCode::SingularSystem, "zero leading coefficient for " + to_string(kappa));
            const Rational c = residual.coeff(kappa) / lead;
            if (sgn(c) <= 0)
                throw Error(ErrorCode::SingularSystem, "non-positive zonal constant for " + to_string(kappa));
            residual -= phi * c;
            out.coefficients.emplace(kappa, c);
        }
        if (!residual.is_zero()) throw Error(ErrorCode::SingularSystem, "trace-power system has no solution");
        return out;
    });
}

const SymmetricPolynomial& zonal_polynomial(const Partition& kappa, int rank, int peirce) {
    static Memo<ZonalKey, SymmetricPolynomial> memo;
    if (rank < 1) throw Error(ErrorCode::InvalidParams, "rank must be >= 1");
    require_peirce(peirce);
    return memo.get({kappa, rank, peirce}, [&] {
        if (kappa.length() > rank) return SymmetricPolynomial(rank);
        const Rational alpha = ratio(2, peirce);
        const Rational c = zonal_normalization(kappa.degree(), rank, peirce).coefficients.at(kappa);
        SymmetricPolynomial z = jack(kappa, rank, alpha);
        z *= c / jack_at_ones(kappa, rank, alpha);
        return z;
    });
}

const PowerSumExpansion& zonal_power_sums(const Partition& kappa, int rank, int peirce) {
    static Memo<ZonalKey, PowerSumExpansion> memo;
    return memo.get({kappa, rank, peirce}, [&] { return to_power_sums(zonal_polynomial(kappa, rank, peirce)); });
}

Rational zonal_value(const Partition& kappa, std::span<const Rational> eigenvalues, int peirce) {
    if (eigenvalues.empty()) throw Error(ErrorCode::DimensionMismatch, "need at least one eigenvalue");
    return eval(zonal_polynomial(kappa, static_cast<int>(eigenvalues.size()), peirce), eigenvalues);
}

Rational zonal_at_identity(const Partition& kappa, int rank, int peirce) {
    if (kappa.length() > rank) return 0;
    return zonal_normalization(kappa.degree(), rank, peirce).coefficients.at(kappa);
}

namespace {
template <class T>
T zonal_from_power_sums_impl(const Partition& kappa, int rank, int peirce, std::span<const T> power_sums) {
    const auto& expansion = zonal_power_sums(kappa, rank, peirce);
    if (static_cast<int>(power_sums.size()) < max_power_needed(expansion))
        throw Error(ErrorCode::DimensionMismatch, "not enough power sums for " + to_string(kappa));
    return eval_power_sums<T>(expansion, power_sums);
}
}  // namespace

Rational zonal_from_power_sums(const Partition& kappa, int rank, int peirce, std::span<const Rational> power_sums) {
    return zonal_from_power_sums_impl<Rational>(kappa, rank, peirce, power_sums);
}

double zonal_from_power_sums(const Partition& kappa, int rank, int peirce, std::span<const double> power_sums) {
    return zonal_from_power_sums_impl<double>(kappa, rank, peirce, power_sums);
}

// ---------------------------------------------------------------------------

int NonCentrality::size() const {
    switch (kind) {
        case Kind::Eigenvalues: return static_cast<int>(eigenvalues.size());
        case Kind::ExactMatrix:
        case Kind::SimilarMatrix: return exact.rows();
        case Kind::RealMatrix: return approx.rows();
    }
    return 0;
}

NonCentrality NonCentrality::scaled(const Rational& factor) const {
    NonCentrality o = *this;
    for (auto& v : o.eigenvalues) v *= factor;
    o.exact *= factor;
    o.approx *= to_double(factor);
    return o;
}

RealMatrix NonCentrality::as_real_matrix() const {
    switch (kind) {
        case Kind::Eigenvalues: {
            std::vector<double> d;
            for (const auto& v : eigenvalues) d.push_back(to_double(v));
            return RealMatrix::diagonal(d);
        }
        case Kind::ExactMatrix: return to_real(exact);
        case Kind::RealMatrix: return approx;
        case Kind::SimilarMatrix: break;
    }
    throw Error(ErrorCode::InvalidParams, "non-centrality is only known up to similarity");
}

void validate(const WishartParams& params) {
    const int r = params.cone.rank;
    if (sgn(params.beta) < 0) throw Error(ErrorCode::InvalidParams, "shape parameter must be >= 0");

    switch (params.scale.kind) {
        case Scale::Kind::Scalar:
            if (sgn(params.scale.scalar) <= 0) throw Error(ErrorCode::NotPositiveDefinite, "scale must be positive");
            break;
        case Scale::Kind::ExactMatrix:
            require_matrix_family(params.cone, "a matrix scale");
            require_order(params.scale.exact.rows(), params.scale.exact.cols(), r, "scale");
            if (!params.scale.exact.is_symmetric()) throw Error(ErrorCode::InvalidParams, "scale must be symmetric");
            if (!is_positive_definite(params.scale.exact))
                throw Error(ErrorCode::NotPositiveDefinite, "scale is not positive definite");
            break;
        case Scale::Kind::RealMatrix:
            require_matrix_family(params.cone, "a matrix scale");
            require_order(params.scale.approx.rows(), params.scale.approx.cols(), r, "scale");
            if (!cholesky_succeeds(params.scale.approx))
                throw Error(ErrorCode::NotPositiveDefinite, "scale is not positive definite");
            break;
    }

    const auto& omega = params.omega;
    switch (omega.kind) {
        case NonCentrality::Kind::Eigenvalues:
            if (static_cast<int>(omega.eigenvalues.size()) != r)
                throw Error(ErrorCode::InvalidParams, "need " + std::to_string(r) + " non-centrality eigenvalues");
            for (const auto& v : omega.eigenvalues)
                if (sgn(v) < 0) throw Error(ErrorCode::InvalidParams, "non-centrality eigenvalues must be >= 0");
            break;
        case NonCentrality::Kind::ExactMatrix:
            require_matrix_family(params.cone, "a matrix non-centrality");
            require_order(omega.exact.rows(), omega.exact.cols(), r, "non-centrality");
            if (!omega.exact.is_symmetric()) throw Error(ErrorCode::InvalidParams, "non-centrality must be symmetric");
            if (!is_positive_semidefinite(omega.exact))
                throw Error(ErrorCode::InvalidParams, "non-centrality is not positive semidefinite");
            break;
        case NonCentrality::Kind::SimilarMatrix:
            require_order(omega.exact.rows(), omega.exact.cols(), r, "non-centrality");
            break;
        case NonCentrality::Kind::RealMatrix: {
            require_matrix_family(params.cone, "a matrix non-centrality");
            require_order(omega.approx.rows(), omega.approx.cols(), r, "non-centrality");
            auto ev = symmetric_eigenvalues(omega.approx);
            double largest = 0.0;
            for (double v : ev) largest = std::max(largest, std::abs(v));
            for (double v : ev)
                if (v < -kRankTolerance * largest)
                    throw Error(ErrorCode::InvalidParams, "non-centrality is not positive semidefinite");
            break;
        }
    }
}

int noncentrality_rank(const NonCentrality& omega) {
    switch (omega.kind) {
        case NonCentrality::Kind::Eigenvalues: {
            int k = 0;
            for (const auto& v : omega.eigenvalues) k += sgn(v) != 0;
            return k;
        }
        case NonCentrality::Kind::ExactMatrix:
        case NonCentrality::Kind::SimilarMatrix: return rank(omega.exact);
        case NonCentrality::Kind::RealMatrix: return numerical_rank(omega.approx, kRankTolerance);
    }
    return 0;
}

// ---------------------------------------------------------------------------

WishartParams standardize(const WishartParams& params) {
    validate(params);
    WishartParams out = params;
    out.scale = Scale::unit();

    Rational c;
    bool scalar = params.scale.kind == Scale::Kind::Scalar;
    if (scalar) c = params.scale.scalar;
    if (params.scale.kind == Scale::Kind::ExactMatrix) scalar = is_scalar_identity(params.scale.exact, &c);

    if (scalar) {
        out.omega = params.omega.scaled(Rational(1) / (2 * c));
        return out;
    }

    if (params.scale.kind == Scale::Kind::ExactMatrix && params.omega.is_exact()) {
        RationalMatrix omega;
        switch (params.omega.kind) {
            case NonCentrality::Kind::Eigenvalues: omega = RationalMatrix::diagonal(params.omega.eigenvalues); break;
            case NonCentrality::Kind::ExactMatrix: omega = params.omega.exact; break;
            default:
                throw Error(ErrorCode::InvalidParams, "non-centrality known only up to similarity cannot be rescaled");
        }
        out.omega = NonCentrality::similar_to(inverse(params.scale.exact) * omega * Rational(1, 2));
        return out;
    }

    const RealMatrix sigma = params.scale.kind == Scale::Kind::RealMatrix ? params.scale.approx : to_real(params.scale.exact);
    const RealMatrix root = symmetric_inverse_sqrt(sigma);
    RealMatrix omega = root * params.omega.as_real_matrix() * root * 0.5;
    for (int i = 0; i < omega.rows(); ++i)
        for (int j = i + 1; j < omega.cols(); ++j) omega(i, j) = omega(j, i) = 0.5 * (omega(i, j) + omega(j, i));
    out.omega = NonCentrality::from_matrix(std::move(omega));
    return out;
}

WishartParams tilt(const WishartParams& params, const Rational& t) {
    if (sgn(t) <= 0) throw Error(ErrorCode::NonPositiveT, "tilt parameter must be > 0");
    bool multiple = params.scale.kind == Scale::Kind::Scalar;
    if (params.scale.kind == Scale::Kind::ExactMatrix) multiple = is_scalar_identity(params.scale.exact, nullptr);
    if (!multiple) throw Error(ErrorCode::InvalidParams, "tilt needs a scale that is a multiple of e");
    WishartParams out = params;
    out.scale = Scale::multiple_of_identity(1);
    out.omega = params.omega.scaled(Rational(1) / (t * t));
    return out;
}

// ---------------------------------------------------------------------------

Rational laguerre(const Partition& kappa, const Rational& beta, std::span<const Rational> omega_eigenvalues,
                  const Rational& t, const ConeDescriptor& cone) {
    if (static_cast<int>(omega_eigenvalues.size()) != cone.rank)
        throw Error(ErrorCode::DimensionMismatch, "need one eigenvalue per rank");
    std::vector<Rational> values(omega_eigenvalues.begin(), omega_eigenvalues.end());
    return laguerre_with(kappa, beta, t, cone,
                         [&](const Partition& sigma) { return zonal_value(sigma, values, cone.peirce); });
}

Rational putative_moment(const Partition& kappa, const WishartParams& params, const Rational& t) {
    if (sgn(t) < 0) throw Error(ErrorCode::InvalidParams, "t must be >= 0");
    const WishartParams std_params = params.scale.is_unit() ? params : standardize(params);
    const auto& cone = std_params.cone;
    if (kappa.length() > cone.rank) return 0;
    const OmegaZonals z_omega(std_params.omega, cone.rank, cone.peirce, kappa.degree());
    return zonal_at_identity(kappa, cone.rank, cone.peirce) *
           laguerre_with(kappa, std_params.beta, t, cone, std::cref(z_omega));
}

// ---------------------------------------------------------------------------

std::string_view to_string(FailedCondition c) noexcept {
    switch (c) {
        case FailedCondition::GindikinWallach: return "GindikinWallach";
        case FailedCondition::RankCondition: return "RankCondition";
    }
    return "unknown";
}

namespace {

std::optional<Certificate> try_certificate(const Partition& kappa, const WishartParams& std_params, const Rational& t) {
    Rational value = putative_moment(kappa, std_params, t);
    if (sgn(value) < 0) return Certificate{kappa, t, std::move(value)};
    return std::nullopt;
}

}  // namespace

ExistenceVerdict existence_check(const WishartParams& params) {
    validate(params);
    const auto& cone = params.cone;
    const int r = cone.rank;
    const int d = cone.peirce;
    const Rational& beta = params.beta;

    ExistenceVerdict verdict;
    verdict.omega_rank = noncentrality_rank(params.omega);
    if (!params.omega.is_exact())
        verdict.warning = "non-centrality given in floating point: rank " + std::to_string(verdict.omega_rank) +
                          " uses relative tolerance 1e-10, so the verdict depends on that tolerance";

    const WishartParams std_params = standardize(params);

    if (!wallach_contains(cone, beta)) {
        // The Pochhammer factor beta - l d/2 is the first negative one.
        const Rational q = 2 * beta / d;
        const int l = static_cast<int>(mpz_class(q.get_num() / q.get_den()).get_si()) + 1;
        verdict.passes = false;
        verdict.failed_condition = FailedCondition::GindikinWallach;
        verdict.certificate = try_certificate(column_partition(l + 1), std_params, 0);
        if (!verdict.certificate)
            throw Error(ErrorCode::SingularSystem, "zero-order certificate is not negative");
        return verdict;
    }

    if (2 * beta >= d * (r - 1) || d * verdict.omega_rank <= 2 * beta) return verdict;

    verdict.passes = false;
    verdict.failed_condition = FailedCondition::RankCondition;
    const int k = verdict.omega_rank;
    if (k + 1 <= r) {
        // (beta)_{1^(k+1)} = 0 and the leading t-coefficient is negative.
        const Partition kappa = column_partition(k + 1);
        verdict.certificate = try_certificate(kappa, std_params, 0);
        Rational t = 1;
        for (int step = 0; !verdict.certificate && step <= 64; ++step, t *= 2)
            verdict.certificate = try_certificate(kappa, std_params, t);
    } else {
        // Full rank: Z_{1^(r+1)} vanishes, so use 1^(j+2) with j = 2 beta / d,
        // whose constant term is zero and linear term negative; small t wins.
        const int j = wallach_discrete_index(cone, beta);
        const Partition kappa = column_partition(j + 2);
        Rational t = 1;
        for (int step = 0; !verdict.certificate && step <= 64; ++step, t /= 2)
            verdict.certificate = try_certificate(kappa, std_params, t);
    }
    if (!verdict.certificate) throw Error(ErrorCode::SingularSystem, "certificate search exhausted");
    return verdict;
}

bool verify_certificate(const WishartParams& params, const Certificate& certificate) {
    const Rational value = putative_moment(certificate.kappa, params, certificate.t);
    return value == certificate.value && sgn(value) < 0;
}

// ---------------------------------------------------------------------------

namespace {

struct Mpfr {
    mpfr_t v;
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

template <class T>
T scalar_from(const Rational& q) {
    if constexpr (std::is_same_v<T, double>)
        return to_double(q);
    else
        return q;
}

template <class T>
Matrix<T> sigma_matrix(const Scale& scale, int r) {
    if constexpr (std::is_same_v<T, double>) {
        switch (scale.kind) {
            case Scale::Kind::Scalar: return RealMatrix::identity(r) * to_double(scale.scalar);
            case Scale::Kind::ExactMatrix: return to_real(scale.exact);
            case Scale::Kind::RealMatrix: return scale.approx;
        }
    } else {
        switch (scale.kind) {
            case Scale::Kind::Scalar: return RationalMatrix::identity(r) * scale.scalar;
            case Scale::Kind::ExactMatrix: return scale.exact;
            case Scale::Kind::RealMatrix: break;
        }
    }
    throw Error(ErrorCode::InvalidParams, "inexact scale in exact evaluation");
}

template <class T>
bool domain_check(const Matrix<T>& sigma, const Matrix<T>& u) {
    if constexpr (std::is_same_v<T, double>) {
        RealMatrix m = real_inverse(sigma) * 0.5 + u;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = i + 1; j < m.cols(); ++j) m(i, j) = m(j, i) = 0.5 * (m(i, j) + m(j, i));
        return cholesky_succeeds(m);
    } else {
        return is_positive_definite(inverse(sigma) * Rational(1, 2) + u);
    }
}

bool exact_evaluation_possible(const WishartParams& params) {
    return params.scale.kind != Scale::Kind::RealMatrix && params.omega.is_exact();
}

template <class T>
void check_u(const WishartParams& params, const Matrix<T>& u) {
    require_matrix_family(params.cone, "the Laplace transform");
    require_order(u.rows(), u.cols(), params.cone.rank, "u");
    if constexpr (std::is_same_v<T, double>) {
        for (int i = 0; i < u.rows(); ++i)
            for (int j = i + 1; j < u.cols(); ++j)
                if (std::abs(u(i, j) - u(j, i)) > 1e-12 * (1.0 + std::abs(u(i, j))))
                    throw Error(ErrorCode::InvalidParams, "u must be symmetric");
    } else {
        if (!u.is_symmetric()) throw Error(ErrorCode::InvalidParams, "u must be symmetric");
    }
}

template <class T>
LaplaceValue laplace_in(const WishartParams& params, const Matrix<T>& u) {
    const int r = params.cone.rank;
    const Matrix<T> sigma = sigma_matrix<T>(params.scale, r);
    if (!domain_check(sigma, u)) throw Error(ErrorCode::OutOfDomain, "Sigma^{-1}/2 + u is not positive definite");

    const Matrix<T> a = Matrix<T>::identity(r) + sigma * u * scalar_from<T>(2);
    T exponent;
    Rational c;
    const bool u_scalar = [&] {
        if constexpr (std::is_same_v<T, double>)
            return false;
        else
            return is_scalar_identity(u, &c) && params.scale.kind == Scale::Kind::Scalar;
    }();
    if (params.omega.kind == NonCentrality::Kind::SimilarMatrix && !u_scalar) {
        throw Error(ErrorCode::InvalidParams,
                    "non-centrality known only up to similarity; evaluate with u a multiple of the identity");
    }
    if constexpr (std::is_same_v<T, double>) {
        exponent = (u * real_inverse(a) * params.omega.as_real_matrix()).trace();
    } else {
        if (u_scalar) {
            Rational trace_omega;
            switch (params.omega.kind) {
                case NonCentrality::Kind::Eigenvalues:
                    for (const auto& v : params.omega.eigenvalues) trace_omega += v;
                    break;
                default: trace_omega = params.omega.exact.trace(); break;
            }
            exponent = c / (1 + 2 * params.scale.scalar * c) * trace_omega;
        } else {
            const RationalMatrix omega = params.omega.kind == NonCentrality::Kind::Eigenvalues
                                             ? RationalMatrix::diagonal(params.omega.eigenvalues)
                                             : params.omega.exact;
            exponent = (u * inverse(a) * omega).trace();
        }
    }

    LaplaceValue out;
    out.beta = params.beta;
    if constexpr (std::is_same_v<T, double>) {
        const double det = real_determinant(a);
        out.value = std::pow(det, -to_double(params.beta)) * std::exp(-exponent);
    } else {
        out.exact = true;
        out.determinant = determinant(a);
        out.exponent = exponent;
        out.value = std::pow(to_double(out.determinant), -to_double(params.beta)) * std::exp(-to_double(exponent));
    }
    return out;
}

}  // namespace

std::string LaplaceValue::to_decimal(int digits) const {
    if (digits < 1) digits = 1;
    if (!exact) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", std::min(digits, 17), value);
        return buf;
    }
    const auto prec = static_cast<mpfr_prec_t>(digits * 3.33 + 64);
    Mpfr det(prec), b(prec), e(prec), acc(prec);
    mpfr_set_q(det.v, determinant.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(b.v, beta.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(e.v, exponent.get_mpq_t(), MPFR_RNDN);
    mpfr_log(acc.v, det.v, MPFR_RNDN);
    mpfr_mul(acc.v, acc.v, b.v, MPFR_RNDN);
    mpfr_add(acc.v, acc.v, e.v, MPFR_RNDN);
    mpfr_neg(acc.v, acc.v, MPFR_RNDN);
    mpfr_exp(acc.v, acc.v, MPFR_RNDN);
    char* text = nullptr;
    mpfr_asprintf(&text, "%.*Rg", digits, acc.v);
    std::string out(text);
    mpfr_free_str(text);
    return out;
}

template <class T>
LaplaceValue laplace_transform(const WishartParams& params, const Matrix<T>& u) {
    validate(params);
    check_u(params, u);
    if constexpr (std::is_same_v<T, Rational>) {
        if (exact_evaluation_possible(params)) return laplace_in<Rational>(params, u);
        return laplace_in<double>(params, to_real(u));
    } else {
        return laplace_in<double>(params, u);
    }
}

template LaplaceValue laplace_transform<Rational>(const WishartParams&, const RationalMatrix&);
template LaplaceValue laplace_transform<double>(const WishartParams&, const RealMatrix&);

bool in_laplace_domain(const WishartParams& params, const RationalMatrix& u) {
    check_u(params, u);
    if (params.scale.kind == Scale::Kind::RealMatrix)
        return domain_check(params.scale.approx, to_real(u));
    return domain_check(sigma_matrix<Rational>(params.scale, params.cone.rank), u);
}

bool in_laplace_domain(const WishartParams& params, const RealMatrix& u) {
    check_u(params, u);
    return domain_check(sigma_matrix<double>(params.scale, params.cone.rank), u);
}

}  // namespace jackcone
