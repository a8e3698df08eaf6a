#ifndef JACKCONE_SYMMETRIC_POLYNOMIAL_HPP
#define JACKCONE_SYMMETRIC_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <vector>

#include "jackcone/partition.hpp"
#include "jackcone/rational.hpp"

namespace jackcone {

/// Symmetric polynomial in `num_vars` variables, stored in the monomial
/// symmetric basis: sum of c_mu * m_mu. Zero coefficients are never stored and
/// every key has length <= num_vars.
class SymmetricPolynomial {
public:
    using Terms = std::map<Partition, Rational>;

    explicit SymmetricPolynomial(int num_vars);

    static SymmetricPolynomial constant(int num_vars, const Rational& value);
    static SymmetricPolynomial monomial(int num_vars, const Partition& mu, const Rational& coeff = 1);

    int num_vars() const noexcept { return num_vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coeff(const Partition& mu) const;
    void add_term(const Partition& mu, const Rational& coeff);

    /// Drops every key longer than `num_vars` (setting those variables to 0).
    SymmetricPolynomial restrict_to(int num_vars) const;

    SymmetricPolynomial homogeneous_component(int degree) const;

    SymmetricPolynomial& operator+=(const SymmetricPolynomial& other);
    SymmetricPolynomial& operator-=(const SymmetricPolynomial& other);
    SymmetricPolynomial& operator*=(const Rational& scalar);

    friend SymmetricPolynomial operator+(SymmetricPolynomial a, const SymmetricPolynomial& b) { return a += b; }
    friend SymmetricPolynomial operator-(SymmetricPolynomial a, const SymmetricPolynomial& b) { return a -= b; }
    friend SymmetricPolynomial operator*(SymmetricPolynomial a, const Rational& s) { return a *= s; }
    friend SymmetricPolynomial operator*(const Rational& s, SymmetricPolynomial a) { return a *= s; }
    friend bool operator==(const SymmetricPolynomial&, const SymmetricPolynomial&) = default;

private:
    void check_vars(const SymmetricPolynomial& other) const;

    int num_vars_;
    Terms terms_;
};

/// m_mu evaluated at `point`; zero when l(mu) exceeds the point size.
Rational monomial_eval(const Partition& mu, std::span<const Rational> point);

/// Exact value of p at `point`. Throws DimensionMismatch unless
/// point.size() == p.num_vars().
Rational eval(const SymmetricPolynomial& p, std::span<const Rational> point);

/// Image of p under D(alpha) = (alpha/2) sum t_i^2 d_i^2 + sum_{i!=j} t_i^2/(t_i-t_j) d_i.
SymmetricPolynomial apply_D(const SymmetricPolynomial& p, const Rational& alpha);

/// Polynomial in explicit exponent vectors, used where the monomial basis is
/// not closed under an operation (shifts, pair quotients).
using DensePolynomial = std::map<std::vector<int>, Rational>;

DensePolynomial expand_dense(const SymmetricPolynomial& p);

/// Reads the monomial-basis coefficients off a dense symmetric polynomial.
/// The input is trusted to be symmetric.
SymmetricPolynomial collect_symmetric(const DensePolynomial& dense, int num_vars);

/// p(t_1 + shift, ..., t_m + shift).
SymmetricPolynomial shift_arguments(const SymmetricPolynomial& p, const Rational& shift);

}  // namespace jackcone

#endif  // JACKCONE_SYMMETRIC_POLYNOMIAL_HPP
