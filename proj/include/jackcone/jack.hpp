#ifndef JACKCONE_JACK_HPP
#define JACKCONE_JACK_HPP

#include "jackcone/partition.hpp"
#include "jackcone/rational.hpp"
#include "jackcone/symmetric_polynomial.hpp"

namespace jackcone {

/// Eigenvalue of D(alpha) on J_kappa in m variables:
/// alpha sum k_i(k_i-1)/2 - sum (i-1) k_i + (m-1)|kappa|.
Rational eigenvalue(const Partition& kappa, int m, const Rational& alpha);

/// Jack polynomial J_kappa(t_1..t_m; alpha) in the monomial basis, normalised
/// so that the coefficient of m_{1^n} is n! (n = |kappa|).
///
/// Built as the eigenvector of D(alpha) restricted to the span of m_mu with
/// mu dominated by kappa. The restricted operator is triangular in dominance
/// order, so the eigenvector is found by back substitution with pivots
/// e_kappa - e_mu > 0. When |kappa| > m the polynomial is built in |kappa|
/// variables (where m_{1^n} exists), normalised, then restricted.
///
/// Results are memoised; the returned reference stays valid for the lifetime
/// of the process and may be shared across threads.
const SymmetricPolynomial& jack(const Partition& kappa, int m, const Rational& alpha);

/// J_kappa(1^m; alpha).
Rational jack_at_ones(const Partition& kappa, int m, const Rational& alpha);

}  // namespace jackcone

#endif  // JACKCONE_JACK_HPP
