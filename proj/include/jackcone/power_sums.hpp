#ifndef JACKCONE_POWER_SUMS_HPP
#define JACKCONE_POWER_SUMS_HPP

#include <map>
#include <span>
#include <type_traits>

#include "jackcone/partition.hpp"
#include "jackcone/rational.hpp"
#include "jackcone/symmetric_polynomial.hpp"

namespace jackcone {

/// Symmetric function in the power-sum basis: sum of c_rho * p_rho where
/// p_rho = p_{rho_1} p_{rho_2} ... and p_j = sum_i t_i^j.
using PowerSumExpansion = std::map<Partition, Rational>;

/// Rewrites p in the power-sum basis. The expansion is the unique one in the
/// ring of symmetric functions, so evaluating it at the power sums of any
/// point (in any number of variables) gives p at that point, with m_mu = 0
/// whenever l(mu) exceeds the number of variables.
PowerSumExpansion to_power_sums(const SymmetricPolynomial& p);

/// Number of ways the parts of rho can be distributed over l(mu) slots so that
/// slot i sums to mu_i: the coefficient of m_mu in p_rho.
long power_sum_monomial_coefficient(const Partition& rho, const Partition& mu);

/// Evaluates an expansion given power_sums[j-1] = p_j.
template <class T>
T eval_power_sums(const PowerSumExpansion& expansion, std::span<const T> power_sums) {
    T total = T(0);
    for (const auto& [rho, c] : expansion) {
        T term = T(1);
        for (int part : rho.parts()) term *= power_sums[static_cast<std::size_t>(part - 1)];
        if constexpr (std::is_same_v<T, double>)
            total += to_double(c) * term;
        else
            total += T(c * term);
    }
    return total;
}

/// Largest part needed to evaluate the expansion (0 for constants).
int max_power_needed(const PowerSumExpansion& expansion);

}  // namespace jackcone

#endif  // JACKCONE_POWER_SUMS_HPP
