#include "jackcone/power_sums.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace jackcone {

namespace {

long count_distributions(const std::vector<int>& rho, std::size_t next, std::vector<int>& remaining) {
    if (next == rho.size()) {
        for (int r : remaining)
            if (r != 0) return 0;
        return 1;
    }
    long total = 0;
    for (auto& slot : remaining) {
        if (slot >= rho[next]) {
            slot -= rho[next];
            total += count_distributions(rho, next + 1, remaining);
            slot += rho[next];
        }
    }
    return total;
}

// m_mu for every partition of n, in the power-sum basis.
const std::map<Partition, PowerSumExpansion>& monomial_to_power_sums(int n) {
    static std::shared_mutex mutex;
    static std::map<int, std::map<Partition, PowerSumExpansion>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }

    // p_mu = sum_{nu >= mu} R(mu, nu) m_nu, triangular in dominance. Solving
    // from the top of the reverse lexicographic list gives every m_nu needed
    // before it is used.
    std::map<Partition, PowerSumExpansion> table;
    const auto partitions = enumerate_partitions(n, n);
    for (const auto& mu : partitions) {
        PowerSumExpansion expansion{{mu, Rational(1)}};
        for (const auto& nu : partitions) {
            if (nu == mu) break;
            const long r = power_sum_monomial_coefficient(mu, nu);
            if (r == 0) continue;
            for (const auto& [rho, c] : table.at(nu)) {
                auto& slot = expansion[rho];
                slot -= c * r;
            }
        }
        const long diagonal = power_sum_monomial_coefficient(mu, mu);
        for (auto it = expansion.begin(); it != expansion.end();) {
            it->second /= diagonal;
            it = sgn(it->second) == 0 ? expansion.erase(it) : std::next(it);
        }
        table.emplace(mu, std::move(expansion));
    }

    std::unique_lock lock(mutex);
    return cache.try_emplace(n, std::move(table)).first->second;
}

}  // namespace

long power_sum_monomial_coefficient(const Partition& rho, const Partition& mu) {
    if (rho.degree() != mu.degree()) return 0;
    std::vector<int> remaining = mu.parts();
    return count_distributions(rho.parts(), 0, remaining);
}

PowerSumExpansion to_power_sums(const SymmetricPolynomial& p) {
    PowerSumExpansion out;
    for (const auto& [mu, c] : p.terms()) {
        for (const auto& [rho, s] : monomial_to_power_sums(mu.degree()).at(mu)) out[rho] += c * s;
    }
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

int max_power_needed(const PowerSumExpansion& expansion) {
    int k = 0;
    for (const auto& [rho, c] : expansion) k = std::max(k, rho.part(1));
    return k;
}

}  // namespace jackcone
