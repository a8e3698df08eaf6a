#include "jackcone/binomial.hpp"

#include <mutex>
#include <shared_mutex>

#include "jackcone/error.hpp"
#include "jackcone/jack.hpp"
#include "jackcone/symmetric_polynomial.hpp"

namespace jackcone {

Rational contiguous_binomial(const Partition& sigma, int i, const Rational& alpha) {
    require_positive_alpha(alpha);
    const Partition grown = contiguous(sigma, i);
    const int new_column = sigma.part(i) + 1;
    Rational numerator = 1;
    Rational j = 1;
    for (const Cell& s : sigma.cells()) {
        const Hooks before = hooks(sigma, s, alpha);
        const Hooks after = hooks(grown, s, alpha);
        j *= before.upper * before.lower;
        if (s.col == new_column)
            numerator *= before.upper * after.lower;
        else
            numerator *= before.lower * after.upper;
    }
    return numerator / j;
}

namespace {

struct BinomialKey {
    Partition kappa;
    Partition sigma;
    Rational alpha;

    friend bool operator<(const BinomialKey& a, const BinomialKey& b) {
        if (a.kappa != b.kappa) return a.kappa < b.kappa;
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        return cmp(a.alpha, b.alpha) < 0;
    }
};

std::shared_mutex binomial_mutex;
std::map<BinomialKey, Rational> binomial_cache;

}  // namespace

Rational general_binomial(const Partition& kappa, const Partition& sigma, const Rational& alpha) {
    require_positive_alpha(alpha);
    const int d = kappa.degree() - sigma.degree();
    if (d < 0) return 0;
    if (d == 0) return kappa == sigma ? 1 : 0;

    BinomialKey key{kappa, sigma, alpha};
    {
        std::shared_lock lock(binomial_mutex);
        if (auto it = binomial_cache.find(key); it != binomial_cache.end()) return it->second;
    }
    Rational sum = 0;
    for (int i : contiguous_indices(sigma)) {
        const Partition up = contiguous(sigma, i);
        const Rational rest = general_binomial(kappa, up, alpha);
        if (sgn(rest) != 0) sum += contiguous_binomial(sigma, i, alpha) * rest;
    }
    Rational value = sum / d;
    std::unique_lock lock(binomial_mutex);
    binomial_cache.try_emplace(std::move(key), value);
    return value;
}

std::map<Partition, Rational> oracle_binomial(const Partition& kappa, int m, const Rational& alpha) {
    require_positive_alpha(alpha);
    if (kappa.length() > m)
        throw Error(ErrorCode::LengthExceedsVars, to_string(kappa) + " does not fit in " + std::to_string(m) + " variables");
    if (m < kappa.degree())
        throw Error(ErrorCode::InsufficientVars,
                    "need at least |kappa| = " + std::to_string(kappa.degree()) + " variables, got " + std::to_string(m));

    SymmetricPolynomial residual = shift_arguments(jack(kappa, m, alpha), 1);
    residual *= 1 / jack_at_ones(kappa, m, alpha);

    // Each normalised J_sigma has leading monomial m_sigma and only dominated
    // terms below it, so peeling partitions off from the top of each degree
    // is a triangular solve.
    std::map<Partition, Rational> out;
    for (int degree = kappa.degree(); degree >= 0; --degree) {
        for (const auto& sigma : enumerate_partitions(degree, m)) {
            const Rational c = residual.coeff(sigma);
            if (sgn(c) == 0) continue;
            SymmetricPolynomial basis = jack(sigma, m, alpha);
            basis *= 1 / jack_at_ones(sigma, m, alpha);
            const Rational lead = basis.coeff(sigma);
            if (sgn(lead) == 0) throw Error(ErrorCode::SingularSystem, "J_" + to_string(sigma) + " lacks its leading term");
            const Rational b = c / lead;
            out.emplace(sigma, b);
            residual -= basis * b;
        }
    }
    if (!residual.is_zero()) throw Error(ErrorCode::SingularSystem, "shifted Jack expansion left a residual");
    return out;
}

PositivityReport positivity_scan(int max_degree, int max_length, const Rational& alpha) {
    require_positive_alpha(alpha);
    PositivityReport report;
    report.alpha = alpha;
    report.max_degree = max_degree;
    report.max_length = max_length;

    const auto all = enumerate_partitions_up_to(max_degree, max_length);
    for (const auto& kappa : all) {
        for (const auto& sigma : all) {
            if (sigma.degree() > kappa.degree()) break;
            ++report.pairs_checked;
            Rational value = general_binomial(kappa, sigma, alpha);
            if (sgn(value) < 0) report.violations.push_back({kappa, sigma, std::move(value), "general>=0"});
        }
    }
    for (const auto& sigma : all) {
        if (sigma.degree() >= max_degree) break;
        for (int i : contiguous_indices(sigma)) {
            const Partition up = contiguous(sigma, i);
            if (up.length() > max_length) continue;
            ++report.contiguous_checked;
            Rational value = contiguous_binomial(sigma, i, alpha);
            if (sgn(value) <= 0) report.violations.push_back({up, sigma, std::move(value), "contiguous>0"});
        }
    }
    return report;
}

}  // namespace jackcone
