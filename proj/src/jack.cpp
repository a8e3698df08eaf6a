#include "jackcone/jack.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "jackcone/error.hpp"

namespace jackcone {

Rational eigenvalue(const Partition& kappa, int m, const Rational& alpha) {
    if (kappa.length() > m)
        throw Error(ErrorCode::LengthExceedsVars, to_string(kappa) + " does not fit in " + std::to_string(m) + " variables");
    long shift = 0;
    long quadratic = 0;
    for (int i = 1; i <= kappa.length(); ++i) {
        const long k = kappa.part(i);
        quadratic += k * (k - 1);
        shift += static_cast<long>(i - 1) * k;
    }
    return Rational(alpha * quadratic / 2 - shift + static_cast<long>(m - 1) * kappa.degree());
}

namespace {

SymmetricPolynomial build_jack(const Partition& kappa, int m, const Rational& alpha) {
    const int n = kappa.degree();
    if (n == 0) return SymmetricPolynomial::constant(m, 1);
    // Monomial coefficients of J_kappa do not depend on the number of
    // variables once it reaches n, so the eigenproblem is always solved in
    // exactly n variables and the result relabelled to m.
    const int work_vars = n;

    // Basis: partitions of n dominated by kappa, largest first. Reverse
    // lexicographic order extends dominance, so every mu that can feed row nu
    // precedes it.
    std::vector<Partition> basis;
    for (auto& mu : enumerate_partitions(n, n))
        if (dominated_by(mu, kappa)) basis.push_back(std::move(mu));

    // Column images D(m_mu) for every basis element.
    std::vector<SymmetricPolynomial> images;
    images.reserve(basis.size());
    for (const auto& mu : basis) images.push_back(apply_D(SymmetricPolynomial::monomial(work_vars, mu), alpha));

    const Rational top = eigenvalue(kappa, work_vars, alpha);
    std::vector<Rational> x(basis.size());
    x[0] = 1;
    for (std::size_t row = 1; row < basis.size(); ++row) {
        const Partition& nu = basis[row];
        const Rational diagonal = images[row].coeff(nu);
        if (diagonal != eigenvalue(nu, work_vars, alpha))
            throw Error(ErrorCode::SingularSystem, "diagonal of D(alpha) at " + to_string(nu) + " is not e_nu");
        const Rational pivot = top - diagonal;
        if (sgn(pivot) <= 0)
            throw Error(ErrorCode::SingularSystem,
                        "non-positive pivot e_kappa - e_nu at kappa=" + to_string(kappa) + ", nu=" + to_string(nu));
        Rational sum = 0;
        for (std::size_t col = 0; col < row; ++col)
            if (sgn(x[col]) != 0) sum += images[col].coeff(nu) * x[col];
        x[row] = sum / pivot;
    }

    const Partition ones = column_partition(n);
    Rational ones_coeff = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == ones) ones_coeff = x[i];
    if (sgn(ones_coeff) == 0) throw Error(ErrorCode::SingularSystem, "J_" + to_string(kappa) + " has no m_{1^n} term");

    mpz_class factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    const Rational scale = Rational(factorial) / ones_coeff;

    SymmetricPolynomial out(m);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].length() <= m) out.add_term(basis[i], x[i] * scale);
    return out;
}

struct JackKey {
    Partition kappa;
    int m;
    Rational alpha;

    friend bool operator<(const JackKey& a, const JackKey& b) {
        if (a.m != b.m) return a.m < b.m;
        if (a.kappa != b.kappa) return a.kappa < b.kappa;
        return cmp(a.alpha, b.alpha) < 0;
    }
};

}  // namespace

const SymmetricPolynomial& jack(const Partition& kappa, int m, const Rational& alpha) {
    require_positive_alpha(alpha);
    if (kappa.length() > m)
        throw Error(ErrorCode::LengthExceedsVars, to_string(kappa) + " does not fit in " + std::to_string(m) + " variables");

    static std::shared_mutex mutex;
    static std::map<JackKey, SymmetricPolynomial> cache;
    JackKey key{kappa, m, alpha};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    SymmetricPolynomial value = build_jack(kappa, m, alpha);
    std::unique_lock lock(mutex);
    return cache.try_emplace(std::move(key), std::move(value)).first->second;
}

Rational jack_at_ones(const Partition& kappa, int m, const Rational& alpha) {
    const auto& p = jack(kappa, m, alpha);
    const std::vector<Rational> ones(static_cast<std::size_t>(m), Rational(1));
    return eval(p, ones);
}

}  // namespace jackcone
