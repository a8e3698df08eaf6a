#include "jackcone/symmetric_polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "jackcone/error.hpp"

namespace jackcone {

SymmetricPolynomial::SymmetricPolynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw Error(ErrorCode::InvalidSize, "symmetric polynomial needs at least one variable");
}

SymmetricPolynomial SymmetricPolynomial::constant(int num_vars, const Rational& value) {
    SymmetricPolynomial p(num_vars);
    p.add_term(Partition{}, value);
    return p;
}

SymmetricPolynomial SymmetricPolynomial::monomial(int num_vars, const Partition& mu, const Rational& coeff) {
    SymmetricPolynomial p(num_vars);
    p.add_term(mu, coeff);
    return p;
}

Rational SymmetricPolynomial::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymmetricPolynomial::add_term(const Partition& mu, const Rational& coeff) {
    if (mu.length() > num_vars_)
        throw Error(ErrorCode::LengthExceedsVars,
                    to_string(mu) + " has more parts than " + std::to_string(num_vars_) + " variables");
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

SymmetricPolynomial SymmetricPolynomial::restrict_to(int num_vars) const {
    SymmetricPolynomial out(num_vars);
    for (const auto& [mu, c] : terms_)
        if (mu.length() <= num_vars) out.terms_.emplace(mu, c);
    return out;
}

SymmetricPolynomial SymmetricPolynomial::homogeneous_component(int degree) const {
    SymmetricPolynomial out(num_vars_);
    for (const auto& [mu, c] : terms_)
        if (mu.degree() == degree) out.terms_.emplace(mu, c);
    return out;
}

void SymmetricPolynomial::check_vars(const SymmetricPolynomial& other) const {
    if (other.num_vars_ != num_vars_)
        throw Error(ErrorCode::DimensionMismatch, "symmetric polynomials in different numbers of variables");
}

SymmetricPolynomial& SymmetricPolynomial::operator+=(const SymmetricPolynomial& other) {
    check_vars(other);
    for (const auto& [mu, c] : other.terms_) add_term(mu, c);
    return *this;
}

SymmetricPolynomial& SymmetricPolynomial::operator-=(const SymmetricPolynomial& other) {
    check_vars(other);
    for (const auto& [mu, c] : other.terms_) add_term(mu, -c);
    return *this;
}

SymmetricPolynomial& SymmetricPolynomial::operator*=(const Rational& scalar) {
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, c] : terms_) c *= scalar;
    return *this;
}

namespace {

// Distinct permutations of mu padded to `size`, in ascending lexicographic order.
template <class F>
void for_each_arrangement(const Partition& mu, int size, F&& f) {
    std::vector<int> v = mu.padded(size);
    std::sort(v.begin(), v.end());
    do {
        f(v);
    } while (std::next_permutation(v.begin(), v.end()));
}

Rational power(const Rational& x, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

Rational monomial_eval(const Partition& mu, std::span<const Rational> point) {
    const int m = static_cast<int>(point.size());
    if (mu.length() > m) return 0;
    Rational total = 0;
    for_each_arrangement(mu, m, [&](const std::vector<int>& e) {
        Rational term = 1;
        for (int i = 0; i < m; ++i)
            if (e[static_cast<std::size_t>(i)] > 0) term *= power(point[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
        total += term;
    });
    return total;
}

Rational eval(const SymmetricPolynomial& p, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != p.num_vars())
        throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                                      std::to_string(p.num_vars()) + " variables");
    Rational total = 0;
    for (const auto& [mu, c] : p.terms()) total += c * monomial_eval(mu, point);
    return total;
}

DensePolynomial expand_dense(const SymmetricPolynomial& p) {
    DensePolynomial dense;
    for (const auto& [mu, c] : p.terms())
        for_each_arrangement(mu, p.num_vars(), [&](const std::vector<int>& e) { dense[e] += c; });
    return dense;
}

SymmetricPolynomial collect_symmetric(const DensePolynomial& dense, int num_vars) {
    SymmetricPolynomial out(num_vars);
    for (const auto& [e, c] : dense) {
        if (!std::is_sorted(e.begin(), e.end(), std::greater<>())) continue;
        out.add_term(Partition(e), c);
    }
    return out;
}

namespace {

// Image of m_mu under the pair part sum_{i!=j} t_i^2/(t_i-t_j) d_i, in m
// variables. For each unordered pair the (i,j) and (j,i) terms combine into
// (t_i^2 d_i - t_j^2 d_j) p / (t_i - t_j); the numerator is antisymmetric in
// (i,j) and is divided exactly, one binary form at a time.
SymmetricPolynomial pair_image_uncached(const Partition& mu, int m) {
    SymmetricPolynomial basis = SymmetricPolynomial::monomial(m, mu);
    const DensePolynomial dense = expand_dense(basis);
    DensePolynomial quotient;

    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            // Key: exponent vector with slots i, j cleared and slot i holding
            // the binary degree s. Value: coefficients c_k of t_i^k t_j^(s-k).
            std::map<std::vector<int>, std::vector<Rational>> forms;
            auto bucket = [&](std::vector<int> e, int s) -> std::vector<Rational>& {
                e[ui] = s;
                e[uj] = 0;
                auto& c = forms[e];
                if (c.empty()) c.resize(static_cast<std::size_t>(s + 1));
                return c;
            };
            for (const auto& [e, c] : dense) {
                const int a = e[ui], b = e[uj];
                const int s = a + b + 1;
                if (a > 0) bucket(e, s)[static_cast<std::size_t>(a + 1)] += c * a;
                if (b > 0) bucket(e, s)[static_cast<std::size_t>(a)] -= c * b;
            }
            for (auto& [key, c] : forms) {
                const int s = static_cast<int>(c.size()) - 1;
                Rational running = 0;
                // g_k = sum_{l > k} c_l; remainder sum_l c_l must vanish.
                for (int k = s - 1; k >= 0; --k) {
                    running += c[static_cast<std::size_t>(k + 1)];
                    if (sgn(running) == 0) continue;
                    std::vector<int> e = key;
                    e[ui] = k;
                    e[uj] = s - 1 - k;
                    quotient[e] += running;
                }
                if (sgn(running + c[0]) != 0)
                    throw Error(ErrorCode::SingularSystem, "pair quotient not exact for " + to_string(mu));
            }
        }
    }
    return collect_symmetric(quotient, m);
}

struct PairKey {
    Partition mu;
    int m;
    friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

const SymmetricPolynomial& pair_image(const Partition& mu, int m) {
    static std::shared_mutex mutex;
    static std::map<PairKey, SymmetricPolynomial> cache;
    PairKey key{mu, m};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    SymmetricPolynomial image = pair_image_uncached(mu, m);
    std::unique_lock lock(mutex);
    return cache.try_emplace(std::move(key), std::move(image)).first->second;
}

}  // namespace

SymmetricPolynomial apply_D(const SymmetricPolynomial& p, const Rational& alpha) {
    require_positive_alpha(alpha);
    const int m = p.num_vars();
    SymmetricPolynomial out(m);
    for (const auto& [mu, c] : p.terms()) {
        int second = 0;
        for (int part : mu.parts()) second += part * (part - 1);
        out.add_term(mu, c * alpha * second / 2);
        out += pair_image(mu, m) * c;
    }
    return out;
}

SymmetricPolynomial shift_arguments(const SymmetricPolynomial& p, const Rational& shift) {
    const int m = p.num_vars();
    DensePolynomial shifted;
    for (const auto& [e, c] : expand_dense(p)) {
        // Expand prod_i (t_i + shift)^{e_i} one variable at a time.
        DensePolynomial current{{std::vector<int>(static_cast<std::size_t>(m), 0), c}};
        for (int i = 0; i < m; ++i) {
            const int a = e[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            DensePolynomial next;
            mpz_class binom = 1;
            for (int b = a; b >= 0; --b) {
                // term t_i^b shift^(a-b) C(a,b)
                Rational weight = Rational(binom) * power(shift, a - b);
                for (const auto& [k, v] : current) {
                    std::vector<int> kk = k;
                    kk[static_cast<std::size_t>(i)] += b;
                    next[kk] += v * weight;
                }
                binom = binom * b / (a - b + 1);
            }
            current = std::move(next);
        }
        for (auto& [k, v] : current) shifted[k] += v;
    }
    return collect_symmetric(shifted, m);
}

}  // namespace jackcone
