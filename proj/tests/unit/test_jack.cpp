#include <doctest.h>

#include <thread>

#include "jackcone/error.hpp"
#include "jackcone/jack.hpp"
#include "jackcone/symmetric_polynomial.hpp"

using namespace jackcone;

namespace {

const std::vector<Rational> kAlphaGrid{Rational(2), Rational(1), Rational(1, 2), Rational(2, 3), Rational(1, 4)};

// det of a small rational matrix by cofactor-free elimination (test-local).
Rational det(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(a[p][k]) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            d = -d;
        }
        d *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return d;
}

Rational pow_q(const Rational& x, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// Schur polynomial by the bialternant formula.
Rational schur(const Partition& kappa, const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n)), den(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            num[i][j] = pow_q(x[i], kappa.part(j + 1) + n - 1 - j);
            den[i][j] = pow_q(x[i], n - 1 - j);
        }
    return det(num) / det(den);
}

// J_kappa(1^n; alpha) = prod over cells (n - (i-1) + alpha (j-1)).
Rational jack_at_ones_formula(const Partition& kappa, int n, const Rational& alpha) {
    Rational r = 1;
    for (const auto& c : kappa.cells()) r *= Rational(n - (c.row - 1)) + alpha * (c.col - 1);
    return r;
}

}  // namespace

TEST_SUITE("symfun-jack") {
    TEST_CASE("zonal table values at alpha = 2") {
        const auto& j2 = jack({2}, 2, 2);
        CHECK(j2 == SymmetricPolynomial::monomial(2, {2}, 3) + SymmetricPolynomial::monomial(2, {1, 1}, 2));
        CHECK(jack({1, 1}, 2, 2) == SymmetricPolynomial::monomial(2, {1, 1}, 2));
        // Degree three, three variables.
        const auto& j3 = jack({3}, 3, 2);
        CHECK(j3.coeff({3}) == 15);
        CHECK(j3.coeff({2, 1}) == 9);
        CHECK(j3.coeff({1, 1, 1}) == 6);
        const auto& j21 = jack({2, 1}, 3, 2);
        CHECK(j21.coeff({2, 1}) == 4);
        CHECK(j21.coeff({1, 1, 1}) == 6);
        CHECK(jack({1, 1, 1}, 3, 2).coeff({1, 1, 1}) == 6);
    }

    TEST_CASE("evaluation") {
        const std::vector<Rational> ones{1, 1};
        CHECK(eval(jack({1, 1}, 2, 2), ones) == 2);
        CHECK(eval(jack({2}, 2, 2), ones) == 8);
        const std::vector<Rational> zero{0, 0};
        CHECK(eval(jack({2}, 2, 2), zero) == 0);
        CHECK(eval(SymmetricPolynomial::constant(2, Rational(7, 3)), zero) == Rational(7, 3));
        const std::vector<Rational> three{1, 2, 3};
        CHECK_THROWS_AS(eval(jack({2}, 2, 2), three), Error);
    }

    TEST_CASE("eigenvalue examples") {
        CHECK(eigenvalue({2}, 2, 2) == 4);
        CHECK(eigenvalue({1, 1}, 2, 2) == 1);
        CHECK(eigenvalue({}, 5, Rational(1, 3)) == 0);
        CHECK_THROWS_AS(eigenvalue({1, 1, 1}, 2, 1), Error);
    }

    TEST_CASE("apply_D examples") {
        for (int m = 1; m <= 4; ++m) {
            const auto p = SymmetricPolynomial::monomial(m, {1});
            CHECK(apply_D(p, Rational(3, 5)) == p * Rational(m - 1));
        }
        CHECK(apply_D(SymmetricPolynomial::constant(3, 1), 2).is_zero());
        const auto& j2 = jack({2}, 2, 2);
        CHECK(apply_D(j2, 2) == j2 * Rational(4));
        CHECK_THROWS_AS(apply_D(j2, 0), Error);
    }

    TEST_CASE("single variable: J_(k)(t) = prod_{j<k} (1 + alpha j) t^k") {
        for (const auto& alpha : kAlphaGrid)
            for (int k = 0; k <= 6; ++k) {
                Rational c = 1;
                for (int j = 0; j < k; ++j) c *= 1 + alpha * j;
                const auto& p = jack(Partition{k}, 1, alpha);
                CHECK(p == SymmetricPolynomial::monomial(1, Partition{k}, c));
            }
    }

    TEST_CASE("J_(1) = m_(1)") {
        for (const auto& alpha : kAlphaGrid)
            for (int m = 1; m <= 4; ++m) CHECK(jack({1}, m, alpha) == SymmetricPolynomial::monomial(m, {1}));
    }

    TEST_CASE("alpha = 1 equals hook product times Schur polynomial") {
        const std::vector<std::vector<Rational>> points{{2, 5}, {Rational(1, 2), 3, -1}, {1, 2, 3, 4}, {Rational(-2, 3), 1, Rational(5, 4)}};
        for (const auto& x : points) {
            const int m = static_cast<int>(x.size());
            for (const auto& kappa : enumerate_partitions_up_to(5, m)) {
                Rational hook = 1;
                for (const auto& c : kappa.cells()) {
                    const auto al = arm_leg(kappa, c);
                    hook *= al.arm + al.leg + 1;
                }
                CHECK(eval(jack(kappa, m, 1), x) == hook * schur(kappa, x));
            }
        }
    }

    TEST_CASE("value at ones and leading coefficient") {
        for (const auto& alpha : kAlphaGrid)
            for (int m = 1; m <= 4; ++m)
                for (const auto& kappa : enumerate_partitions_up_to(6, m)) {
                    CHECK(jack_at_ones(kappa, m, alpha) == jack_at_ones_formula(kappa, m, alpha));
                    Rational lead = 1;
                    for (const auto& c : kappa.cells()) lead *= hooks(kappa, c, alpha).lower;
                    CHECK(jack(kappa, m, alpha).coeff(kappa) == lead);
                }
    }

    TEST_CASE("triangular support and nonnegative coefficients") {
        for (const auto& alpha : kAlphaGrid)
            for (int m = 1; m <= 4; ++m)
                for (const auto& kappa : enumerate_partitions_up_to(6, m)) {
                    const auto& p = jack(kappa, m, alpha);
                    CHECK(p.num_vars() == m);
                    CHECK(sgn(p.coeff(kappa)) > 0);
                    for (const auto& [mu, c] : p.terms()) {
                        CHECK(dominated_by(mu, kappa));
                        CHECK(sgn(c) > 0);
                    }
                }
    }

    TEST_CASE("normalisation: coefficient of m_{1^n} is n!") {
        for (const auto& alpha : kAlphaGrid)
            for (int n = 1; n <= 6; ++n)
                for (const auto& kappa : enumerate_partitions(n, n)) {
                    Rational f = 1;
                    for (int i = 2; i <= n; ++i) f *= i;
                    CHECK(jack(kappa, n, alpha).coeff(column_partition(n)) == f);
                }
    }

    TEST_CASE("restriction to fewer variables keeps the eigen-identity") {
        for (const auto& alpha : kAlphaGrid)
            for (const auto& kappa : enumerate_partitions_up_to(5, 2)) {
                const auto& p = jack(kappa, 2, alpha);
                CHECK(p == jack(kappa, 5, alpha).restrict_to(2));
                CHECK(apply_D(p, alpha) == p * eigenvalue(kappa, 2, alpha));
            }
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS(jack({1, 1, 1}, 2, 2), Error);
        CHECK_THROWS_AS(jack({1}, 1, 0), Error);
        CHECK_THROWS_AS(jack({1}, 1, -2), Error);
        try {
            jack({1, 1, 1}, 2, 2);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::LengthExceedsVars);
        }
    }

    TEST_CASE("concurrent lookups return the same cached object") {
        std::vector<const SymmetricPolynomial*> seen(4);
        {
            std::vector<std::jthread> ts;
            for (int i = 0; i < 4; ++i) ts.emplace_back([&, i] { seen[static_cast<std::size_t>(i)] = &jack({3, 2, 1}, 4, Rational(3, 7)); });
        }
        for (auto* p : seen) CHECK(p == seen[0]);
    }

    TEST_CASE("shift of arguments") {
        // (t1 + 1)(t2 + 1) = m_11 + m_1 + 1.
        const auto p = shift_arguments(SymmetricPolynomial::monomial(2, {1, 1}), 1);
        CHECK(p == SymmetricPolynomial::monomial(2, {1, 1}) + SymmetricPolynomial::monomial(2, {1}) +
                       SymmetricPolynomial::constant(2, 1));
    }
}
