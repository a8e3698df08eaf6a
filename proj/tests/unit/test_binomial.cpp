#include <doctest.h>

#include "jackcone/binomial.hpp"
#include "jackcone/error.hpp"

using namespace jackcone;

namespace {

const std::vector<Rational> kAlphaGrid{Rational(2), Rational(1), Rational(1, 2), Rational(2, 3), Rational(1, 4)};

Rational classical(int n, int k) {
    Rational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_SUITE("binomials") {
    TEST_CASE("contiguous examples") {
        for (const auto& alpha : kAlphaGrid) {
            for (int k = 0; k <= 6; ++k) CHECK(contiguous_binomial(Partition{k}, 1, alpha) == k + 1);
            CHECK(contiguous_binomial({}, 1, alpha) == 1);
            CHECK(contiguous_binomial({1}, 2, alpha) == 2);
        }
        CHECK_THROWS_AS(contiguous_binomial({1, 1}, 2, 2), Error);
        CHECK_THROWS_AS(contiguous_binomial({1}, 1, 0), Error);
    }

    TEST_CASE("general examples") {
        for (const auto& alpha : kAlphaGrid)
            for (const auto& kappa : enumerate_partitions_up_to(6, 6)) {
                CHECK(general_binomial(kappa, {}, alpha) == 1);
                if (!kappa.empty()) CHECK(general_binomial(kappa, {1}, alpha) == kappa.degree());
                for (const auto& sigma : enumerate_partitions(kappa.degree(), 6))
                    CHECK(general_binomial(kappa, sigma, alpha) == (kappa == sigma ? 1 : 0));
            }
        CHECK(general_binomial({1}, {2}, 2) == 0);
    }

    TEST_CASE("oracle examples") {
        for (const auto& alpha : kAlphaGrid) {
            for (int m = 1; m <= 3; ++m) {
                const auto o = oracle_binomial({1}, m, alpha);
                CHECK(o.at(Partition{}) == 1);
                CHECK(o.at(Partition{1}) == 1);
            }
            const auto o = oracle_binomial({1, 1}, 2, alpha);
            CHECK(o.at(Partition{}) == 1);
            CHECK(o.at(Partition{1}) == 2);
            CHECK(o.at(Partition{1, 1}) == 1);
        }
        CHECK_THROWS_AS(oracle_binomial({1, 1, 1}, 2, 2), Error);
        CHECK_THROWS_AS(oracle_binomial({3}, 2, 2), Error);
        try {
            oracle_binomial({3}, 2, 2);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InsufficientVars);
        }
    }

    TEST_CASE("recursion agrees with the shift-expansion oracle (degree <= 5)") {
        for (const auto& alpha : kAlphaGrid)
            for (int n = 1; n <= 5; ++n)
                for (const auto& kappa : enumerate_partitions(n, n)) {
                    const auto oracle = oracle_binomial(kappa, n, alpha);
                    for (const auto& sigma : enumerate_partitions_up_to(n, n)) {
                        const auto it = oracle.find(sigma);
                        const Rational expected = it == oracle.end() ? Rational(0) : it->second;
                        CHECK(general_binomial(kappa, sigma, alpha) == expected);
                    }
                }
    }

    TEST_CASE("hook formula agrees with the oracle") {
        for (const auto& alpha : kAlphaGrid)
            for (const auto& sigma : enumerate_partitions_up_to(4, 5))
                for (int i : contiguous_indices(sigma)) {
                    const Partition up = contiguous(sigma, i);
                    const int m = std::max(up.degree(), 1);
                    CHECK(contiguous_binomial(sigma, i, alpha) == oracle_binomial(up, m, alpha).at(sigma));
                }
    }

    TEST_CASE("sum rule") {
        for (const auto& alpha : kAlphaGrid)
            for (const auto& kappa : enumerate_partitions_up_to(6, 6))
                for (const auto& sigma : enumerate_partitions_up_to(kappa.degree(), 6)) {
                    Rational lhs = 0;
                    for (int i : contiguous_indices(sigma))
                        lhs += contiguous_binomial(sigma, i, alpha) * general_binomial(kappa, contiguous(sigma, i), alpha);
                    CHECK(lhs == (kappa.degree() - sigma.degree()) * general_binomial(kappa, sigma, alpha));
                }
    }

    TEST_CASE("one row: classical binomial coefficients") {
        for (const auto& alpha : kAlphaGrid)
            for (int k = 0; k <= 10; ++k)
                for (int s = 0; s <= k; ++s) CHECK(general_binomial(Partition{k}, Partition{s}, alpha) == classical(k, s));
    }

    TEST_CASE("positivity scan, small range") {
        for (const auto& alpha : kAlphaGrid) {
            const auto report = positivity_scan(5, 3, alpha);
            CHECK(report.violations.empty());
            CHECK(report.pairs_checked > 0);
            CHECK(report.contiguous_checked > 0);
            CHECK(positivity_scan(2, 1, alpha).violations.empty());
        }
    }
}
