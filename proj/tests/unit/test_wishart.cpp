#include <doctest.h>

#include <cmath>

#include "jackcone/error.hpp"
#include "jackcone/jack.hpp"
#include "jackcone/wishart.hpp"

using namespace jackcone;

namespace {

WishartParams unit_params(const ConeDescriptor& cone, const Rational& beta, std::vector<Rational> omega) {
    return {cone, beta, Scale::unit(), NonCentrality::from_eigenvalues(std::move(omega))};
}

ConeDescriptor real(int m) { return make_cone(ConeFamily::RealSymmetric, m); }

Rational abs_q(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

// First two derivatives at s = 0 of log L(s u0) from the exact determinant and
// exponent, by symmetric difference quotients (error O(h^2)).
struct LogDerivatives {
    Rational first;
    Rational second;
};

LogDerivatives log_laplace_derivatives(const WishartParams& p, const RationalMatrix& direction, const Rational& h) {
    auto at = [&](const Rational& s) { return laplace_transform(p, direction * s); };
    const auto plus = at(h), minus = at(-h);
    const Rational d1 = (plus.determinant - minus.determinant) / (2 * h);
    const Rational d2 = (plus.determinant - 2 + minus.determinant) / (h * h);
    const Rational e1 = (plus.exponent - minus.exponent) / (2 * h);
    const Rational e2 = (plus.exponent + minus.exponent) / (h * h);
    // f = -beta log D - E with D(0) = 1, E(0) = 0.
    return {-p.beta * d1 - e1, -p.beta * (d2 - d1 * d1) - e2};
}

// Verdict written straight from the two conditions.
bool transcribed_verdict(int r, int d, const Rational& beta, int rank) {
    bool wallach = 2 * beta >= d * (r - 1);
    for (int j = 0; j <= r - 2; ++j)
        if (2 * beta == d * j) wallach = true;
    const bool rank_ok = 2 * beta >= d * (r - 1) || d * rank <= 2 * beta;
    return wallach && rank_ok;
}

}  // namespace

TEST_SUITE("wishart-engine") {
    TEST_CASE("Pochhammer symbols") {
        for (const Rational& a : {Rational(0), Rational(1, 3), Rational(5, 2)}) CHECK(pochhammer_general(a, {}, 2) == 1);
        CHECK(pochhammer_general(0, {1}, Rational(1, 2)) == 0);
        for (int l = 0; l <= 4; ++l) {
            const Rational beta(3, 4);
            Rational expected = 1;
            for (int i = 0; i <= l; ++i) expected *= beta - ratio(i, 2);
            CHECK(pochhammer_general(beta, column_partition(l + 1), 2) == expected);
        }
        // Rising convention on a row: (a)_(3) = a (a+1) (a+2).
        CHECK(pochhammer_general(Rational(1, 2), {3}, 2) == Rational(1, 2) * Rational(3, 2) * Rational(5, 2));
        CHECK(pochhammer_general(1, {2, 1}, 2) == Rational(1 * 2) * Rational(1, 2));
        CHECK_THROWS_AS(pochhammer_general(1, {1}, 0), Error);
    }

    TEST_CASE("Pochhammer ratio") {
        const Partition k{2, 1};
        CHECK(pochhammer_ratio(Rational(2, 3), k, k, 2) == 1);
        CHECK(pochhammer_ratio(Rational(2, 3), k, {}, 2) == pochhammer_general(Rational(2, 3), k, 2));
        CHECK(pochhammer_ratio(Rational(1, 2), {1, 1}, {1}, 2) == 0);
        // Away from zeros the product equals the quotient.
        for (const auto& s : std::vector<Partition>{{}, {1}, {2}, {1, 1}, {2, 1}})
            CHECK(pochhammer_ratio(Rational(7, 3), k, s, Rational(2, 3)) ==
                  pochhammer_general(Rational(7, 3), k, Rational(2, 3)) / pochhammer_general(Rational(7, 3), s, Rational(2, 3)));
        CHECK_THROWS_AS(pochhammer_ratio(1, {1}, {2}, 2), Error);
        try {
            pochhammer_ratio(1, {1, 1}, {2}, 2);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotNested);
        }
    }

    TEST_CASE("zonal normalisation examples") {
        const auto& z = zonal_normalization(2, 2, 1);
        CHECK(z.coefficients.at({2}) == Rational(8, 3));
        CHECK(z.coefficients.at({1, 1}) == Rational(4, 3));
        CHECK(zonal_polynomial({1, 1}, 2, 1) == SymmetricPolynomial::monomial(2, {1, 1}, Rational(4, 3)));
        CHECK(zonal_polynomial({2}, 2, 1) ==
              SymmetricPolynomial::monomial(2, {2}) + SymmetricPolynomial::monomial(2, {1, 1}, Rational(2, 3)));
        CHECK(zonal_normalization(0, 3, 2).coefficients.at({}) == 1);
        for (int d : {1, 2, 4, 8}) CHECK(zonal_normalization(1, 3, d).coefficients.at({1}) == 3);
    }

    TEST_CASE("trace-power identity, all c positive") {
        for (int d : {1, 2, 4, 8})
            for (int r = 1; r <= 3; ++r)
                for (int k = 0; k <= 4; ++k) {
                    SymmetricPolynomial sum(r);
                    for (const auto& [kappa, c] : zonal_normalization(k, r, d).coefficients) {
                        CHECK(sgn(c) > 0);
                        sum += zonal_polynomial(kappa, r, d);
                    }
                    // (sum x_i)^k expanded independently: multinomial coefficients.
                    SymmetricPolynomial expected(r);
                    for (const auto& mu : enumerate_partitions(k, r)) {
                        Rational c = 1;
                        for (int i = 2; i <= k; ++i) c *= i;
                        for (int part : mu.parts())
                            for (int i = 2; i <= part; ++i) c /= i;
                        expected.add_term(mu, c);
                    }
                    CHECK(sum == expected);
                }
    }

    TEST_CASE("zonal values") {
        const std::vector<Rational> ev{Rational(1, 2), 3, Rational(2, 7)};
        CHECK(zonal_value({1}, ev, 1) == Rational(1, 2) + 3 + Rational(2, 7));
        CHECK(zonal_value({1, 1}, std::vector<Rational>{1, 0}, 1) == 0);
        CHECK(zonal_value({1, 1}, std::vector<Rational>{1, 1}, 1) == Rational(4, 3));
        CHECK(zonal_value({1, 1, 1}, std::vector<Rational>{1, 1}, 1) == 0);
        CHECK_THROWS_AS(zonal_value({1}, std::vector<Rational>{}, 1), Error);
    }

    TEST_CASE("zonal positivity") {
        const std::vector<std::vector<Rational>> points{{1, 0, 0}, {2, 1, 0}, {Rational(1, 3), 4, 1}, {0, 0, 0}, {5, 5, 5}};
        for (int d : {1, 2, 4})
            for (const auto& x : points) {
                int nonzero = 0;
                for (const auto& v : x) nonzero += sgn(v) != 0;
                for (const auto& kappa : enumerate_partitions_up_to(5, 3)) {
                    const Rational z = zonal_value(kappa, x, d);
                    CHECK(sgn(z) >= 0);
                    if (!kappa.empty() && kappa.length() == nonzero) CHECK(sgn(z) > 0);
                    if (kappa.length() > nonzero) CHECK(sgn(z) == 0);
                }
            }
    }

    TEST_CASE("power-sum evaluation agrees with eigenvalue evaluation") {
        const std::vector<Rational> ev{Rational(1, 2), 3, Rational(2, 7)};
        std::vector<Rational> ps;
        for (int j = 1; j <= 5; ++j) {
            Rational s = 0;
            for (const auto& v : ev) {
                Rational p = 1;
                for (int i = 0; i < j; ++i) p *= v;
                s += p;
            }
            ps.push_back(s);
        }
        std::vector<double> psd;
        for (const auto& v : ps) psd.push_back(to_double(v));
        for (int d : {1, 2})
            for (const auto& kappa : enumerate_partitions_up_to(5, 3)) {
                const Rational exact = zonal_value(kappa, ev, d);
                CHECK(zonal_from_power_sums(kappa, 3, d, std::span<const Rational>(ps)) == exact);
                CHECK(zonal_from_power_sums(kappa, 3, d, std::span<const double>(psd)) ==
                      doctest::Approx(to_double(exact)).epsilon(1e-12));
            }
    }

    TEST_CASE("Laguerre examples") {
        const auto cone = real(2);
        for (const Rational& beta : {Rational(1, 4), Rational(1), Rational(5, 2)}) {
            CHECK(laguerre({}, beta, std::vector<Rational>{1, 2}, 3, cone) == 1);
            const std::vector<Rational> w{Rational(1, 3), 2};
            const Rational t(3, 5);
            CHECK(laguerre({1}, beta, w, t, cone) == beta + t * (w[0] + w[1]) / 2);
        }
        CHECK(laguerre({1}, 1, std::vector<Rational>{1, 0}, 1, cone) == Rational(3, 2));
        CHECK_THROWS_AS(laguerre({1, 1, 1}, 1, std::vector<Rational>{1, 0}, 1, cone), Error);
    }

    TEST_CASE("putative moment examples") {
        for (int r = 1; r <= 3; ++r)
            for (const Rational& beta : {Rational(1, 2), Rational(3, 4), Rational(2)}) {
                std::vector<Rational> w(static_cast<std::size_t>(r));
                Rational tr = 0;
                for (int i = 0; i < r; ++i) tr += w[static_cast<std::size_t>(i)] = ratio(i + 1, 3);
                for (const Rational& t : {Rational(0), Rational(1), Rational(5, 2)})
                    CHECK(putative_moment({1}, unit_params(real(r), beta, w), t) == beta * r + t * tr);
            }
        const auto p = unit_params(real(2), Rational(1, 4), {1, 0});
        CHECK(putative_moment({1, 1}, p, 0) == Rational(4, 3) * Rational(-1, 16));
        for (int t = 0; t <= 8; ++t) CHECK(sgn(putative_moment({1, 1}, p, t)) < 0);
        // Omega = 0 or t = 0: Z_kappa(e) (beta)_kappa.
        for (const auto& kappa : enumerate_partitions_up_to(4, 3)) {
            const auto q = unit_params(real(3), Rational(7, 4), {2, 1, 0});
            CHECK(putative_moment(kappa, q, 0) ==
                  zonal_at_identity(kappa, 3, 1) * pochhammer_general(Rational(7, 4), kappa, 2));
        }
        CHECK(putative_moment({1, 1, 1}, p, 1) == 0);
        CHECK_THROWS_AS(putative_moment({1}, p, -1), Error);
    }

    TEST_CASE("moment and Laplace transform agree (unit scale, degrees 1 and 2)") {
        const Rational h(1, 1000000);
        const Rational h1 = h * h * h * h * h;  // 1e-30
        const Rational h2 = h * h * h;          // 1e-18
        for (int r = 1; r <= 3; ++r)
            for (const Rational& beta : {Rational(1, 2), Rational(3, 2), Rational(7, 3)})
                for (const Rational& t : {Rational(0), Rational(1, 2), Rational(2)}) {
                    std::vector<Rational> w;
                    for (int i = 0; i < r; ++i) w.push_back(ratio(2 * i + 1, 4));
                    const auto p = unit_params(real(r), beta, w);
                    const auto tilted = unit_params(real(r), beta, p.omega.scaled(t).eigenvalues);
                    const auto dir = RationalMatrix::identity(r);
                    const auto first = log_laplace_derivatives(tilted, dir, h1);
                    const Rational m1 = putative_moment({1}, p, t);
                    CHECK(abs_q(-first.first - m1) < Rational(1, 1000000) * h * h * h * h);
                    // E (tr S)^2 = sum over |kappa| = 2 of the putative moments.
                    const auto second = log_laplace_derivatives(tilted, dir, h2);
                    const Rational lhs = second.second + second.first * second.first;
                    Rational m2 = 0;
                    for (const auto& kappa : enumerate_partitions(2, r)) m2 += putative_moment(kappa, p, t);
                    CHECK(abs_q(lhs - m2) < Rational(1, 1000000) * h * h);
                }
    }

    TEST_CASE("standardisation with a matrix scale matches the original transform") {
        RationalMatrix sigma(2, 2);
        sigma(0, 0) = 2;
        sigma(0, 1) = sigma(1, 0) = Rational(1, 3);
        sigma(1, 1) = Rational(3, 4);
        RationalMatrix omega(2, 2);
        omega(0, 0) = 1;
        omega(0, 1) = omega(1, 0) = Rational(1, 2);
        omega(1, 1) = Rational(1, 4);  // rank 1
        const WishartParams p{real(2), Rational(3, 2), Scale::matrix(sigma), NonCentrality::from_matrix(omega)};
        const auto sp = standardize(p);
        CHECK(sp.scale.is_unit());
        CHECK(sp.omega.kind == NonCentrality::Kind::SimilarMatrix);
        CHECK(noncentrality_rank(sp.omega) == 1);
        CHECK(sp.omega.exact.trace() == (inverse(sigma) * omega).trace() / 2);

        // Along u = s Sigma^{-1}/2, tr(u S) = s tr(S') with S' standardised.
        const RationalMatrix dir = inverse(sigma) * Rational(1, 2);
        const Rational h(1, 1000000);
        const auto first = log_laplace_derivatives(p, dir, h * h * h * h * h);
        CHECK(abs_q(-first.first - putative_moment({1}, p, 1)) < Rational(1, 1000000) * h * h * h * h);
        CHECK(to_double(-first.first) == doctest::Approx(to_double(2 * p.beta + (inverse(sigma) * omega).trace() / 2)));
        const auto second = log_laplace_derivatives(p, dir, h * h * h);
        Rational m2 = 0;
        for (const auto& kappa : enumerate_partitions(2, 2)) m2 += putative_moment(kappa, p, 1);
        CHECK(abs_q(second.second + second.first * second.first - m2) < Rational(1, 1000000) * h * h);
    }

    TEST_CASE("standardisation examples") {
        RationalMatrix omega(2, 2);
        omega(0, 0) = 3;
        omega(0, 1) = omega(1, 0) = 1;
        omega(1, 1) = 1;
        WishartParams p{real(2), 1, Scale::matrix(RationalMatrix::identity(2) * Rational(1, 2)), NonCentrality::from_matrix(omega)};
        auto sp = standardize(p);
        CHECK(sp.scale.is_unit());
        CHECK(sp.omega.kind == NonCentrality::Kind::ExactMatrix);
        CHECK(sp.omega.exact == omega);

        WishartParams q{real(1), 1, Scale::multiple_of_identity(2), NonCentrality::from_eigenvalues({3})};
        sp = standardize(q);
        CHECK(sp.omega.eigenvalues[0] == Rational(3, 4));
        // E S = 2 beta Sigma + Omega in the original scale, standardised E S' = beta + Omega'.
        CHECK((2 * q.beta * 2 + 3) / 4 == q.beta + sp.omega.eigenvalues[0]);

        RationalMatrix bad = RationalMatrix::identity(2);
        bad(1, 1) = -1;
        WishartParams r{real(2), 1, Scale::matrix(bad), NonCentrality::zero(2)};
        CHECK_THROWS_AS(standardize(r), Error);
        try {
            standardize(r);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotPositiveDefinite);
        }
    }

    TEST_CASE("floating-point standardisation keeps the rank") {
        RealMatrix sigma(2, 2);
        sigma(0, 0) = 1.5;
        sigma(0, 1) = sigma(1, 0) = 0.2;
        sigma(1, 1) = 0.7;
        RealMatrix omega(2, 2);
        omega(0, 0) = 1.0;
        omega(0, 1) = omega(1, 0) = 2.0;
        omega(1, 1) = 4.0;
        const WishartParams p{real(2), 1, Scale::matrix(sigma), NonCentrality::from_matrix(omega)};
        const auto sp = standardize(p);
        CHECK(noncentrality_rank(sp.omega) == 1);
        const RealMatrix m = real_inverse(sigma) * omega;
        CHECK(sp.omega.approx.trace() == doctest::Approx(m.trace() / 2));
    }

    TEST_CASE("tilt") {
        const auto p = WishartParams{real(2), 1, Scale::multiple_of_identity(1), NonCentrality::from_eigenvalues({4, 8})};
        const auto same = tilt(p, 1);
        CHECK(same.omega.eigenvalues == p.omega.eigenvalues);
        CHECK(same.scale.scalar == 1);
        const auto t2 = tilt(p, 2);
        CHECK(t2.omega.eigenvalues == std::vector<Rational>{1, 2});
        CHECK(tilt(tilt(p, 1), 2).omega.eigenvalues == t2.omega.eigenvalues);
        CHECK_THROWS_AS(tilt(p, 0), Error);
        CHECK_THROWS_AS(tilt(p, -1), Error);
        RationalMatrix s = RationalMatrix::identity(2);
        s(0, 0) = 2;
        CHECK_THROWS_AS(tilt(WishartParams{real(2), 1, Scale::matrix(s), NonCentrality::zero(2)}, 1), Error);
    }

    TEST_CASE("tilt matches the exponentially tilted transform") {
        // X ~ Gamma(beta, t e; Omega) tilted by exp(-<v, X>), v = (1 - 1/t)/2 e,
        // has the law Gamma(beta, e; Omega/t^2).
        const Rational t(3, 2), beta(5, 4);
        const std::vector<Rational> w{2, Rational(1, 3)};
        const WishartParams p{real(2), beta, Scale::multiple_of_identity(t), NonCentrality::from_eigenvalues(w)};
        const auto q = tilt(p, t);
        const RationalMatrix v = RationalMatrix::identity(2) * ((1 - 1 / t) / 2);
        RationalMatrix u(2, 2);
        u(0, 0) = Rational(1, 5);
        u(0, 1) = u(1, 0) = Rational(1, 7);
        u(1, 1) = Rational(2, 3);
        const auto num = laplace_transform(p, u + v), den = laplace_transform(p, v);
        const auto target = laplace_transform(q, u);
        CHECK(num.determinant / den.determinant == target.determinant);
        CHECK(num.exponent - den.exponent == target.exponent);
    }

    TEST_CASE("Laplace transform examples") {
        const auto one = real(1);
        RationalMatrix u(1, 1);
        WishartParams p{one, 1, Scale::multiple_of_identity(Rational(1, 2)), NonCentrality::zero(1)};
        CHECK(laplace_transform(p, RationalMatrix(1, 1)).value == 1.0);
        u(0, 0) = 1;
        CHECK(laplace_transform(p, u).value == doctest::Approx(0.5));
        CHECK(laplace_transform(p, u).to_decimal(10) == "0.5");
        WishartParams q{one, 1, Scale::matrix(RationalMatrix::identity(1)), NonCentrality::from_eigenvalues({1})};
        u(0, 0) = Rational(-3, 5);
        CHECK_THROWS_AS(laplace_transform(q, u), Error);
        try {
            laplace_transform(q, u);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::OutOfDomain);
        }
        u(0, 0) = Rational(-2, 5);
        const auto v = laplace_transform(q, u);
        CHECK(std::isfinite(v.value));
        // (1 - 0.8)^{-1} exp(0.4 / 0.2).
        CHECK(v.value == doctest::Approx(5.0 * std::exp(2.0)));
        CHECK(v.to_decimal(30).substr(0, 21) == "36.945280494653251136");
        CHECK_THROWS_AS(laplace_transform(unit_params(make_cone(ConeFamily::Lorentz, 5), 1, {0, 0}), RationalMatrix::identity(2)),
                        Error);
    }

    TEST_CASE("Laplace domain boundary") {
        RationalMatrix sigma(2, 2);
        sigma(0, 0) = 1;
        sigma(0, 1) = sigma(1, 0) = Rational(1, 4);
        sigma(1, 1) = Rational(1, 2);
        const WishartParams p{real(2), Rational(3, 2), Scale::matrix(sigma), NonCentrality::from_eigenvalues({1, 0})};
        const RationalMatrix half_inverse = inverse(sigma) * Rational(1, 2);
        for (const Rational& eps : {Rational(1, 10), Rational(1, 1000), Rational(1, 1000000)}) {
            const RationalMatrix u = RationalMatrix::identity(2) * eps - half_inverse;
            CHECK(in_laplace_domain(p, u));
            CHECK(laplace_transform(p, u).exact);
        }
        for (const Rational& eps : {Rational(0), Rational(-1, 1000000)}) {
            const RationalMatrix u = RationalMatrix::identity(2) * eps - half_inverse;
            CHECK_FALSE(in_laplace_domain(p, u));
            CHECK_THROWS_AS(laplace_transform(p, u), Error);
        }
    }

    TEST_CASE("existence examples") {
        const auto c3 = real(3);
        auto v = existence_check(unit_params(c3, Rational(1, 2), {1, 0, 0}));
        CHECK(v.passes);
        CHECK_FALSE(v.certificate.has_value());

        const auto p2 = unit_params(c3, Rational(1, 2), {1, 1, 0});
        v = existence_check(p2);
        CHECK_FALSE(v.passes);
        CHECK(v.failed_condition == FailedCondition::RankCondition);
        REQUIRE(v.certificate);
        CHECK(v.certificate->kappa == Partition({1, 1, 1}));
        CHECK(sgn(v.certificate->t) > 0);
        CHECK(verify_certificate(p2, *v.certificate));

        const auto p3 = unit_params(c3, Rational(3, 4), {0, 0, 0});
        v = existence_check(p3);
        CHECK_FALSE(v.passes);
        CHECK(v.failed_condition == FailedCondition::GindikinWallach);
        REQUIRE(v.certificate);
        CHECK(v.certificate->kappa == Partition({1, 1, 1}));
        CHECK(v.certificate->t == 0);
        CHECK(v.certificate->value == zonal_at_identity({1, 1, 1}, 3, 1) * Rational(3, 4) * Rational(1, 4) * Rational(-1, 4));
        CHECK(verify_certificate(p3, *v.certificate));
    }

    TEST_CASE("verdict matches the transcribed conditions, certificates are sound") {
        for (int d : {1, 2})
            for (int m = 2; m <= 3; ++m) {
                const auto cone = make_cone(d == 1 ? ConeFamily::RealSymmetric : ConeFamily::ComplexHermitian, m);
                for (int q = 0; q <= 8; ++q)
                    for (int rank = 0; rank <= m; ++rank) {
                        std::vector<Rational> w(static_cast<std::size_t>(m));
                        for (int i = 0; i < rank; ++i) w[static_cast<std::size_t>(i)] = ratio(i + 2, 3);
                        const auto p = unit_params(cone, ratio(q, 4), w);
                        const auto v = existence_check(p);
                        CHECK(v.passes == transcribed_verdict(m, d, ratio(q, 4), rank));
                        CHECK(v.omega_rank == rank);
                        if (!v.passes) {
                            REQUIRE(v.certificate);
                            CHECK(sgn(v.certificate->value) < 0);
                            CHECK(verify_certificate(p, *v.certificate));
                        }
                    }
            }
    }

    TEST_CASE("existence with matrix inputs") {
        RationalMatrix omega(3, 3);
        omega(0, 0) = 1;
        omega(0, 1) = omega(1, 0) = 1;
        omega(1, 1) = 1;  // rank 1
        WishartParams p{real(3), Rational(1, 2), Scale::unit(), NonCentrality::from_matrix(omega)};
        auto v = existence_check(p);
        CHECK(v.passes);
        CHECK(v.omega_rank == 1);
        omega(2, 2) = 2;  // rank 2
        p.omega = NonCentrality::from_matrix(omega);
        v = existence_check(p);
        CHECK_FALSE(v.passes);
        REQUIRE(v.certificate);
        CHECK(verify_certificate(p, *v.certificate));

        // Non-scalar scale goes through the similar-matrix route.
        RationalMatrix sigma = RationalMatrix::identity(3);
        sigma(0, 1) = sigma(1, 0) = Rational(1, 2);
        p.scale = Scale::matrix(sigma);
        v = existence_check(p);
        CHECK_FALSE(v.passes);
        CHECK(v.omega_rank == 2);
        REQUIRE(v.certificate);
        CHECK(verify_certificate(p, *v.certificate));

        // Not PSD.
        omega(2, 2) = -1;
        p.omega = NonCentrality::from_matrix(omega);
        CHECK_THROWS_AS(existence_check(p), Error);
    }

    TEST_CASE("floating-point non-centrality carries a warning") {
        RealMatrix omega(3, 3);
        omega(0, 0) = 1.0;
        omega(1, 1) = 1e-14;
        WishartParams p{real(3), Rational(1, 2), Scale::unit(), NonCentrality::from_matrix(omega)};
        auto v = existence_check(p);
        CHECK(v.passes);
        CHECK(v.omega_rank == 1);
        CHECK(v.warning.has_value());
        omega(1, 1) = 0.5;
        p.omega = NonCentrality::from_matrix(omega);
        v = existence_check(p);
        CHECK_FALSE(v.passes);
        REQUIRE(v.certificate);
        CHECK(verify_certificate(p, *v.certificate));
    }

    TEST_CASE("other cones") {
        // Lorentz cone with d = 3: discrete points 0 only (r = 2), continuous part beta >= 3/2.
        const auto lorentz = make_cone(ConeFamily::Lorentz, 5);
        CHECK(existence_check(unit_params(lorentz, 0, {0, 0})).passes);
        auto v = existence_check(unit_params(lorentz, 1, {0, 0}));
        CHECK_FALSE(v.passes);
        CHECK(v.failed_condition == FailedCondition::GindikinWallach);
        v = existence_check(unit_params(lorentz, 0, {1, 0}));
        CHECK_FALSE(v.passes);
        CHECK(v.failed_condition == FailedCondition::RankCondition);
        const auto oct = make_cone(ConeFamily::Octonion);
        CHECK(existence_check(unit_params(oct, 4, {1, 0, 0})).passes);
        v = existence_check(unit_params(oct, 4, {1, 1, 0}));
        CHECK_FALSE(v.passes);
        REQUIRE(v.certificate);
        CHECK(verify_certificate(unit_params(oct, 4, {1, 1, 0}), *v.certificate));
    }

    TEST_CASE("invalid parameters") {
        CHECK_THROWS_AS(existence_check(unit_params(real(2), -1, {0, 0})), Error);
        CHECK_THROWS_AS(existence_check(unit_params(real(2), 1, {0, 0, 0})), Error);
        CHECK_THROWS_AS(existence_check(unit_params(real(2), 1, {-1, 0})), Error);
        try {
            existence_check(unit_params(real(2), 1, {-1, 0}));
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidParams);
        }
    }
}
