#include <doctest.h>

#include <cmath>

#include "jackcone/error.hpp"
#include "jackcone/monte_carlo.hpp"

using namespace jackcone;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("monte-carlo") {
    TEST_CASE("one-dimensional central case has mean 1/2") {
        const std::vector<double> omega{0.0};
        const auto batch = sample_noncentral_wishart(1, Rational(1, 2), omega, 200000, 11);
        CHECK(batch.count == 200000);
        const auto est = empirical_moment(batch, {1});
        // x^2 with x ~ N(0, 1/2): mean 1/2, sd 1/sqrt(2).
        CHECK(std::abs(est.mean - 0.5) < 4 * est.standard_error);
        CHECK(est.standard_error == doctest::Approx(std::sqrt(0.5 / 200000)).epsilon(0.05));
    }

    TEST_CASE("argument errors") {
        const std::vector<double> two{1.0, 1.0};
        CHECK(code_of([&] { sample_noncentral_wishart(2, Rational(1, 2), two, 10, 1); }) == ErrorCode::RankExceedsDegrees);
        const std::vector<double> zero{0.0, 0.0};
        CHECK(code_of([&] { sample_noncentral_wishart(2, Rational(3, 4), zero, 10, 1); }) == ErrorCode::NonHalfInteger);
        CHECK(code_of([&] { sample_noncentral_wishart(2, 0, zero, 10, 1); }) == ErrorCode::NonHalfInteger);
        const auto batch = sample_noncentral_wishart(2, 1, zero, 10, 1);
        CHECK(code_of([&] { empirical_moment(batch, {5}); }) == ErrorCode::DegreeTooHigh);
        CHECK(code_of([&] { empirical_laplace(batch, RealMatrix::identity(2) * -1.0); }) == ErrorCode::OutOfDomain);
    }

    TEST_CASE("samples are positive semidefinite") {
        const std::vector<double> omega{2.0, 0.5, 0.0};
        const auto batch = sample_noncentral_wishart(3, Rational(3, 2), omega, 5000, 3);
        CHECK(batch_is_psd(batch));
        for (long i = 0; i < 50; ++i) CHECK(batch.sample(i).is_symmetric());
    }

    TEST_CASE("batches do not depend on the thread count") {
        const std::vector<double> omega{1.0, 0.0};
        const auto one = sample_noncentral_wishart(2, 1, omega, 20000, 99, {.chunk_size = 1000, .threads = 1});
        const auto three = sample_noncentral_wishart(2, 1, omega, 20000, 99, {.chunk_size = 1000, .threads = 3});
        CHECK(one.data == three.data);
        const auto e1 = empirical_moment(one, {2, 1}, 1), e3 = empirical_moment(one, {2, 1}, 3);
        CHECK(e1.mean == e3.mean);
        CHECK(e1.standard_error == e3.standard_error);
        const auto other = sample_noncentral_wishart(2, 1, omega, 20000, 100, {.chunk_size = 1000, .threads = 1});
        CHECK(one.data != other.data);
        // A prefix of a longer run with the same chunking is the shorter run.
        const auto longer = sample_noncentral_wishart(2, 1, omega, 23000, 99, {.chunk_size = 1000, .threads = 2});
        CHECK(std::equal(one.data.begin(), one.data.end(), longer.data.begin()));
    }

    TEST_CASE("trivial estimates") {
        const std::vector<double> omega{1.0, 0.0};
        const auto batch = sample_noncentral_wishart(2, 1, omega, 1000, 5);
        auto est = empirical_moment(batch, {});
        CHECK(est.mean == 1.0);
        CHECK(est.standard_error == 0.0);
        est = empirical_laplace(batch, RealMatrix(2, 2));
        CHECK(est.mean == 1.0);
        CHECK(est.standard_error == 0.0);
    }

    TEST_CASE("a moment that is exactly zero") {
        // beta = 1/2, rank-one samples: Z_(1,1) vanishes identically.
        const WishartParams p{make_cone(ConeFamily::RealSymmetric, 2), Rational(1, 2), Scale::unit(),
                              NonCentrality::from_eigenvalues({1, 0})};
        const auto report = verify_moment_formula(p, {{1, 1}}, 1, 20000, 8);
        REQUIRE(report.rows.size() == 1);
        CHECK(report.rows[0].exact == 0.0);
        CHECK(std::abs(report.rows[0].empirical) < 1e-9);
        CHECK(report.passed());
    }

    TEST_CASE("moment report on a small run") {
        const WishartParams p{make_cone(ConeFamily::RealSymmetric, 2), 1, Scale::unit(),
                              NonCentrality::from_eigenvalues({1, 0})};
        const auto report = verify_moment_formula(p, {{1}, {2}, {1, 1}}, 1, 200000, 42);
        CHECK(report.rows.size() == 3);
        CHECK(report.count == 200000);
        CHECK(report.rows[0].exact == doctest::Approx(3.0));
        for (const auto& row : report.rows) {
            CHECK(std::abs(row.z_score) <= kZGate);
            CHECK(row.relative_gated);
        }
        CHECK(report.passed());
    }

    TEST_CASE("one-dimensional Laplace value") {
        const WishartParams p{make_cone(ConeFamily::RealSymmetric, 1), Rational(1, 2), Scale::unit(),
                              NonCentrality::from_eigenvalues({0})};
        RealMatrix u(1, 1);
        u(0, 0) = 1.0;
        const auto report = verify_laplace(p, {u}, 100000, 17);
        REQUIRE(report.rows.size() == 1);
        CHECK(report.rows[0].exact == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(report.passed());
    }

    TEST_CASE("mean assignment reproduces the exact transform (3 sigma, 10^6 samples)") {
        const WishartParams p{make_cone(ConeFamily::RealSymmetric, 3), Rational(3, 2), Scale::unit(),
                              NonCentrality::from_eigenvalues({1, Rational(1, 2), 0})};
        std::vector<RealMatrix> points;
        for (double s : {0.5, -0.2}) points.push_back(RealMatrix::identity(3) * s);
        RealMatrix a = RealMatrix::identity(3) * 0.3;
        a(0, 1) = a(1, 0) = 0.2;
        a(1, 2) = a(2, 1) = -0.1;
        points.push_back(a);
        RealMatrix b(3, 3);
        b(0, 0) = -0.3;
        b(1, 1) = 0.8;
        b(2, 2) = 0.1;
        b(0, 2) = b(2, 0) = 0.15;
        points.push_back(b);
        RealMatrix c(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) c(i, j) = 0.25;
        points.push_back(c);
        const auto report = verify_laplace(p, points, 1000000, 2024, {.chunk_size = 4096, .threads = 2});
        REQUIRE(report.rows.size() == 5);
        for (const auto& row : report.rows) CHECK(std::abs(row.z_score) <= 3.0);
    }

    TEST_CASE("moment examples within 3 sigma") {
        const std::vector<double> zero{0.0, 0.0};
        const auto central = sample_noncentral_wishart(2, Rational(3, 2), zero, 400000, 21);
        auto est = empirical_moment(central, {1, 1});
        // Z_(1,1)(e) (beta)_(1,1) = 4/3 * 3/2 * 1 = 2.
        CHECK(std::abs(est.mean - 2.0) <= 3 * est.standard_error);
        const std::vector<double> omega{2.0, 0.5};
        const auto shifted = sample_noncentral_wishart(2, Rational(3, 2), omega, 400000, 22);
        est = empirical_moment(shifted, {1});
        CHECK(std::abs(est.mean - 5.5) <= 3 * est.standard_error);
    }

    TEST_CASE("Laplace preconditions") {
        RationalMatrix s = RationalMatrix::identity(2);
        const WishartParams p{make_cone(ConeFamily::RealSymmetric, 2), 1, Scale::matrix(s), NonCentrality::zero(2)};
        CHECK_THROWS_AS(verify_laplace(p, {RealMatrix(2, 2)}, 100, 1), Error);
    }
}
