// Python bindings. Rationals cross the boundary as "p/q" strings; the Python
// package turns them into fractions.Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jackcone/binomial.hpp"
#include "jackcone/cone.hpp"
#include "jackcone/error.hpp"
#include "jackcone/io.hpp"
#include "jackcone/jack.hpp"
#include "jackcone/monte_carlo.hpp"
#include "jackcone/partition.hpp"
#include "jackcone/wishart.hpp"

namespace py = pybind11;
using namespace jackcone;

namespace {

using Terms = std::vector<std::pair<std::vector<int>, std::string>>;

Terms terms_of(const SymmetricPolynomial& p) {
    Terms out;
    for (const auto& [mu, c] : p.terms()) out.emplace_back(mu.parts(), to_string(c));
    return out;
}

std::vector<Rational> rationals(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    for (const auto& x : xs) out.push_back(parse_rational(x));
    return out;
}

RationalMatrix rational_matrix(const std::vector<std::vector<std::string>>& rows) {
    const int m = static_cast<int>(rows.size());
    RationalMatrix out(m, m);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m)
            throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
        for (int j = 0; j < m; ++j) out(i, j) = parse_rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return out;
}

WishartParams params_of(const std::string& cone, const std::string& beta, const std::vector<std::string>& omega) {
    WishartParams p;
    p.cone = parse_cone(cone);
    p.beta = parse_rational(beta);
    p.omega = omega.empty() ? NonCentrality::zero(p.cone.rank) : NonCentrality::from_eigenvalues(rationals(omega));
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Jack/zonal polynomials, generalized binomials and Wishart existence checks";

    py::register_exception<Error>(m, "JackconeError", PyExc_ValueError);

    m.def(
        "jack",
        [](const std::vector<int>& kappa, int m_vars, const std::string& alpha) {
            return terms_of(jack(Partition(kappa), m_vars, parse_rational(alpha)));
        },
        py::arg("kappa"), py::arg("m"), py::arg("alpha"));
    m.def(
        "jack_eval",
        [](const std::vector<int>& kappa, const std::string& alpha, const std::vector<std::string>& point) {
            const auto values = rationals(point);
            return to_string(eval(jack(Partition(kappa), static_cast<int>(values.size()), parse_rational(alpha)), values));
        },
        py::arg("kappa"), py::arg("alpha"), py::arg("point"));
    m.def(
        "general_binomial",
        [](const std::vector<int>& kappa, const std::vector<int>& sigma, const std::string& alpha) {
            return to_string(general_binomial(Partition(kappa), Partition(sigma), parse_rational(alpha)));
        },
        py::arg("kappa"), py::arg("sigma"), py::arg("alpha"));
    m.def(
        "contiguous_binomial",
        [](const std::vector<int>& sigma, int i, const std::string& alpha) {
            return to_string(contiguous_binomial(Partition(sigma), i, parse_rational(alpha)));
        },
        py::arg("sigma"), py::arg("i"), py::arg("alpha"));
    m.def(
        "positivity_scan",
        [](int max_degree, int max_length, const std::string& alpha) {
            return to_json(positivity_scan(max_degree, max_length, parse_rational(alpha))).dump();
        },
        py::arg("max_degree"), py::arg("max_length"), py::arg("alpha"));
    m.def(
        "binomial_table_csv",
        [](const std::string& alpha, int max_degree, int max_length) {
            return to_csv(binomial_table(parse_rational(alpha), max_degree, max_length));
        },
        py::arg("alpha"), py::arg("max_degree"), py::arg("max_length"));
    m.def(
        "zonal_normalization",
        [](int k, int r, int d) {
            std::vector<std::pair<std::vector<int>, std::string>> out;
            for (const auto& [kappa, c] : zonal_normalization(k, r, d).coefficients) out.emplace_back(kappa.parts(), to_string(c));
            return out;
        },
        py::arg("k"), py::arg("r"), py::arg("d"));
    m.def(
        "zonal_value",
        [](const std::vector<int>& kappa, const std::vector<std::string>& eigenvalues, int d) {
            return to_string(zonal_value(Partition(kappa), rationals(eigenvalues), d));
        },
        py::arg("kappa"), py::arg("eigenvalues"), py::arg("d"));
    m.def(
        "putative_moment",
        [](const std::vector<int>& kappa, const std::string& cone, const std::string& beta,
           const std::vector<std::string>& omega, const std::string& t) {
            return to_string(putative_moment(Partition(kappa), params_of(cone, beta, omega), parse_rational(t)));
        },
        py::arg("kappa"), py::arg("cone"), py::arg("beta"), py::arg("omega"), py::arg("t"));
    m.def(
        "existence_check",
        [](const std::string& cone, const std::string& beta, const std::vector<std::string>& omega) {
            return to_json(existence_check(params_of(cone, beta, omega))).dump();
        },
        py::arg("cone"), py::arg("beta"), py::arg("omega"));
    m.def(
        "existence_check_matrix",
        [](const std::string& cone, const std::string& beta, const std::vector<std::vector<std::string>>& omega) {
            WishartParams p = params_of(cone, beta, {});
            p.omega = NonCentrality::from_matrix(rational_matrix(omega));
            return to_json(existence_check(p)).dump();
        },
        py::arg("cone"), py::arg("beta"), py::arg("omega"));
    m.def(
        "laplace_transform",
        [](const std::string& cone, const std::string& beta, const std::vector<std::string>& omega,
           const std::vector<std::vector<std::string>>& u, int digits) {
            return laplace_transform(params_of(cone, beta, omega), rational_matrix(u)).to_decimal(digits);
        },
        py::arg("cone"), py::arg("beta"), py::arg("omega"), py::arg("u"), py::arg("digits") = 20);
    m.def(
        "verify_moment_formula",
        [](int m_order, const std::string& beta, const std::vector<std::string>& omega,
           const std::vector<std::vector<int>>& kappas, const std::string& t, long count, std::uint64_t seed, int threads) {
            WishartParams p = params_of("real:" + std::to_string(m_order), beta, omega);
            std::vector<Partition> ks;
            for (const auto& k : kappas) ks.emplace_back(k);
            py::gil_scoped_release release;
            return to_json(verify_moment_formula(p, ks, parse_rational(t), count, seed, {4096, threads})).dump();
        },
        py::arg("m"), py::arg("beta"), py::arg("omega"), py::arg("kappas"), py::arg("t") = "1",
        py::arg("count") = 100000, py::arg("seed") = 0, py::arg("threads") = 1);
}
