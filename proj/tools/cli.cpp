#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>

#include "jackcone/binomial.hpp"
#include "jackcone/cone.hpp"
#include "jackcone/error.hpp"
#include "jackcone/io.hpp"
#include "jackcone/jack.hpp"
#include "jackcone/monte_carlo.hpp"
#include "jackcone/partition.hpp"
#include "jackcone/wishart.hpp"

namespace jackcone::cli {

namespace {

enum class Format { Json, Csv };

struct Globals {
    std::string format = "json";
    std::uint64_t seed = 0;
    int threads = 1;
    Format fmt() const { return format == "csv" ? Format::Csv : Format::Json; }
};

// Thrown for bad flag values found after CLI11 parsing.
struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json terms_json(const SymmetricPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [mu, c] : p.terms()) terms.push_back({{"mu", to_json(mu)}, {"coeff", to_string(c)}});
    return terms;
}

void terms_csv(std::ostream& out, const SymmetricPolynomial& p) {
    out << "mu,coeff\n";
    for (const auto& [mu, c] : p.terms()) out << '"' << to_string(mu) << "\"," << to_string(c) << '\n';
}

std::vector<Rational> point_for(const std::string& text, int m) {
    auto point = parse_rational_list(text);
    if (static_cast<int>(point.size()) != m)
        throw Usage("--point needs " + std::to_string(m) + " values, got " + std::to_string(point.size()));
    return point;
}

// Non-centrality from --omega (eigenvalues) or --omega-file (matrix JSON).
NonCentrality read_omega(const ConeDescriptor& cone, const std::string& list, const std::string& file,
                         std::vector<std::string>& warnings) {
    if (!list.empty() && !file.empty()) throw Usage("give either --omega or --omega-file, not both");
    if (!file.empty()) {
        const auto parsed = read_matrix_file(file);
        if (parsed.exact) return NonCentrality::from_matrix(parsed.exact_value);
        warnings.push_back("non-centrality read as floating point; rank uses relative tolerance 1e-10");
        return NonCentrality::from_matrix(parsed.real_value);
    }
    if (list.empty()) return NonCentrality::zero(cone.rank);
    return NonCentrality::from_eigenvalues(parse_rational_list(list));
}

Scale read_scale(const std::string& file, std::vector<std::string>& warnings) {
    if (file.empty()) return Scale::unit();
    const auto parsed = read_matrix_file(file);
    if (parsed.exact) return Scale::matrix(parsed.exact_value);
    warnings.push_back("scale read as floating point");
    return Scale::matrix(parsed.real_value);
}

void attach_warnings(Json& j, const std::vector<std::string>& warnings) {
    if (warnings.empty()) return;
    std::string all;
    for (const auto& w : warnings) all += (all.empty() ? "" : "; ") + w;
    if (j.contains("warning"))
        j["warning"] = all + "; " + j["warning"].get<std::string>();
    else
        j["warning"] = all;
}

// Default interior points for the Laplace check (I + u positive definite).
std::vector<RealMatrix> default_laplace_points(int m) {
    std::vector<RealMatrix> points;
    points.push_back(RealMatrix::identity(m) * 0.5);
    RealMatrix tri = RealMatrix::identity(m) * 0.6;
    for (int i = 0; i + 1 < m; ++i) tri(i, i + 1) = tri(i + 1, i) = 0.3;
    points.push_back(tri);
    points.push_back(RealMatrix::identity(m) * -0.2);
    RealMatrix alt(m, m);
    for (int i = 0; i < m; ++i) alt(i, i) = i % 2 == 0 ? -0.3 : 0.4;
    for (int i = 0; i + 1 < m; ++i) alt(i, i + 1) = alt(i + 1, i) = 0.1;
    points.push_back(alt);
    RealMatrix one(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) one(i, j) = 0.2;
    points.push_back(one);
    return points;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jack polynomials, generalized binomials and Wishart existence checks on symmetric cones"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "Random seed (mc-verify)");
    app.add_option("--threads", g.threads, "Worker threads (mc-verify)")->check(CLI::PositiveNumber);

    // jack-eval
    auto* jack_cmd = app.add_subcommand("jack-eval", "Jack polynomial J_kappa in the monomial basis or at a point");
    std::string j_kappa, j_alpha = "2", j_point;
    int j_m = 0;
    jack_cmd->add_option("--kappa", j_kappa, "Partition, e.g. 2,1")->required();
    jack_cmd->add_option("--m", j_m, "Number of variables")->required()->check(CLI::PositiveNumber);
    jack_cmd->add_option("--alpha", j_alpha, "Jack parameter (p/q or decimal)");
    jack_cmd->add_option("--point", j_point, "Evaluate at t_1,...,t_m");

    // binom
    auto* binom_cmd = app.add_subcommand("binom", "Table of generalized binomial coefficients");
    std::string b_alpha = "2";
    int b_degree = 0, b_length = 0;
    binom_cmd->add_option("--alpha", b_alpha, "Jack parameter");
    binom_cmd->add_option("--max-degree", b_degree, "Largest |kappa|")->required()->check(CLI::NonNegativeNumber);
    binom_cmd->add_option("--max-length", b_length, "Largest partition length (default: max degree)");

    // positivity-scan
    auto* pos_cmd = app.add_subcommand("positivity-scan", "Exhaustive positivity check of binomial coefficients");
    std::string p_alpha = "2";
    int p_degree = 0, p_length = 0;
    pos_cmd->add_option("--alpha", p_alpha, "Jack parameter");
    pos_cmd->add_option("--max-degree", p_degree, "Largest |kappa|")->required()->check(CLI::NonNegativeNumber);
    pos_cmd->add_option("--max-length", p_length, "Largest partition length (default: max degree)");

    // zonal
    auto* zonal_cmd = app.add_subcommand("zonal", "Zonal polynomial of a cone, or its value at given eigenvalues");
    std::string z_kappa, z_cone, z_eigen;
    zonal_cmd->add_option("--kappa", z_kappa, "Partition")->required();
    zonal_cmd->add_option("--cone", z_cone, "Cone, e.g. real:3, complex:2, lorentz:5, octonion")->required();
    zonal_cmd->add_option("--eigenvalues", z_eigen, "Evaluate at these eigenvalues");

    // check-existence
    auto* exist_cmd = app.add_subcommand("check-existence", "Decide the necessary existence conditions");
    std::string e_cone, e_beta, e_omega, e_omega_file, e_sigma_file, e_expect;
    bool e_certificate = false;
    exist_cmd->add_option("--cone", e_cone, "Cone")->required();
    exist_cmd->add_option("--beta", e_beta, "Shape parameter")->required();
    exist_cmd->add_option("--omega", e_omega, "Non-centrality eigenvalues");
    exist_cmd->add_option("--omega-file", e_omega_file, "Non-centrality matrix JSON")->check(CLI::ExistingFile);
    exist_cmd->add_option("--sigma-file", e_sigma_file, "Scale matrix JSON")->check(CLI::ExistingFile);
    exist_cmd->add_flag("--certificate", e_certificate, "Re-verify the certificate and report it");
    exist_cmd->add_option("--expect", e_expect, "Exit 1 unless the verdict matches")->check(CLI::IsMember({"pass", "fail"}));

    // laplace
    auto* lap_cmd = app.add_subcommand("laplace", "Laplace transform E exp(-tr(u S))");
    std::string l_cone, l_beta, l_omega, l_omega_file, l_sigma_file, l_u_file;
    int l_digits = 20;
    lap_cmd->add_option("--cone", l_cone, "Matrix cone")->required();
    lap_cmd->add_option("--beta", l_beta, "Shape parameter")->required();
    lap_cmd->add_option("--omega", l_omega, "Non-centrality eigenvalues (diagonal)");
    lap_cmd->add_option("--omega-file", l_omega_file, "Non-centrality matrix JSON")->check(CLI::ExistingFile);
    lap_cmd->add_option("--sigma-file", l_sigma_file, "Scale matrix JSON (default I/2)")->check(CLI::ExistingFile);
    lap_cmd->add_option("--u-file", l_u_file, "Argument u as matrix JSON")->required()->check(CLI::ExistingFile);
    lap_cmd->add_option("--digits", l_digits, "Significant digits")->check(CLI::Range(1, 1000));

    // mc-verify
    auto* mc_cmd = app.add_subcommand("mc-verify", "Monte-Carlo check of moments and Laplace transform (real cone)");
    int mc_m = 0, mc_kappa_max = 2;
    long mc_n = 1000000;
    std::string mc_beta, mc_omega, mc_t = "1";
    bool mc_laplace = false;
    mc_cmd->add_option("--m", mc_m, "Matrix order")->required()->check(CLI::PositiveNumber);
    mc_cmd->add_option("--beta", mc_beta, "Shape parameter (half-integer)")->required();
    mc_cmd->add_option("--omega", mc_omega, "Non-centrality eigenvalues");
    mc_cmd->add_option("--kappa-max", mc_kappa_max, "Check every kappa with |kappa| <= this")->check(CLI::Range(0, 4));
    mc_cmd->add_option("--n", mc_n, "Sample count")->check(CLI::PositiveNumber);
    mc_cmd->add_option("--t", mc_t, "Non-centrality multiplier t");
    mc_cmd->add_flag("--laplace", mc_laplace, "Also compare the Laplace transform at five interior points");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    const Format fmt = g.fmt();
    std::vector<std::string> warnings;
    try {
        if (*jack_cmd) {
            const Partition kappa = parse_partition(j_kappa);
            const Rational alpha = parse_rational(j_alpha);
            const auto& p = jack(kappa, j_m, alpha);
            if (!j_point.empty()) {
                const auto point = point_for(j_point, j_m);
                const std::string value = to_string(eval(p, point));
                if (fmt == Format::Csv)
                    out << "value\n" << value << '\n';
                else
                    print_json(out, Json(value));
            } else if (fmt == Format::Csv) {
                terms_csv(out, p);
            } else {
                print_json(out, {{"kappa", to_json(kappa)}, {"m", j_m}, {"alpha", to_string(alpha)}, {"terms", terms_json(p)}});
            }
            return 0;
        }
        if (*binom_cmd) {
            const auto table = binomial_table(parse_rational(b_alpha), b_degree, b_length > 0 ? b_length : b_degree);
            if (fmt == Format::Csv)
                out << to_csv(table);
            else
                print_json(out, to_json(table));
            return 0;
        }
        if (*pos_cmd) {
            const auto report = positivity_scan(p_degree, p_length > 0 ? p_length : p_degree, parse_rational(p_alpha));
            if (fmt == Format::Csv) {
                out << "kappa,sigma,value,rule\n";
                for (const auto& v : report.violations)
                    out << '"' << to_string(v.kappa) << "\",\"" << to_string(v.sigma) << "\"," << to_string(v.value) << ','
                        << v.rule << '\n';
            } else {
                print_json(out, to_json(report));
            }
            return report.violations.empty() ? 0 : 1;
        }
        if (*zonal_cmd) {
            const auto cone = parse_cone(z_cone);
            const Partition kappa = parse_partition(z_kappa);
            if (!z_eigen.empty()) {
                const auto ev = parse_rational_list(z_eigen);
                if (static_cast<int>(ev.size()) != cone.rank)
                    throw Usage("--eigenvalues needs " + std::to_string(cone.rank) + " values");
                const std::string value = to_string(zonal_value(kappa, ev, cone.peirce));
                if (fmt == Format::Csv)
                    out << "value\n" << value << '\n';
                else
                    print_json(out, Json(value));
                return 0;
            }
            const auto& z = zonal_polynomial(kappa, cone.rank, cone.peirce);
            if (fmt == Format::Csv) {
                terms_csv(out, z);
            } else {
                print_json(out, {{"kappa", to_json(kappa)},
                                 {"cone", to_string(cone)},
                                 {"c_kappa", to_string(zonal_at_identity(kappa, cone.rank, cone.peirce))},
                                 {"terms", terms_json(z)}});
            }
            return 0;
        }
        if (*exist_cmd) {
            WishartParams params;
            params.cone = parse_cone(e_cone);
            params.beta = parse_rational(e_beta);
            params.scale = read_scale(e_sigma_file, warnings);
            params.omega = read_omega(params.cone, e_omega, e_omega_file, warnings);
            const auto verdict = existence_check(params);
            Json j = to_json(verdict);
            if (e_certificate && verdict.certificate)
                j["certificate"]["verified"] = verify_certificate(params, *verdict.certificate);
            attach_warnings(j, warnings);
            if (fmt == Format::Csv) {
                out << "passes,failed_condition,kappa,t,value\n" << (verdict.passes ? "true" : "false") << ',';
                if (verdict.failed_condition) out << to_string(*verdict.failed_condition);
                out << ',';
                if (verdict.certificate)
                    out << '"' << to_string(verdict.certificate->kappa) << "\"," << to_string(verdict.certificate->t) << ','
                        << to_string(verdict.certificate->value);
                else
                    out << ",,";
                out << '\n';
                if (j.contains("warning")) err << "warning: " << j["warning"].get<std::string>() << '\n';
            } else {
                print_json(out, j);
            }
            if (e_expect == "pass" && !verdict.passes) return 1;
            if (e_expect == "fail" && verdict.passes) return 1;
            return 0;
        }
        if (*lap_cmd) {
            WishartParams params;
            params.cone = parse_cone(l_cone);
            params.beta = parse_rational(l_beta);
            params.scale = read_scale(l_sigma_file, warnings);
            params.omega = read_omega(params.cone, l_omega, l_omega_file, warnings);
            const auto u = read_matrix_file(l_u_file);
            if (!u.exact) warnings.push_back("u read as floating point");
            const LaplaceValue value =
                u.exact ? laplace_transform(params, u.exact_value) : laplace_transform(params, u.real_value);
            const int digits = value.exact ? l_digits : std::min(l_digits, 15);
            if (!value.exact && l_digits > 15) warnings.push_back("floating-point inputs: precision limited to 15 digits");
            const std::string text = value.to_decimal(digits);
            if (fmt == Format::Csv) {
                out << "value,digits\n" << text << ',' << digits << '\n';
                for (const auto& w : warnings) err << "warning: " << w << '\n';
            } else {
                Json j = {{"value", text}, {"digits", digits}, {"exact_inputs", value.exact}};
                attach_warnings(j, warnings);
                print_json(out, j);
            }
            return 0;
        }
        if (*mc_cmd) {
            WishartParams params;
            params.cone = make_cone(ConeFamily::RealSymmetric, mc_m);
            params.beta = parse_rational(mc_beta);
            params.scale = Scale::unit();
            params.omega = mc_omega.empty() ? NonCentrality::zero(mc_m)
                                            : NonCentrality::from_eigenvalues(parse_rational_list(mc_omega));
            std::vector<Partition> kappas;
            for (const auto& kappa : enumerate_partitions_up_to(mc_kappa_max, mc_m))
                if (!kappa.empty()) kappas.push_back(kappa);
            const SamplerOptions options{4096, g.threads};
            ComparisonReport report = verify_moment_formula(params, kappas, parse_rational(mc_t), mc_n, g.seed, options);
            if (mc_laplace) {
                const auto lap = verify_laplace(params, default_laplace_points(mc_m), mc_n, g.seed, options);
                report.rows.insert(report.rows.end(), lap.rows.begin(), lap.rows.end());
            }
            if (fmt == Format::Csv) {
                out << "name,exact,empirical,standard_error,z_score,relative_error,passed\n";
                out.precision(17);
                for (const auto& r : report.rows)
                    out << '"' << r.name << "\"," << r.exact << ',' << r.empirical << ',' << r.standard_error << ','
                        << r.z_score << ',' << r.relative_error << ',' << (r.passed ? "true" : "false") << '\n';
            } else {
                print_json(out, to_json(report));
            }
            return report.passed() ? 0 : 1;
        }
    } catch (const Usage& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace jackcone::cli
