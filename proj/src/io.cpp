#include "jackcone/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "jackcone/error.hpp"

namespace jackcone {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Splits one CSV line; fields may be double-quoted (no embedded quotes needed here).
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    for (char c : line) {
        if (c == '"')
            in_quotes = !in_quotes;
        else if (c == ',' && !in_quotes) {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r')
            field += c;
    }
    if (in_quotes) throw Error(ErrorCode::ParseError, "unterminated quote in '" + line + "'");
    fields.push_back(field);
    return fields;
}

Rational rational_from_json(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw Error(ErrorCode::ParseError, "expected a rational string, got " + v.dump());
}

}  // namespace

BinomialTable binomial_table(const Rational& alpha, int max_degree, int max_length) {
    require_positive_alpha(alpha);
    BinomialTable table;
    table.alpha = alpha;
    const auto shapes = enumerate_partitions_up_to(max_degree, max_length);
    for (const auto& kappa : shapes)
        for (const auto& sigma : shapes) {
            if (sigma.degree() > kappa.degree()) continue;
            table.values.emplace(std::make_pair(kappa, sigma),
                                 sigma.is_subset_of(kappa) ? general_binomial(kappa, sigma, alpha) : Rational(0));
        }
    return table;
}

std::string to_csv(const BinomialTable& table) {
    std::ostringstream out;
    out << "kappa,sigma,alpha,value\n";
    const std::string alpha = to_string(table.alpha);
    for (const auto& [key, value] : table.values)
        out << quoted(to_string(key.first)) << ',' << quoted(to_string(key.second)) << ',' << alpha << ','
            << to_string(value) << '\n';
    return out.str();
}

BinomialTable binomial_table_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "kappa,sigma,alpha,value") throw Error(ErrorCode::ParseError, "unexpected CSV header '" + line + "'");
    BinomialTable table;
    bool have_alpha = false;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const auto f = split_csv_line(line);
        if (f.size() != 4) throw Error(ErrorCode::ParseError, "expected 4 fields in '" + line + "'");
        const Rational alpha = parse_rational(f[2]);
        if (have_alpha && alpha != table.alpha) throw Error(ErrorCode::ParseError, "mixed alpha values in table");
        table.alpha = alpha;
        have_alpha = true;
        table.values[{parse_partition(f[0]), parse_partition(f[1])}] = parse_rational(f[3]);
    }
    return table;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
    if (j.is_string()) return parse_partition(j.get<std::string>());
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a partition, got " + j.dump());
    return Partition(j.get<std::vector<int>>());
}

Json to_json(const BinomialTable& table) {
    Json rows = Json::array();
    for (const auto& [key, value] : table.values)
        rows.push_back({{"kappa", to_json(key.first)}, {"sigma", to_json(key.second)}, {"value", to_string(value)}});
    return {{"alpha", to_string(table.alpha)}, {"rows", rows}};
}

BinomialTable binomial_table_from_json(const Json& j) {
    BinomialTable table;
    table.alpha = rational_from_json(j.at("alpha"));
    for (const auto& row : j.at("rows"))
        table.values[{partition_from_json(row.at("kappa")), partition_from_json(row.at("sigma"))}] =
            rational_from_json(row.at("value"));
    return table;
}

ParsedMatrix parse_matrix_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries")) throw Error(ErrorCode::ParseError, "matrix JSON needs an \"entries\" field");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.empty()) throw Error(ErrorCode::ParseError, "\"entries\" must be a non-empty array");
    const int m = static_cast<int>(entries.size());
    if (j.contains("m") && j.at("m").get<int>() != m)
        throw Error(ErrorCode::DimensionMismatch, "\"m\" does not match the number of rows");

    ParsedMatrix out;
    for (const auto& row : entries) {
        if (!row.is_array() || static_cast<int>(row.size()) != m)
            throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
        for (const auto& v : row)
            if (v.is_number_float()) out.exact = false;
            else if (!v.is_string() && !v.is_number_integer())
                throw Error(ErrorCode::ParseError, "bad matrix entry " + v.dump());
    }
    out.exact_value = RationalMatrix(m, m);
    out.real_value = RealMatrix(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const auto& v = entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (v.is_number_float()) {
                const double x = v.get<double>();
                if (!std::isfinite(x)) throw Error(ErrorCode::ParseError, "non-finite matrix entry");
                out.real_value(a, b) = x;
            } else {
                const Rational q = rational_from_json(v);
                out.exact_value(a, b) = q;
                out.real_value(a, b) = to_double(q);
            }
        }
    return out;
}

ParsedMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
    }
    return parse_matrix_json(j);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) out.push_back(parse_rational(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t')
            flush();
        else
            token += c;
    }
    flush();
    return out;
}

Json to_json(const ExistenceVerdict& verdict) {
    Json j;
    j["passes"] = verdict.passes;
    j["failed_condition"] = verdict.failed_condition ? Json(std::string(to_string(*verdict.failed_condition))) : Json(nullptr);
    if (verdict.certificate)
        j["certificate"] = {{"kappa", to_json(verdict.certificate->kappa)},
                            {"t", to_string(verdict.certificate->t)},
                            {"value", to_string(verdict.certificate->value)}};
    else
        j["certificate"] = nullptr;
    j["omega_rank"] = verdict.omega_rank;
    if (verdict.warning) j["warning"] = *verdict.warning;
    return j;
}

Json to_json(const PositivityReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"kappa", to_json(v.kappa)},
                              {"sigma", to_json(v.sigma)},
                              {"value", to_string(v.value)},
                              {"rule", v.rule}});
    return {{"alpha", to_string(report.alpha)},
            {"max_degree", report.max_degree},
            {"max_length", report.max_length},
            {"pairs_checked", report.pairs_checked},
            {"contiguous_checked", report.contiguous_checked},
            {"violations", violations}};
}

Json to_json(const ComparisonReport& report) {
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        Json z = std::isfinite(r.z_score) ? Json(r.z_score) : Json(r.z_score > 0 ? "inf" : "-inf");
        rows.push_back({{"name", r.name},
                        {"exact", r.exact},
                        {"empirical", r.empirical},
                        {"standard_error", r.standard_error},
                        {"z_score", z},
                        {"relative_error", r.relative_error},
                        {"relative_gated", r.relative_gated},
                        {"passed", r.passed}});
    }
    return {{"count", report.count}, {"seed", report.seed}, {"passed", report.passed()}, {"rows", rows}};
}

}  // namespace jackcone
