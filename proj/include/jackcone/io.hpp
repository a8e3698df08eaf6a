#ifndef JACKCONE_IO_HPP
#define JACKCONE_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jackcone/binomial.hpp"
#include "jackcone/matrix.hpp"
#include "jackcone/monte_carlo.hpp"
#include "jackcone/partition.hpp"
#include "jackcone/rational.hpp"
#include "jackcone/wishart.hpp"

namespace jackcone {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Binomial tables

/// (kappa, sigma) -> (kappa choose sigma)_alpha at one alpha.
struct BinomialTable {
    Rational alpha;
    std::map<std::pair<Partition, Partition>, Rational> values;
    friend bool operator==(const BinomialTable&, const BinomialTable&) = default;
};

/// Every pair with |sigma| <= |kappa| <= max_degree and both lengths <=
/// max_length (sigma not contained in kappa gives 0).
BinomialTable binomial_table(const Rational& alpha, int max_degree, int max_length);

/// Header kappa,sigma,alpha,value; partitions quoted "(2,1)", rationals p/q.
std::string to_csv(const BinomialTable& table);
BinomialTable binomial_table_from_csv(std::istream& in);

/// {"alpha": "p/q", "rows": [{"kappa": [..], "sigma": [..], "value": "p/q"}]}
Json to_json(const BinomialTable& table);
BinomialTable binomial_table_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Matrices

/// Result of reading {"m": k, "entries": [[...], ...]}. String entries and
/// JSON integers are exact; any non-integer JSON number makes the whole
/// matrix floating point.
struct ParsedMatrix {
    bool exact = true;
    RationalMatrix exact_value;
    RealMatrix real_value;
};

ParsedMatrix parse_matrix_json(const Json& j);
ParsedMatrix read_matrix_file(const std::string& path);

/// Comma- or space-separated rationals ("1,0,1/2").
std::vector<Rational> parse_rational_list(const std::string& text);

// ---------------------------------------------------------------------------
// Reports

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json to_json(const ExistenceVerdict& verdict);
Json to_json(const PositivityReport& report);
Json to_json(const ComparisonReport& report);

}  // namespace jackcone

#endif  // JACKCONE_IO_HPP
