#ifndef JACKCONE_BINOMIAL_HPP
#define JACKCONE_BINOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "jackcone/partition.hpp"
#include "jackcone/rational.hpp"

namespace jackcone {

/// Contiguous coefficient (sigma^i choose sigma)_alpha from hook lengths:
///
///   j_sigma^{-1} prod_{s in sigma} A(s) B(s)
///
/// where for cells in the column that receives the new box (column
/// sigma_i + 1) A is the upper hook of sigma and B the lower hook of sigma^i,
/// and for all other cells A is the lower hook of sigma and B the upper hook
/// of sigma^i.
Rational contiguous_binomial(const Partition& sigma, int i, const Rational& alpha);

/// (kappa choose sigma)_alpha through the recursion on |kappa| - |sigma|:
///   (kappa choose sigma) = 1/d sum_i (sigma^i choose sigma)(kappa choose sigma^i)
/// with (kappa choose sigma) = delta when the degrees agree. Memoised.
Rational general_binomial(const Partition& kappa, const Partition& sigma, const Rational& alpha);

/// All coefficients of J_kappa(t + 1^m)/J_kappa(1^m) in the basis
/// J_sigma(t)/J_sigma(1^m), from the Jack polynomials themselves by exact
/// triangular solve. Independent of the hook/recursion route. Requires
/// m >= |kappa| so that every sigma with |sigma| <= |kappa| is representable.
std::map<Partition, Rational> oracle_binomial(const Partition& kappa, int m, const Rational& alpha);

struct PositivityViolation {
    Partition kappa;
    Partition sigma;
    Rational value;
    std::string rule;  // "general>=0" or "contiguous>0"
};

struct PositivityReport {
    Rational alpha;
    int max_degree = 0;
    int max_length = 0;
    long pairs_checked = 0;
    long contiguous_checked = 0;
    std::vector<PositivityViolation> violations;
};

/// Exhaustive exact scan of every (kappa, sigma) with |sigma| <= |kappa| <=
/// max_degree and lengths <= max_length, plus every contiguous coefficient in
/// that range. A violation is reported as data.
PositivityReport positivity_scan(int max_degree, int max_length, const Rational& alpha);

}  // namespace jackcone

#endif  // JACKCONE_BINOMIAL_HPP
