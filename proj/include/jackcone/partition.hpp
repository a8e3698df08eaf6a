#ifndef JACKCONE_PARTITION_HPP
#define JACKCONE_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "jackcone/rational.hpp"

namespace jackcone {

/// A cell (row, column) of a Ferrers diagram, both 1-based.
struct Cell {
    int row = 1;
    int col = 1;
};

struct ArmLeg {
    int arm = 0;
    int leg = 0;
};

struct Hooks {
    Rational upper;
    Rational lower;
};

/// Non-increasing sequence of positive integers. Trailing zeros given on
/// construction are stripped, so equal partitions compare equal regardless of
/// the ambient number of variables.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int degree() const noexcept { return degree_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (1-based); 0 beyond the length.
    int part(int i) const noexcept {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    /// Number of cells in column j (1-based).
    int column(int j) const noexcept;

    Partition conjugate() const;

    /// Parts padded with zeros to the given length.
    std::vector<int> padded(int size) const;

    bool contains_cell(Cell s) const noexcept { return s.row >= 1 && s.col >= 1 && s.col <= part(s.row); }

    /// Diagram containment: part(i) <= other.part(i) for all i.
    bool is_subset_of(const Partition& other) const noexcept;

    std::vector<Cell> cells() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on parts. Used as the map key order.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// "(2,1)" style, "()" for the empty partition.
std::string to_string(const Partition& p);

/// Accepts "2,1", "(2,1)", "2 1", "()" or "".
Partition parse_partition(const std::string& text);

/// The partition 1^n.
Partition column_partition(int n);

/// Dominance order on partitions of equal degree; false when degrees differ.
bool dominated_by(const Partition& lower, const Partition& upper);

/// Partitions of `degree` with at most `max_length` parts, in reverse
/// lexicographic order (a linear extension of dominance, largest first).
std::vector<Partition> enumerate_partitions(int degree, int max_length);

/// All partitions of degree 0..max_degree, graded by degree.
std::vector<Partition> enumerate_partitions_up_to(int max_degree, int max_length);

/// The i-th contiguous partition sigma^i (part i incremented, 1-based).
/// Throws NotAPartition when the increment breaks monotonicity.
Partition contiguous(const Partition& sigma, int i);

/// Indices i for which contiguous(sigma, i) is defined.
std::vector<int> contiguous_indices(const Partition& sigma);

ArmLeg arm_leg(const Partition& sigma, Cell s);

/// upper = leg + alpha (1 + arm), lower = leg + 1 + alpha arm.
Hooks hooks(const Partition& sigma, Cell s, const Rational& alpha);

/// Product over cells of upper hook times lower hook.
Rational j_constant(const Partition& sigma, const Rational& alpha);

void require_positive_alpha(const Rational& alpha);

}  // namespace jackcone

#endif  // JACKCONE_PARTITION_HPP
