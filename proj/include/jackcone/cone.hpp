#ifndef JACKCONE_CONE_HPP
#define JACKCONE_CONE_HPP

#include <string>
#include <string_view>

#include "jackcone/rational.hpp"

namespace jackcone {

enum class ConeFamily { RealSymmetric, ComplexHermitian, QuaternionHermitian, Lorentz, Octonion };

std::string_view to_string(ConeFamily family) noexcept;

/// An irreducible symmetric cone described by its rank r, Peirce invariant d
/// and dimension n = r + (d/2) r (r-1). Jack parameter alpha = 2/d.
struct ConeDescriptor {
    ConeFamily family = ConeFamily::RealSymmetric;
    int size = 1;  // matrix order, or ambient dimension for Lorentz; 3 for Octonion
    int rank = 1;
    int peirce = 1;
    int dim = 1;

    Rational alpha() const { return ratio(2, peirce); }

    /// Real, complex and quaternion Hermitian matrices (elements are r x r matrices).
    bool is_matrix_family() const noexcept {
        return family == ConeFamily::RealSymmetric || family == ConeFamily::ComplexHermitian ||
               family == ConeFamily::QuaternionHermitian;
    }

    /// Equality of (r, d, n), ignoring how the cone was named.
    bool same_geometry(const ConeDescriptor& other) const noexcept {
        return rank == other.rank && peirce == other.peirce && dim == other.dim;
    }

    friend bool operator==(const ConeDescriptor&, const ConeDescriptor&) = default;
};

/// size: matrix order m >= 1, or Lorentz dimension n >= 3; ignored for Octonion.
ConeDescriptor make_cone(ConeFamily family, int size = 3);

/// Parses "real:3", "complex:3", "quat:2", "lorentz:5", "octonion".
ConeDescriptor parse_cone(std::string_view text);

/// "real:3" style.
std::string to_string(const ConeDescriptor& cone);

/// beta in {0, d/2, ..., d(r-2)/2} or beta >= d(r-1)/2. Throws NegativeShape
/// for beta < 0.
bool wallach_contains(const ConeDescriptor& cone, const Rational& beta);

/// 2 beta / d when that is an integer in [0, r-2], i.e. the index of a
/// discrete Wallach point; -1 otherwise.
int wallach_discrete_index(const ConeDescriptor& cone, const Rational& beta);

}  // namespace jackcone

#endif  // JACKCONE_CONE_HPP
