#include "jackcone/cone.hpp"

#include <charconv>

#include "jackcone/error.hpp"

namespace jackcone {

std::string_view to_string(ConeFamily family) noexcept {
    switch (family) {
        case ConeFamily::RealSymmetric: return "real";
        case ConeFamily::ComplexHermitian: return "complex";
        case ConeFamily::QuaternionHermitian: return "quat";
        case ConeFamily::Lorentz: return "lorentz";
        case ConeFamily::Octonion: return "octonion";
    }
    return "unknown";
}

ConeDescriptor make_cone(ConeFamily family, int size) {
    ConeDescriptor c;
    c.family = family;
    switch (family) {
        case ConeFamily::RealSymmetric:
        case ConeFamily::ComplexHermitian:
        case ConeFamily::QuaternionHermitian:
            if (size < 1) throw Error(ErrorCode::InvalidSize, "matrix cones need order >= 1");
            c.rank = size;
            c.peirce = family == ConeFamily::RealSymmetric ? 1 : family == ConeFamily::ComplexHermitian ? 2 : 4;
            break;
        case ConeFamily::Lorentz:
            if (size < 3) throw Error(ErrorCode::InvalidSize, "Lorentz cones need dimension >= 3");
            c.rank = 2;
            c.peirce = size - 2;
            break;
        case ConeFamily::Octonion:
            size = 3;
            c.rank = 3;
            c.peirce = 8;
            break;
    }
    c.size = size;
    c.dim = c.rank + c.peirce * c.rank * (c.rank - 1) / 2;
    return c;
}

ConeDescriptor parse_cone(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    if (name == "octonion") {
        if (colon != std::string_view::npos && text.substr(colon + 1) != "3")
            throw Error(ErrorCode::InvalidSize, "the octonion cone has no size parameter other than 3");
        return make_cone(ConeFamily::Octonion);
    }
    ConeFamily family;
    if (name == "real")
        family = ConeFamily::RealSymmetric;
    else if (name == "complex")
        family = ConeFamily::ComplexHermitian;
    else if (name == "quat")
        family = ConeFamily::QuaternionHermitian;
    else if (name == "lorentz")
        family = ConeFamily::Lorentz;
    else
        throw Error(ErrorCode::ParseError, "unknown cone family '" + std::string(name) + "'");
    if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "cone '" + std::string(text) + "' needs a size");
    const auto size_text = text.substr(colon + 1);
    int size = 0;
    auto [ptr, ec] = std::from_chars(size_text.data(), size_text.data() + size_text.size(), size);
    if (ec != std::errc() || ptr != size_text.data() + size_text.size())
        throw Error(ErrorCode::ParseError, "bad cone size '" + std::string(size_text) + "'");
    return make_cone(family, size);
}

std::string to_string(const ConeDescriptor& cone) {
    if (cone.family == ConeFamily::Octonion) return "octonion";
    return std::string(to_string(cone.family)) + ":" + std::to_string(cone.size);
}

bool wallach_contains(const ConeDescriptor& cone, const Rational& beta) {
    if (sgn(beta) < 0) throw Error(ErrorCode::NegativeShape, "shape parameter must be >= 0, got " + to_string(beta));
    if (2 * beta >= cone.peirce * (cone.rank - 1)) return true;
    return wallach_discrete_index(cone, beta) >= 0;
}

int wallach_discrete_index(const ConeDescriptor& cone, const Rational& beta) {
    const Rational q = 2 * beta / cone.peirce;
    if (q.get_den() != 1 || sgn(q) < 0) return -1;
    if (q > cone.rank - 2) return -1;
    return static_cast<int>(q.get_num().get_si());
}

}  // namespace jackcone
