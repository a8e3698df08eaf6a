#include "jackcone/rational.hpp"

#include <cctype>
#include <cmath>

#include "jackcone/error.hpp"

namespace jackcone {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotAPartition: return "NotAPartition";
        case ErrorCode::CellOutOfDiagram: return "CellOutOfDiagram";
        case ErrorCode::NonPositiveAlpha: return "NonPositiveAlpha";
        case ErrorCode::LengthExceedsVars: return "LengthExceedsVars";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InsufficientVars: return "InsufficientVars";
        case ErrorCode::InvalidSize: return "InvalidSize";
        case ErrorCode::NegativeShape: return "NegativeShape";
        case ErrorCode::NotNested: return "NotNested";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::NonPositiveT: return "NonPositiveT";
        case ErrorCode::NonHalfInteger: return "NonHalfInteger";
        case ErrorCode::RankExceedsDegrees: return "RankExceedsDegrees";
        case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

[[noreturn]] void bad(std::string_view text) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) bad(text);

    const std::string_view original = text;
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(original);
        mpz_class d{std::string(den), 10};
        if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(original) + "'");
        result = Rational(mpz_class{std::string(num), 10}, d);
        result.canonicalize();
    } else {
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            auto exp_text = text.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 6) bad(original);
            exponent = std::stol(std::string(exp_text));
            if (exp_negative) exponent = -exponent;
            text = text.substr(0, e);
        }
        std::string digits;
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            auto whole = text.substr(0, dot);
            auto frac = text.substr(dot + 1);
            if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
                (whole.empty() && frac.empty()))
                bad(original);
            digits = std::string(whole) + std::string(frac);
            exponent -= static_cast<long>(frac.size());
        } else {
            if (!all_digits(text)) bad(original);
            digits = std::string(text);
        }
        mpz_class mantissa{digits, 10};
        if (exponent >= 0)
            result = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
        else
            result = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
        result.canonicalize();
    }
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational from_double(double value) {
    if (!std::isfinite(value)) throw Error(ErrorCode::ParseError, "non-finite floating-point value");
    return Rational(value);
}

double to_double(const Rational& value) { return value.get_d(); }

Rational rising_factorial(const Rational& base, int count) {
    Rational r = 1;
    for (int i = 0; i < count; ++i) r *= base + i;
    return r;
}

}  // namespace jackcone
