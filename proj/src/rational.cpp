#include "legch/rational.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace legch {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow10(unsigned exponent) {
    BigInt result = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        result *= 10;
    }
    return result;
}

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

// cpp_int reads a leading 0 as octal
BigInt decimal_integer(std::string_view digits) {
    const auto first = digits.find_first_not_of('0');
    return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
}

std::optional<BigInt> parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        return std::nullopt;
    }
    const BigInt value = decimal_integer(s);
    return negative ? BigInt(-value) : value;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_integer(text.substr(0, slash));
        auto den = parse_integer(text.substr(slash + 1));
        if (!num || !den || *den == 0) {
            return std::nullopt;
        }
        return Rational(*num, *den);
    }

    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) {
            return std::nullopt;
        }
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) {
            exponent = -exponent;
        }
        text = text.substr(0, e);
    }

    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        if ((int_part.empty() && frac_part.empty()) ||
            (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            return std::nullopt;
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(text)) {
            return std::nullopt;
        }
        digits = std::string(text);
    }
    if (digits.empty()) {
        return std::nullopt;
    }
    if (exponent > 4000 || exponent < -4000) {
        return std::nullopt;
    }

    BigInt mantissa = decimal_integer(digits);
    if (negative) {
        mantissa = -mantissa;
    }
    if (exponent >= 0) {
        return Rational(mantissa * pow10(static_cast<unsigned>(exponent)));
    }
    return Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("cannot convert a non-finite double to a rational");
    }
    int exponent = 0;
    double mantissa = std::frexp(value, &exponent);
    // 53 significant bits fit exactly in an int64 after scaling.
    auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational result = Rational(BigInt(scaled));
    if (exponent >= 0) {
        result *= Rational(BigInt(1) << exponent);
    } else {
        result /= Rational(BigInt(1) << (-exponent));
    }
    return result;
}

Rational rational_from_decimal_double(double value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("cannot convert a non-finite double to a rational");
    }
    std::array<char, 64> buffer{};
    auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{}) {
        return rational_from_double(value);
    }
    auto parsed = parse_rational(std::string_view(buffer.data(), static_cast<std::size_t>(end - buffer.data())));
    return parsed ? *parsed : rational_from_double(value);
}

bool is_terminating_decimal(const Rational& value) {
    BigInt den = boost::multiprecision::denominator(value);
    while (den % 2 == 0) {
        den /= 2;
    }
    while (den % 5 == 0) {
        den /= 5;
    }
    return den == 1;
}

std::string to_exact_string(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    if (!is_terminating_decimal(value)) {
        return num.str() + "/" + den.str();
    }
    unsigned places = 0;
    BigInt scale = 1;
    while ((num * scale) % den != 0) {
        scale *= 10;
        ++places;
    }
    BigInt scaled = num * scale / den;
    const bool negative = scaled < 0;
    if (negative) {
        scaled = -scaled;
    }
    std::string digits = scaled.str();
    if (digits.size() <= places) {
        digits.insert(0, places - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - places, ".");
    return negative ? "-" + digits : digits;
}

std::string to_decimal_string(const Rational& value) {
    if (is_terminating_decimal(value)) {
        return to_exact_string(value);
    }
    std::ostringstream out;
    out << std::setprecision(12) << to_double(value);
    return out.str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) {
        return false;
    }
    return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    auto rank = [](ExtendedRational::Kind k) {
        switch (k) {
        case ExtendedRational::Kind::neg_inf: return 0;
        case ExtendedRational::Kind::finite: return 1;
        case ExtendedRational::Kind::pos_inf: return 2;
        }
        return 1;
    };
    if (a.kind_ != b.kind_) {
        return rank(a.kind_) <=> rank(b.kind_);
    }
    if (!a.is_finite()) {
        return std::strong_ordering::equal;
    }
    if (a.value_ < b.value_) {
        return std::strong_ordering::less;
    }
    if (b.value_ < a.value_) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_finite() && b.is_finite()) {
        return ExtendedRational(a.value_ + b.value_);
    }
    if ((a.is_positive_infinity() && b.is_negative_infinity()) ||
        (a.is_negative_infinity() && b.is_positive_infinity())) {
        throw std::domain_error("-inf + inf is undefined");
    }
    return a.is_finite() ? b : a;
}

std::string ExtendedRational::to_string() const {
    switch (kind_) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "inf";
    case Kind::finite: break;
    }
    return to_decimal_string(value_);
}

} // namespace legch
