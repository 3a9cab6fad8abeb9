#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace legch {

// Heights, bar endpoints and distances are exact rationals so that metric
// identities can be checked with zero tolerance.
using Rational = boost::multiprecision::cpp_rational;

// Parses "12", "-3", "2.3", "1.5e-2" or "7/3".  Returns nullopt on bad input.
std::optional<Rational> parse_rational(std::string_view text);

// Exact rational value of a finite double (every double is a dyadic rational).
Rational rational_from_double(double value);

// The decimal the double was most likely written as: its shortest round-trip
// representation, read back exactly.  2.3 -> 23/10, not the dyadic neighbour.
Rational rational_from_decimal_double(double value);

// True when the denominator has no prime factors besides 2 and 5.
bool is_terminating_decimal(const Rational& value);

// "4", "2.3", "0.15"; non-terminating values print as "p/q".
std::string to_exact_string(const Rational& value);

// Decimal for humans: exact when terminating, otherwise 12 significant digits.
std::string to_decimal_string(const Rational& value);

double to_double(const Rational& value);

/// A rational extended by the two infinities.
class ExtendedRational {
public:
    enum class Kind { neg_inf, finite, pos_inf };

    ExtendedRational() = default;
    ExtendedRational(Rational value) : kind_(Kind::finite), value_(std::move(value)) {}

    static ExtendedRational negative_infinity() { return ExtendedRational(Kind::neg_inf); }
    static ExtendedRational positive_infinity() { return ExtendedRational(Kind::pos_inf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_positive_infinity() const { return kind_ == Kind::pos_inf; }
    bool is_negative_infinity() const { return kind_ == Kind::neg_inf; }

    // Only meaningful when finite.
    const Rational& value() const { return value_; }

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

    // -inf + +inf is rejected with std::domain_error.
    friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);

    std::string to_string() const;

private:
    explicit ExtendedRational(Kind kind) : kind_(kind) {}

    Kind kind_ = Kind::finite;
    Rational value_ = 0;
};

} // namespace legch
