#pragma once

// Generating polynomials of a complex and its barcode, the strong Morse
// identity relating them, and the interleaving distance between barcodes.

#include "legch/algebra.hpp"
#include "legch/persist.hpp"
#include "legch/rational.hpp"

#include <map>
#include <string>

namespace legch {

/// Integer Laurent polynomial in z; only nonzero coefficients are stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::map<int, long long> coefficients);

    static LaurentPolynomial monomial(int exponent, long long coefficient = 1);

    long long coefficient(int exponent) const;
    const std::map<int, long long>& coefficients() const { return coefficients_; }
    bool is_zero() const { return coefficients_.empty(); }
    long long evaluate_at_one() const;

    void add_term(int exponent, long long coefficient);

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    bool operator==(const LaurentPolynomial&) const = default;

    // Highest power first: "2z+3", "z^2-z^-1", "0".
    std::string to_string() const;

private:
    std::map<int, long long> coefficients_;
};

// Coefficient of z^k counts generators of grading k.
LaurentPolynomial morse_chekanov(const DGA& dga);

// Coefficient of z^k counts infinite bars in degree k.
LaurentPolynomial poincare_chekanov(const Barcode& barcode);

// Coefficient of z^k counts finite bars in degree k.
LaurentPolynomial finite_bar_polynomial(const Barcode& barcode);

struct StrongMorseReport {
    LaurentPolynomial morse_chekanov;
    LaurentPolynomial poincare_chekanov;
    LaurentPolynomial finite_bars;
    LaurentPolynomial lhs;  // MC - PC
    LaurentPolynomial rhs;  // (z + 1) R
    bool holds = false;
};

// Compares MC(z) - PC(z) with (z + 1) R(z) exactly.  The DGA and barcode are
// taken separately so the two sides come from independent computations.
StrongMorseReport check_strong_morse(const DGA& dga, const Barcode& barcode);

// Bottleneck matching distance, maximized over degrees.  Bars may be matched
// across barcodes at the larger endpoint displacement (infinite bars only to
// infinite bars, at the birth displacement) or a finite bar may be dropped at
// half its length.  +inf when some degree has different infinite-bar counts.
ExtendedRational interleaving_distance(const Barcode& a, const Barcode& b);

} // namespace legch
