#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace encone {

using Int = mpz_class;

/// Univariate polynomial over arbitrary-precision integers.
/// Coefficients are stored densely, ascending by power of t, with no
/// trailing zeros; the zero polynomial has an empty coefficient vector
/// and degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(long c) { if (c != 0) coeffs_.assign(1, Int(c)); }
    IntPolynomial(Int c) { if (c != 0) coeffs_.assign(1, std::move(c)); }
    explicit IntPolynomial(std::vector<Int> ascending_coeffs);

    static IntPolynomial monomial(Int coeff, int power);
    static IntPolynomial t() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Lowest power with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;
    Int coeff(int power) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int leading() const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
    IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }
    IntPolynomial operator*(const Int& s) const;
    IntPolynomial operator*(long s) const { return *this * Int(s); }
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return coeffs_ != o.coeffs_; }

    Int evaluate(const Int& x) const;

    /// p(t) -> p(t^2).
    IntPolynomial substitute_t_squared() const;
    /// Inverse of substitute_t_squared: succeeds iff only even powers occur.
    std::optional<IntPolynomial> even_part_root() const;
    /// Division by t^k; succeeds iff valuation >= k.
    std::optional<IntPolynomial> shift_down(int k) const;
    /// Exact division; nullopt if the division leaves a remainder.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& d) const;
    /// Exact division of every coefficient by s; nullopt on remainder.
    std::optional<IntPolynomial> divide_exact_scalar(const Int& s) const;

    bool coefficients_nonnegative() const;
    /// True iff every power with nonzero coefficient is congruent to r mod 2.
    bool supported_on_parity(int r) const;

    /// Content (gcd of coefficients, nonnegative; 0 for the zero polynomial).
    Int content() const;
    IntPolynomial primitive_part() const;

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Fraction of integer polynomials, kept fully reduced: gcd(num, den) = 1
/// (including integer content) and the leading coefficient of the
/// denominator positive. Equal values have identical representations.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(IntPolynomial p) : num_(std::move(p)), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(IntPolynomial num, IntPolynomial den);

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    /// The value as an IntPolynomial; nullopt if the denominator is not 1.
    std::optional<IntPolynomial> as_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    /// Throws std::domain_error on division by the zero function.
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string str(const std::string& var = "t") const;

private:
    IntPolynomial num_, den_;
};

}  // namespace encone
