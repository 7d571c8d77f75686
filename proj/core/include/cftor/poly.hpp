#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cftor/rational.hpp"

namespace cftor {

/// Dense univariate polynomial over Rational.
/// Coefficient i is the coefficient of x^i; the highest stored coefficient is
/// nonzero, and the zero polynomial stores nothing (degree = kZeroDegree).
class Poly {
public:
    /// Sentinel degree of the zero polynomial (stands in for -infinity).
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(std::vector<Rational> ascending_coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rational(1)); }
    static Poly x() { return monomial(Rational(1), 1); }
    static Poly constant(Rational c);
    static Poly monomial(Rational c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const {
        return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
    }
    /// Coefficient of x^i (zero outside the stored range).
    Rational coeff(int i) const;
    /// Leading coefficient; requires a nonzero polynomial.
    const Rational& lc() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b, a; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b, a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
    /// Exact division by a nonzero scalar.
    friend Poly operator/(const Poly& p, const Rational& s);

    bool operator==(const Poly& o) const = default;

    Rational eval(const Rational& x0) const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws DivisionByZero.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
Poly poly_quo(const Poly& a, const Poly& b);
Poly poly_rem(const Poly& a, const Poly& b);
/// Exact quotient; throws InexactDivisionError if the remainder is nonzero.
Poly poly_exact_div(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(a, 0) = monic(a). Not both zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Determinant of the Sylvester matrix of a and b (a, b nonzero).
Rational resultant(const Poly& a, const Poly& b);

Poly derivative(const Poly& p);
Poly poly_pow(const Poly& p, unsigned e);
/// p(a*x + b)
Poly compose_affine(const Poly& p, const Rational& a, const Rational& b);

/// Lagrange interpolation through distinct points (x_i, y_i).
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// All rational roots of a nonzero polynomial (each listed once).
std::vector<Rational> rational_roots(const Poly& p);

/// Comma-separated ascending coefficient list, e.g. "65,-92,72,-42,16,-4,1".
std::string to_coeff_string(const Poly& p);
/// Human-readable expression, e.g. "x^6-4*x^5+16*x^4-42*x^3+72*x^2-92*x+65".
std::string to_expr_string(const Poly& p, std::string_view var = "x");

/// Accepts either format of the serializers above (expression terms may appear
/// in any order; coefficients are exact rationals).
Poly parse_poly(std::string_view text);

} // namespace cftor
