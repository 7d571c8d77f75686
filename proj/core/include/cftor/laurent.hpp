#pragma once

#include <vector>

#include "cftor/poly.hpp"

namespace cftor {

/// Truncated Laurent series at infinity: terms from exponent `top_degree`
/// descending to the precision floor. Coefficients below the floor are
/// unknown, not zero.
class LaurentSeries {
public:
    /// coeffs[k] is the coefficient of x^(top_degree - k); the series is
    /// trusted down to exponent `floor` inclusive.
    LaurentSeries(int top_degree, std::vector<Rational> coeffs, int floor);

    static LaurentSeries from_poly(const Poly& p, int floor);

    int top_degree() const { return top_; }
    int floor() const { return floor_; }
    /// Coefficient of x^e; returns 0 above the leading term, throws
    /// PrecisionLossError below the floor.
    Rational at(int e) const;
    /// Degree of the leading nonzero trusted term (top_degree after
    /// normalization; floor-1 semantics never occur: zero-to-floor series
    /// reports its floor).
    bool is_zero_to_floor() const { return coeffs_.empty(); }

    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;

    /// Sum of the terms with non-negative exponent.
    Poly polynomial_part() const;

private:
    int top_;
    std::vector<Rational> coeffs_; // descending exponents top_ .. floor_
    int floor_;
    void normalize();
};

/// Square root of f in the Laurent-series field at infinity, truncated at
/// `floor`. Requires deg f even and lc(f) a rational square; the branch with
/// positive leading coefficient is returned.
LaurentSeries sqrt_series(const Poly& f, int floor);

} // namespace cftor
