#include "cftor/laurent.hpp"

#include <algorithm>

namespace cftor {

LaurentSeries::LaurentSeries(int top_degree, std::vector<Rational> coeffs, int floor)
    : top_(top_degree), coeffs_(std::move(coeffs)), floor_(floor) {
    if (!coeffs_.empty() && top_ - static_cast<int>(coeffs_.size()) + 1 != floor_)
        throw Error("Laurent series: coefficient count does not match exponent range");
    normalize();
}

void LaurentSeries::normalize() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        top_ -= static_cast<int>(lead);
    }
    if (coeffs_.empty()) top_ = floor_;
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, int floor) {
    int top = p.is_zero() ? floor : p.degree();
    std::vector<Rational> cs;
    for (int e = top; e >= floor; --e) cs.push_back(p.coeff(e));
    return LaurentSeries(top, std::move(cs), floor);
}

Rational LaurentSeries::at(int e) const {
    if (e < floor_) throw PrecisionLossError("coefficient requested below the precision floor");
    if (coeffs_.empty() || e > top_) return Rational(0);
    return coeffs_[static_cast<size_t>(top_ - e)];
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    int floor = std::max(floor_, o.floor_);
    int top = std::max(coeffs_.empty() ? floor : top_, o.coeffs_.empty() ? floor : o.top_);
    if (top < floor) top = floor;
    std::vector<Rational> cs;
    for (int e = top; e >= floor; --e) cs.push_back(at(e) - o.at(e));
    return LaurentSeries(top, std::move(cs), floor);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    // The product is trusted down to where the unknown tails start interacting.
    int floor = std::max(floor_ + o.top_, o.floor_ + top_);
    int top = top_ + o.top_;
    if (coeffs_.empty() || o.coeffs_.empty()) {
        return LaurentSeries(floor, {}, floor);
    }
    if (top < floor) top = floor;
    std::vector<Rational> cs(static_cast<size_t>(top - floor + 1), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        int ei = top_ - static_cast<int>(i);
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            int e = ei + o.top_ - static_cast<int>(j);
            if (e < floor) break;
            cs[static_cast<size_t>(top - e)] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return LaurentSeries(top, std::move(cs), floor);
}

Poly LaurentSeries::polynomial_part() const {
    if (floor_ > 0)
        throw PrecisionLossError("series floor above x^0; polynomial part not determined");
    std::vector<Rational> cs;
    if (!coeffs_.empty() && top_ >= 0) {
        cs.assign(static_cast<size_t>(top_) + 1, Rational(0));
        for (int e = top_; e >= 0; --e) cs[static_cast<size_t>(e)] = at(e);
    }
    return Poly(std::move(cs));
}

LaurentSeries sqrt_series(const Poly& f, int floor) {
    if (f.is_zero()) throw Error("square root of the zero polynomial");
    if (f.degree() % 2 != 0) throw OddDegreeError("radicand has odd degree");
    auto lead = rational_sqrt(f.lc());
    if (!lead)
        throw NonSquareLeadingCoefficientError(
            "leading coefficient is not a square of a rational");
    const int half = f.degree() / 2;
    // s = sum s_e x^e for e = half down to floor, with s_half = sqrt(lc).
    // Matching coefficients of x^(half+e) in s^2 = f solves for s_e:
    //   2*s_half*s_e = f_{half+e} - sum_{i+j=half+e, i,j>e} s_i s_j.
    std::vector<Rational> s; // s[k] = coefficient of x^(half-k)
    s.push_back(*lead);
    const Rational twice_lead = Rational(2) * *lead;
    for (int e = half - 1; e >= floor; --e) {
        Rational acc = f.coeff(half + e);
        Rational conv(0);
        // sum over i from e+1 to half-1 of s_i * s_{half+e-i}, where both
        // indices lie strictly between e and half.
        for (int i = e + 1; i <= half - 1; ++i) {
            int j = half + e - i;
            if (j <= e || j > half - 1) continue;
            conv += s[static_cast<size_t>(half - i)] * s[static_cast<size_t>(half - j)];
        }
        s.push_back((acc - conv) / twice_lead);
    }
    return LaurentSeries(half, std::move(s), floor);
}

} // namespace cftor
