#include "cftor/hseq.hpp"

#include <sstream>

namespace cftor {

ContinuantTable ContinuantTable::from_tail(const std::vector<Poly>& tail) {
    ContinuantTable t;
    t.p_ = {Poly::zero(), Poly::one()}; // p_{-2}, p_{-1}
    t.q_ = {Poly::one(), Poly::zero()}; // q_{-2}, q_{-1}
    for (const Poly& a : tail) {
        size_t k = t.p_.size();
        t.p_.push_back(a * t.p_[k - 1] + t.p_[k - 2]);
        t.q_.push_back(a * t.q_[k - 1] + t.q_[k - 2]);
    }
    return t;
}

ContinuantTable ContinuantTable::from_expansion(const CFExpansion& e) {
    if (!e.is_periodic()) throw NotPeriodicError("continuants need a periodic expansion");
    std::vector<Poly> tail(e.a.begin() + 1, e.a.end());
    return from_tail(tail);
}

const Poly& ContinuantTable::p(int j) const {
    if (j < -2 || j > max_index()) throw Error("continuant index out of range");
    return p_[static_cast<size_t>(j + 2)];
}

const Poly& ContinuantTable::q(int j) const {
    if (j < -2 || j > max_index()) throw Error("continuant index out of range");
    return q_[static_cast<size_t>(j + 2)];
}

PolyFraction PolyFraction::of(Poly numerator, Poly denominator) {
    if (denominator.is_zero()) throw ZeroDenominatorError("zero denominator in rational function");
    if (numerator.is_zero()) return PolyFraction{Poly::zero(), Poly::one()};
    Poly g = poly_gcd(numerator, denominator);
    numerator = poly_exact_div(numerator, g);
    denominator = poly_exact_div(denominator, g);
    Rational lead = denominator.lc();
    return PolyFraction{numerator / lead, denominator / lead};
}

int PolyFraction::degree() const {
    if (num.is_zero()) throw Error("degree of zero rational function");
    return num.degree() - den.degree();
}

namespace {

// Twist constant c_j: kappa^{-1} for odd j, kappa for even j.
Rational twist(const Rational& kappa, int j) {
    return (j % 2 == 1) ? Rational(1) / kappa : kappa;
}

} // namespace

HSequence h_sequence(const CFExpansion& e, const ContinuantTable& t) {
    if (!e.is_periodic()) throw NotPeriodicError("h-sequence needs a periodic expansion");
    const int m = e.m;
    HSequence hs;
    // h_1 = c_1 q_{m-1} / p_{m-2}
    hs.h.push_back(PolyFraction::of(twist(e.kappa, 1) * t.q(m - 1), t.p(m - 2)));
    if (m < 2) return hs;
    // h_2 = (c_2 p_{m-4} h_1 - q_{m-3}) / p_{m-3}
    {
        const PolyFraction& h1 = hs.h[0];
        Poly num = twist(e.kappa, 2) * (t.p(m - 4) * h1.num) - t.q(m - 3) * h1.den;
        Poly den = t.p(m - 3) * h1.den;
        hs.h.push_back(PolyFraction::of(std::move(num), std::move(den)));
    }
    // h_j = (c_j (p_{j-3} h_{j-1} + q_{j-3}) p_{m-j-2} - p_{j-4} q_{m-j-1})
    //       / (p_{m-j-1} p_{j-4})   for j >= 3
    for (int j = 3; j <= m; ++j) {
        const PolyFraction& prev = hs.h[static_cast<size_t>(j - 2)];
        Poly inner = t.p(j - 3) * prev.num + t.q(j - 3) * prev.den;
        Poly num = twist(e.kappa, j) * (inner * t.p(m - j - 2)) -
                   t.p(j - 4) * t.q(m - j - 1) * prev.den;
        Poly den = prev.den * (t.p(m - j - 1) * t.p(j - 4));
        hs.h.push_back(PolyFraction::of(std::move(num), std::move(den)));
    }
    return hs;
}

namespace {

// Alternate expression valid for j >= 5 (recurrence two steps back).
PolyFraction h_alternate(const CFExpansion& e, const ContinuantTable& t, const HSequence& hs,
                         int j) {
    const PolyFraction& h1 = hs.h[static_cast<size_t>(j - 2)]; // h_{j-1}
    const PolyFraction& h2 = hs.h[static_cast<size_t>(j - 3)]; // h_{j-2}
    const Poly& a_prev = e.a[static_cast<size_t>(j - 1)];
    Poly inner = t.p(j - 4) * h2.num * h1.den + t.q(j - 4) * (h2.den * h1.den) -
                 a_prev * t.p(j - 5) * h1.num * h2.den;
    Poly num = t.p(j - 3) * inner - t.p(j - 5) * t.q(j - 2) * (h2.den * h1.den);
    Poly den = h2.den * h1.den * (t.p(j - 5) * t.p(j - 4));
    return PolyFraction::of(std::move(num), std::move(den));
}

} // namespace

HReport h_property_check(const CFExpansion& e, const HSequence& hs) {
    HReport r;
    auto note = [&](bool ok, const std::string& what) {
        if (ok) {
            r.checks.push_back(what);
        } else {
            r.ok = false;
            r.failures.push_back(what);
        }
    };
    const int m = e.m;
    const int g = e.genus();
    auto delta = [&](int j) { return e.a[static_cast<size_t>(j)].degree(); };
    const int d1 = delta(std::min(1, m)); // delta_1 (= g+1 when m = 1)

    for (int j = 1; j <= m; ++j)
        note(hs.h[static_cast<size_t>(j - 1)].is_polynomial(),
             "h_" + std::to_string(j) + " is a polynomial");

    note(!hs.h[0].is_zero() && hs.h[0].degree() == g + 1 - d1, "deg h_1 = g+1-delta_1");
    if (m >= 2) note(hs.h[static_cast<size_t>(m - 1)].is_zero(), "h_m = 0");
    if (m >= 2) note(hs.h[1].is_zero() == (m <= 2), "h_2 = 0 exactly when m <= 2");

    for (int j = 2; j <= m; ++j) {
        const PolyFraction& hj = hs.h[static_cast<size_t>(j - 1)];
        bool should_vanish = (g + 1 + d1 == delta(j - 1) + delta(j));
        note(hj.is_zero() == should_vanish,
             "h_" + std::to_string(j) + " vanishing matches the degree-sum criterion");
        if (!hj.is_zero())
            note(hj.degree() == g + 1 - delta(j - 1) - delta(j),
                 "deg h_" + std::to_string(j) + " = g+1-delta_{j-1}-delta_j");
    }

    for (int j = 2; j <= m - 1; ++j)
        note(hs.h[static_cast<size_t>(m - j)] == hs.h[static_cast<size_t>(j - 1)],
             "palindrome h_" + std::to_string(m + 1 - j) + " = h_" + std::to_string(j));

    // Alternate expression agreement (needs the expansion's quotients and the
    // full continuant table).
    ContinuantTable t = ContinuantTable::from_expansion(e);
    for (int j = 5; j <= m; ++j)
        note(h_alternate(e, t, hs, j) == hs.h[static_cast<size_t>(j - 1)],
             "alternate expression agrees for j = " + std::to_string(j));

    for (int j = 3; 2 * j <= m; ++j) {
        bool all_zero = hs.h[static_cast<size_t>(j - 1)].is_zero() &&
                        hs.h[static_cast<size_t>(j - 2)].is_zero() &&
                        hs.h[static_cast<size_t>(j - 3)].is_zero();
        note(!all_zero, "no three consecutive zeros ending at j = " + std::to_string(j));
    }
    return r;
}

A0Report verify_a0_identity(const Poly& f, const CFExpansion& e, const ContinuantTable& t) {
    A0Report r;
    auto note = [&](bool ok, const std::string& what) {
        if (ok) {
            r.checks.push_back(what);
        } else {
            r.ok = false;
            r.failures.push_back(what);
        }
    };
    if (!e.is_periodic()) throw NotPeriodicError("identity check needs a periodic expansion");
    const int m = e.m;
    const Poly& a0 = e.a[0];
    r.difference = f - a0 * a0;

    Poly expected;
    bool exact = true;
    try {
        expected = poly_exact_div(t.q(m - 1), e.kappa * t.p(m - 2));
    } catch (const InexactDivisionError&) {
        exact = false;
    }
    note(exact, "q_{m-1}/(kappa*p_{m-2}) is an exact polynomial quotient");
    if (exact) note(r.difference == expected, "f - a0^2 = q_{m-1}/(kappa*p_{m-2})");

    const Poly& a1 = e.a[1];
    note(r.difference.degree() == e.genus() + 1 - a1.degree(),
         "deg(f - a0^2) = g+1-deg(a1)");
    note(!r.difference.is_zero() && r.difference.lc() == Rational(2) / a1.lc(),
         "lc(f - a0^2) = 2/lc(a1)");
    return r;
}

void self_check_twist_convention() {
    // Order-11 genus-2 fixture at parameter value 2:
    // x^6-4x^5+24x^4-74x^3+168x^2-308x+257, quasi-period 7, skew value 2.
    Poly f = parse_poly("x^6-4*x^5+24*x^4-74*x^3+168*x^2-308*x+257");
    CFExpansion e = cf_expand(f, 32);
    if (!e.is_periodic() || e.m != 7 || e.kappa != 2)
        throw InternalError("twist-convention fixture expansion mismatch");
    ContinuantTable t = ContinuantTable::from_expansion(e);
    HSequence hs = h_sequence(e, t);
    HReport hr = h_property_check(e, hs);
    A0Report ar = verify_a0_identity(f, e, t);
    if (!hr.ok || !ar.ok)
        throw InternalError("twist-convention self-check failed: " +
                            (hr.failures.empty() ? ar.failures.front() : hr.failures.front()));
}

} // namespace cftor
