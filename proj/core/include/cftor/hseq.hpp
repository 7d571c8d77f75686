#pragma once

#include <string>
#include <vector>

#include "cftor/cf.hpp"

namespace cftor {

/// Continuant numerators/denominators of the periodic tail, indexed from -2:
/// p_{-2} = 0, p_{-1} = 1, q_{-2} = 1, q_{-1} = 0, and for j >= 0
/// p_j = a_{j+1} p_{j-1} + p_{j-2} (same recurrence for q).
class ContinuantTable {
public:
    /// Builds the table from the tail quotients (a_1, a_2, ...).
    static ContinuantTable from_tail(const std::vector<Poly>& tail);
    /// Convenience: tail of one full period of a periodic expansion.
    static ContinuantTable from_expansion(const CFExpansion& e);

    /// Valid for -2 <= j <= max_index().
    const Poly& p(int j) const;
    const Poly& q(int j) const;
    int max_index() const { return static_cast<int>(p_.size()) - 3; }

private:
    std::vector<Poly> p_, q_; // slot j+2 holds index j
};

/// Rational function stored in lowest terms with monic denominator.
struct PolyFraction {
    Poly num;
    Poly den = Poly::one();

    static PolyFraction of(Poly numerator, Poly denominator);
    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den == Poly::one(); }
    /// deg num - deg den; requires nonzero value.
    int degree() const;
    bool operator==(const PolyFraction& o) const = default;
};

/// The auxiliary rational functions h_1 ... h_m attached to a quasi-periodic
/// expansion; index j is stored at h[j-1].
struct HSequence {
    std::vector<PolyFraction> h;
};

/// Builds h_1..h_m from the expansion and its full-period continuant table,
/// using the twist constants c_j = kappa^{-1} for odd j and kappa for even j
/// (the convention calibrated on the order-11 reference family).
HSequence h_sequence(const CFExpansion& e, const ContinuantTable& t);

struct HReport {
    bool ok = true;
    std::vector<std::string> checks;
    std::vector<std::string> failures;
};

/// Verifies, where applicable: h_m = 0; the degree formula
/// deg h_j = g+1-delta_{j-1}-delta_j for nonzero h_j (j >= 2) and
/// deg h_1 = g+1-delta_1; vanishing h_j = 0 iff g+1+delta_1 =
/// delta_{j-1}+delta_j (j >= 2); h_2 = 0 iff m <= 2; the palindrome
/// h_{m+1-j} = h_j for 2 <= j <= m-1; denominator-1 polynomiality; the
/// recurrence-free alternate expression for j >= 5; and no three consecutive
/// zeros among h_j for 3 <= j <= m/2.
HReport h_property_check(const CFExpansion& e, const HSequence& hs);

struct A0Report {
    bool ok = true;
    Poly difference; ///< f - a0^2
    std::vector<std::string> checks;
    std::vector<std::string> failures;
};

/// Verifies the exact identity f - a0^2 = q_{m-1}/(kappa * p_{m-2}), the
/// degree g+1-deg(a1) and the leading coefficient 2/lc(a1) of the difference.
A0Report verify_a0_identity(const Poly& f, const CFExpansion& e, const ContinuantTable& t);

/// Runs h_sequence + h_property_check + verify_a0_identity on the reference
/// order-11 family to pin the c_j parity convention; throws InternalError if
/// the built-in convention fails. Used by the fixture suite.
void self_check_twist_convention();

} // namespace cftor
