#pragma once

#include "cftor/igusa.hpp"
#include "cftor/poly.hpp"

namespace cftor {

/// Genus-2 family with an 11-torsion point at infinity:
/// f_t = x^6 + 2x^5 + (2t+3)x^4 + 2x^3 + (t^2+1)x^2 + 2t(1-t)x + t^2.
SexticFamily flynn_family();
Poly flynn_curve(const Rational& t);

/// Genus-2 family with quasi-period 7 and torsion order 11:
/// g_u = x^6 - 4x^5 + 8(1+u)x^4 - (10+32u)x^3 + 8(1+6u+2u^2)x^2
///       - 4(1+6u+16u^2)x + 64u^2 + 1.
SexticFamily g_family();
Poly g_curve(const Rational& u);

/// Control family h_s = x^6 + x^5 + s*x^4 + x^3 + x^2 + x + 1, used to
/// exercise the disjoint branch of the family-distinction check (its
/// isomorphism classes avoid both torsion families at desk scale).
SexticFamily h_family();
Poly h_curve(const Rational& s);

/// The two cubics (besides powers of the parameter) known to divide the
/// cross-resultants of the families' j-invariant differences:
/// 9 - 104t + 432t^2 + 16t^3 (a factor of the discriminant D(t)) and
/// 3 - 16t + 56t^2 + 4t^3 (a factor of A(t)).
std::vector<Poly> flynn_trivial_factors();

} // namespace cftor
