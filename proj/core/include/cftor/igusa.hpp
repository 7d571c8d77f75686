#pragma once

#include <array>
#include <string>
#include <vector>

#include "cftor/multipoly.hpp"
#include "cftor/poly.hpp"

namespace cftor {

/// Rewrites a symmetric polynomial in six root variables as a polynomial in
/// the elementary symmetric polynomials e_1..e_6 (named "e1".."e6").
/// Throws NotSymmetricError when the input is not invariant under all
/// permutations of the roots.
MultiPoly symmetric_reduce(const MultiPoly& expr, const std::array<VarId, 6>& roots);

/// Classical genus-2 invariants of a sextic and the absolute invariants
/// j1 = A^5/D, j2 = A^3 B/D, j3 = A^2 C/D (all weight-homogeneous of
/// degree 10, hence constant on isomorphism classes).
struct IgusaInvariants {
    Rational A, B, C, D;
    Rational j1, j2, j3;
};

/// (A, B, C, D) of a degree-6 polynomial. A, B, C come from cached
/// root-pairing formulas generated by symmetric_reduce; D is the discriminant,
/// scaled as -Res(f, f')/lc(f). Throws NotSexticError.
std::array<Rational, 4> igusa_ABCD(const Poly& sextic);

/// Full invariant set; throws SingularCurveError when D = 0.
IgusaInvariants igusa_j(const Poly& sextic);

/// One-parameter family of sextics: coefficient i of x^i is a polynomial in
/// the parameter.
struct SexticFamily {
    std::array<Poly, 7> coeff; ///< coeff[i] multiplies x^i
    std::string param_name = "t";

    Poly at(const Rational& t) const; ///< concrete member (exact)
};

/// (A(t), B(t), C(t), D(t)) of the family as polynomials in the parameter
/// (computed by evaluation/interpolation, exact).
std::array<Poly, 4> igusa_ABCD_family(const SexticFamily& fam);

enum class FamilyVerdict { Disjoint, Overlap };

struct DistinguishReport {
    FamilyVerdict verdict = FamilyVerdict::Disjoint;
    std::vector<std::pair<Rational, Rational>> witnesses; ///< (t, u) matches found
    std::vector<std::string> details;
    /// multiplicities of the declared trivial factors stripped from the two
    /// resultants (full-symbolic path only)
    std::vector<std::pair<std::string, int>> stripped;
    std::string to_string() const;
};

/// Decides whether two one-parameter families share an isomorphism class.
/// Default (desk-scale) path: for sample parameters t0 in {1, 2, -1, 1/3, 5},
/// checks that no member of G matches F(t0) by a univariate gcd of the three
/// specialized j-invariant numerators. When full_symbolic is set, computes
/// the bivariate resultants of the j-difference numerators, strips the
/// declared trivial factors, and tests their polynomial gcd for constancy.
/// Throws DegenerateFamilyError when a j-invariant is constant in the
/// parameter.
DistinguishReport distinguish_families(const SexticFamily& F, const SexticFamily& G,
                                       const std::vector<Poly>& trivial_factors,
                                       bool full_symbolic = false);

} // namespace cftor
