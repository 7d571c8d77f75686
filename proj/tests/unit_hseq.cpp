#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cftor/families.hpp"
#include "cftor/hseq.hpp"
#include "cftor/torsion.hpp"

using namespace cftor;

TEST_CASE("continuant recurrence and seeds") {
    CFExpansion e = cf_expand(g_curve(Rational(1)), 32);
    REQUIRE(e.is_periodic());
    ContinuantTable t = ContinuantTable::from_expansion(e);
    CHECK(t.p(-2) == Poly::zero());
    CHECK(t.p(-1) == Poly::one());
    CHECK(t.q(-2) == Poly::one());
    CHECK(t.q(-1) == Poly::zero());
    for (int j = 0; j <= t.max_index(); ++j) {
        const Poly& a = e.a[static_cast<size_t>(j) + 1];
        CHECK(t.p(j) == a * t.p(j - 1) + t.p(j - 2));
        CHECK(t.q(j) == a * t.q(j - 1) + t.q(j - 2));
    }
    // determinant identity p_j q_{j-1} - p_{j-1} q_j = (-1)^(j+1)
    for (int j = 0; j <= t.max_index(); ++j) {
        Poly det = t.p(j) * t.q(j - 1) - t.p(j - 1) * t.q(j);
        CHECK(det == Poly::constant(Rational(j % 2 == 0 ? -1 : 1)));
    }
}

TEST_CASE("poly fractions normalize") {
    PolyFraction f = PolyFraction::of(parse_poly("2*x^2-2"), parse_poly("4*x+4"));
    CHECK(f.den == Poly::one());          // (x-1)/2 after cancellation
    CHECK(f.num == parse_poly("1/2*x-1/2"));
    CHECK(f.is_polynomial());
    CHECK(f.degree() == 1);
    CHECK(PolyFraction::of(Poly::zero(), parse_poly("x+1")).is_zero());
    CHECK_THROWS_AS(PolyFraction::of(Poly::one(), Poly::zero()), ZeroDenominatorError);
}

static void run_h_suite(const Poly& f) {
    CFExpansion e = cf_expand(f, 40);
    REQUIRE(e.is_periodic());
    ContinuantTable t = ContinuantTable::from_expansion(e);
    HSequence hs = h_sequence(e, t);
    REQUIRE(hs.h.size() == static_cast<size_t>(e.m));
    CHECK(hs.h.back().is_zero()); // h_m = 0
    for (const PolyFraction& h : hs.h) CHECK(h.is_polynomial());
    HReport rep = h_property_check(e, hs);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
    A0Report a0 = verify_a0_identity(f, e, t);
    CHECK(a0.ok);
}

TEST_CASE("h-sequence suite on both bundled families") {
    for (int v : {1, 2, 3, -1}) {
        run_h_suite(g_curve(Rational(v)));
        run_h_suite(flynn_curve(Rational(v)));
    }
    run_h_suite(g_curve(Rational(1) / 2));
    run_h_suite(flynn_curve(Rational(1) / 3));
}

TEST_CASE("f - a0^2 for the period-7 curve is 16x-16") {
    Poly f = g_curve(Rational(1));
    CFExpansion e = cf_expand(f, 32);
    REQUIRE(e.is_periodic());
    ContinuantTable t = ContinuantTable::from_expansion(e);
    A0Report rep = verify_a0_identity(f, e, t);
    CHECK(rep.ok);
    CHECK(rep.difference == parse_poly("16*x-16"));
}

TEST_CASE("built-in twist convention self-check") {
    CHECK_NOTHROW(self_check_twist_convention());
}

TEST_CASE("torsion order and degree vectors") {
    CFExpansion e = cf_expand(g_curve(Rational(3)), 32);
    REQUIRE(e.is_periodic());
    CHECK(torsion_order(e, 2) == 11);
    DegreeVector v = DegreeVector::from_expansion(e, 2);
    CHECK(v.m() == 7);
    CHECK(v.deltas == std::vector<int>{3, 2, 1, 1, 1, 1, 2});
    CHECK(v.order() == 11);
    CHECK(v.well_formed());
    CHECK_THROWS_AS(torsion_order(e, 3), GenusMismatchError);

    CFExpansion bad = cf_expand(parse_poly("x^4+x+1"), 12);
    CHECK_THROWS_AS(torsion_order(bad, 1), NotPeriodicError);
}

TEST_CASE("degree constraints hold on real expansions") {
    for (int v : {1, 2, 5}) {
        CFExpansion e = cf_expand(flynn_curve(Rational(v)), 32);
        REQUIRE(e.is_periodic());
        ConstraintVerdict cv = degree_constraint_check(DegreeVector::from_expansion(e, 2));
        CHECK(cv.satisfied);
        CHECK(cv.violations.empty());
        CHECK(cv.N == 11);
        CHECK(!serialize(cv).empty());
    }
}

TEST_CASE("degree constraints flag an invalid vector") {
    DegreeVector v;
    v.g = 2;
    v.deltas = {3, 3, 3}; // N = 9 > m*g + 1 = 7
    ConstraintVerdict cv = degree_constraint_check(v);
    CHECK(!cv.satisfied);
    CHECK(!cv.violations.empty());
}
