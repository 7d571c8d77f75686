#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cftor/cf.hpp"
#include "cftor/families.hpp"
#include "cftor/laurent.hpp"

using namespace cftor;

TEST_CASE("laurent series coefficient access and precision floor") {
    LaurentSeries s = LaurentSeries::from_poly(parse_poly("x^3+2*x-5"), -4);
    CHECK(s.top_degree() == 3);
    CHECK(s.at(3) == 1);
    CHECK(s.at(2) == 0);
    CHECK(s.at(1) == 2);
    CHECK(s.at(0) == -5);
    CHECK(s.at(-4) == 0);
    CHECK(s.at(17) == 0); // above the leading term
    CHECK_THROWS_AS(s.at(-5), PrecisionLossError);
    CHECK(s.polynomial_part() == parse_poly("x^3+2*x-5"));
}

TEST_CASE("laurent multiplication tracks the floor") {
    LaurentSeries a = LaurentSeries::from_poly(parse_poly("x+1"), -3);
    LaurentSeries b = LaurentSeries::from_poly(parse_poly("x-1"), -3);
    LaurentSeries p = a * b;
    CHECK(p.at(2) == 1);
    CHECK(p.at(1) == 0);
    CHECK(p.at(0) == -1);
}

TEST_CASE("series square root squares back to f") {
    Poly f = parse_poly("x^6-4*x^5+16*x^4-42*x^3+72*x^2-92*x+65");
    LaurentSeries r = sqrt_series(f, -8);
    LaurentSeries sq = r * r;
    // the product is trusted down to floor + top of the factors
    for (int e = 6; e >= sq.floor(); --e) CHECK(sq.at(e) == (e >= 0 ? f.coeff(e) : 0));
    CHECK(sq.floor() <= -2);
    CHECK(r.at(3) == 1); // positive branch
}

TEST_CASE("square root preconditions") {
    CHECK_THROWS_AS(sqrt_series(parse_poly("x^3+1"), -2), OddDegreeError);
    CHECK_THROWS_AS(sqrt_series(parse_poly("2*x^4+1"), -2), NonSquareLeadingCoefficientError);
}

TEST_CASE("minimal periodic example x^4+1") {
    CFExpansion e = cf_expand(parse_poly("x^4+1"), 8);
    REQUIRE(e.is_periodic());
    CHECK(e.m == 1);
    CHECK(e.kappa == 1);
    CHECK(e.n == 1);
    CHECK(e.genus() == 1);
    CHECK(e.a[0] == parse_poly("x^2"));
    CHECK(e.a[1] == parse_poly("2*x^2"));
}

TEST_CASE("reference order-11 curve at parameter 2") {
    CFExpansion e = cf_expand(g_curve(Rational(2)), 32);
    REQUIRE(e.is_periodic());
    CHECK(e.m == 7);
    CHECK(e.kappa == 2);
    CHECK(e.n == 14);
    CHECK(e.genus() == 2);
    CHECK(e.a[7] == Rational(4) * e.a[0]); // a_m = 2*kappa*a_0
    CHECK(verify_period_form(e).ok);
    CHECK_NOTHROW(require_period_form(e));
}

TEST_CASE("a generic radicand exhausts the budget") {
    CFExpansion e = cf_expand(parse_poly("x^4+x+1"), 24);
    CHECK(e.status == CFStatus::BudgetExceeded);
    CHECK(!e.is_periodic());
    CHECK(e.a.size() <= 25);
}

TEST_CASE("perfect squares are rejected") {
    Poly s = parse_poly("x^2+3");
    CHECK_THROWS_AS(cf_expand(s * s, 8), PerfectSquareError);
}

TEST_CASE("expansion serialization round-trip") {
    CFExpansion e = cf_expand(flynn_curve(Rational(1)), 32);
    REQUIRE(e.is_periodic());
    CFExpansion back = deserialize_expansion(serialize(e));
    CHECK(back.a == e.a);
    CHECK(back.m == e.m);
    CHECK(back.kappa == e.kappa);
    CHECK(back.n == e.n);
    CHECK(back.status == e.status);
}

TEST_CASE("tampered expansion fails the period-form check") {
    CFExpansion e = cf_expand(g_curve(Rational(1)), 32);
    REQUIRE(e.is_periodic());
    e.a[2] += Poly::one();
    PeriodFormReport rep = verify_period_form(e);
    CHECK(!rep.ok);
    CHECK(!rep.failures.empty());
    CHECK_THROWS_AS(require_period_form(e), FormViolationError);
}
