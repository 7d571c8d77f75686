#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cftor/cf.hpp"
#include "cftor/families.hpp"
#include "cftor/symbolic.hpp"
#include "cftor/torsion.hpp"

using namespace cftor;

namespace {
const PartitionSpec kNegative{2, 11, 6, {2, 1, 2, 1, 2}};
const PartitionSpec kPositive{2, 11, 7, {2, 1, 1, 1, 1, 2}};

MultiPoly V(const std::string& n) { return MultiPoly::variable(VarTable::intern(n)); }
MultiPoly P(const std::string& n, int e) {
    return MultiPoly::monomial(Rational(1), Monomial::var(VarTable::intern(n), e));
}
} // namespace

TEST_CASE("variable counts and system shape") {
    CHECK(count_variables(kNegative) == 12);
    CHECK(count_variables(kPositive) == 12);
    SymbolicSystem sys = build_system(kPositive);
    CHECK(sys.variables.size() == 12);
    CHECK(sys.equations.size() == 9);
    CHECK(sys.kappa != -1); // odd m keeps the skew value symbolic
    CHECK(sys.quotients.size() == 7);
    CHECK(sys.nonvanishing.size() == 4); // three leading coefficients + kappa
    // equations arrive in descending x-power
    for (size_t i = 1; i < sys.equations.size(); ++i)
        CHECK(sys.equations[i - 1].first > sys.equations[i].first);
    // display names expose the short aliases
    bool saw_l1 = false;
    for (const auto& v : sys.variables)
        if (sys.display_name(v.id).find("l1") != std::string::npos) saw_l1 = true;
    CHECK(saw_l1);
}

TEST_CASE("even quasi-period pins the skew value") {
    SymbolicSystem sys = build_system(kNegative);
    CHECK(sys.kappa == -1);
}

TEST_CASE("negative fixture is impossible with a nonvanishing witness") {
    EliminationTrace tr = eliminate(build_system(kNegative));
    CHECK(tr.verdict == SolveVerdict::Impossible);
    CHECK(tr.witness == -(P("c_1_2", 4) * P("c_2_1", 3) * V("c_3_2")));
    CHECK(verify_trace(tr));
    REQUIRE(tr.steps.size() == 4);
    CHECK(VarTable::name(tr.steps[0].var) == "b_0");
    CHECK(VarTable::name(tr.steps[1].var) == "c_1_0");
    CHECK(VarTable::name(tr.steps[2].var) == "r_0");
    CHECK(VarTable::name(tr.steps[3].var) == "r_2");
}

TEST_CASE("published substitutions of the negative fixture") {
    EliminationTrace tr = eliminate(build_system(kNegative));
    MultiPoly r1 = V("r_1"), r2 = V("r_2"), c1 = V("c_1_1"), l1 = V("c_1_2");
    MultiPoly k2 = V("c_2_0"), l2 = V("c_2_1");
    CHECK(tr.steps[0].value.equivalent(
        MultiFraction::of(Rational(2) * (r2 * l1 - c1), l1 * l1)));
    CHECK(tr.steps[1].value.equivalent(
        MultiFraction::of(r1 * l1 * l1 - r2 * c1 * l1 + c1 * c1, l1)));
    CHECK(tr.steps[3].value.equivalent(MultiFraction::of(c1 * l2 + l1 * k2, l1 * l2)));
}

TEST_CASE("positive fixture is a one-relation family") {
    EliminationTrace tr = eliminate(build_system(kPositive));
    CHECK(tr.verdict == SolveVerdict::Family);
    REQUIRE(tr.residual.size() == 1);
    CHECK(tr.residual[0] ==
          P("c_1_2", 2) * P("c_2_1", 11) * P("kappa", 2) + MultiPoly::constant(32));
    CHECK(tr.free_vars.size() == 4);
    CHECK(verify_trace(tr));
}

TEST_CASE("instantiating the family reproduces the bundled curves") {
    EliminationTrace tr = eliminate(build_system(kPositive));
    for (Rational u : {Rational(1), Rational(3), Rational(-2)}) {
        std::map<std::string, Rational> assign{
            {"kappa", u}, {"l2", Rational(-2)}, {"l1", Rational(1) / (8 * u)}, {"k3", 0}};
        Poly f = instantiate_curve(tr, assign);
        CHECK(f == g_curve(u));
        CFExpansion e = cf_expand(f, 32);
        REQUIRE(e.is_periodic());
        CHECK(e.m == 7);
        CHECK(e.kappa == u);
        CHECK(torsion_order(e, 2) == 11);
    }
}

TEST_CASE("assignments violating the residual are rejected") {
    EliminationTrace tr = eliminate(build_system(kPositive));
    std::map<std::string, Rational> bad{
        {"kappa", 1}, {"l2", Rational(-2)}, {"l1", 1}, {"c1", 1}};
    CHECK_THROWS_AS(instantiate_curve(tr, bad), Error);
}

TEST_CASE("assignments zeroing a flagged variable are rejected") {
    EliminationTrace tr = eliminate(build_system(kPositive));
    std::map<std::string, Rational> bad{
        {"kappa", 0}, {"l2", Rational(-2)}, {"l1", 1}, {"c1", 1}};
    CHECK_THROWS_AS(instantiate_curve(tr, bad), Error);
}

TEST_CASE("instantiated quotients agree with the expansion") {
    EliminationTrace tr = eliminate(build_system(kPositive));
    Rational u = 2;
    std::map<std::string, Rational> assign{
        {"kappa", u}, {"l2", Rational(-2)}, {"l1", Rational(1) / (8 * u)}, {"k3", 0}};
    Poly f = instantiate_curve(tr, assign);
    CFExpansion e = cf_expand(f, 32);
    REQUIRE(e.is_periodic());
    // back-substitute the steps numerically to get every solved variable
    std::map<VarId, MultiFraction> env;
    env[VarTable::intern("kappa")] = MultiFraction::constant(u);
    env[VarTable::intern("c_2_1")] = MultiFraction::constant(Rational(-2));
    env[VarTable::intern("c_1_2")] = MultiFraction::constant(Rational(1) / (8 * u));
    env[VarTable::intern("c_1_1")] = MultiFraction::constant(Rational(-1) / (8 * u));
    for (auto it = tr.steps.rbegin(); it != tr.steps.rend(); ++it) {
        MultiFraction v = substitute_all(it->value, env);
        REQUIRE(v.num.is_constant());
        REQUIRE(v.den.is_constant());
        env[it->var] =
            MultiFraction::constant(v.num.constant_value() / v.den.constant_value());
    }
    std::map<VarId, Rational> values;
    for (const auto& [id, fr] : env)
        values[id] = fr.num.constant_value() / fr.den.constant_value();
    std::vector<Poly> quot = instantiate_quotients(tr.system, values);
    REQUIRE(quot.size() == 7);
    for (size_t i = 0; i < quot.size(); ++i) CHECK(quot[i] == e.a[i]);
}

TEST_CASE("a stuck partition reports its residuals") {
    PartitionSpec spec{2, 11, 7, {1, 2, 1, 1, 2, 1}};
    EliminationTrace tr = eliminate(build_system(spec));
    CHECK(tr.verdict == SolveVerdict::Stuck);
    CHECK(!tr.residual.empty());
    CHECK(verify_trace(tr));
}

TEST_CASE("trace serialization carries the spec header") {
    EliminationTrace tr = eliminate(build_system(kPositive));
    std::string text = serialize(tr);
    CHECK(trace_spec(text) == kPositive);
    CHECK(text.find("FAMILY") != std::string::npos);
}
