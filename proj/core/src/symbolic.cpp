#include "cftor/symbolic.hpp"

#include <algorithm>
#include <sstream>

#include "cftor/cf.hpp"
#include "cftor/hseq.hpp"
#include "cftor/torsion.hpp"

namespace cftor {

const VarInfo* SymbolicSystem::info(VarId v) const {
    for (const auto& vi : variables)
        if (vi.id == v) return &vi;
    return nullptr;
}

std::string SymbolicSystem::display_name(VarId v) const {
    std::string n = VarTable::name(v);
    const VarInfo* vi = info(v);
    if (vi && !vi->alias.empty() && vi->alias != n) n += " (" + vi->alias + ")";
    return n;
}

int count_variables(const PartitionSpec& spec) {
    const int g = spec.g, m = spec.m;
    int sum_half = 0;
    for (int i = 1; i <= m / 2; ++i) sum_half += spec.delta(i);
    return (spec.delta(0) - spec.delta(1)) + (m / 2 + sum_half) + (m % 2) + (g + 1);
}

SymbolicSystem build_system(const PartitionSpec& spec) {
    const int g = spec.g, m = spec.m, N = spec.N;
    if (m < 2) throw Error("the symbolic method requires quasi-period length m >= 2");
    SymbolicSystem sys;
    sys.spec = spec;
    sys.x = VarTable::intern("x");

    auto declare = [&](const std::string& name, VarClass cls, int i, int j, bool flagged,
                       const std::string& alias) {
        VarInfo vi;
        vi.id = VarTable::intern(name);
        vi.cls = cls;
        vi.i = i;
        vi.j = j;
        vi.nonvanishing = flagged;
        vi.alias = alias;
        sys.variables.push_back(vi);
        if (flagged) sys.nonvanishing.insert(vi.id);
        return vi.id;
    };

    // a_0 = x^{g+1} + sum r_j x^j
    MultiPoly a0 = MultiPoly::monomial(Rational(1), Monomial::var(sys.x, g + 1));
    for (int j = 0; j <= g; ++j) {
        VarId r = declare("r_" + std::to_string(j), VarClass::A0Coeff, j, j, false,
                          "r" + std::to_string(j));
        a0 += MultiPoly::monomial(Rational(1), Monomial::var(r) * Monomial::var(sys.x, j));
    }

    // interior quotients a_i for i <= m/2
    std::vector<MultiPoly> half(static_cast<size_t>(m / 2) + 1);
    VarId l1 = -1;
    for (int i = 1; i <= m / 2; ++i) {
        const int di = spec.delta(i);
        MultiPoly ai;
        for (int j = 0; j <= di; ++j) {
            VarClass cls = (j == 0)    ? VarClass::QuotConst
                           : (j == di) ? VarClass::QuotLead
                                       : VarClass::QuotMid;
            std::string alias = (j == 0)    ? "k" + std::to_string(i)
                                : (j == di) ? "l" + std::to_string(i)
                                : (di == 2) ? "c" + std::to_string(i)
                                            : "";
            VarId c = declare("c_" + std::to_string(i) + "_" + std::to_string(j), cls, i, j,
                              j == di, alias);
            if (i == 1 && j == di) l1 = c;
            ai += MultiPoly::monomial(Rational(1), Monomial::var(c) * Monomial::var(sys.x, j));
        }
        half[static_cast<size_t>(i)] = std::move(ai);
    }

    // non-leading coefficients of the seeded h_1
    const int dh = spec.delta(0) - spec.delta(1);
    std::vector<VarId> bvars;
    for (int j = 0; j < dh; ++j)
        bvars.push_back(declare("b_" + std::to_string(j), VarClass::HCoeff, j, j, false,
                                "b" + std::to_string(j)));

    MultiFraction kappa_f = MultiFraction::constant(Rational(1));
    if (m % 2 == 1) {
        sys.kappa = declare("kappa", VarClass::Skew, 0, 0, true, "kappa");
        kappa_f = MultiFraction::variable(sys.kappa);
    }

    // quotients a_0..a_{m-1}; the mirrored half obeys a_{m-i} = kappa^{(-1)^i} a_i
    sys.quotients.resize(static_cast<size_t>(m));
    sys.quotients[0] = MultiFraction{a0, MultiPoly::constant(Rational(1))};
    for (int i = 1; i <= m / 2; ++i)
        sys.quotients[static_cast<size_t>(i)] =
            MultiFraction{half[static_cast<size_t>(i)], MultiPoly::constant(Rational(1))};
    for (int t = m / 2 + 1; t <= m - 1; ++t) {
        int i = m - t;
        MultiFraction base = sys.quotients[static_cast<size_t>(i)];
        sys.quotients[static_cast<size_t>(t)] =
            (i % 2 == 1) ? base / kappa_f : base * kappa_f;
    }

    // seeded h_1 = (2/l_1) x^{dh} + sum b_j x^j
    MultiPoly h1_num = Rational(2) * MultiPoly::monomial(Rational(1), Monomial::var(sys.x, dh));
    MultiPoly l1p = MultiPoly::variable(l1);
    for (int j = 0; j < dh; ++j)
        h1_num += l1p * MultiPoly::monomial(
                            Rational(1), Monomial::var(bvars[static_cast<size_t>(j)]) *
                                             Monomial::var(sys.x, j));
    MultiFraction h1{std::move(h1_num), l1p};

    // continuants of the tail a_1..a_{m-1}, indexed from -2
    std::vector<MultiFraction> p = {MultiFraction::constant(Rational(0)),
                                    MultiFraction::constant(Rational(1))};
    std::vector<MultiFraction> q = {MultiFraction::constant(Rational(1)),
                                    MultiFraction::constant(Rational(0))};
    for (int i = 1; i <= m - 1; ++i) {
        size_t k = p.size();
        p.push_back(sys.quotients[static_cast<size_t>(i)] * p[k - 1] + p[k - 2]);
        q.push_back(sys.quotients[static_cast<size_t>(i)] * q[k - 1] + q[k - 2]);
    }
    auto P = [&](int j) -> const MultiFraction& { return p[static_cast<size_t>(j + 2)]; };
    auto Q = [&](int j) -> const MultiFraction& { return q[static_cast<size_t>(j + 2)]; };

    // closing identity
    MultiFraction J = kappa_f * P(m - 2) * h1 - Q(m - 3) -
                      MultiFraction::constant(Rational(2)) * kappa_f * sys.quotients[0] *
                          Q(m - 2);

    // the cleared identity: denominator must be invertible (flagged monomial)
    if (J.den.term_count() != 1)
        throw InternalError("closing identity has a non-monomial denominator");
    for (const auto& [var, e] : J.den.terms().begin()->first.factors())
        if (!sys.nonvanishing.count(var))
            throw InternalError("closing identity denominator contains an unflagged variable");

    const MultiPoly& Jn = J.num;
    int top = Jn.degree_in(sys.x);
    for (int k = top; k >= 0; --k) {
        MultiPoly eq = Jn.coeff_of(sys.x, k);
        if (!eq.is_zero()) sys.equations.emplace_back(k, std::move(eq));
    }
    const int expected = N - spec.delta(1);
    if (static_cast<int>(sys.equations.size()) != expected)
        throw InternalError("equation count " + std::to_string(sys.equations.size()) +
                            " differs from N-delta_1 = " + std::to_string(expected));
    return sys;
}

namespace {

// Divides out rational content and every flagged variable's common power;
// normalizes the sign of the leading term to +.
MultiPoly strip_invertible(const MultiPoly& e, const std::set<VarId>& flagged) {
    if (e.is_zero()) return e;
    Monomial mc = e.monomial_content();
    Monomial strip;
    for (const auto& [var, exp] : mc.factors())
        if (flagged.count(var)) strip = strip * Monomial::var(var, exp);
    MultiPoly s = strip.is_unit() ? e : e.divide_by(strip);
    s = s.divide_by(s.content());
    if (s.terms().rbegin()->second < 0) s = -s;
    return s;
}

// A coefficient is invertible when it is a single term whose variables all
// carry nonvanishing flags.
bool is_unit_coeff(const MultiPoly& c, const std::set<VarId>& flagged) {
    if (c.term_count() != 1) return false;
    for (const auto& [var, e] : c.terms().begin()->first.factors())
        if (!flagged.count(var)) return false;
    return true;
}

} // namespace

EliminationTrace eliminate(const SymbolicSystem& sys) {
    EliminationTrace trace;
    trace.system = sys;

    std::vector<std::pair<int, MultiPoly>> work = sys.equations; // descending powers
    std::set<VarId> solved;

    for (size_t idx = 0; idx < work.size(); ++idx) {
        MultiPoly eq = strip_invertible(work[idx].second, sys.nonvanishing);
        if (eq.is_zero()) continue;
        if (eq.is_constant()) {
            // the unstripped equation is a nonzero multiple of a flagged monomial
            trace.verdict = SolveVerdict::Impossible;
            trace.witness = work[idx].second.divide_by(work[idx].second.content());
            for (VarId v : trace.witness.variables())
                if (!sys.nonvanishing.count(v))
                    throw InternalError("impossibility witness contains an unflagged variable");
            break;
        }

        // pivot candidates: linear occurrence with invertible coefficient
        std::vector<VarId> cands;
        for (VarId v : eq.variables()) {
            if (v == sys.x) continue;
            if (eq.degree_in(v) != 1) continue;
            if (is_unit_coeff(eq.coeff_of(v, 1), sys.nonvanishing)) cands.push_back(v);
        }
        if (cands.empty()) {
            trace.residual.push_back(eq);
            continue;
        }
        auto occurrences = [&](VarId v) {
            int n = 0;
            for (size_t k = idx + 1; k < work.size(); ++k)
                if (work[k].second.contains(v)) ++n;
            return n;
        };
        auto rank = [&](VarId v) {
            const VarInfo* vi = sys.info(v);
            return std::tuple<int, int, int, int>(-occurrences(v), static_cast<int>(vi->cls),
                                                  vi->i, vi->j);
        };
        VarId pivot = *std::min_element(cands.begin(), cands.end(),
                                        [&](VarId a, VarId b) { return rank(a) < rank(b); });

        MultiPoly C = eq.coeff_of(pivot, 1);
        MultiPoly R = eq.coeff_of(pivot, 0);
        MultiFraction value = MultiFraction::of(-R, C);
        if (sys.nonvanishing.count(pivot) && value.is_zero()) {
            trace.verdict = SolveVerdict::Impossible;
            trace.witness = MultiPoly::variable(pivot);
            break;
        }
        trace.steps.push_back(EliminationStep{pivot, value, work[idx].first});
        solved.insert(pivot);
        for (size_t k = idx + 1; k < work.size(); ++k) {
            MultiFraction s = substitute(work[k].second, pivot, value);
            if (s.den.term_count() != 1)
                throw InternalError("substitution produced a non-monomial denominator");
            work[k].second = s.num;
        }
    }

    if (trace.verdict != SolveVerdict::Impossible) {
        for (const auto& vi : sys.variables)
            if (!solved.count(vi.id)) trace.free_vars.push_back(vi.id);
        bool stuck = false;
        for (const auto& r : trace.residual)
            for (VarId v : r.variables())
                if (v != sys.x && r.degree_in(v) == 1) stuck = true;
        trace.verdict = stuck ? SolveVerdict::Stuck : SolveVerdict::Family;
    }
    return trace;
}

bool verify_trace(const EliminationTrace& trace) {
    const SymbolicSystem& sys = trace.system;
    std::vector<MultiPoly> survivors;
    for (const auto& [power, eq0] : sys.equations) {
        MultiPoly cur = eq0;
        for (const auto& step : trace.steps) {
            if (!cur.contains(step.var)) continue;
            MultiFraction s = substitute(cur, step.var, step.value);
            cur = s.num;
        }
        MultiPoly s = strip_invertible(cur, sys.nonvanishing);
        if (!s.is_zero()) survivors.push_back(s);
    }
    if (trace.verdict == SolveVerdict::Impossible) {
        // at least one survivor must be the (stripped) witness, i.e. constant
        for (const auto& s : survivors)
            if (s.is_constant()) return true;
        return false;
    }
    auto key = [](const MultiPoly& p) { return p.to_string(); };
    std::vector<std::string> a, b;
    for (const auto& s : survivors) a.push_back(key(s));
    for (const auto& r : trace.residual) b.push_back(key(strip_invertible(r, sys.nonvanishing)));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<Poly> instantiate_quotients(const SymbolicSystem& sys,
                                        const std::map<VarId, Rational>& values) {
    std::vector<Poly> out;
    for (const auto& frac : sys.quotients) {
        auto to_poly = [&](const MultiPoly& mp) {
            int d = mp.degree_in(sys.x);
            std::vector<Rational> cs(static_cast<size_t>(d) + 1, Rational(0));
            for (int k = 0; k <= d; ++k) cs[static_cast<size_t>(k)] = mp.coeff_of(sys.x, k).eval(values);
            return Poly(std::move(cs));
        };
        Poly num = to_poly(frac.num);
        Poly den = to_poly(frac.den);
        if (den.is_zero()) throw ZeroDenominatorError("quotient denominator vanishes");
        out.push_back(poly_exact_div(num, den));
    }
    return out;
}

Poly instantiate_curve(const EliminationTrace& trace,
                       const std::map<std::string, Rational>& assignment) {
    const SymbolicSystem& sys = trace.system;
    if (trace.verdict == SolveVerdict::Impossible)
        throw ConstraintViolatedError("cannot instantiate an impossible system");

    std::map<VarId, Rational> values;
    for (const auto& [name, val] : assignment) {
        bool known = false;
        for (const auto& vi : sys.variables) {
            if (VarTable::name(vi.id) == name || vi.alias == name) {
                values[vi.id] = val;
                known = true;
                break;
            }
        }
        if (!known) throw ConstraintViolatedError("assignment names unknown variable: " + name);
    }

    // Fixpoint: back-substitute the solve steps under the current values;
    // assigned solved variables induce equations solved for still-unknown
    // free variables.
    const size_t var_count = sys.variables.size();
    for (size_t round = 0; round <= var_count; ++round) {
        std::map<VarId, MultiFraction> env;
        for (const auto& [v, val] : values) env[v] = MultiFraction::constant(val);

        std::vector<MultiPoly> pending;
        for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
            MultiFraction expr = substitute_all(it->value, env);
            auto assigned = values.find(it->var);
            if (assigned != values.end()) {
                MultiFraction diff = expr - MultiFraction::constant(assigned->second);
                if (!diff.is_zero()) {
                    if (diff.num.is_constant())
                        throw ConstraintViolatedError(
                            "assignment contradicts solved value of " +
                            VarTable::name(it->var));
                    pending.push_back(diff.num);
                }
            } else {
                env[it->var] = expr;
                if (expr.num.is_constant() && expr.den.is_constant())
                    values[it->var] = expr.num.constant_value() / expr.den.constant_value();
            }
        }

        if (pending.empty()) {
            // every variable must now be determined
            bool complete = true;
            for (const auto& vi : sys.variables)
                if (!values.count(vi.id)) complete = false;
            if (!complete)
                throw ConstraintViolatedError(
                    "assignment leaves free variables undetermined");
            break;
        }
        if (round == var_count)
            throw ConstraintViolatedError("assignment constraints could not be resolved");

        // solve one pending equation that is linear in a single unknown with
        // constant data
        bool progressed = false;
        for (const auto& eq : pending) {
            for (VarId v : eq.variables()) {
                if (eq.degree_in(v) != 1) continue;
                MultiPoly C = eq.coeff_of(v, 1), R = eq.coeff_of(v, 0);
                if (!C.is_constant() || !R.is_constant() || C.constant_value() == 0) continue;
                values[v] = -R.constant_value() / C.constant_value();
                progressed = true;
                break;
            }
            if (progressed) break;
        }
        if (!progressed)
            throw ConstraintViolatedError("assignment constraints are not triangular");
    }

    // flags and residual constraints
    for (VarId v : sys.nonvanishing)
        if (values.at(v) == 0)
            throw NonvanishingViolatedError("flagged variable " + VarTable::name(v) +
                                            " assigned zero");
    for (const auto& r : trace.residual)
        if (r.eval(values) != 0)
            throw ConstraintViolatedError("residual constraint not satisfied: " + r.to_string());

    // concrete quotients and radicand
    std::vector<Poly> a = instantiate_quotients(sys, values);
    const int m = sys.spec.m;
    Rational kappa = (sys.kappa >= 0) ? values.at(sys.kappa) : Rational(1);
    std::vector<Poly> tail(a.begin() + 1, a.end());
    tail.push_back((Rational(2) * kappa) * a[0]); // a_m closes the period
    ContinuantTable t = ContinuantTable::from_tail(tail);
    Poly f = a[0] * a[0] + poly_exact_div(t.q(m - 1), kappa * t.p(m - 2));

    // round trip
    CFExpansion e = cf_expand(f, std::max(sys.spec.N, 2 * m) + 4);
    if (!e.is_periodic() || e.m != m || e.kappa != kappa)
        throw RoundTripFailedError("expansion does not reproduce the target period data");
    for (int i = 0; i < m; ++i)
        if (e.a[static_cast<size_t>(i)].degree() != sys.spec.delta(i))
            throw RoundTripFailedError("expansion degree vector differs from the partition");
    if (torsion_order(e, sys.spec.g) != sys.spec.N)
        throw RoundTripFailedError("torsion order differs from the target");
    return f;
}

namespace {
const char* verdict_name(SolveVerdict v) {
    switch (v) {
        case SolveVerdict::Impossible: return "IMPOSSIBLE";
        case SolveVerdict::Family: return "FAMILY";
        case SolveVerdict::Stuck: return "STUCK";
    }
    return "?";
}
} // namespace

std::string serialize(const EliminationTrace& trace) {
    const SymbolicSystem& sys = trace.system;
    std::ostringstream out;
    out << "elimination-trace\n";
    out << "spec: g=" << sys.spec.g << " N=" << sys.spec.N << " m=" << sys.spec.m << " deltas=";
    for (size_t i = 0; i < sys.spec.deltas.size(); ++i) {
        if (i) out << ',';
        out << sys.spec.deltas[i];
    }
    out << "\n";
    out << "variables: " << sys.variables.size() << "\n";
    for (const auto& vi : sys.variables)
        out << "var: " << sys.display_name(vi.id) << (vi.nonvanishing ? " [nonzero]" : "")
            << "\n";
    out << "equations: " << sys.equations.size() << "\n";
    for (const auto& step : trace.steps)
        out << "solve[x^" << step.source_power << "] " << sys.display_name(step.var) << " = "
            << step.value.to_string() << "\n";
    for (const auto& r : trace.residual) out << "residual: " << r.to_string() << " = 0\n";
    out << "verdict: " << verdict_name(trace.verdict) << "\n";
    if (trace.verdict == SolveVerdict::Impossible)
        out << "witness: " << trace.witness.to_string() << "\n";
    if (!trace.free_vars.empty()) {
        out << "free:";
        for (VarId v : trace.free_vars) out << ' ' << sys.display_name(v);
        out << "\n";
    }
    return out.str();
}

PartitionSpec trace_spec(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "elimination-trace")
        throw ParseError("missing elimination-trace header");
    if (!std::getline(in, line) || line.rfind("spec: ", 0) != 0)
        throw ParseError("missing spec line in trace");
    PartitionSpec spec;
    std::istringstream ls(line.substr(6));
    std::string tok;
    while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("malformed spec token: " + tok);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "g") spec.g = std::stoi(val);
        else if (key == "N") spec.N = std::stoi(val);
        else if (key == "m") spec.m = std::stoi(val);
        else if (key == "deltas") {
            size_t start = 0;
            while (start <= val.size() && !val.empty()) {
                size_t comma = val.find(',', start);
                spec.deltas.push_back(std::stoi(
                    val.substr(start, comma == std::string::npos ? comma : comma - start)));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
    }
    return spec;
}

} // namespace cftor
