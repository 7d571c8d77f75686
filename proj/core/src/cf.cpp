#include "cftor/cf.hpp"

#include <sstream>

namespace cftor {

void SurdState::check_invariant(const Poly& f) const {
    if (Q.is_zero()) throw InternalError("surd state with zero Q");
    if (!poly_rem(f - P * P, Q).is_zero())
        throw InternalError("surd invariant violated: Q does not divide f - P^2");
}

int CFExpansion::genus() const {
    if (a.empty()) throw Error("empty expansion has no genus");
    return a[0].degree() - 1;
}

CFExpansion cf_expand(const Poly& f, int max_steps) {
    if (max_steps < 1) throw Error("max_steps must be at least 1");
    // Polynomial part of sqrt(f); only this single truncation is ever needed:
    // every complete quotient is handled exactly through its surd state.
    const Poly a0 = sqrt_series(f, 0).polynomial_part();
    if (f == a0 * a0) throw PerfectSquareError("radicand is a perfect square");

    CFExpansion e;
    e.a.push_back(a0);

    SurdState s{Poly::zero(), Poly::one()};
    int m = 0;
    Rational kappa(0);
    Poly prev_a = a0;
    // Run until quasi-period detection (budgeted), then complete the period.
    for (int i = 1;; ++i) {
        // advance: P_{i} = a_{i-1} Q_{i-1} - P_{i-1}; Q_i = (f - P_i^2)/Q_{i-1}
        Poly P_next = prev_a * s.Q - s.P;
        Poly Q_next = poly_exact_div(f - P_next * P_next, s.Q);
        if (Q_next.is_zero()) throw PerfectSquareError("expansion terminated: radicand is square");
        s = SurdState{std::move(P_next), std::move(Q_next)};
        s.check_invariant(f);
        Poly ai = poly_quo(s.P + a0, s.Q);
        e.a.push_back(ai);
        prev_a = ai;

        if (m == 0) {
            if (s.Q.degree() == 0) {
                m = i;
                kappa = ai.lc() / (Rational(2) * a0.lc());
                if (!(ai == (Rational(2) * kappa) * a0))
                    throw InternalError("constant-Q step is not a unit multiple of a0");
                if (kappa == 1) break; // full period a0..am already stored
            } else if (i >= max_steps) {
                e.status = CFStatus::BudgetExceeded;
                return e;
            }
        } else if (i == 2 * m) {
            break; // full period of a strict quasi-period completed
        }
    }

    e.m = m;
    e.kappa = kappa;
    e.n = (kappa == 1) ? m : 2 * m;
    e.status = (kappa == 1) ? CFStatus::Periodic : CFStatus::QuasiPeriodic;
    return e;
}

PeriodFormReport verify_period_form(const CFExpansion& e) {
    PeriodFormReport r;
    if (!e.is_periodic()) throw Error("verify_period_form requires a periodic expansion");
    auto fail = [&](int idx, const std::string& msg) {
        r.ok = false;
        r.failures.push_back(msg);
        if (r.first_violation_index < 0) r.first_violation_index = idx;
    };
    const Poly& a0 = e.a[0];
    const int m = e.m;

    // interior twisted palindrome: a_{m-i} = kappa^{(-1)^i} a_i
    for (int i = 1; i <= m - 1; ++i) {
        Rational factor = (i % 2 == 1) ? Rational(1) / e.kappa : e.kappa;
        if (e.a[static_cast<size_t>(m - i)] == factor * e.a[static_cast<size_t>(i)]) {
            r.checks.push_back("interior symmetry holds at index " + std::to_string(i));
        } else {
            fail(i, "interior symmetry fails at index " + std::to_string(i));
        }
    }
    // a_m = 2 kappa a0
    if (e.a[static_cast<size_t>(m)] == (Rational(2) * e.kappa) * a0)
        r.checks.push_back("a_m equals 2*kappa*a0");
    else
        fail(m, "a_m differs from 2*kappa*a0");

    if (e.kappa != 1) {
        if (m % 2 == 0) fail(m, "strict quasi-period length must be odd");
        // second half of the full period mirrors the first and ends with 2*a0
        for (int i = 1; i <= m - 1; ++i) {
            if (e.a[static_cast<size_t>(m + i)] == e.a[static_cast<size_t>(m - i)])
                r.checks.push_back("second-half mirror holds at index " + std::to_string(m + i));
            else
                fail(m + i, "second-half mirror fails at index " + std::to_string(m + i));
        }
        if (e.a[static_cast<size_t>(2 * m)] == Rational(2) * a0)
            r.checks.push_back("full period ends with 2*a0");
        else
            fail(2 * m, "full period does not end with 2*a0");
    }
    return r;
}

void require_period_form(const CFExpansion& e) {
    auto r = verify_period_form(e);
    if (!r.ok)
        throw FormViolationError("period form violated at index " +
                                 std::to_string(r.first_violation_index) + ": " +
                                 r.failures.front());
}

namespace {
const char* status_name(CFStatus s) {
    switch (s) {
        case CFStatus::QuasiPeriodic: return "QuasiPeriodic";
        case CFStatus::Periodic: return "Periodic";
        case CFStatus::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}
} // namespace

std::string serialize(const CFExpansion& e) {
    std::ostringstream out;
    out << "cf-expansion\n";
    out << "status: " << status_name(e.status) << "\n";
    out << "m: " << e.m << "\n";
    out << "kappa: " << to_string(e.kappa) << "\n";
    out << "n: " << e.n << "\n";
    out << "quotients: " << e.a.size() << "\n";
    for (size_t i = 0; i < e.a.size(); ++i)
        out << "a" << i << ": " << to_coeff_string(e.a[i]) << "\n";
    return out.str();
}

CFExpansion deserialize_expansion(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next = [&]() {
        if (!std::getline(in, line)) throw ParseError("truncated expansion record");
        return line;
    };
    if (next() != "cf-expansion") throw ParseError("missing expansion header");
    auto value_of = [&](const std::string& key) {
        std::string l = next();
        std::string prefix = key + ": ";
        if (l.rfind(prefix, 0) != 0) throw ParseError("expected field '" + key + "'");
        return l.substr(prefix.size());
    };
    CFExpansion e;
    std::string st = value_of("status");
    if (st == "QuasiPeriodic") e.status = CFStatus::QuasiPeriodic;
    else if (st == "Periodic") e.status = CFStatus::Periodic;
    else if (st == "BudgetExceeded") e.status = CFStatus::BudgetExceeded;
    else throw ParseError("unknown expansion status: " + st);
    e.m = std::stoi(value_of("m"));
    e.kappa = parse_rational(value_of("kappa"));
    e.n = std::stoi(value_of("n"));
    int count = std::stoi(value_of("quotients"));
    for (int i = 0; i < count; ++i)
        e.a.push_back(parse_poly(value_of("a" + std::to_string(i))));
    return e;
}

} // namespace cftor
