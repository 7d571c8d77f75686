#include "cftor/torsion.hpp"

#include <numeric>
#include <sstream>

namespace cftor {

int DegreeVector::order() const {
    int sum = 0;
    for (size_t i = 1; i < deltas.size(); ++i) sum += deltas[i];
    return g + 1 + sum;
}

bool DegreeVector::well_formed() const {
    if (g < 1 || deltas.empty()) return false;
    if (deltas[0] != g + 1) return false;
    const int m = this->m();
    for (int i = 1; i < m; ++i) {
        if (deltas[static_cast<size_t>(i)] < 1 || deltas[static_cast<size_t>(i)] > g) return false;
        if (deltas[static_cast<size_t>(i)] != deltas[static_cast<size_t>(m - i)]) return false;
    }
    return true;
}

DegreeVector DegreeVector::from_expansion(const CFExpansion& e, int g) {
    if (!e.is_periodic()) throw NotPeriodicError("expansion is not quasi-periodic");
    DegreeVector v;
    v.g = g;
    for (int i = 0; i < e.m; ++i) v.deltas.push_back(e.a[static_cast<size_t>(i)].degree());
    return v;
}

int torsion_order(const CFExpansion& e, int g) {
    if (!e.is_periodic()) throw NotPeriodicError("expansion is not quasi-periodic");
    if (e.a[0].degree() != g + 1)
        throw GenusMismatchError("deg a0 = " + std::to_string(e.a[0].degree()) +
                                 " does not match g+1 = " + std::to_string(g + 1));
    return DegreeVector::from_expansion(e, g).order();
}

ConstraintVerdict degree_constraint_check(const DegreeVector& v) {
    ConstraintVerdict out;
    if (!v.well_formed()) {
        out.satisfied = false;
        out.violations.push_back("degree vector is not well-formed");
        return out;
    }
    const int g = v.g, m = v.m();
    out.N = v.order();
    auto delta = [&](int j) { return v.deltas[static_cast<size_t>(j % m)]; }; // delta_m = delta_0

    const int d1 = (m > 1) ? v.deltas[1] : v.deltas[0];
    std::vector<bool> equality(static_cast<size_t>(m) + 1, false);
    for (int j = 1; j <= m; ++j) {
        int s = delta(j - 1) + delta(j);
        std::ostringstream line;
        line << "delta_" << (j - 1) << "+delta_" << (j % m) << " = " << s;
        if (s > g + 1 + d1) {
            out.satisfied = false;
            out.violations.push_back(line.str() + " exceeds g+1+delta_1 = " +
                                     std::to_string(g + 1 + d1));
            continue;
        }
        equality[static_cast<size_t>(j)] = (s == g + 1 + d1);
        if (!equality[static_cast<size_t>(j)] && s > g + 1) {
            out.satisfied = false;
            out.violations.push_back(line.str() + " exceeds g+1 = " + std::to_string(g + 1) +
                                     " without reaching g+1+delta_1");
            continue;
        }
        line << (equality[static_cast<size_t>(j)] ? " = " : " <= ") << "g+1+delta_1, ok";
        out.checks.push_back(line.str());
    }

    // Equality runs: the structural result forbids three consecutive
    // equalities among interior indices j with 2j <= m; two in a row is
    // conjectured impossible and reported as a warning.
    for (int j = 2; j + 2 <= m - 1 && 2 * (j + 2) <= m; ++j) {
        if (equality[static_cast<size_t>(j)] && equality[static_cast<size_t>(j + 1)] &&
            equality[static_cast<size_t>(j + 2)]) {
            out.satisfied = false;
            out.violations.push_back("equality holds at three consecutive indices starting at j=" +
                                     std::to_string(j));
        }
    }
    for (int j = 2; j + 1 <= m - 1 && 2 * (j + 1) <= m; ++j) {
        if (equality[static_cast<size_t>(j)] && equality[static_cast<size_t>(j + 1)])
            out.warnings.push_back("equality holds at two consecutive indices starting at j=" +
                                   std::to_string(j));
    }

    // order bounds
    const int N = out.N;
    if (!(g + m <= N && N <= m * g + 1)) {
        out.satisfied = false;
        out.violations.push_back("order N = " + std::to_string(N) + " outside [g+m, m*g+1]");
    } else {
        out.checks.push_back("g+m <= N <= m*g+1 holds (N = " + std::to_string(N) + ")");
    }
    if (g > 1 && m > 2) {
        if (!(N < 1 + m * g)) {
            out.satisfied = false;
            out.violations.push_back("strict bound N < 1+m*g fails for g>1, m>2");
        } else {
            out.checks.push_back("N < 1+m*g holds");
        }
    }
    return out;
}

std::string serialize(const ConstraintVerdict& v) {
    std::ostringstream out;
    out << "constraint-verdict: " << (v.satisfied ? "satisfied" : "violated") << "\n";
    out << "order: " << v.N << "\n";
    for (const auto& c : v.checks) out << "ok: " << c << "\n";
    for (const auto& w : v.warnings) out << "warning: " << w << "\n";
    for (const auto& x : v.violations) out << "violation: " << x << "\n";
    return out.str();
}

} // namespace cftor
