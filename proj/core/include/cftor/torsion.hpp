#pragma once

#include <string>
#include <vector>

#include "cftor/cf.hpp"

namespace cftor {

/// Partial-quotient degrees (delta_0, ..., delta_{m-1}) of a quasi-periodic
/// expansion at genus g.
struct DegreeVector {
    int g = 0;
    std::vector<int> deltas;

    int m() const { return static_cast<int>(deltas.size()); }
    /// N = g + 1 + sum of interior degrees.
    int order() const;
    bool well_formed() const;

    static DegreeVector from_expansion(const CFExpansion& e, int g);
};

/// Order of the divisor at infinity in the Jacobian, from the expansion.
/// Throws NotPeriodicError / GenusMismatchError.
int torsion_order(const CFExpansion& e, int g);

/// Result of checking the consecutive-degree constraints and order bounds.
struct ConstraintVerdict {
    bool satisfied = true;              ///< no hard violations
    std::vector<std::string> checks;    ///< each inequality with its status
    std::vector<std::string> violations;
    std::vector<std::string> warnings;  ///< two-in-a-row equality (conjectured impossible)
    int N = 0;
};

/// Checks, for 1 <= j <= m (with delta_m = delta_0 at the wrap-around):
///  (i)  delta_{j-1} + delta_j <= g + 1 + delta_1,
///  (ii) equality never holds at three consecutive j <= m/2,
///  (iii) where equality fails, delta_{j-1} + delta_j <= g + 1,
///  (iv) g + m <= N <= m*g + 1, and N < 1 + m*g when g > 1 and m > 2.
ConstraintVerdict degree_constraint_check(const DegreeVector& v);

std::string serialize(const ConstraintVerdict& v);

} // namespace cftor
