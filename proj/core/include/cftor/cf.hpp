#pragma once

#include <string>
#include <vector>

#include "cftor/laurent.hpp"
#include "cftor/poly.hpp"

namespace cftor {

enum class CFStatus { QuasiPeriodic, Periodic, BudgetExceeded };

/// Exact surd representation of a complete quotient (P + sqrt(f))/Q.
struct SurdState {
    Poly P;
    Poly Q;

    /// Verifies the structural invariant Q | (f - P^2); throws on violation.
    void check_invariant(const Poly& f) const;
};

/// Continued-fraction expansion of sqrt(f) over the Laurent-series field at
/// infinity.
struct CFExpansion {
    /// Partial quotients. For a (quasi-)periodic expansion this covers one
    /// full period: a[0..n] with a[n] = 2*a[0]. For BudgetExceeded it holds
    /// the quotients computed before the budget ran out.
    std::vector<Poly> a;
    int m = 0;               ///< quasi-period length (valid when periodic)
    Rational kappa = 0;      ///< skew value (valid when periodic)
    int n = 0;               ///< period length: m if kappa == 1, else 2m
    CFStatus status = CFStatus::BudgetExceeded;

    bool is_periodic() const {
        return status == CFStatus::QuasiPeriodic || status == CFStatus::Periodic;
    }
    /// Genus of y^2 = f deduced from deg a0 = g+1.
    int genus() const;
};

/// Runs the quotient recursion a_i = floor((P_i + sqrt f)/Q_i),
/// P_{i+1} = a_i Q_i - P_i, Q_{i+1} = (f - P_{i+1}^2)/Q_i until the
/// quasi-period is detected (smallest i >= 1 with deg Q_i = 0) or max_steps
/// quotients beyond a0 have been produced. On detection the expansion is
/// completed to the full period.
/// Throws PerfectSquareError when f is a square in Q[x], plus the
/// sqrt_series precondition errors.
CFExpansion cf_expand(const Poly& f, int max_steps);

/// Structural verification of a periodic expansion: the interior satisfies
/// the kappa^{+-1}-twisted palindrome, a_m = 2*kappa*a0, and (when kappa != 1)
/// the full period mirrors the first half and ends with 2*a0.
struct PeriodFormReport {
    bool ok = true;
    std::vector<std::string> checks;    ///< human-readable pass lines
    std::vector<std::string> failures;  ///< populated when !ok
    int first_violation_index = -1;
};
PeriodFormReport verify_period_form(const CFExpansion& e);

/// Same as verify_period_form but throws FormViolationError on failure.
void require_period_form(const CFExpansion& e);

std::string serialize(const CFExpansion& e);
CFExpansion deserialize_expansion(const std::string& text);

} // namespace cftor
