#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cftor/multipoly.hpp"
#include "cftor/partitions.hpp"
#include "cftor/poly.hpp"

namespace cftor {

/// Role of a variable in the symbolic system; the numeric order doubles as
/// the pivot preference (lower solves first on ties).
enum class VarClass {
    HCoeff = 0,      ///< b_j: non-leading coefficients of the seeded h_1
    A0Coeff = 1,     ///< r_j: non-leading coefficients of a_0
    QuotConst = 2,   ///< c_{i,0}: constant terms of interior quotients
    QuotMid = 3,     ///< c_{i,j}, 0 < j < delta_i
    QuotLead = 4,    ///< c_{i,delta_i}: leading coefficients (flagged nonzero)
    Skew = 5,        ///< kappa
};

struct VarInfo {
    VarId id = -1;
    VarClass cls = VarClass::QuotMid;
    int i = 0; ///< quotient index (c variables) or coefficient index (b/r)
    int j = 0; ///< coefficient index within the quotient
    bool nonvanishing = false;
    std::string alias; ///< short display name (l_i/k_i/c_i style) when one exists
};

/// Symbolic data of one search target: generic partial quotients, the seeded
/// h_1, and the coefficient equations of the closing identity
/// kappa*p_{m-2}*h_1 - q_{m-3} - 2*kappa*a_0*q_{m-2} = 0.
struct SymbolicSystem {
    PartitionSpec spec;
    std::vector<VarInfo> variables;   ///< declaration order
    std::set<VarId> nonvanishing;     ///< flagged-nonzero variable ids
    VarId x = -1;                     ///< the formal indeterminate
    VarId kappa = -1;                 ///< -1 when m is even (kappa fixed to 1)
    /// Quotients a_0 .. a_{m-1} as fractions in x and the variables
    /// (mirrored entries carry kappa^{-1} denominators).
    std::vector<MultiFraction> quotients;
    /// (power of x, coefficient of the cleared closing identity), descending.
    std::vector<std::pair<int, MultiPoly>> equations;

    const VarInfo* info(VarId v) const;
    std::string display_name(VarId v) const; ///< "c_1_2 (l1)" style
};

/// Number of unknowns for the given partition.
int count_variables(const PartitionSpec& spec);

SymbolicSystem build_system(const PartitionSpec& spec);

enum class SolveVerdict { Impossible, Family, Stuck };

struct EliminationStep {
    VarId var = -1;
    MultiFraction value;
    int source_power = 0; ///< x-power of the equation the variable was solved from
};

struct EliminationTrace {
    SymbolicSystem system;
    std::vector<EliminationStep> steps;
    std::vector<MultiPoly> residual; ///< content-stripped residual constraints
    SolveVerdict verdict = SolveVerdict::Stuck;
    MultiPoly witness;               ///< nonvanishing monomial (Impossible only)
    std::vector<VarId> free_vars;    ///< never solved (Family)
};

/// Triangular elimination: walks the equations by descending x-power, solves
/// each for a variable that appears linearly with an invertible (flagged
/// monomial) coefficient, and substitutes everywhere. Equations that reduce
/// to a nonzero constant after stripping flagged content prove Impossible;
/// unsolvable-but-nonlinear leftovers become residual constraints of a
/// Family; a leftover with a linear pivot candidate whose coefficient is not
/// invertible yields Stuck.
EliminationTrace eliminate(const SymbolicSystem& sys);

/// Re-substitutes all steps into the original equations and checks that the
/// surviving equations match the residual up to invertible factors.
bool verify_trace(const EliminationTrace& trace);

/// Builds the concrete radicand f = a_0^2 + q_{m-1}/(kappa*p_{m-2}) from the
/// trace under the given assignment (variable name -> value). Values may be
/// given for free variables and for solved variables (the latter induce
/// equations that are solved for the remaining free variables). The result is
/// round-trip verified against the trace's PartitionSpec.
Poly instantiate_curve(const EliminationTrace& trace,
                       const std::map<std::string, Rational>& assignment);

/// Concrete quotient list a_0..a_{m-1} under a full assignment (used by
/// instantiate_curve; exposed for tests).
std::vector<Poly> instantiate_quotients(const SymbolicSystem& sys,
                                        const std::map<VarId, Rational>& values);

std::string serialize(const EliminationTrace& trace);
/// Reads back the PartitionSpec header of a serialized trace (the symbolic
/// body is reproduced deterministically by re-running eliminate).
PartitionSpec trace_spec(const std::string& text);

} // namespace cftor
