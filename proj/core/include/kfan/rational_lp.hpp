#pragma once

// Exact feasibility search for small systems of linear inequalities over Q
// (two-phase-free simplex on the phase-one problem, Bland's rule).

#include "kfan/lattice.hpp"

#include <optional>
#include <vector>

namespace kfan {

enum class Relation { GreaterEqual, LessEqual, Equal };

struct LinearConstraint {
    IntVector coefficients;
    Relation relation;
    Integer rhs;
};

/// A point x in Q^n satisfying every constraint, or nullopt if infeasible.
/// Variables are unrestricted in sign.
std::optional<RationalVector> find_feasible_point(const std::vector<LinearConstraint>& constraints,
                                                  std::size_t num_variables);

/// Scale a rational vector by the lcm of its denominators.
IntVector clear_denominators(const RationalVector& v);

} // namespace kfan
