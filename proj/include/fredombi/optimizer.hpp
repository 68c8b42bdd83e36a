#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fredombi/resolver.hpp"

namespace fredombi {

class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Result of minimizing the maximum component over the feasible set.
/// Every optimal point is a minimal solution attaining the value.
struct OptimizationResult {
    UnitValue optimal_value;
    std::vector<UnitVector> optimal_points;
    std::size_t evaluated_count = 0;  // minimal solutions compared
};

/// z(x) = max{x_1, ..., x_n}. Throws std::invalid_argument on an empty vector.
UnitValue objective(const UnitVector& x);

/// Optimum over an already-resolved solution set; the minimum of the
/// objective is attained at a minimal solution, so only those are compared.
/// All minimals within eps of the best value are returned.
/// Throws InfeasibleError when the set is infeasible.
OptimizationResult optimize(const SolutionSet& solutions, double eps);

/// Convenience wrapper: resolve, then optimize.
OptimizationResult optimize(const Instance& inst,
                            std::uint64_t cap = kDefaultCandidateCap);

}  // namespace fredombi
