#include "fredombi/optimizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace fredombi {

UnitValue objective(const UnitVector& x) {
    if (x.empty()) {
        throw std::invalid_argument("objective: empty vector");
    }
    return *std::max_element(x.begin(), x.end());
}

OptimizationResult optimize(const SolutionSet& solutions, double eps) {
    if (!solutions.feasible || solutions.minimals.empty()) {
        throw InfeasibleError{"the system has no solution"};
    }

    // The objective is monotone, so it attains its minimum over the solution
    // set at a minimal solution; scanning them is exhaustive.
    OptimizationResult out;
    out.evaluated_count = solutions.minimals.size();
    double best = 2.0;
    for (const auto& candidate : solutions.minimals) {
        best = std::min(best, objective(candidate).value());
    }
    out.optimal_value = UnitValue{best};
    for (const auto& candidate : solutions.minimals) {
        if (objective(candidate).value() <= best + eps) {
            out.optimal_points.push_back(candidate);
        }
    }
    std::sort(out.optimal_points.begin(), out.optimal_points.end(), lex_less);
    return out;
}

OptimizationResult optimize(const Instance& inst, std::uint64_t cap) {
    return optimize(resolve(inst, cap), inst.epsilon);
}

}  // namespace fredombi
