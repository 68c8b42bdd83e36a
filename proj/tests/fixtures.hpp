#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "fredombi/instance.hpp"
#include "fredombi/tnorm.hpp"

namespace fixtures {

// 4x6 reference system, lambda = 2. Feasible, with 12 candidates after
// simplification and exactly 3 minimal solutions.
inline fredombi::Instance example1() {
    const std::vector<std::vector<double>> a = {
        {0.9452, 0.4012, 0.8976, 0.6221, 0.4368, 0.8126},
        {0.5271, 0.1113, 0.2456, 0.3419, 0.5271, 0.2192},
        {0.2073, 0.8172, 0.4386, 0.4599, 0.6152, 0.2188},
        {0.9111, 0.7243, 0.3274, 0.8327, 0.8327, 0.5845},
    };
    const std::vector<double> b = {0.7243, 0.5271, 0.6152, 0.8327};
    return fredombi::Instance{fredombi::to_units(a), fredombi::to_units(b),
                              fredombi::TNormParam{2.0}};
}

// Exact residuals of the reference system, frozen from a 50-digit
// recomputation. Reported 4-decimal values round these.
inline constexpr double kV11 = 0.72663745211827163;  // V(0.7243, 0.9452)
inline constexpr double kV13 = 0.73359738429764264;  // V(0.7243, 0.8976)
inline constexpr double kV16 = 0.76756100045336548;  // V(0.7243, 0.8126)
inline constexpr double kV32 = 0.63126492821737725;  // V(0.6152, 0.8172)
inline constexpr double kV41 = 0.85060928824267226;  // V(0.8327, 0.9111)

inline std::vector<double> example1_x_max() {
    return {kV11, kV32, kV13, 1.0, 1.0, kV16};
}

// Reference 4-decimal candidate vectors, one per assignment over the
// simplified admissible sets. Comparisons are order-insensitive.
inline std::vector<std::vector<double>> example1_candidates_4dp() {
    return {
        {0.7266, 0.6312, 0, 1, 1, 0},      {0, 0.6312, 0.7336, 1, 1, 0},
        {0, 0.6312, 0, 1, 1, 0.7675},      {0.7266, 0, 0, 1, 1, 0},
        {0, 0, 0.7336, 1, 1, 0},           {0, 0, 0, 1, 1, 0.7675},
        {0.7266, 0.6312, 0, 0, 1, 0},      {0, 0.6312, 0.7336, 0, 1, 0},
        {0, 0.6312, 0, 0, 1, 0.7675},      {0.7266, 0, 0, 0, 1, 0},
        {0, 0, 0.7336, 0, 1, 0},           {0, 0, 0, 0, 1, 0.7675},
    };
}

inline std::vector<std::vector<double>> example1_minimals_4dp() {
    return {
        {0.7266, 0, 0, 0, 1, 0},
        {0, 0, 0.7336, 0, 1, 0},
        {0, 0, 0, 0, 1, 0.7675},
    };
}

// Zero pattern of the simplified reference matrix: true = entry kept.
inline std::vector<std::vector<bool>> example1_kept_pattern() {
    return {
        {true, false, true, false, false, true},
        {false, false, false, false, true, false},
        {false, true, false, false, true, false},
        {false, false, false, true, true, false},
    };
}

inline bool near(double x, double y, double tol) {
    return std::abs(x - y) <= tol;
}

inline bool near_all(const std::vector<double>& x, const std::vector<double>& y,
                     double tol) {
    if (x.size() != y.size()) {
        return false;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!near(x[j], y[j], tol)) {
            return false;
        }
    }
    return true;
}

// Set equality under `tol`, order-insensitive.
inline bool same_vectors(std::vector<std::vector<double>> xs,
                         std::vector<std::vector<double>> ys, double tol) {
    if (xs.size() != ys.size()) {
        return false;
    }
    std::vector<bool> used(ys.size(), false);
    for (const auto& x : xs) {
        bool found = false;
        for (std::size_t k = 0; k < ys.size() && !found; ++k) {
            if (!used[k] && near_all(x, ys[k], tol)) {
                used[k] = true;
                found = true;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

}  // namespace fixtures
