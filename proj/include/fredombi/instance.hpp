#pragma once

#include <cstddef>

#include "fredombi/tnorm.hpp"

namespace fredombi {

/// Problem data for the relational system A phi x = b: the fuzzy matrix A,
/// the right-hand side b, the t-norm parameter and the comparison tolerance
/// shared by every solver operation.
struct Instance {
    Matrix A;
    UnitVector b;
    TNormParam p;
    double epsilon;

    /// Validates shape (m,n >= 1, rectangular A, |b| == m) and the tolerance
    /// (finite, 0 < epsilon < 1). Entry ranges are enforced by UnitValue.
    Instance(Matrix a, UnitVector rhs, TNormParam param,
             double eps = kDefaultEpsilon);

    [[nodiscard]] std::size_t rows() const noexcept { return A.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return A.front().size(); }

    friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace fredombi
