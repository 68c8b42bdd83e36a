#include "fredombi/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fredombi {

Instance::Instance(Matrix a, UnitVector rhs, TNormParam param, double eps)
    : A(std::move(a)), b(std::move(rhs)), p(param), epsilon(eps) {
    if (A.empty() || A.front().empty()) {
        throw std::invalid_argument("Instance: A must be at least 1x1");
    }
    const std::size_t n = A.front().size();
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != n) {
            throw std::invalid_argument("Instance: ragged matrix, row " +
                                        std::to_string(i) + " has " +
                                        std::to_string(A[i].size()) +
                                        " entries, expected " + std::to_string(n));
        }
    }
    if (b.size() != A.size()) {
        throw std::invalid_argument("Instance: |b| = " + std::to_string(b.size()) +
                                    " does not match m = " +
                                    std::to_string(A.size()));
    }
    if (!(std::isfinite(epsilon) && epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("Instance: epsilon must be in (0,1)");
    }
}

}  // namespace fredombi
