#include "fredombi/resolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace fredombi {

namespace {

bool is_zero_target(UnitValue b, double eps) { return b.value() <= eps; }

// Residual values aligned with the admissible sets of the rows that carry a
// positive target. V[i][k] pairs with sets[i][k].
std::vector<std::vector<UnitValue>> residual_table(const Instance& inst,
                                                   const IndexSets& sets) {
    std::vector<std::vector<UnitValue>> table(inst.rows());
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        if (is_zero_target(inst.b[i], inst.epsilon)) {
            continue;
        }
        table[i].reserve(sets.sets[i].size());
        for (std::size_t j : sets.sets[i]) {
            table[i].push_back(residual(inst.b[i], inst.A[i][j], inst.p,
                                        inst.epsilon));
        }
    }
    return table;
}

bool lex_less_candidate(const Candidate& a, const Candidate& b) {
    if (lex_less(a.x, b.x)) {
        return true;
    }
    if (lex_less(b.x, a.x)) {
        return false;
    }
    return a.origin < b.origin;
}

}  // namespace

CandidateCapExceeded::CandidateCapExceeded(std::uint64_t count_, std::uint64_t cap_)
    : std::runtime_error("candidate space of size " + std::to_string(count_) +
                         " exceeds the cap of " + std::to_string(cap_)),
      count(count_),
      cap(cap_) {}

EmptyAdmissibleSet::EmptyAdmissibleSet(std::size_t row_)
    : std::runtime_error("row " + std::to_string(row_) +
                         " has no admissible column; the system is infeasible"),
      row(row_) {}

bool componentwise_leq(const UnitVector& x, const UnitVector& y, double eps) {
    if (x.size() != y.size()) {
        return false;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j].value() > y[j].value() + eps) {
            return false;
        }
    }
    return true;
}

bool approx_equal(const UnitVector& x, const UnitVector& y, double eps) {
    if (x.size() != y.size()) {
        return false;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (std::abs(x[j].value() - y[j].value()) > eps) {
            return false;
        }
    }
    return true;
}

bool lex_less(const UnitVector& x, const UnitVector& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

IndexSets admissible_sets(const Instance& inst) {
    return admissible_sets(inst, inst.A, false);
}

IndexSets admissible_sets(const Instance& inst, const Matrix& m,
                          bool from_simplified) {
    if (m.size() != inst.rows()) {
        throw std::invalid_argument("admissible_sets: matrix shape mismatch");
    }
    IndexSets out;
    out.from_simplified = from_simplified;
    out.sets.resize(inst.rows());
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        if (m[i].size() != inst.cols()) {
            throw std::invalid_argument("admissible_sets: matrix shape mismatch");
        }
        for (std::size_t j = 0; j < inst.cols(); ++j) {
            if (m[i][j].value() >= inst.b[i].value() - inst.epsilon) {
                out.sets[i].push_back(j);
            }
        }
    }
    return out;
}

UnitVector max_solution(const Instance& inst) {
    const double eps = inst.epsilon;
    UnitVector x_max(inst.cols(), UnitValue{1.0});
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        const UnitValue bi = inst.b[i];
        for (std::size_t j = 0; j < inst.cols(); ++j) {
            const UnitValue aij = inst.A[i][j];
            UnitValue row_bound{1.0};
            if (aij.value() >= bi.value() - eps) {
                if (!is_zero_target(bi, eps)) {
                    row_bound = residual(bi, aij, inst.p, eps);
                } else if (aij.value() > eps) {
                    // zero target with a positive entry forces the column to 0
                    row_bound = UnitValue{0.0};
                }
            }
            x_max[j] = std::min(x_max[j], row_bound);
        }
    }
    return x_max;
}

bool check_feasible(const Instance& inst, const UnitVector& x) {
    if (x.size() != inst.cols()) {
        throw std::invalid_argument("check_feasible: point has length " +
                                    std::to_string(x.size()) + ", expected " +
                                    std::to_string(inst.cols()));
    }
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        const double lhs = compose_row(inst.A[i], x, inst.p).value();
        if (std::abs(lhs - inst.b[i].value()) > inst.epsilon) {
            return false;
        }
    }
    return true;
}

Matrix simplify(const Instance& inst) {
    const double eps = inst.epsilon;
    const std::size_t m = inst.rows();
    const std::size_t n = inst.cols();
    const UnitVector x_max = max_solution(inst);

    // columns carrying a positive entry in some zero-target row (rule III)
    std::vector<bool> blocked(n, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (!is_zero_target(inst.b[i], eps)) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (inst.A[i][j].value() > eps) {
                blocked[j] = true;
            }
        }
    }

    Matrix out = inst.A;
    for (std::size_t i = 0; i < m; ++i) {
        const bool zero_target = is_zero_target(inst.b[i], eps);
        for (std::size_t j = 0; j < n; ++j) {
            if (inst.A[i][j].value() < inst.b[i].value() - eps) {
                out[i][j] = UnitValue{0.0};  // (I): too small to ever attain
            } else if (!zero_target) {
                if (blocked[j]) {
                    out[i][j] = UnitValue{0.0};  // (III): column pinned to 0
                } else if (dombi(inst.A[i][j], x_max[j], inst.p).value() <
                           inst.b[i].value() - eps) {
                    // (II): another row pins the column below what this row
                    // needs. Tested on composed values, not residuals: that
                    // is the same predicate check_feasible applies, so an
                    // entry is only dropped when choosing it could never
                    // pass the feasibility recheck. Ties keep the entry.
                    out[i][j] = UnitValue{0.0};
                }
            }
        }
    }
    return out;
}

std::uint64_t count_assignments(const Instance& inst, const IndexSets& sets) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        if (is_zero_target(inst.b[i], inst.epsilon)) {
            continue;
        }
        const std::uint64_t size = sets.sets[i].size();
        if (size == 0) {
            throw EmptyAdmissibleSet(i);
        }
        if (count > std::numeric_limits<std::uint64_t>::max() / size) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        count *= size;
    }
    return count;
}

std::vector<Candidate> enumerate_candidates(const Instance& inst,
                                            std::uint64_t cap) {
    return enumerate_candidates(
        inst, admissible_sets(inst, simplify(inst), true), cap);
}

std::vector<Candidate> enumerate_candidates(const Instance& inst,
                                            const IndexSets& sets,
                                            std::uint64_t cap) {
    const std::size_t m = inst.rows();
    const std::uint64_t count = count_assignments(inst, sets);
    if (count > cap) {
        throw CandidateCapExceeded(count, cap);
    }

    std::vector<std::size_t> active;  // rows contributing a choice
    for (std::size_t i = 0; i < m; ++i) {
        if (!is_zero_target(inst.b[i], inst.epsilon)) {
            active.push_back(i);
        }
    }
    const auto residuals = residual_table(inst, sets);
    const UnitVector x_max = max_solution(inst);

    std::vector<Candidate> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t index = 0; index < count; ++index) {
        Candidate cand;
        cand.x.assign(inst.cols(), UnitValue{});
        cand.origin.assign(m, kNoChoice);
        // mixed-radix decode: one digit per active row
        std::uint64_t rest = index;
        for (std::size_t i : active) {
            const auto& columns = sets.sets[i];
            const std::size_t digit = static_cast<std::size_t>(rest % columns.size());
            rest /= columns.size();
            const std::size_t j = columns[digit];
            cand.origin[i] = j;
            cand.x[j] = std::max(cand.x[j], residuals[i][digit]);
        }
        // Candidates never exceed the maximum solution in exact arithmetic;
        // capping restores that invariant under rounding, where an
        // ill-conditioned residual can land above a tighter row's bound.
        for (std::size_t j = 0; j < inst.cols(); ++j) {
            cand.x[j] = std::min(cand.x[j], x_max[j]);
        }
        out.push_back(std::move(cand));
    }

    std::sort(out.begin(), out.end(), lex_less_candidate);
    std::vector<Candidate> dedup;
    for (auto& cand : out) {
        if (dedup.empty() || !approx_equal(dedup.back().x, cand.x, inst.epsilon)) {
            dedup.push_back(std::move(cand));
        }
    }
    return dedup;
}

std::vector<UnitVector> minimal_solutions(const std::vector<Candidate>& candidates,
                                          double eps) {
    std::vector<UnitVector> xs;
    xs.reserve(candidates.size());
    for (const auto& cand : candidates) {
        xs.push_back(cand.x);
    }
    std::sort(xs.begin(), xs.end(), lex_less);
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [eps](const UnitVector& a, const UnitVector& b) {
                             return approx_equal(a, b, eps);
                         }),
             xs.end());

    // All pairs: within tolerance a dominating vector need not sort earlier.
    // Mutual domination collapses to approximate equality, so at most one
    // direction can drop a vector.
    std::vector<UnitVector> out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        bool dominated = false;
        for (std::size_t other = 0; other < xs.size() && !dominated; ++other) {
            dominated = other != k &&
                        componentwise_leq(xs[other], xs[k], eps) &&
                        !approx_equal(xs[other], xs[k], eps);
        }
        if (!dominated) {
            out.push_back(xs[k]);
        }
    }
    return out;
}

SolutionSet resolve(const Instance& inst, std::uint64_t cap) {
    SolutionSet out;
    out.x_max = max_solution(inst);
    out.feasible = check_feasible(inst, out.x_max);
    if (!out.feasible) {
        return out;
    }

    out.simplified = simplify(inst);
    const IndexSets sets = admissible_sets(inst, out.simplified, true);
    out.candidate_count = count_assignments(inst, sets);

    std::vector<Candidate> candidates = enumerate_candidates(inst, sets, cap);
    // Every enumerated candidate should solve the system; the recheck guards
    // against tolerance artifacts, and anything dropped is reported.
    std::vector<Candidate> confirmed;
    confirmed.reserve(candidates.size());
    for (auto& cand : candidates) {
        if (check_feasible(inst, cand.x)) {
            confirmed.push_back(std::move(cand));
        } else {
            ++out.discarded_candidates;
        }
    }

    out.minimals = minimal_solutions(confirmed, inst.epsilon);
    out.boxes.reserve(out.minimals.size());
    for (const auto& minimal : out.minimals) {
        out.boxes.push_back(Box{minimal, out.x_max});
    }
    return out;
}

}  // namespace fredombi
