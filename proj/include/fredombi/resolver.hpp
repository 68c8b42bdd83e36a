#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fredombi/instance.hpp"

namespace fredombi {

/// Hard ceiling on the number of assignment vectors enumerated per solve;
/// the candidate space grows as the product of the per-row set sizes.
inline constexpr std::uint64_t kDefaultCandidateCap = 1'000'000;

/// Per-row admissible column sets: j is admissible for row i when the
/// generating matrix satisfies M[i][j] >= b[i] - eps. `from_simplified`
/// records whether the generating matrix was A or its simplification.
struct IndexSets {
    std::vector<std::vector<std::size_t>> sets;  // ascending per row
    bool from_simplified = false;
};

/// Sentinel for rows with b[i] ~ 0, which contribute no column choice.
inline constexpr std::size_t kNoChoice = std::numeric_limits<std::size_t>::max();

/// One admissible column per row (kNoChoice where b[i] ~ 0).
using Assignment = std::vector<std::size_t>;

/// A candidate minimal solution together with the assignment producing it.
struct Candidate {
    UnitVector x;
    Assignment origin;
};

/// Axis-aligned interval of feasible points, lower <= x <= upper.
struct Box {
    UnitVector lower;
    UnitVector upper;
};

/// Structure of the feasible set: the maximum solution, the minimal
/// solutions, and the feasible region as a union of boxes [minimal, x_max].
/// `x_max` and `simplified` are filled even when infeasible is reported;
/// the solution lists stay empty in that case.
struct SolutionSet {
    bool feasible = false;
    UnitVector x_max;
    std::vector<UnitVector> minimals;
    std::vector<Box> boxes;
    Matrix simplified;
    std::uint64_t candidate_count = 0;      // raw assignment-space size
    std::size_t discarded_candidates = 0;   // candidates failing the feasibility recheck
};

class CandidateCapExceeded : public std::runtime_error {
public:
    CandidateCapExceeded(std::uint64_t count, std::uint64_t cap);
    std::uint64_t count;
    std::uint64_t cap;
};

/// Thrown when a row with b[i] > eps has no admissible column; such a row can
/// never reach its target, so the system is infeasible.
class EmptyAdmissibleSet : public std::runtime_error {
public:
    explicit EmptyAdmissibleSet(std::size_t row);
    std::size_t row;
};

// Tolerance-aware vector comparisons used across the solver and its tests.
bool componentwise_leq(const UnitVector& x, const UnitVector& y, double eps);
bool approx_equal(const UnitVector& x, const UnitVector& y, double eps);
bool lex_less(const UnitVector& x, const UnitVector& y);

/// Admissible sets of the instance matrix A.
IndexSets admissible_sets(const Instance& inst);

/// Admissible sets of an alternative matrix M (typically simplify()'s
/// output) against the instance right-hand side.
IndexSets admissible_sets(const Instance& inst, const Matrix& m,
                          bool from_simplified);

/// The componentwise-greatest solution candidate: row-wise residual vectors
/// (with the zero/one special cases for b[i] ~ 0) combined by a
/// componentwise minimum. Always well defined; feasibility is a separate check.
UnitVector max_solution(const Instance& inst);

/// True when every row satisfies |compose_row(A_i, x) - b_i| <= eps.
bool check_feasible(const Instance& inst, const UnitVector& x);

/// Simplified matrix: A with entries zeroed that provably cannot take part
/// in a minimal solution. Three rules, all evaluated on the original data:
///   (I)   columns below the row target (j not admissible);
///   (II)  entries that compose with the maximum solution to strictly less
///         than the row target: some other row caps the column below what
///         this row needs. Ties keep the entry;
///   (III) columns blocked by a b ~ 0 row with a positive entry.
Matrix simplify(const Instance& inst);

/// Size of the assignment space: product of the set sizes over rows with
/// b[i] > eps (saturating at uint64 max). Rows with b[i] ~ 0 contribute no
/// factor. Throws EmptyAdmissibleSet if an active row has no column.
std::uint64_t count_assignments(const Instance& inst, const IndexSets& sets);

/// All candidate solutions induced by assignments over the simplified
/// admissible sets, deduplicated (tolerance eps) and sorted
/// lexicographically. Throws CandidateCapExceeded when the assignment space
/// is larger than `cap`, EmptyAdmissibleSet when infeasibility is evident.
std::vector<Candidate> enumerate_candidates(const Instance& inst,
                                            std::uint64_t cap = kDefaultCandidateCap);
std::vector<Candidate> enumerate_candidates(const Instance& inst,
                                            const IndexSets& sets,
                                            std::uint64_t cap);

/// The pairwise-minimal subset of (deduplicated) candidates: x survives when
/// no other candidate is componentwise <= x. Output sorted lexicographically.
std::vector<UnitVector> minimal_solutions(const std::vector<Candidate>& candidates,
                                          double eps);

/// Full resolution: maximum solution, feasibility, simplification, candidate
/// enumeration, feasibility recheck of every candidate, minimal extraction,
/// and the box decomposition of the feasible set.
SolutionSet resolve(const Instance& inst,
                    std::uint64_t cap = kDefaultCandidateCap);

}  // namespace fredombi
