#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fredombi/instance.hpp"
#include "fredombi/resolver.hpp"

namespace fredombi::oracle {

/// The brute-force path is for desk-scale instances only.
inline constexpr std::uint64_t kDefaultOracleCap = 100'000;

/// Instance built around a known feasible point: b is the composition of A
/// with the witness, so the witness solves the system by construction.
struct GeneratedInstance {
    Instance inst;
    UnitVector witness;
    std::uint64_t seed;
};

/// Every feasible candidate over the UNSIMPLIFIED admissible sets,
/// deduplicated and sorted lexicographically. Infeasible instances yield an
/// empty list. Throws CandidateCapExceeded past `cap`.
std::vector<UnitVector> feasible_candidates(const Instance& inst,
                                            std::uint64_t cap = kDefaultOracleCap);

/// Ground truth for the solver: the pairwise-minimal subset of
/// feasible_candidates(). Shares only the t-norm kernel with the solver
/// path; admissibility, feasibility filtering and minimality are recomputed
/// here from the defining conditions.
std::vector<UnitVector> full_enumeration(const Instance& inst,
                                         std::uint64_t cap = kDefaultOracleCap);

/// Deterministic random instance with a feasibility witness. Entries mix
/// exact zeros, exact ones and interior values; the first `zero_b_rows` rows
/// are forced to b[i] = 0 by zeroing the witness on their support.
GeneratedInstance generate(std::uint64_t seed, std::size_t m, std::size_t n,
                           const TNormParam& p, std::size_t zero_b_rows = 0);

struct CorpusConfig {
    std::size_t runs = 1000;
    std::size_t max_m = 4;
    std::size_t max_n = 4;
    std::uint64_t base_seed = 20240601;
    std::vector<double> lambdas = {0.5, 1.0, 2.0, 5.0, 20.0};
    std::size_t box_samples = 100;  // feasible points sampled per instance
    std::size_t max_messages = 25;
};

/// Outcome of one corpus sweep. Each generated instance is resolved and
/// cross-checked against the brute-force path; `failures` counts instances
/// with at least one violated check.
struct CorpusResult {
    std::size_t runs = 0;
    std::size_t failures = 0;
    std::size_t infeasible_reports = 0;      // generated instance reported infeasible
    std::size_t oracle_mismatches = 0;       // minimal sets differ between paths
    std::size_t containment_violations = 0;  // a brute-force candidate below every solver minimal
    std::size_t witness_box_misses = 0;      // witness outside all returned boxes
    std::size_t box_sample_failures = 0;     // sampled box point infeasible
    std::size_t optimality_violations = 0;   // objective below the reported optimum
    std::size_t zero_row_instances = 0;
    std::vector<std::string> messages;       // first max_messages failure details

    [[nodiscard]] bool passed() const noexcept { return failures == 0; }
};

/// Runs the seeded corpus: generate, resolve, compare against
/// full_enumeration, check the witness lies in a returned box, sample points
/// from the boxes and verify feasibility plus the optimality lower bound.
CorpusResult run_corpus(const CorpusConfig& config);

}  // namespace fredombi::oracle
