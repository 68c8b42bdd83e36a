#include "fredombi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "fredombi/optimizer.hpp"

namespace fredombi::oracle {

namespace {

// 53-bit uniform in [0, 1); fixed draw count keeps streams reproducible.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Mixes exact zeros and ones with interior values away from the endpoints.
UnitValue draw_entry(std::mt19937_64& rng) {
    const double u = uniform01(rng);
    if (u < 0.15) {
        return UnitValue{0.0};
    }
    if (u < 0.25) {
        return UnitValue{1.0};
    }
    const double v = (u - 0.25) / 0.75;
    return UnitValue{0.02 + 0.96 * v};
}

bool row_satisfied(const Instance& inst, std::size_t i, const UnitVector& x) {
    return std::abs(compose_row(inst.A[i], x, inst.p).value() -
                    inst.b[i].value()) <= inst.epsilon;
}

bool satisfies(const Instance& inst, const UnitVector& x) {
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        if (!row_satisfied(inst, i, x)) {
            return false;
        }
    }
    return true;
}

// Componentwise greatest candidate, recomputed here from its defining
// branches rather than taken from the solver.
UnitVector greatest_candidate(const Instance& inst) {
    const double eps = inst.epsilon;
    UnitVector cap(inst.cols(), UnitValue{1.0});
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        for (std::size_t j = 0; j < inst.cols(); ++j) {
            UnitValue bound{1.0};
            if (inst.A[i][j].value() >= inst.b[i].value() - eps) {
                if (inst.b[i].value() > eps) {
                    bound = residual(inst.b[i], inst.A[i][j], inst.p, eps);
                } else if (inst.A[i][j].value() > eps) {
                    bound = UnitValue{0.0};
                }
            }
            cap[j] = std::min(cap[j], bound);
        }
    }
    return cap;
}

}  // namespace

std::vector<UnitVector> feasible_candidates(const Instance& inst,
                                            std::uint64_t cap) {
    const double eps = inst.epsilon;

    // Admissibility straight from the defining inequality, no simplification.
    std::vector<std::size_t> active;
    std::vector<std::vector<std::size_t>> choices;
    std::vector<std::vector<UnitValue>> values;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        if (inst.b[i].value() <= eps) {
            continue;
        }
        std::vector<std::size_t> cols;
        std::vector<UnitValue> vals;
        for (std::size_t j = 0; j < inst.cols(); ++j) {
            if (inst.A[i][j].value() >= inst.b[i].value() - eps) {
                cols.push_back(j);
                vals.push_back(residual(inst.b[i], inst.A[i][j], inst.p, eps));
            }
        }
        if (cols.empty()) {
            return {};
        }
        if (count > std::numeric_limits<std::uint64_t>::max() / cols.size()) {
            throw CandidateCapExceeded(std::numeric_limits<std::uint64_t>::max(),
                                       cap);
        }
        count *= cols.size();
        active.push_back(i);
        choices.push_back(std::move(cols));
        values.push_back(std::move(vals));
    }
    if (count > cap) {
        throw CandidateCapExceeded(count, cap);
    }

    const UnitVector cap_vec = greatest_candidate(inst);
    std::vector<UnitVector> out;
    for (std::uint64_t index = 0; index < count; ++index) {
        UnitVector x(inst.cols(), UnitValue{});
        std::uint64_t rest = index;
        for (std::size_t r = 0; r < active.size(); ++r) {
            const std::size_t digit =
                static_cast<std::size_t>(rest % choices[r].size());
            rest /= choices[r].size();
            const std::size_t j = choices[r][digit];
            x[j] = std::max(x[j], values[r][digit]);
        }
        // capped at the greatest candidate; an identity in exact arithmetic
        for (std::size_t j = 0; j < inst.cols(); ++j) {
            x[j] = std::min(x[j], cap_vec[j]);
        }
        if (satisfies(inst, x)) {
            out.push_back(std::move(x));
        }
    }

    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end(),
                          [eps](const UnitVector& a, const UnitVector& b) {
                              return approx_equal(a, b, eps);
                          }),
              out.end());
    return out;
}

std::vector<UnitVector> full_enumeration(const Instance& inst,
                                         std::uint64_t cap) {
    const std::vector<UnitVector> candidates = feasible_candidates(inst, cap);
    const double eps = inst.epsilon;

    std::vector<UnitVector> out;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        bool dominated = false;
        for (std::size_t other = 0; other < candidates.size() && !dominated;
             ++other) {
            dominated = other != k &&
                        componentwise_leq(candidates[other], candidates[k], eps) &&
                        !approx_equal(candidates[other], candidates[k], eps);
        }
        if (!dominated) {
            out.push_back(candidates[k]);
        }
    }
    return out;
}

GeneratedInstance generate(std::uint64_t seed, std::size_t m, std::size_t n,
                           const TNormParam& p, std::size_t zero_b_rows) {
    if (m == 0 || n == 0) {
        throw std::invalid_argument("generate: m and n must be positive");
    }
    std::mt19937_64 rng(seed);
    const double eps = kDefaultEpsilon;

    // Rounding the targets can strand the witness: at steep lambda a product
    // may plateau onto an entry, leaving a row the witness only satisfies
    // through that rounding while the residuals tell a different story. Such
    // near-tie instances are undecidable at double precision, so they are
    // redrawn (deterministically, from the same stream). Exact ties survive:
    // a witness component of 1 yields b_i == a_ij with a clean residual.
    std::optional<GeneratedInstance> out;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix a(m);
        for (std::size_t i = 0; i < m; ++i) {
            a[i].reserve(n);
            for (std::size_t j = 0; j < n; ++j) {
                a[i].push_back(draw_entry(rng));
            }
        }
        UnitVector witness;
        witness.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            witness.push_back(draw_entry(rng));
        }
        // Zeroing the witness on a row's support drives that target to 0.
        for (std::size_t i = 0; i < std::min(zero_b_rows, m); ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (a[i][j].value() > 0.0) {
                    witness[j] = UnitValue{0.0};
                }
            }
        }
        UnitVector b;
        b.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            b.push_back(compose_row(a[i], witness, p));
        }
        Instance inst{std::move(a), std::move(b), p};

        // Well-posed means the witness sits inside the candidate structure:
        // below the greatest candidate, and every positive target reachable
        // through a residual at some witness component.
        const UnitVector cap = greatest_candidate(inst);
        bool well_posed = componentwise_leq(witness, cap, eps);
        for (std::size_t i = 0; well_posed && i < m; ++i) {
            if (inst.b[i].value() <= eps) {
                continue;
            }
            bool attributed = false;
            for (std::size_t j = 0; j < n && !attributed; ++j) {
                if (inst.A[i][j].value() >= inst.b[i].value() - eps) {
                    attributed = residual(inst.b[i], inst.A[i][j], p, eps)
                                     .value() <= witness[j].value() + eps;
                }
            }
            well_posed = attributed;
        }

        out.emplace(GeneratedInstance{std::move(inst), std::move(witness), seed});
        if (well_posed) {
            break;
        }
    }
    return std::move(*out);
}

CorpusResult run_corpus(const CorpusConfig& config) {
    CorpusResult result;
    result.runs = config.runs;

    const auto note = [&](std::uint64_t seed, const std::string& text) {
        if (result.messages.size() < config.max_messages) {
            std::ostringstream msg;
            msg << "seed " << seed << ": " << text;
            result.messages.push_back(msg.str());
        }
    };

    for (std::size_t r = 0; r < config.runs; ++r) {
        const std::uint64_t seed = config.base_seed + r;
        std::mt19937_64 shape_rng(seed ^ 0x9e3779b97f4a7c15ULL);
        const std::size_t m = 1 + shape_rng() % config.max_m;
        const std::size_t n = 1 + shape_rng() % config.max_n;
        const double lambda =
            config.lambdas[shape_rng() % config.lambdas.size()];
        const std::size_t zero_rows = (r % 4 == 3) ? 1 : 0;
        if (zero_rows > 0) {
            ++result.zero_row_instances;
        }

        bool failed = false;
        try {
            const GeneratedInstance gen =
                generate(seed, m, n, TNormParam{lambda}, zero_rows);
            const Instance& inst = gen.inst;

            const SolutionSet solved = resolve(inst);
            if (!solved.feasible) {
                ++result.infeasible_reports;
                note(seed, "instance with a known witness reported infeasible");
                failed = true;
            } else {
                const std::vector<UnitVector> truth = full_enumeration(inst);
                bool match = truth.size() == solved.minimals.size();
                for (std::size_t k = 0; match && k < truth.size(); ++k) {
                    match = approx_equal(truth[k], solved.minimals[k],
                                         inst.epsilon);
                }
                if (!match) {
                    ++result.oracle_mismatches;
                    std::ostringstream msg;
                    msg << "minimal sets differ: brute force " << truth.size()
                        << ", solver " << solved.minimals.size();
                    note(seed, msg.str());
                    failed = true;
                }

                const auto in_some_box = [&](const UnitVector& x) {
                    for (const Box& box : solved.boxes) {
                        if (componentwise_leq(box.lower, x, inst.epsilon) &&
                            componentwise_leq(x, box.upper, inst.epsilon)) {
                            return true;
                        }
                    }
                    return false;
                };

                for (const UnitVector& cand : feasible_candidates(inst)) {
                    if (!in_some_box(cand)) {
                        ++result.containment_violations;
                        note(seed, "feasible candidate outside every box");
                        failed = true;
                        break;
                    }
                }
                if (!in_some_box(gen.witness)) {
                    ++result.witness_box_misses;
                    note(seed, "witness outside every box");
                    failed = true;
                }

                const OptimizationResult opt = optimize(solved, inst.epsilon);
                std::mt19937_64 sample_rng(seed ^ 0xd1b54a32d192ed03ULL);
                for (std::size_t s = 0;
                     s < config.box_samples && !solved.boxes.empty(); ++s) {
                    const Box& box = solved.boxes[s % solved.boxes.size()];
                    UnitVector point;
                    point.reserve(inst.cols());
                    for (std::size_t j = 0; j < inst.cols(); ++j) {
                        const double lo = box.lower[j].value();
                        const double hi = box.upper[j].value();
                        point.push_back(
                            UnitValue{lo + uniform01(sample_rng) * (hi - lo)});
                    }
                    if (!check_feasible(inst, point)) {
                        ++result.box_sample_failures;
                        note(seed, "sampled box point is not a solution");
                        failed = true;
                        break;
                    }
                    if (opt.optimal_value.value() >
                        objective(point).value() + 1e-9) {
                        ++result.optimality_violations;
                        note(seed, "sampled point beats the reported optimum");
                        failed = true;
                        break;
                    }
                }
            }
        } catch (const std::exception& e) {
            note(seed, std::string("unexpected error: ") + e.what());
            failed = true;
        }

        if (failed) {
            ++result.failures;
        }
    }
    return result;
}

}  // namespace fredombi::oracle
