#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstddef>
#include <vector>

#include "fixtures.hpp"
#include "fredombi/oracle.hpp"
#include "fredombi/resolver.hpp"

using namespace fredombi;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("brute force agrees on the reference system") {
    const auto inst = fixtures::example1();
    const auto truth = oracle::full_enumeration(inst);
    const auto sol = resolve(inst);
    REQUIRE(truth.size() == sol.minimals.size());
    for (std::size_t k = 0; k < truth.size(); ++k) {
        CHECK(approx_equal(truth[k], sol.minimals[k], 1e-7));
    }
}

TEST_CASE("feasible candidates are feasible and capped by the greatest solution") {
    const auto inst = fixtures::example1();
    const auto x_max = max_solution(inst);
    const auto candidates = oracle::feasible_candidates(inst);
    // the raw assignment space is wider than the simplified one the solver
    // enumerates, so it covers at least the 12 reference candidates
    CHECK(candidates.size() >= 12);
    for (const auto& x : candidates) {
        CHECK(check_feasible(inst, x));
        CHECK(componentwise_leq(x, x_max, inst.epsilon));
    }
    std::vector<std::vector<double>> got;
    for (const auto& x : candidates) {
        got.push_back(to_doubles(x));
    }
    for (const auto& expected : fixtures::example1_candidates_4dp()) {
        bool found = false;
        for (const auto& x : got) {
            found = found || fixtures::near_all(x, expected, 5e-4);
        }
        CHECK(found);
    }
}

TEST_CASE("infeasible instances yield no candidates") {
    const Instance inst{
        to_units(std::vector<std::vector<double>>{{1.0, 0.0}, {1.0, 0.0}}),
        to_units(std::vector<double>{0.3, 0.7}), TNormParam{2.0}};
    CHECK(oracle::feasible_candidates(inst).empty());
    CHECK(oracle::full_enumeration(inst).empty());
}

TEST_CASE("generation is deterministic") {
    const auto g1 = oracle::generate(42, 3, 4, TNormParam{2.0});
    const auto g2 = oracle::generate(42, 3, 4, TNormParam{2.0});
    CHECK(g1.seed == 42);
    CHECK(approx_equal(g1.witness, g2.witness, 0.0));
    CHECK(approx_equal(g1.inst.b, g2.inst.b, 0.0));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(approx_equal(g1.inst.A[i], g2.inst.A[i], 0.0));
    }
    // different seeds draw different data
    const auto g3 = oracle::generate(43, 3, 4, TNormParam{2.0});
    CHECK_FALSE(approx_equal(g1.inst.b, g3.inst.b, 0.0));
}

TEST_CASE("generated instances carry a working witness") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto gen = oracle::generate(seed, 3, 3, TNormParam{5.0});
        CHECK(check_feasible(gen.inst, gen.witness));
        const auto sol = resolve(gen.inst);
        CHECK(sol.feasible);
        CHECK(componentwise_leq(gen.witness, sol.x_max, gen.inst.epsilon));
    }
}

TEST_CASE("zero-target rows are forced") {
    const auto gen = oracle::generate(7, 3, 3, TNormParam{2.0}, 1);
    CHECK(gen.inst.b[0].value() == 0.0);
    CHECK(check_feasible(gen.inst, gen.witness));
    // the witness vanishes wherever row 0 has support
    for (std::size_t j = 0; j < 3; ++j) {
        if (gen.inst.A[0][j].value() > gen.inst.epsilon) {
            CHECK(gen.witness[j].value() == 0.0);
        }
    }
}

TEST_CASE("candidate cap propagates") {
    const auto inst = fixtures::example1();
    CHECK_THROWS_AS(oracle::feasible_candidates(inst, 3), CandidateCapExceeded);
}

TEST_CASE("small corpus sweep passes") {
    oracle::CorpusConfig config;
    config.runs = 100;
    config.base_seed = 987654;
    const auto result = oracle::run_corpus(config);
    CHECK(result.runs == 100);
    CHECK(result.failures == 0);
    CHECK(result.infeasible_reports == 0);
    CHECK(result.oracle_mismatches == 0);
    CHECK(result.containment_violations == 0);
    CHECK(result.witness_box_misses == 0);
    CHECK(result.box_sample_failures == 0);
    CHECK(result.optimality_violations == 0);
    CHECK(result.zero_row_instances > 0);
    CHECK(result.passed());
    CHECK(result.messages.empty());
}

TEST_SUITE_END();
