#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fredombi/instance.hpp"
#include "fredombi/optimizer.hpp"
#include "fredombi/resolver.hpp"

namespace fredombi::io {

/// Raised for malformed or invalid instance documents; the message carries
/// the location (line:column) or the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses an instance document: a JSON object with `lambda` (number > 0),
/// `A` (non-empty rectangular array of arrays, entries in [0,1]), `b`
/// (array of length m, entries in [0,1]) and optional `epsilon`. Unknown
/// fields (e.g. `witness`, `seed`) are ignored.
Instance parse_instance(const std::string& text);

/// Serializes an instance document. Numbers are printed with 17 significant
/// digits so parsing the output reproduces the instance bit for bit.
/// `witness`/`seed`, when given, are embedded as extra fields.
std::string serialize_instance(const Instance& inst,
                               const UnitVector* witness = nullptr,
                               const std::uint64_t* seed = nullptr);

/// Flat view of a solve run for reporting. When `feasible` is false all
/// solution fields are empty/absent.
struct SolveReport {
    bool feasible = false;
    double lambda = 0.0;
    double epsilon = 0.0;
    std::vector<double> x_max;
    std::vector<std::vector<double>> simplified_matrix;
    std::uint64_t candidate_count = 0;
    std::vector<std::vector<double>> minimal_solutions;
    std::optional<double> optimal_value;
    std::vector<std::vector<double>> optimal_points;
    std::size_t discarded_candidates = 0;
};

SolveReport make_report(const Instance& inst, const SolutionSet& solutions,
                        const OptimizationResult* optimum);

/// Deterministic JSON rendering (sorted keys, lossless numbers).
std::string to_json(const SolveReport& report);

/// Human-readable rendering; vectors printed with 6 decimal places.
std::string to_table(const SolveReport& report);

}  // namespace fredombi::io
