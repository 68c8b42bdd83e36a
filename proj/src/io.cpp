#include "fredombi/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace fredombi::io {

namespace {

// 17 significant digits round-trip every double exactly.
std::string number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void emit_vector(std::ostream& os, const std::vector<double>& v) {
    os << '[';
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j > 0) {
            os << ", ";
        }
        os << number(v[j]);
    }
    os << ']';
}

void emit_matrix(std::ostream& os, const std::vector<std::vector<double>>& m) {
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        emit_vector(os, m[i]);
    }
    os << ']';
}

double require_unit(const nlohmann::json& node, const std::string& where) {
    if (!node.is_number()) {
        throw ParseError(where + ": expected a number");
    }
    const double v = node.get<double>();
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ParseError(where + ": entry out of [0,1]");
    }
    return v;
}

std::string table_vector(const std::vector<double>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j > 0) {
            os << ", ";
        }
        os << fixed6(v[j]);
    }
    os << ']';
    return os.str();
}

}  // namespace

Instance parse_instance(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());  // carries line and column
    }
    if (!doc.is_object()) {
        throw ParseError("top-level value must be an object");
    }
    for (const char* field : {"lambda", "A", "b"}) {
        if (!doc.contains(field)) {
            throw ParseError(std::string("missing field: ") + field);
        }
    }

    const auto& lambda_node = doc["lambda"];
    if (!lambda_node.is_number()) {
        throw ParseError("lambda: expected a number");
    }
    const double lambda = lambda_node.get<double>();
    if (!(std::isfinite(lambda) && lambda > 0.0)) {
        throw ParseError("lambda must be > 0");
    }

    const auto& a_node = doc["A"];
    if (!a_node.is_array() || a_node.empty()) {
        throw ParseError("A must be a non-empty array of rows");
    }
    Matrix a;
    a.reserve(a_node.size());
    std::size_t n = 0;
    for (std::size_t i = 0; i < a_node.size(); ++i) {
        const auto& row = a_node[i];
        if (!row.is_array() || row.empty()) {
            throw ParseError("A[" + std::to_string(i) +
                             "]: expected a non-empty array");
        }
        if (i == 0) {
            n = row.size();
        } else if (row.size() != n) {
            throw ParseError("A[" + std::to_string(i) + "] has length " +
                             std::to_string(row.size()) + ", expected " +
                             std::to_string(n));
        }
        UnitVector out_row;
        out_row.reserve(n);
        for (std::size_t j = 0; j < row.size(); ++j) {
            out_row.push_back(UnitValue{require_unit(
                row[j],
                "A[" + std::to_string(i) + "][" + std::to_string(j) + "]")});
        }
        a.push_back(std::move(out_row));
    }

    const auto& b_node = doc["b"];
    if (!b_node.is_array()) {
        throw ParseError("b must be an array");
    }
    if (b_node.size() != a.size()) {
        throw ParseError("b has length " + std::to_string(b_node.size()) +
                         ", expected " + std::to_string(a.size()));
    }
    UnitVector b;
    b.reserve(b_node.size());
    for (std::size_t i = 0; i < b_node.size(); ++i) {
        b.push_back(
            UnitValue{require_unit(b_node[i], "b[" + std::to_string(i) + "]")});
    }

    double epsilon = kDefaultEpsilon;
    if (doc.contains("epsilon")) {
        const auto& eps_node = doc["epsilon"];
        if (!eps_node.is_number()) {
            throw ParseError("epsilon: expected a number");
        }
        epsilon = eps_node.get<double>();
        if (!(epsilon > 0.0 && epsilon < 1.0)) {
            throw ParseError("epsilon must be in (0, 1)");
        }
    }

    try {
        return Instance{std::move(a), std::move(b), TNormParam{lambda}, epsilon};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_instance(const Instance& inst, const UnitVector* witness,
                               const std::uint64_t* seed) {
    std::ostringstream os;
    os << "{\"A\": ";
    std::vector<std::vector<double>> rows;
    rows.reserve(inst.rows());
    for (const auto& row : inst.A) {
        rows.push_back(to_doubles(row));
    }
    emit_matrix(os, rows);
    os << ", \"b\": ";
    emit_vector(os, to_doubles(inst.b));
    os << ", \"epsilon\": " << number(inst.epsilon);
    os << ", \"lambda\": " << number(inst.p.lambda());
    if (seed != nullptr) {
        os << ", \"seed\": " << *seed;
    }
    if (witness != nullptr) {
        os << ", \"witness\": ";
        emit_vector(os, to_doubles(*witness));
    }
    os << "}\n";
    return os.str();
}

SolveReport make_report(const Instance& inst, const SolutionSet& solutions,
                        const OptimizationResult* optimum) {
    SolveReport report;
    report.feasible = solutions.feasible;
    report.lambda = inst.p.lambda();
    report.epsilon = inst.epsilon;
    if (!solutions.feasible) {
        return report;
    }
    report.x_max = to_doubles(solutions.x_max);
    report.simplified_matrix.reserve(solutions.simplified.size());
    for (const auto& row : solutions.simplified) {
        report.simplified_matrix.push_back(to_doubles(row));
    }
    report.candidate_count = solutions.candidate_count;
    report.minimal_solutions.reserve(solutions.minimals.size());
    for (const auto& x : solutions.minimals) {
        report.minimal_solutions.push_back(to_doubles(x));
    }
    report.discarded_candidates = solutions.discarded_candidates;
    if (optimum != nullptr) {
        report.optimal_value = optimum->optimal_value.value();
        report.optimal_points.reserve(optimum->optimal_points.size());
        for (const auto& x : optimum->optimal_points) {
            report.optimal_points.push_back(to_doubles(x));
        }
    }
    return report;
}

std::string to_json(const SolveReport& report) {
    std::ostringstream os;
    os << "{\"candidate_count\": " << report.candidate_count;
    os << ", \"discarded_candidates\": " << report.discarded_candidates;
    os << ", \"epsilon\": " << number(report.epsilon);
    os << ", \"feasible\": " << (report.feasible ? "true" : "false");
    os << ", \"lambda\": " << number(report.lambda);
    os << ", \"minimal_solutions\": ";
    emit_matrix(os, report.minimal_solutions);
    if (report.optimal_value) {
        os << ", \"optimal_points\": ";
        emit_matrix(os, report.optimal_points);
        os << ", \"optimal_value\": " << number(*report.optimal_value);
    }
    os << ", \"simplified_matrix\": ";
    emit_matrix(os, report.simplified_matrix);
    os << ", \"x_max\": ";
    emit_vector(os, report.x_max);
    os << "}\n";
    return os.str();
}

std::string to_table(const SolveReport& report) {
    std::ostringstream os;
    os << "feasible:         " << (report.feasible ? "yes" : "no") << '\n';
    os << "lambda:           " << number(report.lambda) << '\n';
    os << "epsilon:          " << number(report.epsilon) << '\n';
    if (!report.feasible) {
        return os.str();
    }
    os << "maximum solution: " << table_vector(report.x_max) << '\n';
    os << "simplified matrix:\n";
    for (const auto& row : report.simplified_matrix) {
        os << "  " << table_vector(row) << '\n';
    }
    os << "candidates:       " << report.candidate_count << '\n';
    if (report.discarded_candidates > 0) {
        os << "discarded:        " << report.discarded_candidates << '\n';
    }
    os << "minimal solutions (" << report.minimal_solutions.size() << "):\n";
    for (const auto& row : report.minimal_solutions) {
        os << "  " << table_vector(row) << '\n';
    }
    if (report.optimal_value) {
        os << "optimal value:    " << fixed6(*report.optimal_value) << '\n';
        os << "optimal points (" << report.optimal_points.size() << "):\n";
        for (const auto& row : report.optimal_points) {
            os << "  " << table_vector(row) << '\n';
        }
    }
    return os.str();
}

}  // namespace fredombi::io
