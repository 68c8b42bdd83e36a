#include "fredombi/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fredombi/io.hpp"
#include "fredombi/optimizer.hpp"
#include "fredombi/oracle.hpp"
#include "fredombi/resolver.hpp"

namespace fredombi::cli {

namespace {

// `-` selects stdin; anything else is a path.
std::string read_input(const std::string& file) {
    if (file == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + file);
    }
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

Instance apply_overrides(const Instance& inst, std::optional<double> lambda,
                         std::optional<double> epsilon) {
    if (!lambda && !epsilon) {
        return inst;
    }
    return Instance{inst.A, inst.b,
                    TNormParam{lambda.value_or(inst.p.lambda())},
                    epsilon.value_or(inst.epsilon)};
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct SolveOptions {
    std::string file;
    std::optional<double> epsilon;
    std::optional<double> lambda;
    std::uint64_t max_candidates = kDefaultCandidateCap;
    std::string output = "json";
    bool quiet = false;
};

struct CheckOptions {
    std::string file;
    std::vector<double> point;
    std::optional<double> epsilon;
    std::optional<double> lambda;
    std::optional<double> tol;
    std::string output = "json";
    bool quiet = false;
};

struct GenerateOptions {
    std::uint64_t seed = 1;
    std::size_t m = 0;
    std::size_t n = 0;
    double lambda = 2.0;
    std::size_t zero_b_rows = 0;
    std::optional<double> epsilon;
};

struct VerifyOptions {
    oracle::CorpusConfig config;
    std::string result_file = "verify_result.json";
    bool quiet = false;
};

int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
    const Instance inst =
        apply_overrides(io::parse_instance(read_input(opt.file)), opt.lambda,
                        opt.epsilon);

    SolutionSet solutions;
    try {
        solutions = resolve(inst, opt.max_candidates);
    } catch (const CandidateCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapExceeded;
    }

    std::optional<OptimizationResult> optimum;
    if (solutions.feasible && !solutions.minimals.empty()) {
        optimum = optimize(solutions, inst.epsilon);
    }
    const io::SolveReport report =
        io::make_report(inst, solutions, optimum ? &*optimum : nullptr);
    if (!opt.quiet) {
        out << (opt.output == "table" ? io::to_table(report)
                                      : io::to_json(report));
    }
    return solutions.feasible ? kExitOk : kExitInfeasible;
}

int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    const Instance inst =
        apply_overrides(io::parse_instance(read_input(opt.file)), opt.lambda,
                        opt.epsilon);
    if (opt.point.size() != inst.cols()) {
        err << "error: point has length " << opt.point.size() << ", expected "
            << inst.cols() << '\n';
        return kExitUsage;
    }
    const UnitVector x = to_units(opt.point);

    // Wider than the solve tolerance: hand-entered points are usually
    // rounded to a few decimals.
    const double tol = opt.tol.value_or(std::max(10.0 * inst.epsilon, 1e-4));
    std::vector<double> lhs(inst.rows());
    std::vector<double> residuals(inst.rows());
    bool pass = true;
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        lhs[i] = compose_row(inst.A[i], x, inst.p).value();
        residuals[i] = std::abs(lhs[i] - inst.b[i].value());
        pass = pass && residuals[i] <= tol;
    }

    if (!opt.quiet) {
        if (opt.output == "table") {
            for (std::size_t i = 0; i < inst.rows(); ++i) {
                out << "row " << i << ": lhs " << format_sci(lhs[i])
                    << "  target " << format_sci(inst.b[i].value())
                    << "  residual " << format_sci(residuals[i]) << '\n';
            }
            out << "check: " << (pass ? "PASS" : "FAIL") << " (tolerance "
                << format_sci(tol) << ")\n";
        } else {
            out << "{\"pass\": " << (pass ? "true" : "false")
                << ", \"residuals\": [";
            for (std::size_t i = 0; i < residuals.size(); ++i) {
                if (i > 0) {
                    out << ", ";
                }
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.17g", residuals[i]);
                out << buf;
            }
            out << "], \"tolerance\": " << format_sci(tol) << "}\n";
        }
    }
    return pass ? kExitOk : kExitInfeasible;
}

int run_generate(const GenerateOptions& opt, std::ostream& out) {
    oracle::GeneratedInstance gen =
        oracle::generate(opt.seed, opt.m, opt.n, TNormParam{opt.lambda},
                         opt.zero_b_rows);
    if (opt.epsilon) {
        gen.inst = Instance{std::move(gen.inst.A), std::move(gen.inst.b),
                            gen.inst.p, *opt.epsilon};
    }
    out << io::serialize_instance(gen.inst, &gen.witness, &gen.seed);
    return kExitOk;
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    const oracle::CorpusResult result = oracle::run_corpus(opt.config);

    if (!opt.quiet) {
        out << "runs:                   " << result.runs << '\n'
            << "failures:               " << result.failures << '\n'
            << "infeasible reports:     " << result.infeasible_reports << '\n'
            << "oracle mismatches:      " << result.oracle_mismatches << '\n'
            << "containment violations: " << result.containment_violations
            << '\n'
            << "witness box misses:     " << result.witness_box_misses << '\n'
            << "box sample failures:    " << result.box_sample_failures << '\n'
            << "optimality violations:  " << result.optimality_violations
            << '\n'
            << "zero-target instances:  " << result.zero_row_instances << '\n'
            << "result: " << (result.passed() ? "PASS" : "FAIL") << '\n';
    }
    for (const auto& message : result.messages) {
        err << message << '\n';
    }

    std::ostringstream doc;
    doc << "{\"box_sample_failures\": " << result.box_sample_failures
        << ", \"containment_violations\": " << result.containment_violations
        << ", \"failures\": " << result.failures
        << ", \"infeasible_reports\": " << result.infeasible_reports
        << ", \"messages\": [";
    for (std::size_t i = 0; i < result.messages.size(); ++i) {
        if (i > 0) {
            doc << ", ";
        }
        doc << '"' << json_escape(result.messages[i]) << '"';
    }
    doc << "], \"optimality_violations\": " << result.optimality_violations
        << ", \"oracle_mismatches\": " << result.oracle_mismatches
        << ", \"passed\": " << (result.passed() ? "true" : "false")
        << ", \"runs\": " << result.runs
        << ", \"witness_box_misses\": " << result.witness_box_misses
        << ", \"zero_row_instances\": " << result.zero_row_instances << "}\n";
    std::ofstream file(opt.result_file, std::ios::binary);
    if (!file) {
        err << "error: cannot write result file: " << opt.result_file << '\n';
        return kExitUsage;
    }
    file << doc.str();

    return result.passed() ? kExitOk : kExitInfeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Solver for fuzzy relational equations under the max-Dombi "
                 "composition"};
    app.name("fredombi");
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve_cmd = app.add_subcommand(
        "solve", "Maximum solution, minimal solutions and latticized optimum");
    solve_cmd->add_option("file", solve_opt.file, "instance document, - for stdin")
        ->required();
    solve_cmd->add_option("--epsilon", solve_opt.epsilon,
                          "comparison tolerance (overrides the document)");
    solve_cmd->add_option("--lambda", solve_opt.lambda,
                          "t-norm parameter (overrides the document)");
    solve_cmd->add_option("--max-candidates", solve_opt.max_candidates,
                          "abort when the candidate space exceeds this size");
    solve_cmd->add_option("--output", solve_opt.output, "report format")
        ->check(CLI::IsMember({"json", "table"}));
    solve_cmd->add_flag("--quiet", solve_opt.quiet,
                        "no report, exit status only");

    CheckOptions check_opt;
    CLI::App* check_cmd =
        app.add_subcommand("check", "Test a point against the system");
    check_cmd->add_option("file", check_opt.file, "instance document, - for stdin")
        ->required();
    check_cmd->add_option("--point", check_opt.point,
                          "candidate solution, comma separated")
        ->required()
        ->delimiter(',');
    check_cmd->add_option("--epsilon", check_opt.epsilon,
                          "comparison tolerance (overrides the document)");
    check_cmd->add_option("--lambda", check_opt.lambda,
                          "t-norm parameter (overrides the document)");
    check_cmd->add_option("--tol", check_opt.tol,
                          "pass threshold, default max(10*epsilon, 1e-4)");
    check_cmd->add_option("--output", check_opt.output, "report format")
        ->check(CLI::IsMember({"json", "table"}));
    check_cmd->add_flag("--quiet", check_opt.quiet,
                        "no report, exit status only");

    GenerateOptions gen_opt;
    CLI::App* gen_cmd = app.add_subcommand(
        "generate", "Random instance with a known feasible point");
    gen_cmd->add_option("--seed", gen_opt.seed, "generator seed");
    gen_cmd->add_option("-m,--rows", gen_opt.m, "number of equations")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("-n,--cols", gen_opt.n, "number of unknowns")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--lambda", gen_opt.lambda, "t-norm parameter");
    gen_cmd->add_option("--zero-b-rows", gen_opt.zero_b_rows,
                        "rows forced to a zero right-hand side");
    gen_cmd->add_option("--epsilon", gen_opt.epsilon,
                        "tolerance stored in the document");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Cross-check the solver against brute force on a seeded corpus");
    verify_cmd->add_option("--runs", verify_opt.config.runs, "instances to run");
    verify_cmd->add_option("--max-m", verify_opt.config.max_m,
                           "largest row count");
    verify_cmd->add_option("--max-n", verify_opt.config.max_n,
                           "largest column count");
    verify_cmd->add_option("--seed", verify_opt.config.base_seed,
                           "base seed, run k uses base+k");
    verify_cmd->add_option("--box-samples", verify_opt.config.box_samples,
                           "points sampled per instance");
    verify_cmd->add_option("--result-file", verify_opt.result_file,
                           "machine-readable outcome");
    verify_cmd->add_flag("--quiet", verify_opt.quiet,
                         "no summary, exit status only");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(solve_cmd)) {
            return run_solve(solve_opt, out, err);
        }
        if (app.got_subcommand(check_cmd)) {
            return run_check(check_opt, out, err);
        }
        if (app.got_subcommand(gen_cmd)) {
            return run_generate(gen_opt, out);
        }
        return run_verify(verify_opt, out, err);
    } catch (const CandidateCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapExceeded;
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace fredombi::cli
