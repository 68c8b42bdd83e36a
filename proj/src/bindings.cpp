#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <vector>

#include "fredombi/instance.hpp"
#include "fredombi/optimizer.hpp"
#include "fredombi/oracle.hpp"
#include "fredombi/resolver.hpp"
#include "fredombi/tnorm.hpp"

namespace py = pybind11;

namespace {

using Rows = std::vector<std::vector<double>>;

fredombi::Instance make_instance(const Rows& a, const std::vector<double>& b,
                                 double lam, double eps) {
    fredombi::Matrix matrix;
    matrix.reserve(a.size());
    for (const auto& row : a) {
        matrix.push_back(fredombi::to_units(row));
    }
    return fredombi::Instance{std::move(matrix), fredombi::to_units(b),
                              fredombi::TNormParam{lam}, eps};
}

Rows matrix_out(const fredombi::Matrix& m) {
    Rows out;
    out.reserve(m.size());
    for (const auto& row : m) {
        out.push_back(fredombi::to_doubles(row));
    }
    return out;
}

Rows vectors_out(const std::vector<fredombi::UnitVector>& xs) {
    Rows out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        out.push_back(fredombi::to_doubles(x));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fuzzy relational equations A phi x = b under the max-Dombi "
              "composition";

    py::register_exception<fredombi::CandidateCapExceeded>(
        m, "CandidateCapError", PyExc_RuntimeError);

    m.def(
        "dombi",
        [](double x, double y, double lam) {
            return fredombi::dombi(fredombi::UnitValue{x},
                                   fredombi::UnitValue{y},
                                   fredombi::TNormParam{lam})
                .value();
        },
        py::arg("x"), py::arg("y"), py::arg("lam"),
        "Dombi t-norm of x and y with parameter lam");

    m.def(
        "residual",
        [](double b, double a, double lam, double eps) {
            return fredombi::residual(fredombi::UnitValue{b},
                                      fredombi::UnitValue{a},
                                      fredombi::TNormParam{lam}, eps)
                .value();
        },
        py::arg("b"), py::arg("a"), py::arg("lam"),
        py::arg("eps") = fredombi::kDefaultEpsilon,
        "Largest x with dombi(a, x, lam) == b, defined for a >= b > 0");

    m.def(
        "compose",
        [](const Rows& a, const std::vector<double>& x, double lam) {
            const fredombi::TNormParam p{lam};
            const fredombi::UnitVector units = fredombi::to_units(x);
            std::vector<double> out;
            out.reserve(a.size());
            for (const auto& row : a) {
                out.push_back(
                    fredombi::compose_row(fredombi::to_units(row), units, p)
                        .value());
            }
            return out;
        },
        py::arg("a"), py::arg("x"), py::arg("lam"),
        "Max-Dombi composition A phi x, one value per row");

    m.def(
        "max_solution",
        [](const Rows& a, const std::vector<double>& b, double lam,
           double eps) {
            return fredombi::to_doubles(
                fredombi::max_solution(make_instance(a, b, lam, eps)));
        },
        py::arg("a"), py::arg("b"), py::arg("lam"),
        py::arg("eps") = fredombi::kDefaultEpsilon,
        "Greatest candidate solution; solves the system iff one exists");

    m.def(
        "check_feasible",
        [](const Rows& a, const std::vector<double>& b, double lam,
           const std::vector<double>& x, double eps) {
            return fredombi::check_feasible(make_instance(a, b, lam, eps),
                                            fredombi::to_units(x));
        },
        py::arg("a"), py::arg("b"), py::arg("lam"), py::arg("x"),
        py::arg("eps") = fredombi::kDefaultEpsilon,
        "Whether x satisfies every equation within eps");

    m.def(
        "solve",
        [](const Rows& a, const std::vector<double>& b, double lam, double eps,
           std::uint64_t max_candidates) {
            const fredombi::Instance inst = make_instance(a, b, lam, eps);
            const fredombi::SolutionSet s =
                fredombi::resolve(inst, max_candidates);
            py::dict out;
            out["feasible"] = s.feasible;
            out["x_max"] = fredombi::to_doubles(s.x_max);
            out["simplified_matrix"] = matrix_out(s.simplified);
            out["candidate_count"] = s.candidate_count;
            out["minimal_solutions"] = vectors_out(s.minimals);
            out["discarded_candidates"] = s.discarded_candidates;
            if (s.feasible && !s.minimals.empty()) {
                const fredombi::OptimizationResult opt =
                    fredombi::optimize(s, inst.epsilon);
                out["optimal_value"] = opt.optimal_value.value();
                out["optimal_points"] = vectors_out(opt.optimal_points);
            } else {
                out["optimal_value"] = py::none();
                out["optimal_points"] = Rows{};
            }
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("lam"),
        py::arg("eps") = fredombi::kDefaultEpsilon,
        py::arg("max_candidates") = fredombi::kDefaultCandidateCap,
        "Feasibility, maximum solution, minimal solutions and the optimum of "
        "max(x_1, ..., x_n)");

    m.def(
        "generate",
        [](std::uint64_t seed, std::size_t m_, std::size_t n, double lam,
           std::size_t zero_b_rows) {
            const fredombi::oracle::GeneratedInstance gen =
                fredombi::oracle::generate(seed, m_, n,
                                           fredombi::TNormParam{lam},
                                           zero_b_rows);
            py::dict out;
            out["A"] = matrix_out(gen.inst.A);
            out["b"] = fredombi::to_doubles(gen.inst.b);
            out["lambda"] = gen.inst.p.lambda();
            out["epsilon"] = gen.inst.epsilon;
            out["witness"] = fredombi::to_doubles(gen.witness);
            out["seed"] = gen.seed;
            return out;
        },
        py::arg("seed"), py::arg("m"), py::arg("n"), py::arg("lam") = 2.0,
        py::arg("zero_b_rows") = 0,
        "Seeded random instance with a feasible witness");
}
