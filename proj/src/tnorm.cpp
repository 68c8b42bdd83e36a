#include "fredombi/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fredombi {

namespace {

// d(t) = (1-t)/t, the quantity both the t-norm and its residual are built
// from. Callers must rule out t == 0 first.
double dterm(double t) { return (1.0 - t) / t; }

}  // namespace

UnitValue::UnitValue(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("UnitValue: " + std::to_string(v) +
                                    " outside [0,1]");
    }
}

TNormParam::TNormParam(double lambda) : lambda_(lambda) {
    if (!(std::isfinite(lambda) && lambda > 0.0)) {
        throw std::invalid_argument("lambda must be > 0 and finite");
    }
}

UnitValue dombi(UnitValue xv, UnitValue yv, const TNormParam& p) noexcept {
    const double x = xv.value();
    const double y = yv.value();
    if (x == 0.0 || y == 0.0) {
        return UnitValue{};
    }
    // d == 0 exactly at 1; dombi(x, 1) = x is the t-norm identity law.
    if (x == 1.0) {
        return yv;
    }
    if (y == 1.0) {
        return xv;
    }
    const double dx = dterm(x);
    const double dy = dterm(y);
    const double dmax = std::max(dx, dy);
    const double dmin = std::min(dx, dy);
    if (!std::isfinite(dmax)) {
        return UnitValue{};  // argument at the bottom of the denormal range
    }
    const double lambda = p.lambda();
    // (dx^l + dy^l)^(1/l) = dmax * (1 + (dmin/dmax)^l)^(1/l); the ratio is
    // in (0,1], so nothing overflows no matter how large lambda is.
    const double s =
        dmax * std::pow(1.0 + std::pow(dmin / dmax, lambda), 1.0 / lambda);
    return UnitValue{1.0 / (1.0 + s)};
}

UnitValue residual(UnitValue bv, UnitValue av, const TNormParam& p, double eps) {
    const double b = bv.value();
    const double a = av.value();
    if (b <= eps) {
        throw std::domain_error(
            "residual: undefined for b = 0; handle zero rows separately");
    }
    if (a < b - eps) {
        throw std::domain_error("residual: requires a >= b, got a = " +
                                std::to_string(a) + ", b = " + std::to_string(b));
    }
    const double db = dterm(b);
    const double da = dterm(a);
    // a == b up to eps: the bracket vanishes and the largest preimage is 1.
    // Returning exactly 1 avoids raising a tiny negative rounding residue
    // to 1/lambda.
    if (da >= db - eps) {
        return UnitValue{1.0};
    }
    const double lambda = p.lambda();
    const double s =
        db * std::pow(1.0 - std::pow(da / db, lambda), 1.0 / lambda);
    return UnitValue{1.0 / (1.0 + s)};
}

UnitValue compose_row(const UnitVector& a_row, const UnitVector& x,
                      const TNormParam& p) {
    if (a_row.size() != x.size()) {
        throw std::invalid_argument(
            "compose_row: length mismatch (" + std::to_string(a_row.size()) +
            " vs " + std::to_string(x.size()) + ")");
    }
    UnitValue best{};
    for (std::size_t j = 0; j < a_row.size(); ++j) {
        best = std::max(best, dombi(a_row[j], x[j], p));
    }
    return best;
}

UnitVector to_units(const std::vector<double>& v) {
    UnitVector out;
    out.reserve(v.size());
    for (double d : v) {
        out.emplace_back(d);
    }
    return out;
}

Matrix to_units(const std::vector<std::vector<double>>& rows) {
    Matrix out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        out.push_back(to_units(row));
    }
    return out;
}

std::vector<double> to_doubles(const UnitVector& v) {
    return {v.begin(), v.end()};
}

std::vector<std::vector<double>> to_doubles(const Matrix& rows) {
    std::vector<std::vector<double>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        out.push_back(to_doubles(row));
    }
    return out;
}

}  // namespace fredombi
