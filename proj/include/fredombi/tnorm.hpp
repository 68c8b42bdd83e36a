#pragma once

#include <compare>
#include <vector>

namespace fredombi {

/// Default tolerance for all threshold comparisons (a >= b, ties, equality
/// of composed values). One knob, used everywhere downstream.
inline constexpr double kDefaultEpsilon = 1e-9;

/// A membership degree in [0,1]. Construction rejects anything outside the
/// unit interval (including NaN); values are never clamped.
class UnitValue {
public:
    constexpr UnitValue() noexcept = default;
    explicit UnitValue(double v);

    [[nodiscard]] constexpr double value() const noexcept { return v_; }
    constexpr operator double() const noexcept { return v_; }

    friend constexpr auto operator<=>(UnitValue, UnitValue) noexcept = default;
    friend constexpr bool operator==(UnitValue, UnitValue) noexcept = default;

private:
    double v_ = 0.0;
};

using UnitVector = std::vector<UnitValue>;
using Matrix = std::vector<UnitVector>;  // rectangular, row major

/// Shape parameter of the Dombi t-norm family. Must be finite and > 0; the
/// family sweeps from the drastic product (lambda -> 0) to min (lambda -> inf).
class TNormParam {
public:
    explicit TNormParam(double lambda);
    [[nodiscard]] double lambda() const noexcept { return lambda_; }

    friend bool operator==(const TNormParam&, const TNormParam&) = default;

private:
    double lambda_;
};

/// Dombi t-norm. Zero if either argument is zero, otherwise
/// 1 / (1 + (dx^l + dy^l)^(1/l)) with dt = (1-t)/t.
///
/// Evaluated in the factored form dmax * (1 + (dmin/dmax)^l)^(1/l) so the
/// d-terms are never raised to lambda directly; stable for lambda >= 200.
UnitValue dombi(UnitValue x, UnitValue y, const TNormParam& p) noexcept;

/// Residual of the Dombi t-norm: the largest t with dombi(a, t) == b.
/// Defined for a >= b > 0 (up to eps); returns exactly 1 on a == b ties.
/// Throws std::domain_error when b <= eps or a < b - eps.
UnitValue residual(UnitValue b, UnitValue a, const TNormParam& p,
                   double eps = kDefaultEpsilon);

/// Row composition max_j dombi(a_row[j], x[j]).
/// Throws std::invalid_argument on length mismatch.
UnitValue compose_row(const UnitVector& a_row, const UnitVector& x,
                      const TNormParam& p);

// Boundary conversions (validating in the double -> UnitValue direction).
UnitVector to_units(const std::vector<double>& v);
Matrix to_units(const std::vector<std::vector<double>>& rows);
std::vector<double> to_doubles(const UnitVector& v);
std::vector<std::vector<double>> to_doubles(const Matrix& rows);

}  // namespace fredombi
