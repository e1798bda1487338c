#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sturmkit/test_function.hpp"

namespace sturmkit {

/// Scale constants of the deformation operator. Both are strictly positive;
/// only the ratio hbar^2/c^2 enters the operator itself.
struct PhysicalConstants {
    double hbar;
    double c;

    explicit PhysicalConstants(double hbar_ = 1.0, double c_ = 1.0);
};

/// Half-width v_c of the symmetric interval [-v_c, v_c].
struct IntervalDomain {
    double v_c;

    explicit IntervalDomain(double v_c_);
};

/// v_c = c * sqrt(1 - 1/pi), the point where the deformation profile
/// crosses 1. deformation_value(result, constants) == 1 to machine
/// precision.
double critical_velocity(const PhysicalConstants& constants);

/// C(v) = pi * (1 - v^2/c^2). Even in v; C(0) = pi, C(+-c) = 0.
double deformation_value(double v, const PhysicalConstants& constants);

/// One concrete operator instance: the pair (hbar^2/c^2, v_c).
/// The canonical construction derives v_c from the constants; an explicit
/// half-width may be supplied instead (recorded in v_c_overridden) so that
/// non-canonical intervals remain expressible for sensitivity tests.
struct OperatorSpec {
    PhysicalConstants constants;
    IntervalDomain domain;
    bool v_c_overridden;

    explicit OperatorSpec(const PhysicalConstants& constants_ = PhysicalConstants{});
    OperatorSpec(const PhysicalConstants& constants_, double v_c_override);

    double hbar2_over_c2() const {
        return (constants.hbar * constants.hbar) / (constants.c * constants.c);
    }
};

/// (operator applied to f)(v) = pi * ( f(v) + (hbar^2/c^2) f''(v) ).
/// Throws std::invalid_argument if f carries no second derivative.
Complex apply_operator(const TestFunction& f, double v, const OperatorSpec& spec);

/// Uniform interior grid of the Dirichlet problem. Endpoints +-v_c are
/// excluded; their values are identically zero.
struct Grid {
    int n_interior;
    double h;                   // spacing, h = 2 v_c / (n_interior + 1)
    std::vector<double> nodes;  // nodes[j] = -v_c + (j+1) h
};

Grid build_grid(const IntervalDomain& domain, int n_interior);

/// Central-difference discretization of the operator on a uniform Dirichlet
/// grid. Constant diagonal and off-diagonal:
///   diag = pi (1 - 2 hbar^2/(c^2 h^2)),  off = pi hbar^2/(c^2 h^2).
struct SymmetricTridiagonal {
    double diag;
    double off;
    int n;
    Grid grid;
};

SymmetricTridiagonal discretize(const OperatorSpec& spec, const Grid& grid);

/// y = A x for the tridiagonal matrix (Dirichlet: missing neighbours are 0).
std::vector<double> tridiagonal_apply(const SymmetricTridiagonal& m,
                                      std::span<const double> x);

} // namespace sturmkit
