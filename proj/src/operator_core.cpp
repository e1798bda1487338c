#include "sturmkit/operator_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sturmkit {

namespace {
constexpr double kPi = std::numbers::pi;

void require_finite_positive(double x, const char* name) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw std::invalid_argument(std::string(name) + " must be finite and > 0");
    }
}
} // namespace

PhysicalConstants::PhysicalConstants(double hbar_, double c_) : hbar(hbar_), c(c_) {
    require_finite_positive(hbar, "hbar");
    require_finite_positive(c, "c");
}

IntervalDomain::IntervalDomain(double v_c_) : v_c(v_c_) {
    require_finite_positive(v_c, "v_c");
}

double critical_velocity(const PhysicalConstants& constants) {
    return constants.c * std::sqrt(1.0 - 1.0 / kPi);
}

double deformation_value(double v, const PhysicalConstants& constants) {
    return kPi * (1.0 - (v * v) / (constants.c * constants.c));
}

OperatorSpec::OperatorSpec(const PhysicalConstants& constants_)
    : constants(constants_),
      domain(critical_velocity(constants_)),
      v_c_overridden(false) {}

OperatorSpec::OperatorSpec(const PhysicalConstants& constants_, double v_c_override)
    : constants(constants_), domain(v_c_override), v_c_overridden(true) {
    if (domain.v_c >= constants.c) {
        throw std::invalid_argument("v_c override must satisfy 0 < v_c < c");
    }
}

Complex apply_operator(const TestFunction& f, double v, const OperatorSpec& spec) {
    if (!f.has_second_derivative()) {
        throw std::invalid_argument("apply_operator: test function '" + f.label +
                                    "' has no second derivative");
    }
    return kPi * (f.value(v) + spec.hbar2_over_c2() * f.second_derivative(v));
}

Grid build_grid(const IntervalDomain& domain, int n_interior) {
    if (n_interior < 1) {
        throw std::invalid_argument("build_grid: n_interior must be >= 1");
    }
    Grid g;
    g.n_interior = n_interior;
    g.h = 2.0 * domain.v_c / (n_interior + 1);
    g.nodes.resize(n_interior);
    for (int j = 0; j < n_interior; ++j) {
        g.nodes[j] = -domain.v_c + (j + 1) * g.h;
    }
    return g;
}

SymmetricTridiagonal discretize(const OperatorSpec& spec, const Grid& grid) {
    const double q = spec.hbar2_over_c2();
    const double h2 = grid.h * grid.h;
    SymmetricTridiagonal m;
    m.diag = kPi * (1.0 - 2.0 * q / h2);
    m.off = kPi * q / h2;
    m.n = grid.n_interior;
    m.grid = grid;
    return m;
}

std::vector<double> tridiagonal_apply(const SymmetricTridiagonal& m,
                                      std::span<const double> x) {
    if (static_cast<int>(x.size()) != m.n) {
        throw std::invalid_argument("tridiagonal_apply: size mismatch");
    }
    std::vector<double> y(m.n);
    for (int i = 0; i < m.n; ++i) {
        double acc = m.diag * x[i];
        if (i > 0) acc += m.off * x[i - 1];
        if (i + 1 < m.n) acc += m.off * x[i + 1];
        y[i] = acc;
    }
    return y;
}

} // namespace sturmkit
