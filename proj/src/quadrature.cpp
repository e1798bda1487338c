#include "sturmkit/quadrature.hpp"

#include <stdexcept>

namespace sturmkit {

namespace {
// 5-point Gauss-Legendre abscissae and weights on [-1, 1].
constexpr double kGl5Nodes[5] = {
    -0.9061798459386640, -0.5384693101056831, 0.0,
    0.5384693101056831, 0.9061798459386640};
constexpr double kGl5Weights[5] = {
    0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
    0.4786286704993665, 0.2369268850561891};
} // namespace

QuadratureRule make_gauss_legendre(double half_width, int panels) {
    if (half_width <= 0.0) {
        throw std::invalid_argument("make_gauss_legendre: half_width must be > 0");
    }
    if (panels < 1) {
        throw std::invalid_argument("make_gauss_legendre: panels must be >= 1");
    }
    QuadratureRule rule;
    rule.exactness_degree = 9;
    rule.half_width = half_width;
    rule.nodes.reserve(5 * panels);
    rule.weights.reserve(5 * panels);
    const double panel_width = 2.0 * half_width / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = -half_width + p * panel_width;
        const double mid = a + 0.5 * panel_width;
        const double scale = 0.5 * panel_width;
        for (int j = 0; j < 5; ++j) {
            rule.nodes.push_back(mid + scale * kGl5Nodes[j]);
            rule.weights.push_back(scale * kGl5Weights[j]);
        }
    }
    return rule;
}

} // namespace sturmkit
