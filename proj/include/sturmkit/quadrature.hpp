#pragma once

#include <vector>

namespace sturmkit {

/// Composite Gauss-Legendre rule on [-half_width, half_width].
/// 5 points per panel, so polynomials of degree <= 9 are integrated exactly
/// on each panel; exactness_degree records that.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int exactness_degree;
    double half_width;
};

QuadratureRule make_gauss_legendre(double half_width, int panels = 64);

} // namespace sturmkit
