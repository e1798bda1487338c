#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace sturmkit {

using Complex = std::complex<double>;

/// A smooth complex-valued function on the operator interval together with
/// its first two derivatives. Derivatives are supplied analytically by the
/// caller, never obtained by numerical differentiation, so that residual
/// checks carry no differentiation noise.
struct TestFunction {
    std::function<Complex(double)> value;
    std::function<Complex(double)> first_derivative;
    std::function<Complex(double)> second_derivative;
    std::string label;

    bool has_second_derivative() const { return static_cast<bool>(second_derivative); }
};

/// f(v) = a for all v.
TestFunction constant_function(Complex a, std::string label = "const");

/// Polynomial with complex coefficients, coeffs[k] multiplying v^k.
/// Value and both derivatives are evaluated by Horner's rule on exact
/// coefficient arrays.
TestFunction polynomial_function(std::vector<Complex> coeffs, std::string label = "poly");

/// f(v) = amplitude * sin(k v + phase), with analytic derivatives.
TestFunction harmonic_function(Complex amplitude, double k, double phase,
                               std::string label = "sin");

/// Multiplies a polynomial by the Dirichlet window (v_c^2 - v^2), which
/// vanishes at both endpoints. Exact coefficient arithmetic.
TestFunction dirichlet_window_polynomial(std::vector<Complex> coeffs, double v_c,
                                         std::string label = "window*poly");

} // namespace sturmkit
