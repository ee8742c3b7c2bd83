#ifndef FRACDIFF_FRACOPS_HPP
#define FRACDIFF_FRACOPS_HPP

#include <vector>

#include "fracdiff/grid.hpp"

namespace fracdiff {

/*
 * Discrete fractional integral and derivatives on a uniform grid.
 *
 * frac_integral: product-trapezoid rule, exact for piecewise-linear data,
 *   I^a u(x_i) = h^a/Gamma(a) * sum_{m=1..i} [ A_m u_{i-m} + B_m u_{i-m+1} ],
 *   A_m = (m^{a+1}-(m-1)^{a+1})/(a+1) - (m-1)(m^a-(m-1)^a)/a,
 *   B_m = m(m^a-(m-1)^a)/a - (m^{a+1}-(m-1)^{a+1})/(a+1).
 * At a = 1 the weights collapse to the composite trapezoid.
 *
 * caputo: L1 scheme, i.e. exact integration of the piecewise-constant
 *   difference-quotient derivative against the kernel,
 *   D^a u(x_i) = h^{-a}/Gamma(2-a) * sum_{m=1..i} (u_{i-m+1}-u_{i-m}) c_m,
 *   c_m = m^{1-a} - (m-1)^{1-a}.
 *
 * rl_derivative: Caputo plus the base-value term u(base) d^{-a}/Gamma(1-a),
 *   where d is the distance to the base node.  The base slot is NaN when
 *   u(base) != 0 (the derivative is singular there) and is never read by
 *   the operator assembly.
 *
 * Right-sided variants are evaluated by reflecting through x -> 1-x.
 */

GridFunction frac_integral(const GridFunction& u, double alpha, Side side);

GridFunction caputo(const GridFunction& u, FracOrder alpha, Side side);

GridFunction rl_derivative(const GridFunction& u, FracOrder alpha, Side side);

// Caputo derivative of the piecewise-linear interpolant at the staggered
// midpoints x_{i+1/2}, i = 0..n-1; used by the divergence-form assembly.
//   D^a u(x_{i+1/2}) = h^{-a}/Gamma(2-a) * sum_{j=0..i} (u_{j+1}-u_j) d_{i-j},
//   d_0 = (1/2)^{1-a},  d_m = (m+1/2)^{1-a} - (m-1/2)^{1-a}.
Eigen::VectorXcd caputo_midpoints(const GridFunction& u, FracOrder alpha);

// Midpoint L1 weights d_0..d_{n-1} together with kappa = h^{-a}/Gamma(2-a).
struct CaputoMidWeights {
    double kappa;
    std::vector<double> d;
};
CaputoMidWeights caputo_mid_weights(const Grid& g, FracOrder alpha);

} // namespace fracdiff

#endif
