#ifndef FRACDIFF_RESOLVENT_HPP
#define FRACDIFF_RESOLVENT_HPP

#include "fracdiff/coefficient.hpp"
#include "fracdiff/grid.hpp"

namespace fracdiff {

/*
 * Solvers for lambda u - (p D^a u)' = g with u_x(0) = 0, u(1) = 0:
 *
 *  - resolvent_closed_form (p == 1): the Mittag-Leffler representation
 *      u(x) = u0 E_{a+1}(lambda x^{a+1}) - (g * y^a E_{a+1,a+1}(lambda y^{a+1}))(x),
 *      u0   = (g * y^a E_{a+1,a+1}(lambda y^{a+1}))(1) / E_{a+1}(lambda),
 *    valid for lambda in the sector |arg lambda| <= pi (a+1)/2 where E_{a+1}
 *    is zero-free.
 *
 *  - series_oracle (p == 1): the truncated iteration
 *      u = u0 sum_k lambda^k I^{k(a+1)} 1 - sum_k lambda^k I^{(k+1)(a+1)} g
 *    built from repeated discrete fractional integration, with u0 chosen from
 *    the truncated sums themselves so the oracle is independent of ml_eval.
 *
 *  - resolvent_matrix: direct dense solve of the shifted system for general p.
 */

struct ResolventProblem {
    Complex lambda;
    GridFunction g;
    FracOrder alpha;
    Coefficient p;
};

struct BoundaryConstant {
    Complex value;
};

// Membership in the closed sector |arg z| <= pi(alpha+1)/2, with angular slack.
bool in_resolvent_sector(Complex lambda, double alpha, double slack = 1e-12);

// Product-trapezoid convolution (g * y^a E_{a+1,a+1}(lambda y^{a+1}))(x_i):
// the weight y^a is integrated exactly per cell against the piecewise-linear
// interpolant of g(x-y) E(lambda y^{a+1}) with E evaluated at the nodes.
GridFunction ml_kernel_convolution(const GridFunction& g, FracOrder alpha, Complex lambda);

BoundaryConstant boundary_constant(Complex lambda, const GridFunction& g, FracOrder alpha);

GridFunction resolvent_closed_form(const ResolventProblem& prob);

GridFunction series_oracle(const ResolventProblem& prob, int terms = 60);

GridFunction resolvent_matrix(const ResolventProblem& prob);

} // namespace fracdiff

#endif
