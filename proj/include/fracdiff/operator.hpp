#ifndef FRACDIFF_OPERATOR_HPP
#define FRACDIFF_OPERATOR_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "fracdiff/coefficient.hpp"
#include "fracdiff/fracops.hpp"
#include "fracdiff/grid.hpp"

namespace fracdiff {

/*
 * Dense discretization of the accretive operator -A, A = d/dx (p(x) D^a u),
 * with boundary conditions u_x(0) = 0 and u(1) = 0.
 *
 * Interior row i (1 <= i <= n-1) is the staggered flux difference
 *   (M u)_i = -[ p_{i+1/2} D^a u(x_{i+1/2}) - p_{i-1/2} D^a u(x_{i-1/2}) ] / h
 * with p averaged to the midpoints and D^a evaluated there by the midpoint
 * L1 rule (exact on piecewise-linear u).  Row 0 holds the one-sided
 * second-order Neumann constraint, row n the Dirichlet constraint.
 */
struct OperatorMatrix {
    Eigen::MatrixXd entries; // (n+1) x (n+1), represents -A_h plus constraint rows
    Grid grid;
    FracOrder alpha;
    Coefficient p;

    int neumann_row() const { return 0; }
    int dirichlet_row() const { return grid.intervals(); }
};

OperatorMatrix assemble_operator(FracOrder alpha, const Coefficient& p, const Grid& g);

// Full matrix-vector product: interior slots carry (-A_h u)_i, the two
// boundary slots carry the constraint residuals.
GridFunction apply_operator(const OperatorMatrix& A, const GridFunction& u);

// Same product with the constraint slots zeroed; this is the vector used in
// inner products (the operator action is only defined on interior rows).
GridFunction operator_action(const OperatorMatrix& A, const GridFunction& u);

// Rayleigh-type quotient l2_inner(-A u, u) / l2_inner(u, u).
Complex range_quotient(const OperatorMatrix& A, const GridFunction& u);

/// Numerical-range scan summary: sampled quotients, their largest |arg|, and
/// the empirical constants measured against sobolev_norm(u,(1+a)/2)^2.
struct SectorReport {
    std::vector<Complex> samples;
    double max_abs_arg = 0.0;
    double c_alpha = 0.0; // min Re(-Au,u) / ||u||_{H^{(1+a)/2}}^2
    double b_alpha = 0.0; // max |(-Au,u)| / ||u||_{H^{(1+a)/2}}^2
};

SectorReport numerical_range_sample(const OperatorMatrix& A, int count, std::uint64_t seed);

// lambda * P + M where P is the identity restricted to interior rows; the
// constraint rows of M are kept as-is (zero right-hand side when solving).
Eigen::MatrixXcd shifted_system(const OperatorMatrix& A, Complex lambda);

// For each magnitude m: (m, m * opnorm of the interior block of
// (lambda I - A_h)^{-1}) at lambda = m e^{i arg_lambda}.  The operator norm is
// the largest singular value, computed by power iteration on the factorized
// system.  Throws spectrum_hit_error when a shift is numerically singular.
std::vector<std::pair<double, double>> resolvent_bound_probe(
    const OperatorMatrix& A, double arg_lambda, const std::vector<double>& magnitudes);

// Dense dump: one header line "n,alpha" then row-major rows of doubles.
void write_matrix_dump(std::ostream& os, const OperatorMatrix& A);

} // namespace fracdiff

#endif
