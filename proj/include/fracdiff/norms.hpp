#ifndef FRACDIFF_NORMS_HPP
#define FRACDIFF_NORMS_HPP

#include "fracdiff/grid.hpp"

namespace fracdiff {

// Composite-trapezoid approximation of the L^2(0,1) pairing (u, v) with the
// conjugate on the second argument.
Complex l2_inner(const GridFunction& u, const GridFunction& v);

double l2_norm(const GridFunction& u);

// Discrete Gagliardo seminorm: sqrt of the double sum over node pairs i != j of
// |u_i - u_j|^2 / |x_i - x_j|^{1+2s} * h^2.  The diagonal is excluded.
double gagliardo_seminorm(const GridFunction& u, double s);

// sqrt(L2 norm^2 + Gagliardo seminorm^2), s in (0,1).
double sobolev_norm(const GridFunction& u, double s);

// Weighted half-order norm: sqrt(sobolev_norm(u,1/2)^2 + int |u|^2/x dx) for
// side=left (weight 1/(1-x) for side=right).  The singular endpoint cell is
// integrated exactly against the linear interpolant, which must vanish there.
double weighted_half_norm(const GridFunction& u, Side side);

} // namespace fracdiff

#endif
