#ifndef FRACDIFF_CONSTRAINTS_HPP
#define FRACDIFF_CONSTRAINTS_HPP

#include <array>

#include "fracdiff/grid.hpp"

namespace fracdiff {

// The two discrete boundary constraints shared by the operator, the samplers
// and the evolution code: a one-sided second-order Neumann condition
// (-3 u_0 + 4 u_1 - u_2)/(2h) = 0 at x=0 and u_n = 0 at x=1.

std::array<double, 3> neumann_coeffs(const Grid& g);

Complex neumann_residual(const GridFunction& u);

// Euclidean least-squares projection onto the constraint null space.  The two
// constraint rows have disjoint support for n >= 4, so the projection is a
// local correction at nodes {0,1,2} plus u_n = 0.
void project_onto_constraints(GridFunction& u);

} // namespace fracdiff

#endif
