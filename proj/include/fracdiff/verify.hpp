#ifndef FRACDIFF_VERIFY_HPP
#define FRACDIFF_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fracdiff/coefficient.hpp"
#include "fracdiff/grid.hpp"

namespace fracdiff {

struct CheckParams {
    double alpha = 0.0;
    double beta = 0.0; // composition only
    int n = 0;
    std::uint64_t seed = 0;
    std::string p_desc = "-";
};

struct CheckReport {
    std::string name;
    std::string statement; // which identity/estimate is being verified
    Complex lhs;
    Complex rhs;
    double metric = 0.0; // relative/absolute error or slack, per check
    double tolerance = 0.0;
    bool pass = false;
    CheckParams params;
};

/*
 * Verification campaign.  Each check realizes one proved identity/estimate:
 *
 *  check_energy_identity   int d^a w . w  =  a/(4 Gamma(1-a)) [w]_{a/2}^2
 *                          + 1/(2 Gamma(1-a)) int [(1-x)^{-a}+x^{-a}] w^2
 *  check_composition       d^a D^b u = D^{a+b} u        (a+b <= 1)
 *  check_adjoint           (I^a u, v) = (u, I^a_- v)
 *  check_pointwise_product D^a f . f >= (1/2) D^a f^2   (pointwise)
 *  check_coercivity        Re(-A u, u) >= c ||u||^2_{H^{(1+a)/2}} (- C ||u||^2)
 *  check_norm_equivalence  ||D^{(1+a)/2} u|| ~ ||u||_{H^{(1+a)/2}}
 */

CheckReport check_energy_identity(const GridFunction& w, FracOrder alpha,
                                  double tol = 3e-2);

CheckReport check_composition(const GridFunction& u, FracOrder alpha, FracOrder beta,
                              double tol = 2e-2);

CheckReport check_adjoint(const GridFunction& u, const GridFunction& v, FracOrder alpha,
                          double tol = 5e-3);

CheckReport check_pointwise_product(const GridFunction& f, FracOrder alpha);

CheckReport check_coercivity(FracOrder alpha, const Coefficient& p, int count,
                             std::uint64_t seed);

CheckReport check_norm_equivalence(FracOrder alpha, int count, std::uint64_t seed);

// The full campaign at the default tolerances; deterministic for fixed seed.
std::vector<CheckReport> run_campaign(int n, std::uint64_t seed);

void write_reports_csv(std::ostream& os, const std::vector<CheckReport>& reports);

bool all_pass(const std::vector<CheckReport>& reports);

} // namespace fracdiff

#endif
