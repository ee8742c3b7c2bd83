#ifndef FRACDIFF_ERRORS_HPP
#define FRACDIFF_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace fracdiff {

struct invalid_grid_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct grid_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_order_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct domain_violation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct assembly_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct wrong_solver_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct out_of_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct non_convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct near_zero_denominator_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct step_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct undefined_ratio_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Shifted system (lambda I - A_h) was numerically singular.
struct spectrum_hit_error : std::runtime_error {
    std::complex<double> lambda;
    explicit spectrum_hit_error(std::complex<double> lam, const std::string& msg)
        : std::runtime_error(msg), lambda(lam) {}
};

} // namespace fracdiff

#endif
