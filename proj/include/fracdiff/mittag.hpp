#ifndef FRACDIFF_MITTAG_HPP
#define FRACDIFF_MITTAG_HPP

#include <complex>
#include <vector>

#include "fracdiff/errors.hpp"

namespace fracdiff {

/// Parameters of the two-parameter Mittag-Leffler function E_{nu,mu}.
struct MLParams {
    double nu;
    double mu;
};

/// Deterministic sampling description of a complex sector: log/list radii
/// crossed with `rays` equally spaced arguments in [-half_angle, half_angle].
struct SectorSpec {
    double half_angle;
    std::vector<double> radii;
    int rays;
};

// Taylor evaluation of E_{nu,mu}(z) = sum_n z^n / Gamma(mu + nu n) with a
// certified geometric tail bound.  Domain: |z| <= 100, nu, mu in (0,4].
std::complex<double> ml_eval(const MLParams& p, std::complex<double> z);

struct SectorScanResult {
    double min_modulus;
    std::complex<double> argmin;
};

// Minimum of |E_{nu,1}| over the sector sample set.  nu in (1,2).
SectorScanResult ml_sector_min_modulus(double nu, const SectorSpec& sector);

std::vector<double> log_spaced(double lo, double hi, int count);

} // namespace fracdiff

#endif
