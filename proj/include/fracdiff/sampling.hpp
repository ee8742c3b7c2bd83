#ifndef FRACDIFF_SAMPLING_HPP
#define FRACDIFF_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "fracdiff/grid.hpp"

namespace fracdiff {

/// Seedable generator (mt19937_64) with a fully specified normal variate
/// (Box-Muller on 53-bit uniforms) so that sample streams are reproducible
/// independent of the standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(); // [0,1)
    double uniform(double lo, double hi);
    double normal();
    int uniform_int(int lo, int hi); // inclusive bounds

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Random smooth complex function satisfying both discrete constraints:
// a combination of cos((k-1/2) pi x), k=1..4, and 1 - x^{2j}, j=1..3, with
// standard-normal complex coefficients, projected onto the constraint space.
// The coefficient draws do not depend on the grid, so refining the grid with
// the same seed re-samples the same underlying functions.
GridFunction random_constrained_smooth(const Grid& g, Rng& rng);

// Random real piecewise-linear function with 3..6 interior breakpoints in
// (0.05, 0.95) and random-walk values (bounded slopes independent of h).
GridFunction random_piecewise_linear(const Grid& g, Rng& rng);

} // namespace fracdiff

#endif
