#ifndef FRACDIFF_COEFFICIENT_HPP
#define FRACDIFF_COEFFICIENT_HPP

#include <functional>

#include "fracdiff/grid.hpp"

namespace fracdiff {

/// Nodal samples of the diffusion coefficient p together with its positivity
/// floor delta = min p and the discrete Lipschitz bound max |p_{i+1}-p_i|/h.
class Coefficient {
  public:
    Coefficient(Grid g, Eigen::VectorXd values);

    const Grid& grid() const { return grid_; }
    const Eigen::VectorXd& values() const { return values_; }
    double operator[](int i) const { return values_[i]; }
    double delta() const { return delta_; }
    double lip() const { return lip_; }

    bool is_unit(double tol = 1e-14) const;
    std::string describe() const { return desc_; }
    void set_description(std::string d) { desc_ = std::move(d); }

  private:
    Grid grid_;
    Eigen::VectorXd values_;
    double delta_;
    double lip_;
    std::string desc_ = "samples";
};

Coefficient constant_coefficient(const Grid& g, double c);
Coefficient affine_coefficient(const Grid& g, double a, double b); // p(x) = a + b x
Coefficient sample_coefficient(const Grid& g, const std::function<double(double)>& f);

} // namespace fracdiff

#endif
