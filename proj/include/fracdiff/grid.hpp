#ifndef FRACDIFF_GRID_HPP
#define FRACDIFF_GRID_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "fracdiff/errors.hpp"

namespace fracdiff {

using Complex = std::complex<double>;

enum class Side { left, right };

/// Uniform partition of [0,1] with n intervals, nodes x_i = i/n.
class Grid {
  public:
    Grid() = default;

    int intervals() const { return n_; }
    int num_nodes() const { return n_ + 1; }
    double spacing() const { return h_; }
    double node(int i) const { return (*nodes_)[static_cast<std::size_t>(i)]; }
    const std::vector<double>& nodes() const { return *nodes_; }

    bool operator==(const Grid& other) const { return n_ == other.n_; }
    bool operator!=(const Grid& other) const { return n_ != other.n_; }

    friend Grid make_uniform_grid(int n);

  private:
    int n_ = 0;
    double h_ = 0.0;
    std::shared_ptr<const std::vector<double>> nodes_;
};

Grid make_uniform_grid(int n);

/// Fractional order constrained to the open interval (0,1).
class FracOrder {
  public:
    explicit FracOrder(double a) : value_(a) {
        if (!(a > 0.0) || !(a < 1.0))
            throw invalid_order_error("fractional order must lie in (0,1), got " +
                                      std::to_string(a));
    }
    double value() const { return value_; }

  private:
    double value_;
};

/// Complex-valued nodal samples on a Grid; real data is the zero-imaginary case.
struct GridFunction {
    Grid grid;
    Eigen::VectorXcd values;

    GridFunction() = default;
    GridFunction(Grid g, Eigen::VectorXcd v) : grid(g), values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }
    Complex operator[](int i) const { return values[i]; }
    Complex& operator[](int i) { return values[i]; }

    bool all_finite() const;
    bool is_real(double tol = 0.0) const;
};

GridFunction make_zero(const Grid& g);
GridFunction make_constant(const Grid& g, Complex c);
GridFunction sample(const Grid& g, const std::function<double(double)>& f);
GridFunction sample_complex(const Grid& g, const std::function<Complex(double)>& f);

void require_same_grid(const GridFunction& u, const GridFunction& v);

} // namespace fracdiff

#endif
