#ifndef RUINKIT_CURVE_HPP
#define RUINKIT_CURVE_HPP

#include <cstddef>
#include <vector>

namespace ruinkit {

// Shape-preserving (Fritsch-Carlson) cubic Hermite interpolant over a uniform
// grid.  Monotone data yields a monotone interpolant; evaluation is O(1).
class CubicCurve {
public:
    CubicCurve() = default;
    CubicCurve(double x0, double dx, std::vector<double> values);

    double operator()(double x) const;

    double x_min() const { return x0_; }
    double x_max() const { return x0_ + dx_ * static_cast<double>(values_.size() - 1); }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    double grid_step() const { return dx_; }

private:
    double x0_ = 0.0;
    double dx_ = 1.0;
    std::vector<double> values_;
    std::vector<double> slopes_;
};

}  // namespace ruinkit

#endif  // RUINKIT_CURVE_HPP
