#include "ruinkit/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ruinkit {

CubicCurve::CubicCurve(double x0, double dx, std::vector<double> values)
    : x0_(x0), dx_(dx), values_(std::move(values)) {
    const std::size_t n = values_.size();
    if (n < 2) throw std::invalid_argument("CubicCurve: need at least two points");
    if (!(dx_ > 0.0)) throw std::invalid_argument("CubicCurve: need dx > 0");

    std::vector<double> secants(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) secants[i] = (values_[i + 1] - values_[i]) / dx_;

    slopes_.resize(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double d0 = secants[i - 1], d1 = secants[i];
        // zero at local extrema, harmonic mean otherwise: keeps the data shape
        slopes_[i] = (d0 * d1 <= 0.0) ? 0.0 : 2.0 * d0 * d1 / (d0 + d1);
    }
    auto endpoint = [](double near, double far) {
        double d = 1.5 * near - 0.5 * far;
        if (d * near <= 0.0) return 0.0;
        if (std::abs(d) > 3.0 * std::abs(near)) return 3.0 * near;
        return d;
    };
    slopes_[0] = n > 2 ? endpoint(secants[0], secants[1]) : secants[0];
    slopes_[n - 1] = n > 2 ? endpoint(secants[n - 2], secants[n - 3]) : secants[n - 2];
}

double CubicCurve::operator()(double x) const {
    const std::size_t n = values_.size();
    double pos = (x - x0_) / dx_;
    if (pos <= 0.0) return values_.front();
    if (pos >= static_cast<double>(n - 1)) return values_.back();
    std::size_t i = static_cast<std::size_t>(pos);
    i = std::min(i, n - 2);
    const double t = pos - static_cast<double>(i);
    const double y0 = values_[i], y1 = values_[i + 1];
    const double m0 = slopes_[i] * dx_, m1 = slopes_[i + 1] * dx_;
    const double t2 = t * t, t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * m0 +
           (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * m1;
}

}  // namespace ruinkit
