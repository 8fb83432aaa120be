#include "ruinkit/rng.hpp"

#include <cmath>

namespace ruinkit {
namespace detail {

ZigguratTables::ZigguratTables() {
    // Marsaglia-Tsang setup constants for 128 layers
    const double m1 = 2147483648.0;
    double dn = 3.442619855899;
    double tn = dn;
    const double vn = 9.91256303526217e-3;

    const double q = vn / std::exp(-0.5 * dn * dn);
    kn[0] = static_cast<std::uint32_t>((dn / q) * m1);
    kn[1] = 0;
    wn[0] = q / m1;
    wn[127] = dn / m1;
    fn[0] = 1.0;
    fn[127] = std::exp(-0.5 * dn * dn);
    for (int i = 126; i >= 1; --i) {
        dn = std::sqrt(-2.0 * std::log(vn / dn + std::exp(-0.5 * dn * dn)));
        kn[i + 1] = static_cast<std::uint32_t>((dn / tn) * m1);
        tn = dn;
        fn[i] = std::exp(-0.5 * dn * dn);
        wn[i] = dn / m1;
    }
}

const ZigguratTables& ziggurat_tables() {
    static const ZigguratTables tables;
    return tables;
}

}  // namespace detail

double PathRng::normal_fix(std::int32_t hz, std::uint32_t iz, const detail::ZigguratTables& zt) {
    constexpr double r = 3.442619855899;
    const double x = hz * zt.wn[iz];
    if (iz == 0) {
        // tail beyond r
        double xx, yy;
        do {
            xx = -std::log(uniform()) / r;
            yy = -std::log(uniform());
        } while (yy + yy < xx * xx);
        return hz > 0 ? r + xx : -(r + xx);
    }
    if (zt.fn[iz] + uniform() * (zt.fn[iz - 1] - zt.fn[iz]) < std::exp(-0.5 * x * x)) return x;
    return std::nan("");  // resample
}

}  // namespace ruinkit
