#ifndef RUINKIT_RNG_HPP
#define RUINKIT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace ruinkit {

namespace detail {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// ziggurat tables for the standard normal, 128 layers
struct ZigguratTables {
    std::uint32_t kn[128];
    double wn[128];
    double fn[128];
    ZigguratTables();
};

const ZigguratTables& ziggurat_tables();

}  // namespace detail

// Counter-based generator: the stream is a pure function of (seed, stream_id),
// so path-parallel simulation is reproducible for any worker count.
class PathRng {
public:
    PathRng(std::uint64_t seed, std::uint64_t stream_id)
        : base_(detail::mix64(detail::mix64(seed + 0x9E3779B97F4A7C15ULL) ^
                              (stream_id + 0xD1B54A32D192ED03ULL))),
          counter_(0) {}

    std::uint64_t next_u64() { return detail::mix64(base_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

    // uniform on the open interval (0, 1)
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double exponential(double rate) { return -std::log(uniform()) / rate; }

    // standard normal via 128-layer ziggurat
    double normal() {
        const auto& zt = detail::ziggurat_tables();
        for (;;) {
            const std::int32_t hz = static_cast<std::int32_t>(next_u64() >> 32);
            const std::uint32_t iz = static_cast<std::uint32_t>(hz) & 127u;
            const std::uint32_t az =
                hz < 0 ? static_cast<std::uint32_t>(-static_cast<std::int64_t>(hz))
                       : static_cast<std::uint32_t>(hz);
            if (az < zt.kn[iz]) return hz * zt.wn[iz];
            const double x = normal_fix(hz, iz, zt);
            if (!std::isnan(x)) return x;
        }
    }

private:
    double normal_fix(std::int32_t hz, std::uint32_t iz, const detail::ZigguratTables& zt);

    std::uint64_t base_;
    std::uint64_t counter_;
};

}  // namespace ruinkit

#endif  // RUINKIT_RNG_HPP
