#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fracsde {

/// Independent-stream seed domains. Driving-path streams use indices below
/// kWStreamBase; the auxiliary Brownian motions of the limit equations live
/// at kWStreamBase + i so they never collide with path streams.
inline constexpr std::uint64_t kWStreamBase = std::uint64_t{1} << 31;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic per-stream RNG: the state is a pure function of
/// (master_seed, stream_id), so ensembles are reproducible independent of
/// scheduling, thread count, or evaluation order.
class StreamRng {
public:
    StreamRng(std::uint64_t master_seed, std::uint64_t stream_id)
        : engine_(splitmix64(splitmix64(master_seed) + stream_id)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// Standard normal draws via the basic Box-Muller transform. No rejection
/// loop, so the draw count per call is fixed and the output sequence is a
/// pure function of the stream.
class GaussianStream {
public:
    GaussianStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : rng_(master_seed, stream_id) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - rng_.next_unit();  // (0,1]
        const double u2 = rng_.next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    StreamRng rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace fracsde
