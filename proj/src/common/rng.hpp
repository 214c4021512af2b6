#pragma once

#include <cmath>
#include <cstdint>

namespace cfclock {

/// Counter-based stream keyed by (seed, stream index). Each draw hashes an
/// incrementing counter (SplitMix64), so a path's sequence depends only on
/// its key and draw count; serial and parallel ensembles produce identical
/// paths.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) {
        // mix the stream index into the key before offsetting the counter
        std::uint64_t k = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        k = mix(k);
        counter_ = mix(k ^ 0x2545f4914f6cdd1dULL);
    }

    std::uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ULL;
        return mix(counter_);
    }

    /// Uniform on (0, 1).
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; pairs cached.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 6.283185307179586 * u2;
        spare_ = r * std::sin(phi);
        has_spare_ = true;
        return r * std::cos(phi);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace cfclock
