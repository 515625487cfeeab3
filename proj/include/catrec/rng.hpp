#ifndef CATREC_RNG_HPP
#define CATREC_RNG_HPP

#include <cstdint>

namespace catrec {

// SplitMix64; per-task streams are derived from (root seed, stream index) so
// parallel work partitioned by index is deterministic regardless of thread count.
class RngStream {
  public:
    explicit RngStream(std::uint64_t root_seed, std::uint64_t stream = 0) {
        state_ = mix(root_seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
        state_ = mix(state_ ^ 0xBF58476D1CE4E5B9ULL);
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // uniform in [0, n), rejection sampled
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t lim = n * (UINT64_MAX / n);
        std::uint64_t v = next();
        while (v >= lim) v = next();
        return v % n;
    }

    // uniform in [-k, k]
    std::int64_t small_int(std::int64_t k) {
        return static_cast<std::int64_t>(below(2 * static_cast<std::uint64_t>(k) + 1)) - k;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1]
    double uniform_sym() { return 2.0 * uniform() - 1.0; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace catrec

#endif
