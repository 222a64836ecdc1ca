#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace forge::util {

// Deterministic random source used everywhere a seed appears in the
// toolchain. The standard library distributions are implementation
// defined, so the value transforms live here and are part of the
// reproducibility contract.
//
// Draw protocol (tests that replay a stream rely on it):
//   uniform()       consumes 1 engine step, returns [0,1)
//   uniform(lo,hi)  consumes 1 engine step
//   normal(sigma)   consumes exactly 2 engine steps (Box-Muller, no cache)
//   index(n)        consumes 1 engine step
//   shuffle(v)      consumes (v.size()-1) engine steps (Fisher-Yates,
//                   descending i, one index(i+1) draw each)
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // splitmix64; portable and plenty for simulation noise.
    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Gaussian via Box-Muller; always consumes two draws, never caches.
    double normal(double sigma);

    // Uniform integer in [0, n); n must be >= 1. Multiply-shift, no rejection.
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[index(i)]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace forge::util
