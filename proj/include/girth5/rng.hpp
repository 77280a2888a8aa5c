#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace girth5 {

/// Seedable 64-bit generator with portable bounded draws. The standard
/// distributions are implementation-defined, so draws are done by hand to
/// keep runs bit-identical across standard libraries.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound); bound must be positive.
    std::size_t uniform_index(std::size_t bound) {
        const std::uint64_t b = bound;
        const std::uint64_t threshold = (0 - b) % b;
        while (true) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return static_cast<std::size_t>(x % b);
        }
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t next() { return engine_(); }

   private:
    std::mt19937_64 engine_;
};

/// Derives the seed of an independent stream from a master seed and a
/// stream id (SplitMix64 finalizer over both).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(master) ^ stream);
}

}  // namespace girth5
