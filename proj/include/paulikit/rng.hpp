// Seeded random source with pinned output transforms.
//
// The engine is std::mt19937_64, whose output sequence for a given seed is
// fully specified by the C++ standard, and both floating transforms below are
// fixed arithmetic on the raw 64-bit draws. A fixed seed therefore reproduces
// identical uniform streams on any conforming platform.
//
//   uniform():  (next_u64() >> 11) * 2^-53           in [0, 1)
//   normal():   Box-Muller on two fresh draws, u1 taken from (0, 1]:
//               sqrt(-2 ln u1) * cos(2 pi u2)
//
// Substreams are derived counter-style: substream(seed, i) seeds a fresh
// engine with the i-th output of the SplitMix64 sequence started at `seed`.
#pragma once

#include <cstdint>
#include <random>

namespace paulikit {

/// One step of the SplitMix64 output function.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream derived deterministically from (seed, index).
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64_at(seed, index));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double normal();

  private:
    std::mt19937_64 engine_;
};

}  // namespace paulikit
