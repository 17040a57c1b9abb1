#pragma once

#include <cstdint>
#include <random>

namespace rigidity {

/// Independent deterministic stream for (seed, stream, index). Streams for
/// different indices can be generated in any order or concurrently and still
/// reproduce the same values.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform in [lo, hi). Avoids std::uniform_real_distribution so the stream
/// is identical across standard library implementations.
inline double uniform(std::mt19937_64& engine, double lo, double hi) {
  const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

/// Uniform integer in [lo, hi].
inline int uniform_int(std::mt19937_64& engine, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine() % span);
}

}  // namespace rigidity
