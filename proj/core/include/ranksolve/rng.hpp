#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace ranksolve::rng {

// Philox4x32-10 counter-based generator. A draw is a pure function of
// (seed, stream, index), so data generation is reproducible and
// parallelizable without shared state. Streams used by this project:
//   0 = design-matrix entries, 1 = noise, 2 = permutations/splits.
struct Philox4x32 {
  uint64_t seed;
  uint64_t stream;

  static constexpr uint32_t kMul0 = 0xD2511F53u;
  static constexpr uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr uint32_t kW0 = 0x9E3779B9u;
  static constexpr uint32_t kW1 = 0xBB67AE85u;

  // One 128-bit block -> two 64-bit outputs.
  std::array<uint64_t, 2> block(uint64_t index) const {
    uint32_t c0 = static_cast<uint32_t>(index);
    uint32_t c1 = static_cast<uint32_t>(index >> 32);
    uint32_t c2 = static_cast<uint32_t>(stream);
    uint32_t c3 = static_cast<uint32_t>(stream >> 32);
    uint32_t k0 = static_cast<uint32_t>(seed);
    uint32_t k1 = static_cast<uint32_t>(seed >> 32);
    for (int round = 0; round < 10; ++round) {
      uint64_t p0 = static_cast<uint64_t>(kMul0) * c0;
      uint64_t p1 = static_cast<uint64_t>(kMul1) * c2;
      uint32_t hi0 = static_cast<uint32_t>(p0 >> 32);
      uint32_t lo0 = static_cast<uint32_t>(p0);
      uint32_t hi1 = static_cast<uint32_t>(p1 >> 32);
      uint32_t lo1 = static_cast<uint32_t>(p1);
      uint32_t n0 = hi1 ^ c1 ^ k0;
      uint32_t n1 = lo1;
      uint32_t n2 = hi0 ^ c3 ^ k1;
      uint32_t n3 = lo0;
      c0 = n0;
      c1 = n1;
      c2 = n2;
      c3 = n3;
      k0 += kW0;
      k1 += kW1;
    }
    return {(static_cast<uint64_t>(c1) << 32) | c0,
            (static_cast<uint64_t>(c3) << 32) | c2};
  }
};

// Strictly inside (0, 1); safe for log().
inline double to_unit_open(uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller from one Philox block.
inline double normal_at(const Philox4x32& gen, uint64_t index) {
  auto b = gen.block(index);
  double u1 = to_unit_open(b[0]);
  double u2 = to_unit_open(b[1]);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

inline double cauchy_at(const Philox4x32& gen, uint64_t index) {
  auto b = gen.block(index);
  double u = to_unit_open(b[0]);
  return std::tan(3.14159265358979323846264338328 * (u - 0.5));
}

// Student t with 4 d.o.f.: Z * sqrt(4 / chi2_4), chi2_4 = -2 log(u1 u2).
// Uses two consecutive blocks.
inline double student_t4_at(const Philox4x32& gen, uint64_t index) {
  double z = normal_at(gen, 2 * index);
  auto b = gen.block(2 * index + 1);
  double chi2 = -2.0 * (std::log(to_unit_open(b[0])) + std::log(to_unit_open(b[1])));
  return z * std::sqrt(4.0 / chi2);
}

// 0.95 N(0,1) + 0.05 N(0,100). Uses two consecutive blocks.
inline double mixture_normal_at(const Philox4x32& gen, uint64_t index) {
  auto sel = gen.block(2 * index);
  double z = normal_at(gen, 2 * index + 1);
  return to_unit_open(sel[0]) < 0.05 ? 10.0 * z : z;
}

// Uniform integer in [0, bound) by rejection-free 128-bit multiply
// (Lemire); bias is negligible at 64-bit width and irrelevant here,
// but keep the draw a pure function of the index.
inline uint64_t bounded_at(const Philox4x32& gen, uint64_t index, uint64_t bound) {
  auto b = gen.block(index);
  return static_cast<uint64_t>((static_cast<__uint128_t>(b[0]) * bound) >> 64);
}

}  // namespace ranksolve::rng
