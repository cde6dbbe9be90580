#pragma once

#include <complex>
#include <cstdint>

namespace entdetect {

// SplitMix64 used in counter mode: the k-th output word is the SplitMix64
// finalizer applied to key + k * golden ratio, with the key derived from
// (global_seed, stream_id, index). Streams are independent by construction
// and every word is a pure function of (seed, stream, index, counter), which
// pins batch outputs bit-for-bit regardless of evaluation order.
class CounterRng {
 public:
  CounterRng(std::uint64_t global_seed, std::uint64_t stream_id,
             std::uint64_t index);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double next_double();

  // Standard normal via Box-Muller on 64-bit uniforms.
  double next_gaussian();

  // Standard complex Gaussian: independent N(0,1) real and imaginary parts.
  std::complex<double> next_complex_gaussian();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Fixed stream ids, one per sampler family.
namespace stream {
inline constexpr std::uint64_t kHilbertSchmidt = 0x68735f73746174ULL;
inline constexpr std::uint64_t kSeparable = 0x7365705f6d6978ULL;
inline constexpr std::uint64_t kChessboard = 0x63686573735f73ULL;
inline constexpr std::uint64_t kScan = 0x7363616e5f6964ULL;
inline constexpr std::uint64_t kTest = 0x746573745f6964ULL;
}  // namespace stream

}  // namespace entdetect
