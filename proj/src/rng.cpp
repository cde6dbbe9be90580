#include "entdetect/rng.hpp"

#include <cmath>
#include <numbers>

namespace entdetect {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t global_seed, std::uint64_t stream_id,
                       std::uint64_t index) {
  std::uint64_t key = mix(global_seed + kGolden);
  key = mix(key ^ (stream_id + kGolden));
  key = mix(key ^ (index + kGolden));
  key_ = key;
}

std::uint64_t CounterRng::next_u64() {
  counter_ += 1;
  return mix(key_ + counter_ * kGolden);
}

double CounterRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] keeps the log finite.
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = next_double();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

std::complex<double> CounterRng::next_complex_gaussian() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return {re, im};
}

}  // namespace entdetect
