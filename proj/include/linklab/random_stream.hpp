#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace linklab {

// Reproducible integer-only generator: mt19937_64 seeded through seed_seq
// with the 32-bit halves of (seed, stream_id).  Bounded draws use Lemire's
// multiply-shift with rejection, so results never depend on the platform's
// distribution implementations.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() { return engine_(); }
  // Uniform on [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (engine_() >> 63) != 0; }
  // Independent uniform draws out[i] in [0, radix[i]), packed into as few
  // 64-bit draws as possible (mixed-radix split of one bounded draw).
  void mixed(const std::uint64_t* radix, std::uint64_t* out, std::size_t count);
  // Uniform double in [0, 1) built from the top 53 bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace linklab
