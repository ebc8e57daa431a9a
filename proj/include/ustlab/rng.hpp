#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace ustlab {

// Philox4x32-10 keyed by the seed; the stream id occupies the upper half of
// the counter, so distinct streams never share a counter block.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  // Uniform on [0, bound), bound > 0.
  std::uint64_t uniform_index(std::uint64_t bound);

  result_type operator()() { return next_u64(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  using Block = std::array<std::uint32_t, 4>;
  static Block philox(Block counter, std::array<std::uint32_t, 2> key);

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  unsigned used_ = 2;
};

}  // namespace ustlab
