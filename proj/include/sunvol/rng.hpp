#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace sunvol::rng {

// Philox4x32-10 counter-based generator. Chosen over std::mt19937_64 so that
// (seed, stream) pairs give independent, order-insensitive streams: parallel
// integration chunks each get their own stream id and the combined result is
// identical no matter how work is scheduled.
struct Philox4x32 {
  static constexpr std::uint32_t M0 = 0xD2511F53u;
  static constexpr std::uint32_t M1 = 0xCD9E8D57u;
  static constexpr std::uint32_t W0 = 0x9E3779B9u;
  static constexpr std::uint32_t W1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t(M0) * ctr[0];
      const std::uint64_t p1 = std::uint64_t(M1) * ctr[2];
      ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
             std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
      key[0] += W0;
      key[1] += W1;
    }
    return ctr;
  }
};

// One logical random stream: deterministic function of (seed, stream_id).
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)},
        stream_lo_(std::uint32_t(stream_id)),
        stream_hi_(std::uint32_t(stream_id >> 32)) {}

  std::uint32_t next_u32() {
    if (have_ == 0) refill();
    return buffer_[--have_];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // uniform in [0, 1), 53-bit resolution
  double next_u01() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_u01(); }

  // standard normal via Box-Muller (explicit, so draws match across platforms)
  double next_normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - next_u01();  // (0, 1]
    const double u2 = next_u01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
  }

 private:
  void refill() {
    buffer_ = Philox4x32::block(
        {std::uint32_t(block_), std::uint32_t(block_ >> 32), stream_lo_, stream_hi_}, key_);
    ++block_;
    have_ = 4;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint32_t stream_lo_, stream_hi_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int have_ = 0;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace sunvol::rng
