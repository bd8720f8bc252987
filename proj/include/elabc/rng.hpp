#pragma once

#include <cstdint>

namespace elabc {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Two-round key derivation; folds one salt word into a stream key.
inline std::uint64_t fold(std::uint64_t key, std::uint64_t word) {
  return mix64((key + kGolden) ^ mix64(word + kGolden));
}

}  // namespace detail

/// Counter-based pseudo-random stream: the output sequence is a hash of
/// key + counter, so a stream is a pure function of its 64-bit key.
/// Substreams are derived by hashing salt words into the key, never by
/// sharing state, which makes (chain, iteration, replicate) keyed
/// substreams independent and bit-reproducible across platforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : key_(key), state_(key) {}

  std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  /// Uniform draw on the open interval (0,1); never returns 0 or 1.
  double uniform01() {
    const std::uint64_t bits = next_u64() >> 11;  // top 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t key() const { return key_; }

  /// Child stream keyed off this stream's identity (not its position),
  /// so splits are stable no matter how much the parent has consumed.
  RngStream split(std::uint64_t a) const {
    return RngStream(detail::fold(key_, a));
  }
  RngStream split(std::uint64_t a, std::uint64_t b) const {
    return RngStream(detail::fold(detail::fold(key_, a), b));
  }
  RngStream split(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    return RngStream(detail::fold(detail::fold(detail::fold(key_, a), b), c));
  }

 private:
  std::uint64_t key_;
  std::uint64_t state_;
};

}  // namespace elabc
