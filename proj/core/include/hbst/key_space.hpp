#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hbst {

using Key = std::uint64_t;

/// Thrown when a key does not fit the tree's key width.
class KeyOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Number of bits B of the key space [0, 2^B). Valid range is 1..64.
class KeyWidth {
 public:
  static constexpr unsigned kMinBits = 1;
  static constexpr unsigned kMaxBits = 64;

  constexpr explicit KeyWidth(unsigned bits) : bits_(bits) {
    if (bits < kMinBits || bits > kMaxBits) {
      throw std::invalid_argument("key width must be between 1 and 64 bits, got " +
                                  std::to_string(bits));
    }
  }

  constexpr unsigned bits() const noexcept { return bits_; }

  constexpr Key max_key() const noexcept {
    return bits_ == 64 ? ~Key{0} : (Key{1} << bits_) - 1;
  }

  constexpr bool admits(Key key) const noexcept { return key <= max_key(); }

  /// True when the key space holds at least `count` distinct keys.
  constexpr bool holds(std::uint64_t count) const noexcept {
    return bits_ == 64 || count <= (std::uint64_t{1} << bits_);
  }

  friend constexpr bool operator==(KeyWidth, KeyWidth) = default;

 private:
  unsigned bits_;
};

enum class Side : std::uint8_t { kLeft, kRight };

/// Half-open interval [lo, lo + 2^(B - depth)) attached to a tree position.
/// The upper bound is never materialized, so B = 64 needs no wider integer.
struct IntervalFrame {
  Key lo = 0;
  unsigned depth = 0;

  friend constexpr bool operator==(const IntervalFrame&, const IntervalFrame&) = default;
};

inline constexpr IntervalFrame kRootFrame{0, 0};

/// log2 of the frame's size.
constexpr unsigned span_bits(IntervalFrame frame, KeyWidth width) noexcept {
  return width.bits() - frame.depth;
}

/// Midpoint of the frame; the frame's lower bound for a unit interval.
constexpr Key hidden_ref(IntervalFrame frame, KeyWidth width) noexcept {
  const unsigned span = span_bits(frame, width);
  return span == 0 ? frame.lo : frame.lo + (Key{1} << (span - 1));
}

constexpr bool frame_contains(IntervalFrame frame, KeyWidth width, Key key) noexcept {
  if (key < frame.lo) return false;
  const unsigned span = span_bits(frame, width);
  return span == 64 || ((key - frame.lo) >> span) == 0;
}

/// Last key inside the frame (inclusive).
constexpr Key frame_last(IntervalFrame frame, KeyWidth width) noexcept {
  const unsigned span = span_bits(frame, width);
  return span == 64 ? ~Key{0} : frame.lo + ((Key{1} << span) - 1);
}

inline IntervalFrame child_frame(IntervalFrame frame, Side side, KeyWidth width) {
  if (frame.depth >= width.bits()) {
    throw std::domain_error("unit interval frame has no children");
  }
  const Key lo = side == Side::kLeft ? frame.lo : hidden_ref(frame, width);
  return {lo, frame.depth + 1};
}

/// Which child a key descends into from a frame. Ties go right.
constexpr Side route(IntervalFrame frame, KeyWidth width, Key key) noexcept {
  return key < hidden_ref(frame, width) ? Side::kLeft : Side::kRight;
}

/// "[lo,hi)" with the exclusive bound printed exactly, including 2^64.
std::string format_frame(IntervalFrame frame, KeyWidth width);

}  // namespace hbst
