#pragma once

// Hypercube vertices as fixed-width bit words, plus the complement and
// reversal involutions and Hamming distance.

#include <bit>
#include <compare>
#include <cstdint>
#include <ranges>
#include <stdexcept>
#include <string>

namespace hexmatch {

/// Largest supported word width.
inline constexpr unsigned max_width = 30;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value or width outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two bit vectors of different widths were combined.
class WidthMismatch : public Error {
 public:
  WidthMismatch(unsigned lhs, unsigned rhs)
      : Error("width mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}

  unsigned lhs() const noexcept { return lhs_; }
  unsigned rhs() const noexcept { return rhs_; }

 private:
  unsigned lhs_;
  unsigned rhs_;
};

inline void check_width(unsigned width, unsigned limit = max_width) {
  if (width < 1 || width > limit) {
    throw RangeError("width " + std::to_string(width) + " outside [1, " + std::to_string(limit) +
                     "]");
  }
}

/// Number of vertices of the width-dimensional hypercube.
inline std::uint64_t vertex_count(unsigned width) { return std::uint64_t{1} << width; }

/// An n-bit word, bit i holding coordinate i. Bit 0 is the least significant
/// bit (the bottom line of a hexagram).
class BitVector {
 public:
  using value_type = std::uint32_t;

  /// Throws RangeError unless 1 <= width <= max_width and value < 2^width.
  BitVector(std::uint64_t value, unsigned width) : value_(0), width_(width) {
    if (width < 1 || width > max_width || value >= vertex_count(width)) {
      throw RangeError("cannot make bit vector with value " + std::to_string(value) +
                       " and width " + std::to_string(width) + " (need 1 <= width <= " +
                       std::to_string(max_width) + " and value < 2^width)");
    }
    value_ = static_cast<value_type>(value);
  }

  value_type value() const noexcept { return value_; }
  unsigned width() const noexcept { return width_; }
  value_type mask() const noexcept { return static_cast<value_type>(vertex_count(width_) - 1); }
  bool bit(unsigned i) const noexcept { return ((value_ >> i) & 1U) != 0; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  value_type value_;
  unsigned width_;
};

inline BitVector make(std::uint64_t value, unsigned width) { return BitVector(value, width); }

inline BitVector complement(BitVector h) { return BitVector(h.value() ^ h.mask(), h.width()); }

inline BitVector reverse(BitVector h) {
  const unsigned n = h.width();
  BitVector::value_type out = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (h.bit(i)) out |= BitVector::value_type{1} << (n - 1 - i);
  }
  return BitVector(out, n);
}

inline BitVector comp_rev(BitVector h) { return complement(reverse(h)); }

inline unsigned hamming(BitVector a, BitVector b) {
  if (a.width() != b.width()) throw WidthMismatch(a.width(), b.width());
  return static_cast<unsigned>(std::popcount(a.value() ^ b.value()));
}

inline bool is_palindrome(BitVector h) { return reverse(h) == h; }

// Never true for odd widths: the middle bit would have to differ from itself.
inline bool is_antisymmetric(BitVector h) { return reverse(h) == complement(h); }

/// All 2^width vertices in increasing value order.
inline auto all_values(unsigned width) {
  check_width(width);
  return std::views::iota(std::uint64_t{0}, vertex_count(width)) |
         std::views::transform([width](std::uint64_t v) { return BitVector(v, width); });
}

}  // namespace hexmatch
