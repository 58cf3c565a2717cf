#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rellaws {

/// Largest supported universe. Every relation fits one 64-bit word of cells.
inline constexpr int kMaxCard = 8;

/// A homogeneous binary relation on the universe {0, ..., n-1}.
///
/// Cell (x, y) is stored at bit `x * 8 + y`, so row x occupies byte x of the
/// word and bit y of that byte is set iff x R y. Bits outside the n x n block
/// are always zero, which makes `bits()` usable as a value key.
class Relation {
public:
  /// Empty relation on n elements; throws std::invalid_argument unless 1 <= n <= 8.
  explicit Relation(int n);

  static Relation empty(int n) { return Relation(n); }
  static Relation universal(int n);
  static Relation identity(int n);
  /// Row x of the result is `rows[x]`, bit y set iff x R y.
  static Relation from_rows(std::span<const std::uint8_t> rows);
  static Relation from_pairs(int n, std::span<const std::pair<int, int>> pairs);
  /// Caller guarantees that no bit outside the n x n block is set.
  static Relation from_bits(int n, std::uint64_t bits) noexcept {
    Relation r;
    r.n_ = n;
    r.bits_ = bits;
    return r;
  }

  int size() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool test(int x, int y) const noexcept { return (bits_ >> (x * 8 + y)) & 1u; }
  void set(int x, int y, bool value = true) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (x * 8 + y);
    bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
  }
  void flip(int x, int y) noexcept { bits_ ^= std::uint64_t{1} << (x * 8 + y); }

  std::uint8_t row(int x) const noexcept {
    return static_cast<std::uint8_t>(bits_ >> (x * 8));
  }
  std::uint8_t column(int y) const noexcept;
  /// Bitmask with the low n bits set.
  std::uint8_t full_mask() const noexcept {
    return static_cast<std::uint8_t>((1u << n_) - 1u);
  }

  friend bool operator==(const Relation&, const Relation&) = default;

private:
  Relation() = default;
  int n_ = 1;
  std::uint64_t bits_ = 0;
};

Relation converse(const Relation& r);

/// Restriction of `r` to the listed elements, renumbered in list order.
/// Throws std::invalid_argument on an empty list, duplicates or out-of-range indices.
Relation restrict(const Relation& r, std::span<const int> subset);

/// { y | x R y }, ascending.
std::vector<int> successors(const Relation& r, int x);
/// { x | x R y }, ascending.
std::vector<int> predecessors(const Relation& r, int y);

/// Simultaneous row/column permutation: result(i, j) = r(perm[i], perm[j]).
Relation permute(const Relation& r, std::span<const int> perm);

// Text format: n lines of n characters, '1' related, '0' or '.' unrelated.
// Blank lines and lines starting with '#' are ignored when parsing.
Relation parse_relation(std::string_view text);
std::string format_relation(const Relation& r);

}  // namespace rellaws
