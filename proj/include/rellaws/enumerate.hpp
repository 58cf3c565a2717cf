#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "rellaws/relation.hpp"

namespace rellaws {

/// Permutation-invariant summary of one matrix row: the number of related
/// columns other than the diagonal, then the diagonal cell. Ordered
/// lexicographically with false < true.
struct RowSignature {
  int off_diagonal = 0;
  bool diagonal = false;

  /// Dense index 2*c + d, which preserves the lexicographic order.
  int group() const { return 2 * off_diagonal + (diagonal ? 1 : 0); }
  friend auto operator<=>(const RowSignature&, const RowSignature&) = default;
};

RowSignature row_signature(const Relation& r, int i);

/// True iff row signatures are nondecreasing from row 0 to row n-1.
bool is_normal_form(const Relation& r);

/// Indices stably sorted by row signature.
std::vector<int> normalizing_permutation(const Relation& r);

/// Applies normalizing_permutation simultaneously to rows and columns. The
/// result is in normal form and isomorphic to `r`, but isomorphic inputs can
/// yield different normal forms.
Relation canonicalize(const Relation& r);

/// Throws std::invalid_argument unless 1 <= n <= kMaxCard.
void check_cardinality(int n);

namespace detail {

// Lets visitors return void (visit everything) or bool (false stops early).
template <typename Visitor>
bool invoke_visitor(Visitor& visit, const Relation& r) {
  if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const Relation&>, bool>) {
    return visit(r);
  } else {
    visit(r);
    return true;
  }
}

// Row whose text form, read with column 0 as the most significant bit, is `s`.
inline std::uint8_t row_from_string_value(int n, unsigned s) {
  unsigned row = 0;
  for (int y = 0; y < n; ++y)
    if (s & (1u << (n - 1 - y))) row |= 1u << y;
  return static_cast<std::uint8_t>(row);
}

}  // namespace detail

/// Streams every n x n relation once, ascending by the matrix read as a
/// row-major bit string with cell (0,0) most significant.
///
/// The space splits into 2^(n*depth) partitions by fixing the first `depth`
/// rows; partition p holds the relations whose leading rows spell the digits
/// of p, so visiting partitions in ascending order reproduces the full order.
class AllRelations {
public:
  explicit AllRelations(int n);

  int size() const { return n_; }
  std::uint64_t partition_count(int depth) const {
    return std::uint64_t{1} << (n_ * depth);
  }

  template <typename Visitor>
  std::uint64_t run(Visitor&& visit) const {
    return run_partition(0, 0, visit);
  }

  /// Returns the number of relations visited.
  template <typename Visitor>
  std::uint64_t run_partition(int depth, std::uint64_t p, Visitor&& visit) const {
    std::uint64_t bits = 0;
    for (int x = 0; x < depth; ++x) {
      const unsigned digit = static_cast<unsigned>(
          (p >> (n_ * (depth - 1 - x))) & ((1u << n_) - 1u));
      bits |= std::uint64_t{rows_[digit]} << (8 * x);
    }
    std::uint64_t visited = 0;
    descend(depth, bits, visit, visited);
    return visited;
  }

private:
  template <typename Visitor>
  bool descend(int x, std::uint64_t bits, Visitor& visit, std::uint64_t& visited) const {
    if (x == n_) {
      ++visited;
      return detail::invoke_visitor(visit, Relation::from_bits(n_, bits));
    }
    const unsigned rows = 1u << n_;
    for (unsigned s = 0; s < rows; ++s)
      if (!descend(x + 1, bits | (std::uint64_t{rows_[s]} << (8 * x)), visit, visited))
        return false;
    return true;
  }

  int n_;
  std::array<std::uint8_t, 256> rows_{};
};

/// Streams exactly the relations in normal form, built row-group-wise: the
/// rows are drawn from signature groups whose indices never decrease, so no
/// relation outside normal form is generated.
///
/// Order: group of row 0, then its row, then group of row 1, and so on, with
/// rows inside a group ascending by their text value. Prefixes fixing the
/// first rows partition the stream; visiting prefixes in the order returned by
/// `prefixes` reproduces the full order.
class NormalForms {
public:
  explicit NormalForms(int n);

  struct Prefix {
    std::uint64_t bits = 0;
    int depth = 0;
    int group = 0;  // group of the last fixed row; 0 when depth == 0
  };

  int size() const { return n_; }
  /// Rows of group `g` at row position `pos`, in visiting order.
  const std::vector<std::uint8_t>& group_rows(int pos, int g) const { return groups_[pos][g]; }
  int group_count() const { return 2 * n_; }

  std::vector<Prefix> prefixes(int depth) const;

  template <typename Visitor>
  std::uint64_t run(Visitor&& visit) const {
    return run_prefix(Prefix{}, visit);
  }

  template <typename Visitor>
  std::uint64_t run_prefix(const Prefix& prefix, Visitor&& visit) const {
    std::uint64_t visited = 0;
    if (prefix.depth == n_) {
      ++visited;
      detail::invoke_visitor(visit, Relation::from_bits(n_, prefix.bits));
      return visited;
    }
    descend(prefix.depth, prefix.group, prefix.bits, visit, visited);
    return visited;
  }

private:
  template <typename Visitor>
  bool descend(int pos, int min_group, std::uint64_t bits, Visitor& visit,
               std::uint64_t& visited) const {
    const bool last = pos == n_ - 1;
    for (int g = min_group; g < 2 * n_; ++g) {
      for (std::uint8_t row : groups_[pos][g]) {
        const std::uint64_t next = bits | (std::uint64_t{row} << (8 * pos));
        if (last) {
          ++visited;
          if (!detail::invoke_visitor(visit, Relation::from_bits(n_, next))) return false;
        } else if (!descend(pos + 1, g, next, visit, visited)) {
          return false;
        }
      }
    }
    return true;
  }

  int n_;
  std::array<std::array<std::vector<std::uint8_t>, 2 * kMaxCard>, kMaxCard> groups_;
};

/// Visits all 2^(n^2) relations; returns the visit count.
template <typename Visitor>
std::uint64_t enumerate_all(int n, Visitor&& visit) {
  return AllRelations(n).run(visit);
}

/// Visits every relation in normal form once; returns the visit count.
template <typename Visitor>
std::uint64_t enumerate_normal(int n, Visitor&& visit) {
  return NormalForms(n).run(visit);
}

}  // namespace rellaws
