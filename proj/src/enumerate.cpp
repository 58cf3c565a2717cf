#include "rellaws/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rellaws {

void check_cardinality(int n) {
  if (n < 1 || n > kMaxCard)
    throw std::invalid_argument("universe cardinality must be in 1.." +
                                std::to_string(kMaxCard) + ", got " +
                                std::to_string(n));
}

RowSignature row_signature(const Relation& r, int i) {
  if (i < 0 || i >= r.size())
    throw std::out_of_range("row index " + std::to_string(i) + " out of range");
  const unsigned row = r.row(i);
  return RowSignature{std::popcount(row & ~(1u << i)), ((row >> i) & 1u) != 0};
}

bool is_normal_form(const Relation& r) {
  for (int i = 1; i < r.size(); ++i)
    if (row_signature(r, i) < row_signature(r, i - 1)) return false;
  return true;
}

std::vector<int> normalizing_permutation(const Relation& r) {
  std::vector<int> perm(static_cast<std::size_t>(r.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return row_signature(r, a) < row_signature(r, b);
  });
  return perm;
}

Relation canonicalize(const Relation& r) {
  return permute(r, normalizing_permutation(r));
}

AllRelations::AllRelations(int n) : n_(n) {
  check_cardinality(n);
  for (unsigned s = 0; s < (1u << n); ++s) rows_[s] = detail::row_from_string_value(n, s);
}

NormalForms::NormalForms(int n) : n_(n) {
  check_cardinality(n);
  for (int pos = 0; pos < n; ++pos) {
    for (unsigned s = 0; s < (1u << n); ++s) {
      const std::uint8_t row = detail::row_from_string_value(n, s);
      const int c = std::popcount(static_cast<unsigned>(row) & ~(1u << pos));
      const int d = (row >> pos) & 1;
      groups_[pos][2 * c + d].push_back(row);
    }
  }
}

std::vector<NormalForms::Prefix> NormalForms::prefixes(int depth) const {
  if (depth < 0 || depth > n_)
    throw std::invalid_argument("prefix depth out of range");
  std::vector<Prefix> level{Prefix{}};
  for (int pos = 0; pos < depth; ++pos) {
    std::vector<Prefix> next;
    for (const Prefix& p : level)
      for (int g = p.group; g < 2 * n_; ++g)
        for (std::uint8_t row : groups_[pos][g])
          next.push_back(Prefix{p.bits | (std::uint64_t{row} << (8 * pos)), pos + 1, g});
    level = std::move(next);
  }
  return level;
}

}  // namespace rellaws
