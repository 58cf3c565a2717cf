#include "rellaws/relation.hpp"

#include <sstream>
#include <stdexcept>

namespace rellaws {

namespace {

void check_card(int n) {
  if (n < 1 || n > kMaxCard)
    throw std::invalid_argument("universe cardinality must be in 1.." +
                                std::to_string(kMaxCard) + ", got " +
                                std::to_string(n));
}

void check_index(const Relation& r, int i) {
  if (i < 0 || i >= r.size())
    throw std::out_of_range("element index " + std::to_string(i) +
                            " outside universe of size " +
                            std::to_string(r.size()));
}

}  // namespace

Relation::Relation(int n) : n_(n) { check_card(n); }

Relation Relation::universal(int n) {
  Relation r(n);
  for (int x = 0; x < n; ++x)
    r.bits_ |= std::uint64_t{r.full_mask()} << (x * 8);
  return r;
}

Relation Relation::identity(int n) {
  Relation r(n);
  for (int x = 0; x < n; ++x) r.set(x, x);
  return r;
}

Relation Relation::from_rows(std::span<const std::uint8_t> rows) {
  Relation r(static_cast<int>(rows.size()));
  for (int x = 0; x < r.n_; ++x) {
    if (rows[x] & ~r.full_mask())
      throw std::invalid_argument("row " + std::to_string(x) +
                                  " has bits outside the universe");
    r.bits_ |= std::uint64_t{rows[x]} << (x * 8);
  }
  return r;
}

Relation Relation::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
  Relation r(n);
  for (auto [x, y] : pairs) {
    check_index(r, x);
    check_index(r, y);
    r.set(x, y);
  }
  return r;
}

std::uint8_t Relation::column(int y) const noexcept {
  // Gather bit y of every byte.
  constexpr std::uint64_t kLowBits = 0x0101010101010101ull;
  const std::uint64_t spread = (bits_ >> y) & kLowBits;
  return static_cast<std::uint8_t>((spread * 0x0102040810204080ull) >> 56);
}

Relation converse(const Relation& r) {
  Relation out(r.size());
  for (int y = 0; y < r.size(); ++y)
    for (int x = 0; x < r.size(); ++x)
      if (r.test(x, y)) out.set(y, x);
  return out;
}

Relation restrict(const Relation& r, std::span<const int> subset) {
  if (subset.empty()) throw std::invalid_argument("restriction to an empty subset");
  unsigned seen = 0;
  for (int i : subset) {
    check_index(r, i);
    if (seen & (1u << i))
      throw std::invalid_argument("duplicate index " + std::to_string(i) +
                                  " in restriction subset");
    seen |= 1u << i;
  }
  Relation out(static_cast<int>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j)
      if (r.test(subset[i], subset[j]))
        out.set(static_cast<int>(i), static_cast<int>(j));
  return out;
}

std::vector<int> successors(const Relation& r, int x) {
  check_index(r, x);
  std::vector<int> out;
  for (int y = 0; y < r.size(); ++y)
    if (r.test(x, y)) out.push_back(y);
  return out;
}

std::vector<int> predecessors(const Relation& r, int y) {
  check_index(r, y);
  std::vector<int> out;
  for (int x = 0; x < r.size(); ++x)
    if (r.test(x, y)) out.push_back(x);
  return out;
}

Relation permute(const Relation& r, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != r.size())
    throw std::invalid_argument("permutation length does not match universe");
  return restrict(r, perm);
}

Relation parse_relation(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  const int n = static_cast<int>(lines.size());
  check_card(n);
  Relation r(n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(lines[x].size()) != n)
      throw std::invalid_argument("relation line " + std::to_string(x + 1) +
                                  " has " + std::to_string(lines[x].size()) +
                                  " cells, expected " + std::to_string(n));
    for (int y = 0; y < n; ++y) {
      switch (lines[x][y]) {
        case '1': r.set(x, y); break;
        case '0':
        case '.': break;
        default:
          throw std::invalid_argument(std::string("unexpected character '") +
                                      lines[x][y] + "' in relation text");
      }
    }
  }
  return r;
}

std::string format_relation(const Relation& r) {
  std::string out;
  out.reserve(static_cast<std::size_t>(r.size() * (r.size() + 1)));
  for (int x = 0; x < r.size(); ++x) {
    for (int y = 0; y < r.size(); ++y) out += r.test(x, y) ? '1' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace rellaws
