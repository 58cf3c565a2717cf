#include "rellaws/witness.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rellaws/enumerate.hpp"

namespace rellaws {

namespace {

std::vector<Property> parse_list(std::string_view text) {
  std::vector<Property> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    const auto p = property_from_name(item);
    if (!p) throw std::invalid_argument("unknown property '" + item + "'");
    if (std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
  }
  return out;
}

bool incomparable(const Relation& r, int x, int y) { return !r.test(x, y) && !r.test(y, x); }
bool strictly(const Relation& r, int x, int y) { return r.test(x, y) && !r.test(y, x); }

int score(const Relation& r, const LiteralConjunction& q) {
  int s = 0;
  for (Property p : q.pos) s += violations(r, p);
  for (Property p : q.neg) s += holds(r, p) ? 1 : 0;
  return s;
}

std::optional<Relation> exhaustive(int n, const LiteralConjunction& q, Execution exec) {
  const NormalForms forms(n);
  const auto prefixes = forms.prefixes(n <= 3 ? 0 : (n == 4 ? 1 : 2));
  const auto count = static_cast<std::int64_t>(prefixes.size());
  std::vector<std::optional<Relation>> found(prefixes.size());
  std::atomic<std::int64_t> best{count};

  auto search = [&](std::int64_t i) {
    if (i >= best.load(std::memory_order_relaxed)) return;
    forms.run_prefix(prefixes[static_cast<std::size_t>(i)], [&](const Relation& r) {
      if (!q.satisfied_by(r)) return true;
      found[static_cast<std::size_t>(i)] = r;
      return false;
    });
    if (found[static_cast<std::size_t>(i)]) {
      std::int64_t current = best.load();
      while (i < current && !best.compare_exchange_weak(current, i)) {
      }
    }
  };

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) search(i);
  } else {
    for (std::int64_t i = 0; i < count && best.load() == count; ++i) search(i);
  }
  const std::int64_t winner = best.load();
  if (winner == count) return std::nullopt;
  return found[static_cast<std::size_t>(winner)];
}

std::optional<Relation> heuristic(int n, const LiteralConjunction& q,
                                  const HeuristicOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> cell(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int steps = 8 * n * n;
  const int tenure = n;

  for (std::uint64_t restart = 0; restart < options.restarts; ++restart) {
    // Random fill at a random density, then tabu search over single-cell flips.
    Relation r(n);
    const double density = 0.1 + 0.8 * unit(rng);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (unit(rng) < density) r.set(x, y);

    std::vector<int> last_flip(static_cast<std::size_t>(n * n), -tenure - 1);
    int current = score(r, q);
    for (int step = 0; step < steps && current > 0; ++step) {
      int bx = cell(rng), by = cell(rng);
      if (unit(rng) >= 0.1) {
        int best = -1, ties = 0;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            if (step - last_flip[static_cast<std::size_t>(x * n + y)] <= tenure) continue;
            r.flip(x, y);
            const int s = score(r, q);
            r.flip(x, y);
            if (best < 0 || s < best) {
              best = s;
              ties = 1;
              bx = x;
              by = y;
            } else if (s == best && rng() % static_cast<unsigned>(++ties) == 0) {
              bx = x;
              by = y;
            }
          }
      }
      r.flip(bx, by);
      last_flip[static_cast<std::size_t>(bx * n + by)] = step;
      current = score(r, q);
    }
    if (current == 0 && q.satisfied_by(r)) return r;
  }
  return std::nullopt;
}

}  // namespace

void LiteralConjunction::validate() const {
  for (Property p : pos)
    if (std::find(neg.begin(), neg.end(), p) != neg.end())
      throw std::invalid_argument("property '" + std::string(property_name(p)) +
                                  "' is both required and forbidden");
}

bool LiteralConjunction::satisfied_by(const Relation& r) const {
  for (Property p : pos)
    if (!holds(r, p)) return false;
  for (Property p : neg)
    if (holds(r, p)) return false;
  return true;
}

LiteralConjunction parse_conjunction(std::string_view require, std::string_view forbid) {
  LiteralConjunction q{parse_list(require), parse_list(forbid)};
  q.validate();
  return q;
}

std::optional<Relation> find_witness(int n, const LiteralConjunction& q, SearchMode mode,
                                     const HeuristicOptions& options, Execution exec) {
  check_cardinality(n);
  q.validate();
  if (mode == SearchMode::Exhaustive) {
    if (n > kMaxExhaustiveCard)
      throw std::invalid_argument("exhaustive search supports at most " +
                                  std::to_string(kMaxExhaustiveCard) + " elements");
    return exhaustive(n, q, exec);
  }
  return heuristic(n, q, options);
}

std::optional<int> min_universe(const LiteralConjunction& q, int n_max, Execution exec) {
  if (n_max < 1 || n_max > kMaxExhaustiveCard)
    throw std::invalid_argument("maximum cardinality must be in 1.." +
                                std::to_string(kMaxExhaustiveCard));
  for (int n = 1; n <= n_max; ++n)
    if (find_witness(n, q, SearchMode::Exhaustive, {}, exec)) return n;
  return std::nullopt;
}

int violations(const Relation& r, Property p) {
  const int n = r.size();
  int v = 0;
  auto R = [&](int x, int y) { return r.test(x, y); };
  switch (p) {
    case Property::Empty:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) v += R(x, y);
      break;
    case Property::Univ:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) v += !R(x, y);
      break;
    case Property::CoRefl:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) v += x != y && R(x, y);
      break;
    case Property::Refl:
      for (int x = 0; x < n; ++x) v += !R(x, x);
      break;
    case Property::Irrefl:
      for (int x = 0; x < n; ++x) v += R(x, x);
      break;
    case Property::LfQuasiRefl:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) v += R(x, y) && !R(x, x);
      break;
    case Property::RgQuasiRefl:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) v += R(x, y) && !R(y, y);
      break;
    case Property::QuasiRefl:
      v = violations(r, Property::LfQuasiRefl) + violations(r, Property::RgQuasiRefl);
      break;
    case Property::Sym:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) v += R(x, y) && !R(y, x);
      break;
    case Property::ASym:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) v += R(x, y) && R(y, x);
      break;
    case Property::AntiSym:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) v += x != y && R(x, y) && R(y, x);
      break;
    case Property::SemiConnex:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) v += x != y && incomparable(r, x, y);
      break;
    case Property::Connex:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) v += incomparable(r, x, y);
      break;
    case Property::Trans:
    case Property::AntiTrans:
    case Property::QuasiTrans:
    case Property::RgEucl:
    case Property::LfEucl:
    case Property::IncTrans:
    case Property::SemiOrd2:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            switch (p) {
              case Property::Trans: v += R(x, y) && R(y, z) && !R(x, z); break;
              case Property::AntiTrans: v += R(x, y) && R(y, z) && R(x, z); break;
              case Property::QuasiTrans:
                v += strictly(r, x, y) && strictly(r, y, z) && !strictly(r, x, z);
                break;
              case Property::RgEucl: v += R(x, y) && R(x, z) && !R(y, z); break;
              case Property::LfEucl: v += R(y, x) && R(z, x) && !R(y, z); break;
              case Property::IncTrans:
                v += incomparable(r, x, y) && incomparable(r, y, z) && !incomparable(r, x, z);
                break;
              case Property::SemiOrd2:
                if (R(x, y) && R(y, z))
                  for (int w = 0; w < n; ++w)
                    v += incomparable(r, w, x) && incomparable(r, w, y) && incomparable(r, w, z);
                break;
              default: break;
            }
          }
      break;
    case Property::SemiOrd1:
      for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
              v += R(w, x) && incomparable(r, x, y) && R(y, z) && !R(w, z);
      break;
    case Property::RgSerial:
      for (int x = 0; x < n; ++x) v += r.row(x) == 0;
      break;
    case Property::LfSerial:
      for (int y = 0; y < n; ++y) v += r.column(y) == 0;
      break;
    case Property::Dense:
      for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
          v += R(x, z) && (r.row(x) & r.column(z)) == 0;
      break;
    case Property::LfUnique:
      for (int y = 0; y < n; ++y)
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) v += R(a, y) && R(b, y);
      break;
    case Property::RgUnique:
      for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) v += R(x, a) && R(x, b);
      break;
  }
  return v;
}

std::string export_dot(const Relation& r, std::span<const std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != r.size())
    throw std::invalid_argument("expected " + std::to_string(r.size()) + " labels, got " +
                                std::to_string(labels.size()));
  auto name = [&](int i) {
    return labels.empty() ? std::string(1, static_cast<char>('a' + i))
                          : labels[static_cast<std::size_t>(i)];
  };
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + '"';
  };
  std::string out = "digraph R {\n";
  for (int i = 0; i < r.size(); ++i) out += "  " + quoted(name(i)) + ";\n";
  for (int x = 0; x < r.size(); ++x)
    for (int y = 0; y < r.size(); ++y)
      if (r.test(x, y)) out += "  " + quoted(name(x)) + " -> " + quoted(name(y)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace rellaws
