#include "rellaws/lawmine.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rellaws {

namespace {

constexpr int kWordBits = 6;

std::uint32_t space_mask(int vars) {
  return vars >= 32 ? ~0u : ((1u << vars) - 1u);
}

// Masks of `level` bits below bit `vars`, ascending.
std::vector<std::uint32_t> masks_of_level(int vars, int level) {
  std::vector<std::uint32_t> out;
  if (level < 1 || level > vars) return out;
  const std::uint64_t limit = std::uint64_t{1} << vars;
  std::uint64_t m = (std::uint64_t{1} << level) - 1;
  while (m < limit) {
    out.push_back(static_cast<std::uint32_t>(m));
    const std::uint64_t low = m & (~m + 1);
    const std::uint64_t ripple = m + low;
    m = (((ripple ^ m) >> 2) / low) | ripple;
  }
  return out;
}

// Candidate values for one mask: no off vector projects onto the value, but
// for every masked bit some off vector projects onto the value with that bit
// flipped. Any other value either hits an off vector or lies inside a
// rectangle already examined one level up, which left it entirely don't-care.
void screen_mask(std::span<const std::uint32_t> off, std::uint32_t mask,
                 std::vector<std::uint32_t>& proj, std::vector<Implicant>& out) {
  proj.clear();
  for (std::uint32_t v : off) proj.push_back(v & mask);
  std::sort(proj.begin(), proj.end());
  proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
  const int level = std::popcount(mask);
  if (level < 32 && proj.size() == (std::size_t{1} << level)) return;

  const std::uint32_t low = mask & (~mask + 1);
  const std::size_t first = out.size();
  auto present = [&](std::uint32_t v) {
    return std::binary_search(proj.begin(), proj.end(), v);
  };
  for (std::uint32_t p : proj) {
    const std::uint32_t value = p ^ low;
    if (present(value)) continue;
    bool all_neighbours = true;
    for (std::uint32_t rest = mask & ~low; rest && all_neighbours; rest &= rest - 1)
      all_neighbours = present(value ^ (rest & (~rest + 1)));
    if (all_neighbours) out.push_back(Implicant{mask, value});
  }
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
}

std::vector<std::uint32_t> checked_off_list(std::span<const std::uint32_t> inhabited, int vars) {
  if (vars < 1 || vars > kVectorProperties)
    throw std::invalid_argument("variable count must be in 1..24");
  std::vector<std::uint32_t> off(inhabited.begin(), inhabited.end());
  std::sort(off.begin(), off.end());
  off.erase(std::unique(off.begin(), off.end()), off.end());
  return off;
}

void check_max_level(int max_level, int vars) {
  if (max_level < 1 || max_level > vars)
    throw std::invalid_argument("max level must be in 1.." + std::to_string(vars));
}

LevelStats start_level(const MiningState& state, int level) {
  return LevelStats{level, state.on_count(), state.off().size(), state.dontcare_count(), 0};
}

}  // namespace

int Implicant::level() const { return std::popcount(mask); }

bool Implicant::well_formed(int vars) const {
  return (value & ~mask) == 0 && (mask & ~space_mask(vars)) == 0 && mask != 0;
}

std::vector<Literal> clause_literals(const Implicant& imp) {
  std::vector<Literal> out;
  for (int b = 0; b < kVectorProperties; ++b)
    if (imp.mask & (1u << b))
      out.push_back(Literal{property_at_bit(b), (imp.value & (1u << b)) != 0});
  return out;
}

std::string format_implicant(const Implicant& imp) {
  std::string out;
  for (int b = 0; b < kVectorProperties; ++b) {
    if (!(imp.mask & (1u << b))) continue;
    if (!out.empty()) out += ' ';
    if (!(imp.value & (1u << b))) out += '~';
    out += property_name(property_at_bit(b));
  }
  return out;
}

std::string format_law(const Law& law) { return format_implicant(law.implicant); }

std::string format_clause(const Implicant& imp) {
  std::string out;
  for (const Literal& lit : clause_literals(imp)) {
    if (!out.empty()) out += " | ";
    if (lit.negated) out += '~';
    out += property_name(lit.property);
  }
  return out;
}

Implicant parse_implicant(std::string_view text) {
  Implicant imp;
  std::istringstream in{std::string(text)};
  for (std::string word; in >> word;) {
    const bool negative = word.front() == '~';
    const std::string_view name = std::string_view(word).substr(negative ? 1 : 0);
    const auto p = property_from_name(name);
    if (!p) throw std::invalid_argument("unknown property '" + std::string(name) + "'");
    const std::uint32_t bit = encoding(*p);
    if (bit == 0)
      throw std::invalid_argument("property '" + std::string(name) + "' has no vector bit");
    if (imp.mask & bit)
      throw std::invalid_argument("property '" + std::string(name) + "' repeated");
    imp.mask |= bit;
    if (!negative) imp.value |= bit;
  }
  if (imp.mask == 0) throw std::invalid_argument("empty implicant");
  return imp;
}

MiningState::MiningState(std::vector<std::uint32_t> off, int vars)
    : vars_(vars), off_(std::move(off)) {
  if (vars < 1 || vars > kVectorProperties)
    throw std::invalid_argument("variable count must be in 1..24");
  if (off_.empty()) throw std::invalid_argument("no inhabited vectors to mine against");
  std::sort(off_.begin(), off_.end());
  if (std::adjacent_find(off_.begin(), off_.end()) != off_.end())
    throw std::invalid_argument("duplicate off vector");
  if (off_.back() & ~space_mask(vars))
    throw std::invalid_argument("off vector exceeds " + std::to_string(vars) + " bits");
  const std::size_t words = vars > kWordBits ? (std::size_t{1} << (vars - kWordBits)) : 1;
  dontcare_.assign(words, 0);
}

bool MiningState::is_off(std::uint32_t v) const {
  return std::binary_search(off_.begin(), off_.end(), v);
}

// Calls f(word_index, in_word_pattern) for every bitset word meeting the rectangle.
template <typename F>
void MiningState::for_each_word(const Implicant& imp, F&& f) const {
  const int low_bits = std::min(vars_, kWordBits);
  const std::uint32_t low_space = (1u << low_bits) - 1u;
  std::uint64_t pattern = 0;
  for (std::uint32_t pos = 0; pos <= low_space; ++pos)
    if ((pos & imp.mask & low_space) == (imp.value & low_space))
      pattern |= std::uint64_t{1} << pos;

  const int high_vars = vars_ - low_bits;
  const std::uint32_t high_mask = imp.mask >> kWordBits;
  const std::uint32_t high_value = imp.value >> kWordBits;
  const std::uint32_t free = ~high_mask & space_mask(high_vars);
  std::uint32_t s = 0;
  do {
    if (!f(high_value | s, pattern)) return;
    s = (s - free) & free;
  } while (s != 0);
}

bool MiningState::hits_off(const Implicant& imp) const {
  return std::any_of(off_.begin(), off_.end(), [&](std::uint32_t v) { return imp.covers(v); });
}

bool MiningState::has_on(const Implicant& imp) const {
  // Off vectors are never don't-care, so they are excluded explicitly.
  bool found = false;
  for_each_word(imp, [&](std::uint32_t w, std::uint64_t pattern) {
    std::uint64_t open = pattern & ~dontcare_[w];
    while (open && !found) {
      const auto pos = static_cast<std::uint32_t>(std::countr_zero(open));
      if (!is_off((w << kWordBits) | pos)) found = true;
      open &= open - 1;
    }
    return !found;
  });
  return found;
}

void MiningState::mark_dontcare(const Implicant& imp) {
  for_each_word(imp, [&](std::uint32_t w, std::uint64_t pattern) {
    dontcare_count_ += static_cast<std::uint64_t>(std::popcount(pattern & ~dontcare_[w]));
    dontcare_[w] |= pattern;
    return true;
  });
}

RectangleStatus rectangle_status(const MiningState& state, const Implicant& imp) {
  if (state.hits_off(imp)) return RectangleStatus::HitsOff;
  return state.has_on(imp) ? RectangleStatus::Prime : RectangleStatus::AllDontCare;
}

MiningResult mine_vectors(std::span<const std::uint32_t> inhabited, int vars,
                          int max_level, Execution exec) {
  check_max_level(max_level, vars);
  MiningState state(checked_off_list(inhabited, vars), vars);
  const std::vector<std::uint32_t>& off = state.off();
  MiningResult result;

  for (int level = 1; level <= max_level; ++level) {
    LevelStats stats = start_level(state, level);
    // Without on vectors nothing further can be prime.
    if (stats.on == 0) {
      result.levels.push_back(stats);
      continue;
    }

    const std::vector<std::uint32_t> masks = masks_of_level(vars, level);
    constexpr std::size_t kChunk = 1024;
    const auto chunks = static_cast<std::int64_t>((masks.size() + kChunk - 1) / kChunk);
    std::vector<std::vector<Implicant>> found(static_cast<std::size_t>(chunks));

#pragma omp parallel if (exec == Execution::Parallel)
    {
      std::vector<std::uint32_t> proj;
      proj.reserve(off.size());
#pragma omp for schedule(dynamic)
      for (std::int64_t c = 0; c < chunks; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
        const std::size_t end = std::min(masks.size(), begin + kChunk);
        for (std::size_t i = begin; i < end; ++i)
          screen_mask(off, masks[i], proj, found[static_cast<std::size_t>(c)]);
      }
    }

    // Commit strictly in (mask, value) order: each report changes don't-care.
    for (const auto& chunk : found) {
      for (const Implicant& imp : chunk) {
        if (!state.has_on(imp)) continue;
        result.laws.push_back(Law{static_cast<int>(result.laws.size()) + 1, imp});
        state.mark_dontcare(imp);
        ++stats.reported;
      }
    }
    result.levels.push_back(stats);
  }
  return result;
}

MiningResult mine_reference(std::span<const std::uint32_t> inhabited, int vars,
                            int max_level) {
  check_max_level(max_level, vars);
  MiningState state(checked_off_list(inhabited, vars), vars);
  MiningResult result;
  for (int level = 1; level <= max_level; ++level) {
    LevelStats stats = start_level(state, level);
    for (std::uint32_t mask : masks_of_level(vars, level)) {
      std::uint32_t value = 0;
      do {
        const Implicant imp{mask, value};
        if (rectangle_status(state, imp) == RectangleStatus::Prime) {
          result.laws.push_back(Law{static_cast<int>(result.laws.size()) + 1, imp});
          state.mark_dontcare(imp);
          ++stats.reported;
        }
        value = (value - mask) & mask;
      } while (value != 0);
    }
    result.levels.push_back(stats);
  }
  return result;
}

MiningResult mine(const VectorCensus& census, int max_level, Execution exec) {
  const std::vector<std::uint32_t> inhabited = census.inhabited();
  for (std::uint32_t v : inhabited)
    if (v & ~kVectorMask) throw std::invalid_argument("census vector exceeds 24 bits");
  return mine_vectors(inhabited, kVectorProperties, max_level, exec);
}

void write_laws_text(std::ostream& out, std::span<const Law> laws) {
  char buf[16];
  for (const Law& law : laws) {
    std::snprintf(buf, sizeof buf, "%03d: ", law.seq);
    out << buf << format_law(law) << '\n';
  }
}

void write_laws_csv(std::ostream& out, std::span<const Law> laws) {
  out << "seq,level,mask_hex,value_hex,law_text\n";
  char buf[64];
  for (const Law& law : laws) {
    std::snprintf(buf, sizeof buf, "%d,%d,%06x,%06x,", law.seq, law.implicant.level(),
                  law.implicant.mask, law.implicant.value);
    out << buf << format_law(law) << '\n';
  }
}

std::vector<Law> read_laws(std::istream& in) {
  std::vector<Law> laws;
  bool csv = false;
  bool first = true;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first && line.rfind("seq,", 0) == 0) {
      csv = true;
      first = false;
      continue;
    }
    first = false;
    const std::string where = "law line " + std::to_string(line_no);
    Law law;
    try {
      if (csv) {
        std::vector<std::string> cols;
        std::istringstream row(line);
        for (std::string col; std::getline(row, col, ',');) cols.push_back(col);
        if (cols.size() < 5) throw std::invalid_argument("expected 5 columns");
        law.seq = std::stoi(cols[0]);
        law.implicant = parse_implicant(cols[4]);
        const auto mask = static_cast<std::uint32_t>(std::stoul(cols[2], nullptr, 16));
        const auto value = static_cast<std::uint32_t>(std::stoul(cols[3], nullptr, 16));
        if (mask != law.implicant.mask || value != law.implicant.value ||
            std::stoi(cols[1]) != law.implicant.level())
          throw std::invalid_argument("hex columns disagree with law text");
      } else {
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("expected 'NNN: law'");
        law.seq = std::stoi(line.substr(0, colon));
        law.implicant = parse_implicant(std::string_view(line).substr(colon + 1));
      }
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(where + ": " + e.what());
    } catch (const std::out_of_range& e) {
      throw std::runtime_error(where + ": number out of range");
    }
    laws.push_back(law);
  }
  return laws;
}

}  // namespace rellaws
