#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rellaws/census.hpp"
#include "rellaws/properties.hpp"

namespace rellaws {

/// A cube over the property bits: the conjunction of the masked properties,
/// each positive where `value` has a one and negative where it has a zero.
struct Implicant {
  std::uint32_t mask = 0;
  std::uint32_t value = 0;  // value & ~mask == 0

  int level() const;
  bool covers(std::uint32_t v) const { return (v & mask) == value; }
  bool well_formed(int vars = kVectorProperties) const;

  friend auto operator<=>(const Implicant&, const Implicant&) = default;
};

/// The clause complementing an implicant: it says no relation has the
/// implicant's property combination.
struct Law {
  int seq = 0;
  Implicant implicant;
};

struct Literal {
  Property property;
  bool negated = false;
};

/// Disjunction denying the implicant; a literal is negated iff the implicant
/// requires its property.
std::vector<Literal> clause_literals(const Implicant& imp);

/// Implicant literals ascending by encoding, e.g. "ASym ~Irrefl".
std::string format_implicant(const Implicant& imp);
std::string format_law(const Law& law);
/// Clause form, e.g. "~ASym | Irrefl".
std::string format_clause(const Implicant& imp);
/// Inverse of format_implicant; throws std::invalid_argument on unknown or
/// repeated names and on the two unencoded quasi-reflexivities.
Implicant parse_implicant(std::string_view text);

enum class RectangleStatus { HitsOff, AllDontCare, Prime };

/// On/off/don't-care bookkeeping over all 2^vars vectors.
///
/// Off vectors are fixed at construction. Don't-care is a bitset that only
/// grows; every vector that is neither off nor don't-care is on.
class MiningState {
public:
  /// Throws std::invalid_argument when `off` is empty, holds duplicates, or has
  /// a vector outside `vars` bits.
  MiningState(std::vector<std::uint32_t> off, int vars = kVectorProperties);

  int vars() const { return vars_; }
  const std::vector<std::uint32_t>& off() const { return off_; }
  std::uint64_t space() const { return std::uint64_t{1} << vars_; }
  std::uint64_t on_count() const { return space() - off_.size() - dontcare_count_; }
  std::uint64_t dontcare_count() const { return dontcare_count_; }

  bool is_off(std::uint32_t v) const;
  bool is_dontcare(std::uint32_t v) const { return (dontcare_[v >> 6] >> (v & 63)) & 1u; }

  bool hits_off(const Implicant& imp) const;
  /// Some covered vector is neither don't-care nor off.
  bool has_on(const Implicant& imp) const;
  /// Marks the rectangle don't-care; the caller guarantees it holds no off vector.
  void mark_dontcare(const Implicant& imp);

private:
  template <typename F>
  void for_each_word(const Implicant& imp, F&& f) const;

  int vars_;
  std::vector<std::uint32_t> off_;  // ascending
  std::vector<std::uint64_t> dontcare_;
  std::uint64_t dontcare_count_ = 0;
};

RectangleStatus rectangle_status(const MiningState& state, const Implicant& imp);

/// Counts at the start of one level.
struct LevelStats {
  int level = 0;
  std::uint64_t on = 0;
  std::uint64_t off = 0;
  std::uint64_t dontcare = 0;
  int reported = 0;
};

struct MiningResult {
  std::vector<Law> laws;
  std::vector<LevelStats> levels;  // one entry per level 1..max_level
};

/// Prime implicants of the vectors absent from the census, reported in
/// (level, mask, value) order; each reported rectangle becomes don't-care
/// before the next candidate is examined.
MiningResult mine(const VectorCensus& census, int max_level = 8,
                  Execution exec = Execution::Parallel);

/// Same search over an explicit list of inhabited vectors of `vars` bits.
MiningResult mine_vectors(std::span<const std::uint32_t> inhabited, int vars,
                          int max_level, Execution exec = Execution::Parallel);

/// Examines every rectangle of every level with rectangle_status. Cost grows
/// as 3^vars, so this is for small synthetic inputs and cross-checks.
MiningResult mine_reference(std::span<const std::uint32_t> inhabited, int vars,
                            int max_level);

/// "NNN: <implicant>" lines.
void write_laws_text(std::ostream& out, std::span<const Law> laws);
/// Header seq,level,mask_hex,value_hex,law_text; one row per law.
void write_laws_csv(std::ostream& out, std::span<const Law> laws);
/// Reads either format written above; a trailing `redundant` CSV column is ignored.
std::vector<Law> read_laws(std::istream& in);

}  // namespace rellaws
