#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rellaws/relation.hpp"

namespace rellaws {

/// The catalog of relation properties. The first 24 enumerators are listed in
/// ascending order of their bit in a PropertyVector; LfQuasiRefl and
/// RgQuasiRefl can be checked but are not part of the vector.
enum class Property : std::uint8_t {
  Empty,
  Univ,
  CoRefl,
  LfEucl,
  RgEucl,
  LfUnique,
  RgUnique,
  Sym,
  AntiTrans,
  ASym,
  Connex,
  Trans,
  SemiOrd1,
  Irrefl,
  Refl,
  QuasiRefl,
  AntiSym,
  SemiConnex,
  IncTrans,
  SemiOrd2,
  QuasiTrans,
  Dense,
  LfSerial,
  RgSerial,
  LfQuasiRefl,
  RgQuasiRefl,
};

inline constexpr int kPropertyCount = 26;
inline constexpr int kVectorProperties = 24;
inline constexpr std::uint32_t kVectorMask = (1u << kVectorProperties) - 1u;

/// All 26 properties, in enumerator order.
const std::array<Property, kPropertyCount>& all_properties();

std::string_view property_name(Property p);
std::optional<Property> property_from_name(std::string_view name);

/// Bit of `p` in a PropertyVector; 0 for the two one-sided quasi-reflexivities.
constexpr std::uint32_t encoding(Property p) {
  const auto i = static_cast<unsigned>(p);
  return i < kVectorProperties ? (1u << i) : 0u;
}

/// Property whose encoding is bit `bit` (0..23).
constexpr Property property_at_bit(int bit) { return static_cast<Property>(bit); }

/// Converse-dual partner: LfX <-> RgX; every other property maps to itself.
Property dual(Property p);

/// The set of mined properties a relation satisfies, one bit per property.
struct PropertyVector {
  std::uint32_t bits = 0;

  bool has(Property p) const { return (bits & encoding(p)) != 0; }
  friend auto operator<=>(const PropertyVector&, const PropertyVector&) = default;
};

bool holds(const Relation& r, Property p);
PropertyVector property_vector(const Relation& r);

/// Property names of the set bits, ascending by encoding.
std::vector<std::string_view> property_names(PropertyVector v);

enum class RelationKind : std::uint8_t {
  Equivalence,
  PartialEquivalence,
  Tolerance,
  Idempotent,
  Trichotomous,
  NonStrictPartialOrder,
  StrictPartialOrder,
  SemiOrder,
  Preorder,
  WeakOrdering,
  PartialFunction,
  TotalFunction,
  InjectiveFunction,
  SurjectiveFunction,
  BijectiveFunction,
};

inline constexpr int kRelationKindCount = 15;

std::string_view kind_name(RelationKind k);
/// The properties whose conjunction defines `k`.
std::vector<Property> kind_definition(RelationKind k);
/// Kinds whose defining conjunction holds, in enumerator order.
std::vector<RelationKind> classify_kinds(const Relation& r);

}  // namespace rellaws
