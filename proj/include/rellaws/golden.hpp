#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "rellaws/properties.hpp"

namespace rellaws::golden {

struct RelationCountRow {
  int card;
  std::uint64_t unpruned;
  std::uint64_t pruned;
};

/// Relations and normal forms per universe cardinality, n = 1..7.
std::span<const RelationCountRow> relation_counts();

/// Per-property counts on a 5-element universe, indexed by encoding bit.
const std::array<std::uint64_t, kVectorProperties>& property_counts_unpruned_n5();
const std::array<std::uint64_t, kVectorProperties>& property_counts_pruned_n5();

inline constexpr std::uint64_t kInhabitedVectorsN5 = 495;
inline constexpr std::uint64_t kInitialOnN5 = 16776721;

/// On/off/don't-care counts at the start of each mining level on the n = 5 census.
struct MiningLevelRow {
  int level;
  std::uint64_t on;
  std::uint64_t off;
  std::uint64_t dontcare;
};
std::span<const MiningLevelRow> mining_levels_n5();

/// Laws reported per level, index 0 = level 1, up to level 24.
const std::array<int, kVectorProperties>& laws_per_level();

struct PublishedLaw {
  int seq;
  std::string_view text;  // implicant form, e.g. "ASym ~Irrefl"
};
/// All 274 published laws, in published order.
std::span<const PublishedLaw> published_laws();

}  // namespace rellaws::golden
