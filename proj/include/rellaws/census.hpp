#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "rellaws/properties.hpp"

namespace rellaws {

/// Serial runs are the reference; parallel runs split the relation space into
/// prefix partitions and merge partial results by pointwise addition.
enum class Execution { Serial, Parallel };

/// Occurrence count of every property vector over one full enumeration.
struct VectorCensus {
  int n = 1;
  bool pruned = false;
  std::map<std::uint32_t, std::uint64_t> counts;  // only inhabited vectors

  std::uint64_t total() const;
  /// Inhabited vectors, ascending.
  std::vector<std::uint32_t> inhabited() const;
  void merge(const VectorCensus& other);

  friend bool operator==(const VectorCensus&, const VectorCensus&) = default;
};

using PropertyCounts = std::array<std::uint64_t, kVectorProperties>;

/// Number of relations visited by enumerate_all (unpruned) or enumerate_normal.
std::uint64_t count_relations(int n, bool pruned, Execution exec = Execution::Parallel);

VectorCensus vector_census(int n, bool pruned, Execution exec = Execution::Parallel);

/// Per-property satisfying count, indexed by encoding bit.
PropertyCounts property_census(int n, bool pruned, Execution exec = Execution::Parallel);
PropertyCounts property_counts(const VectorCensus& census);

// File format:
//   relcensus v1 n=<n> pruned=<0|1> props=24
//   <6 hex digit vector>,<count>      (ascending by vector)
void write_census(std::ostream& out, const VectorCensus& census);
/// Throws std::runtime_error on malformed input.
VectorCensus read_census(std::istream& in);

}  // namespace rellaws
