#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rellaws/census.hpp"
#include "rellaws/properties.hpp"
#include "rellaws/relation.hpp"

namespace rellaws {

/// Properties required to hold (`pos`) and to fail (`neg`).
struct LiteralConjunction {
  std::vector<Property> pos;
  std::vector<Property> neg;

  /// Throws std::invalid_argument when a property is both required and forbidden.
  void validate() const;
  bool satisfied_by(const Relation& r) const;
};

/// Builds a conjunction from comma-separated property names; either list may be empty.
LiteralConjunction parse_conjunction(std::string_view require, std::string_view forbid);

enum class SearchMode { Exhaustive, Heuristic };

struct HeuristicOptions {
  std::uint64_t seed = 1;
  std::uint64_t restarts = 100000;
};

/// Largest cardinality accepted by exhaustive search.
inline constexpr int kMaxExhaustiveCard = 6;

/// Exhaustive mode walks the normal forms of size n and returns the first
/// witness in enumeration order, so an empty result proves that no relation
/// on n elements qualifies. Heuristic mode is a seeded local search; an empty
/// result only means it gave up. Every returned relation satisfies `q`.
std::optional<Relation> find_witness(int n, const LiteralConjunction& q, SearchMode mode,
                                     const HeuristicOptions& options = {},
                                     Execution exec = Execution::Parallel);

/// Smallest n in 1..n_max with an exhaustive witness.
std::optional<int> min_universe(const LiteralConjunction& q, int n_max,
                                Execution exec = Execution::Parallel);

/// Number of violated instances of the quantified definition of `p`; zero iff
/// holds(r, p). Used to steer heuristic search.
int violations(const Relation& r, Property p);

/// Graphviz digraph, nodes then edges in ascending index order. Default
/// labels are a, b, c, ...
std::string export_dot(const Relation& r, std::span<const std::string> labels = {});

}  // namespace rellaws
