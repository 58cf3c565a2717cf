#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "rellaws/census.hpp"
#include "rellaws/lawmine.hpp"

namespace rellaws {

/// True iff every assignment of the 24 property variables that satisfies all
/// laws in `others` also satisfies `target`, i.e. `others` together with the
/// negated target is unsatisfiable. Propositional only: the definitions of the
/// properties play no part.
bool entails(std::span<const Law> others, const Law& target);

/// Flag i is entails(laws without i, laws[i]), always against the full set.
std::vector<bool> star_redundant(std::span<const Law> laws,
                                 Execution exec = Execution::Parallel);

/// Lawmine CSV with an extra `redundant` column (0/1).
void write_laws_csv_flagged(std::ostream& out, std::span<const Law> laws,
                            const std::vector<bool>& redundant);

}  // namespace rellaws
