#include "rellaws/redundancy.hpp"

#include <bit>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace rellaws {

namespace {

// Partial assignment of the property variables: bit b is decided iff set in
// `assigned`, and then its truth value is bit b of `values`.
struct Assignment {
  std::uint32_t assigned = 0;
  std::uint32_t values = 0;
};

// A law is violated exactly by the vectors its implicant covers.
enum class ClauseState { Satisfied, Conflict, Unit, Open };

ClauseState clause_state(const Implicant& imp, const Assignment& a, std::uint32_t& unit_var) {
  if ((a.values ^ imp.value) & imp.mask & a.assigned) return ClauseState::Satisfied;
  const std::uint32_t open = imp.mask & ~a.assigned;
  if (open == 0) return ClauseState::Conflict;
  if ((open & (open - 1)) == 0) {
    unit_var = open;
    return ClauseState::Unit;
  }
  return ClauseState::Open;
}

// False on conflict.
bool propagate(std::span<const Law> clauses, Assignment& a) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Law& law : clauses) {
      std::uint32_t var = 0;
      switch (clause_state(law.implicant, a, var)) {
        case ClauseState::Conflict: return false;
        case ClauseState::Unit:
          // The single open literal must escape the implicant.
          a.assigned |= var;
          a.values = (a.values & ~var) | (~law.implicant.value & var);
          changed = true;
          break;
        default: break;
      }
    }
  }
  return true;
}

bool satisfiable(std::span<const Law> clauses, Assignment a) {
  if (!propagate(clauses, a)) return false;
  std::uint32_t branch = 0;
  for (const Law& law : clauses) {
    std::uint32_t var = 0;
    if (clause_state(law.implicant, a, var) == ClauseState::Open) {
      const std::uint32_t open = law.implicant.mask & ~a.assigned;
      branch = open & (~open + 1);
      break;
    }
  }
  if (branch == 0) return true;
  Assignment with_true = a;
  with_true.assigned |= branch;
  with_true.values |= branch;
  if (satisfiable(clauses, with_true)) return true;
  Assignment with_false = a;
  with_false.assigned |= branch;
  with_false.values &= ~branch;
  return satisfiable(clauses, with_false);
}

}  // namespace

bool entails(std::span<const Law> others, const Law& target) {
  // The negated target fixes its own variables to the implicant's polarities.
  const Assignment start{target.implicant.mask, target.implicant.value};
  return !satisfiable(others, start);
}

std::vector<bool> star_redundant(std::span<const Law> laws, Execution exec) {
  const auto count = static_cast<std::int64_t>(laws.size());
  std::vector<char> flags(laws.size(), 0);
#pragma omp parallel if (exec == Execution::Parallel)
  {
    std::vector<Law> others;
    others.reserve(laws.size());
#pragma omp for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      others.clear();
      for (std::int64_t j = 0; j < count; ++j)
        if (j != i) others.push_back(laws[static_cast<std::size_t>(j)]);
      flags[static_cast<std::size_t>(i)] = entails(others, laws[static_cast<std::size_t>(i)]) ? 1 : 0;
    }
  }
  return {flags.begin(), flags.end()};
}

void write_laws_csv_flagged(std::ostream& out, std::span<const Law> laws,
                            const std::vector<bool>& redundant) {
  if (redundant.size() != laws.size())
    throw std::invalid_argument("one redundancy flag per law expected");
  out << "seq,level,mask_hex,value_hex,law_text,redundant\n";
  char buf[64];
  for (std::size_t i = 0; i < laws.size(); ++i) {
    const Law& law = laws[i];
    std::snprintf(buf, sizeof buf, "%d,%d,%06x,%06x,", law.seq, law.implicant.level(),
                  law.implicant.mask, law.implicant.value);
    out << buf << format_law(law) << ',' << (redundant[i] ? 1 : 0) << '\n';
  }
}

}  // namespace rellaws
