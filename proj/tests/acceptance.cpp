// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rellaws/census.hpp"
#include "rellaws/enumerate.hpp"
#include "rellaws/golden.hpp"
#include "rellaws/lawmine.hpp"
#include "rellaws/redundancy.hpp"
#include "rellaws/witness.hpp"

using namespace rellaws;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures for one criterion; the first few are echoed.
struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename T>
  void equal(const T& expected, const T& actual, const std::string& what) {
    if (expected == actual) return;
    std::ostringstream s;
    s << what << ": expected " << expected << ", got " << actual;
    failures.push_back(s.str());
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Shared {
  VectorCensus unpruned, pruned;
  MiningResult mined;
  bool have_census = false, have_mined = false;
};

void criterion_1(Check& c, Shared&) {
  const auto t0 = Clock::now();
  for (const auto& row : golden::relation_counts()) {
    if (row.card > 5) continue;
    const std::string n = "n=" + std::to_string(row.card);
    c.equal(row.unpruned, count_relations(row.card, false, Execution::Serial), n + " all");
    c.equal(row.pruned, count_relations(row.card, true, Execution::Serial), n + " normal");
  }
  const double t = seconds_since(t0);
  c.expect(t < 60.0, "single-threaded counting took " + std::to_string(t) + " s");
  c.note("serial " + std::to_string(t).substr(0, 5) + " s");
}

void ensure_census(Shared& s) {
  if (s.have_census) return;
  s.unpruned = vector_census(5, false);
  s.pruned = vector_census(5, true);
  s.have_census = true;
}

void compare_counts(Check& c, const PropertyCounts& got,
                    const std::array<std::uint64_t, kVectorProperties>& want) {
  for (int b = 0; b < kVectorProperties; ++b)
    c.equal(want[b], got[b], std::string(property_name(property_at_bit(b))));
}

void criterion_2(Check& c, Shared& s) {
  ensure_census(s);
  compare_counts(c, property_counts(s.unpruned), golden::property_counts_unpruned_n5());
  c.note("24 properties");
}

void criterion_3(Check& c, Shared& s) {
  ensure_census(s);
  compare_counts(c, property_counts(s.pruned), golden::property_counts_pruned_n5());
  c.note("24 properties");
}

void criterion_4(Check& c, Shared& s) {
  ensure_census(s);
  c.equal<std::uint64_t>(golden::kInhabitedVectorsN5, s.unpruned.counts.size(), "inhabited vectors");
  c.equal<std::uint64_t>(golden::kInitialOnN5,
                         (std::uint64_t{1} << kVectorProperties) - s.unpruned.counts.size(),
                         "on count");
  c.expect(s.unpruned.inhabited() == s.pruned.inhabited(), "inhabited key sets differ");
}

void criterion_5(Check& c, Shared& s) {
  ensure_census(s);
  auto t0 = Clock::now();
  const MiningResult partial = mine(s.unpruned, 4);
  const double t_partial = seconds_since(t0);
  c.expect(t_partial < 600.0, "levels 1-4 took " + std::to_string(t_partial) + " s");

  t0 = Clock::now();
  s.mined = mine(s.unpruned, kVectorProperties);
  s.have_mined = true;
  const double t_full = seconds_since(t0);
  c.expect(t_full < 3600.0, "full mine took " + std::to_string(t_full) + " s");

  for (int level = 1; level <= kVectorProperties; ++level)
    c.equal(golden::laws_per_level()[level - 1], s.mined.levels[level - 1].reported,
            "laws at level " + std::to_string(level));
  for (int level = 1; level <= 4; ++level)
    c.equal(s.mined.levels[level - 1].reported, partial.levels[level - 1].reported,
            "partial run level " + std::to_string(level));
  c.equal<std::size_t>(274, s.mined.laws.size(), "total laws");

  std::map<int, std::set<std::string>> want, got;
  for (const auto& law : golden::published_laws())
    want[parse_implicant(law.text).level()].insert(std::string(law.text));
  for (const auto& law : s.mined.laws) got[law.implicant.level()].insert(format_law(law));
  c.equal<std::size_t>(94, want[2].size(), "published level-2 rows");
  c.equal<std::size_t>(122, want[3].size(), "published level-3 rows");
  for (int level : {2, 3}) {
    for (const auto& t : want[level])
      c.expect(got[level].count(t) == 1, "level " + std::to_string(level) + " missing " + t);
    for (const auto& t : got[level])
      c.expect(want[level].count(t) == 1, "level " + std::to_string(level) + " extra " + t);
  }

  // Within-level order against the published sequence; reported, target zero.
  int order_diffs = 0;
  const auto published = golden::published_laws();
  for (std::size_t i = 0; i < std::min(published.size(), s.mined.laws.size()); ++i)
    if (format_law(s.mined.laws[i]) != published[i].text) {
      if (order_diffs < 5)
        c.note("order diff at " + std::to_string(published[i].seq) + ": " +
               std::string(published[i].text) + " vs " + format_law(s.mined.laws[i]));
      ++order_diffs;
    }
  c.expect(order_diffs == 0, std::to_string(order_diffs) + " order diffs");
  c.note(std::to_string(order_diffs) + " order diffs; levels 1-4 " +
         std::to_string(t_partial).substr(0, 5) + " s, full " + std::to_string(t_full).substr(0, 5) +
         " s");
}

void ensure_mined(Shared& s) {
  if (s.have_mined) return;
  ensure_census(s);
  s.mined = mine(s.unpruned, kVectorProperties);
  s.have_mined = true;
}

void criterion_6(Check& c, Shared& s) {
  ensure_mined(s);
  const auto off = s.unpruned.inhabited();
  auto covers_off = [&](const Implicant& imp) {
    return std::any_of(off.begin(), off.end(), [&](std::uint32_t v) { return imp.covers(v); });
  };
  int parents = 0;
  for (const auto& law : s.mined.laws) {
    const Implicant& imp = law.implicant;
    c.expect(!covers_off(imp), "law " + std::to_string(law.seq) + " covers an inhabited vector");
    for (std::uint32_t b = imp.mask; b; b &= b - 1) {
      const std::uint32_t bit = b & (~b + 1);
      ++parents;
      c.expect(covers_off({imp.mask & ~bit, imp.value & ~bit}),
               "law " + std::to_string(law.seq) + " is not prime");
    }
  }
  c.note(std::to_string(s.mined.laws.size()) + " implicants, " + std::to_string(parents) +
         " parents");
}

void criterion_7(Check& c, Shared& s) {
  ensure_mined(s);
  const auto& laws = s.mined.laws;
  auto by_seq = [&](int seq) { return laws.at(static_cast<std::size_t>(seq - 1)); };
  c.expect(entails(std::vector<Law>{by_seq(39), by_seq(46)}, by_seq(44)), "044 from {039, 046}");
  c.expect(entails(std::vector<Law>{by_seq(242), by_seq(71)}, by_seq(239)), "239 from {242, 071}");

  const auto flags = star_redundant(laws);
  c.expect(flags[43], "044 not flagged");
  if (flags[5]) {
    std::string premises;
    std::vector<Law> rest;
    for (const auto& l : laws)
      if (l.seq != 6) rest.push_back(l);
    // Shrink to a minimal premise set for the report.
    for (std::size_t i = rest.size(); i-- > 0;) {
      auto trial = rest;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (entails(trial, by_seq(6))) rest = trial;
    }
    for (const auto& l : rest) premises += " [" + std::to_string(l.seq) + ": " + format_law(l) + "]";
    c.expect(false, "006 is entailed by the other laws, e.g. by" + premises);
  }

  std::vector<Implicant> imps;
  for (const auto& l : laws) imps.push_back(l.implicant);
  const oracle::CoverCounts counts(imps);
  int disagreements = 0;
  for (std::size_t i = 0; i < laws.size(); ++i)
    if (counts.entailed_by_rest(laws[i].implicant) != flags[i]) {
      ++disagreements;
      c.expect(false, "oracle disagrees on law " + std::to_string(laws[i].seq));
    }
  c.note(std::to_string(std::count(flags.begin(), flags.end(), true)) + " flagged, " +
         std::to_string(disagreements) + " oracle disagreements");
}

void criterion_8(Check& c, Shared&) {
  const auto no_dense = parse_conjunction("ASym,Dense", "Empty");
  for (int n = 1; n <= 5; ++n)
    c.expect(!find_witness(n, no_dense, SearchMode::Exhaustive),
             "witness found at n=" + std::to_string(n));
  const auto t0 = Clock::now();
  c.expect(!find_witness(6, no_dense, SearchMode::Exhaustive), "witness found at n=6");
  c.note("n=6 checked in " + std::to_string(seconds_since(t0)).substr(0, 5) + " s");

  const std::pair<int, int> cycle[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const Relation c4 = Relation::from_pairs(4, cycle);
  c.expect(parse_conjunction("LfUnique,RgUnique,IncTrans", "Empty").satisfied_by(c4),
           "4-cycle fails LfUnique, RgUnique, IncTrans, ~Empty");

  Relation t(7);
  for (int x = 0; x < 7; ++x)
    for (int d : {1, 2, 4}) t.set(x, (x + d) % 7);
  c.expect(holds(t, Property::ASym) && holds(t, Property::Dense) && !holds(t, Property::Empty),
           "rotational tournament fails ASym, Dense, ~Empty");
  const auto m = oracle::to_matrix(t);
  c.expect(oracle::holds(m, "ASym") && oracle::holds(m, "Dense") && !oracle::holds(m, "Empty"),
           "rotational tournament fails the oracle");
  const auto h = find_witness(7, no_dense, SearchMode::Heuristic, {1, 100000});
  c.expect(h && no_dense.satisfied_by(*h), "heuristic search found no 7-element witness");
}

void criterion_9(Check& c, Shared&) {
  std::mt19937_64 rng(20240611);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Relation r = oracle::random_relation(rng, n);
    const Relation conv = converse(r);
    const PropertyVector v = property_vector(r);
    for (Property p : all_properties())
      if (holds(r, p) != holds(conv, dual(p))) ++violations;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < 5; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (!(property_vector(permute(r, perm)) == v)) ++violations;
    }
    const Relation canon = canonicalize(r);
    if (!is_normal_form(canon) || !(property_vector(canon) == v)) ++violations;
  }
  c.equal(0, violations, "random invariant violations");

  using P = Property;
  struct Spot {
    std::vector<P> lhs, rhs;
  };
  const std::vector<Spot> spots{
      {{P::ASym}, {P::Irrefl}},          {{P::ASym}, {P::AntiSym}},
      {{P::CoRefl}, {P::Sym}},           {{P::CoRefl}, {P::Trans}},
      {{P::Trans, P::Irrefl}, {P::ASym}}, {{P::Connex}, {P::Refl, P::SemiConnex}},
      {{P::SemiConnex}, {P::IncTrans}},  {{P::IncTrans}, {P::SemiOrd2}},
      {{P::Refl}, {P::QuasiRefl}},       {{P::LfEucl, P::RgEucl}, {P::Sym, P::Trans}},
      {{P::Sym}, {P::QuasiTrans}},       {{P::Trans}, {P::QuasiTrans}},
  };
  int oracle_mismatches = 0, spot_failures = 0;
  for (int n = 1; n <= 3; ++n)
    enumerate_all(n, [&](const Relation& r) {
      const auto m = oracle::to_matrix(r);
      for (P p : all_properties())
        if (holds(r, p) != oracle::holds(m, std::string(property_name(p)))) ++oracle_mismatches;
      for (const auto& s : spots) {
        const bool lhs = std::all_of(s.lhs.begin(), s.lhs.end(), [&](P p) { return holds(r, p); });
        const bool rhs = std::all_of(s.rhs.begin(), s.rhs.end(), [&](P p) { return holds(r, p); });
        if (lhs && !rhs) ++spot_failures;
      }
    });
  c.equal(0, oracle_mismatches, "oracle mismatches");
  c.equal(0, spot_failures, "spot-law exceptions");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&, Shared&)>>> criteria{
      {"relation counts", criterion_1},
      {"unpruned property census n=5", criterion_2},
      {"pruned property census n=5", criterion_3},
      {"vector census n=5", criterion_4},
      {"mining levels and law sets", criterion_5},
      {"prime implicant properties", criterion_6},
      {"redundancy", criterion_7},
      {"witness suite", criterion_8},
      {"property-based invariants", criterion_9},
  };
  Shared shared;
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(check, shared);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("criterion %zu %-32s %s (%.1f s)", i + 1, criteria[i].first, ok ? "PASS" : "FAIL",
                seconds_since(t0));
    for (const auto& n : check.notes) std::printf("; %s", n.c_str());
    std::printf("\n");
    for (std::size_t k = 0; k < std::min<std::size_t>(check.failures.size(), 10); ++k)
      std::printf("    %s\n", check.failures[k].c_str());
    if (check.failures.size() > 10)
      std::printf("    ... %zu more\n", check.failures.size() - 10);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
