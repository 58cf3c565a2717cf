#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracle.hpp"
#include "rellaws/census.hpp"
#include "rellaws/lawmine.hpp"

using namespace rellaws;

namespace {

Implicant imp_of(std::initializer_list<std::pair<Property, bool>> lits) {
  Implicant out;
  for (auto [p, positive] : lits) {
    out.mask |= encoding(p);
    if (positive) out.value |= encoding(p);
  }
  return out;
}

std::set<Implicant> as_set(const std::vector<Law>& laws) {
  std::set<Implicant> out;
  for (const auto& l : laws) out.insert(l.implicant);
  return out;
}

void check_same(const MiningResult& a, const MiningResult& b) {
  REQUIRE(a.laws.size() == b.laws.size());
  for (std::size_t i = 0; i < a.laws.size(); ++i) {
    CHECK(a.laws[i].seq == b.laws[i].seq);
    CHECK(a.laws[i].implicant == b.laws[i].implicant);
  }
  REQUIRE(a.levels.size() == b.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    CHECK(a.levels[i].on == b.levels[i].on);
    CHECK(a.levels[i].dontcare == b.levels[i].dontcare);
    CHECK(a.levels[i].reported == b.levels[i].reported);
  }
}

std::vector<std::uint32_t> random_inhabited(std::mt19937_64& rng, int vars) {
  std::set<std::uint32_t> s;
  const std::uint32_t space = 1u << vars;
  const int k = 1 + static_cast<int>(rng() % (space / 2));
  while (static_cast<int>(s.size()) < k) s.insert(static_cast<std::uint32_t>(rng() % space));
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("format_law") {
  using P = Property;
  CHECK(format_law({39, imp_of({{P::ASym, true}, {P::Irrefl, false}})}) == "ASym ~Irrefl");
  CHECK(format_law({1, imp_of({{P::Empty, true}, {P::Univ, true}})}) == "Empty Univ");
  CHECK(format_law({6, imp_of({{P::CoRefl, true}, {P::LfEucl, false}})}) == "CoRefl ~LfEucl");
  CHECK(format_clause(imp_of({{P::ASym, true}, {P::Irrefl, false}})) == "~ASym | Irrefl");
}

TEST_CASE("parse_implicant") {
  const Implicant i = parse_implicant("ASym ~Irrefl");
  CHECK(format_implicant(i) == "ASym ~Irrefl");
  CHECK(i.level() == 2);
  CHECK(parse_implicant("~Irrefl ASym") == i);
  CHECK_THROWS_AS(parse_implicant(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_implicant("ASym ASym"), std::invalid_argument);
  CHECK_THROWS_AS(parse_implicant("Bogus"), std::invalid_argument);
  CHECK_THROWS_AS(parse_implicant("LfQuasiRefl"), std::invalid_argument);
}

TEST_CASE("mining state bookkeeping") {
  MiningState s({0b001}, 3);
  CHECK(s.on_count() == 7);
  CHECK(s.is_off(0b001));
  CHECK(s.hits_off({0b001, 0b001}));
  CHECK_FALSE(s.hits_off({0b001, 0b000}));
  CHECK(rectangle_status(s, {0b001, 0b000}) == RectangleStatus::Prime);
  s.mark_dontcare({0b001, 0b000});
  CHECK(s.dontcare_count() == 4);
  CHECK(s.on_count() == 3);
  CHECK(rectangle_status(s, {0b011, 0b000}) == RectangleStatus::AllDontCare);
  CHECK(rectangle_status(s, {0b011, 0b001}) == RectangleStatus::HitsOff);
  CHECK_THROWS_AS(MiningState({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(MiningState({1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(MiningState({8}, 3), std::invalid_argument);
}

TEST_CASE("three-variable example matches the maximal avoiding cubes") {
  const std::vector<std::uint32_t> off{0b001};
  const auto mined = mine_vectors(off, 3, 3);
  CHECK(as_set(mined.laws) == std::set<Implicant>{{0b001, 0b000}, {0b010, 0b010}, {0b100, 0b100}});
  const auto oracle_cubes = oracle::maximal_cubes_avoiding(off, 3);
  CHECK(as_set(mined.laws) == std::set<Implicant>(oracle_cubes.begin(), oracle_cubes.end()));
  check_same(mined, mine_reference(off, 3, 3));
}

TEST_CASE("fully inhabited space yields no laws") {
  std::vector<std::uint32_t> all(64);
  for (std::uint32_t v = 0; v < 64; ++v) all[v] = v;
  const auto r = mine_vectors(all, 6, 6);
  CHECK(r.laws.empty());
  CHECK(r.levels.size() == 6);
  for (const auto& l : r.levels) CHECK(l.on == 0);
}

TEST_CASE("fast path equals the reference on random inputs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int vars = 2 + static_cast<int>(rng() % 7);
    const auto inhabited = random_inhabited(rng, vars);
    const auto ref = mine_reference(inhabited, vars, vars);
    check_same(mine_vectors(inhabited, vars, vars, Execution::Serial), ref);
    check_same(mine_vectors(inhabited, vars, vars, Execution::Parallel), ref);

    // Every reported cube is a maximal avoiding cube, and together they cover
    // every vector that is not inhabited.
    const auto maximal = oracle::maximal_cubes_avoiding(inhabited, vars);
    const std::set<Implicant> maximal_set(maximal.begin(), maximal.end());
    for (const auto& l : ref.laws) CHECK(maximal_set.count(l.implicant) == 1);
    for (std::uint32_t v = 0; v < (1u << vars); ++v) {
      if (std::binary_search(inhabited.begin(), inhabited.end(), v)) continue;
      CHECK(std::any_of(ref.laws.begin(), ref.laws.end(),
                        [&](const Law& l) { return l.implicant.covers(v); }));
    }
  }
}

TEST_CASE("mining a small relation census") {
  const auto census = vector_census(3, true);
  const auto serial = mine(census, 24, Execution::Serial);
  const auto parallel = mine(census, 24, Execution::Parallel);
  check_same(serial, parallel);
  const auto off = census.inhabited();
  for (std::size_t i = 0; i < serial.laws.size(); ++i) {
    const Implicant& imp = serial.laws[i].implicant;
    CHECK(serial.laws[i].seq == static_cast<int>(i) + 1);
    for (auto v : off) REQUIRE_FALSE(imp.covers(v));
    for (std::uint32_t b = imp.mask; b; b &= b - 1) {
      const std::uint32_t bit = b & -b;
      const Implicant parent{imp.mask & ~bit, imp.value & ~bit};
      REQUIRE(std::any_of(off.begin(), off.end(), [&](auto v) { return parent.covers(v); }));
    }
  }
  CHECK(serial.levels.front().on == (std::uint64_t{1} << 24) - off.size());
}

TEST_CASE("law text and csv round trips") {
  std::vector<Law> laws{{1, parse_implicant("Empty Univ")}, {39, parse_implicant("ASym ~Irrefl")}};
  std::stringstream text;
  write_laws_text(text, laws);
  CHECK(text.str() == "001: Empty Univ\n039: ASym ~Irrefl\n");
  const auto back = read_laws(text);
  REQUIRE(back.size() == 2);
  CHECK(back[1].seq == 39);
  CHECK(back[1].implicant == laws[1].implicant);

  std::stringstream csv;
  write_laws_csv(csv, laws);
  const auto back_csv = read_laws(csv);
  REQUIRE(back_csv.size() == 2);
  CHECK(back_csv[0].implicant == laws[0].implicant);

  std::istringstream bad("001 Empty Univ\n");
  CHECK_THROWS_AS(read_laws(bad), std::runtime_error);
}

TEST_CASE("argument checks") {
  const std::vector<std::uint32_t> off{1};
  CHECK_THROWS_AS(mine_vectors(off, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(mine_vectors(off, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(mine_vectors(off, 25, 1), std::invalid_argument);
}
