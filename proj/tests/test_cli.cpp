#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rellaws/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = rellaws::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "rellaws_cli_test";
  fs::create_directories(dir);
  return dir;
}

int count_lines(const std::string& s) {
  int lines = 0;
  for (char c : s) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "--n", "3"}).out == "512\n");
  CHECK(run({"count", "--n", "4", "--pruned"}).out == "6170\n");
  CHECK(run({"count", "--n", "2"}).status == rellaws::cli::kExitOk);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).status == rellaws::cli::kExitUsage);
  CHECK(run({"frobnicate"}).status == rellaws::cli::kExitUsage);
  CHECK(run({"count"}).status == rellaws::cli::kExitUsage);
  CHECK(run({"count", "--n", "0"}).status == rellaws::cli::kExitUsage);
  CHECK(run({"count", "--n", "9"}).status == rellaws::cli::kExitUsage);
  const auto missing = run({"mine", "--census", "/nonexistent/census.txt"});
  CHECK(missing.status == rellaws::cli::kExitUsage);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  CHECK(run({"witness", "--n", "3", "--require", "Sym", "--forbid", "Sym"}).status ==
        rellaws::cli::kExitUsage);
  CHECK(run({"witness", "--n", "7", "--require", "Sym"}).status == rellaws::cli::kExitUsage);
}

TEST_CASE("props") {
  const fs::path file = scratch_dir() / "identity.txt";
  std::ofstream(file) << "1..\n.1.\n..1\n";
  const auto r = run({"props", file.string()});
  CHECK(r.status == 0);
  CHECK(r.out.find("n: 3\n") == 0);
  CHECK(r.out.find("vector: 0x") != std::string::npos);
  CHECK(r.out.find(" Trans") != std::string::npos);
  CHECK(r.out.find("unencoded: LfQuasiRefl RgQuasiRefl\n") != std::string::npos);
  CHECK(r.out.find("Equivalence") != std::string::npos);
}

TEST_CASE("census, mine and star pipeline") {
  const fs::path dir = scratch_dir();
  const fs::path census = dir / "census-n3.txt";
  REQUIRE(run({"census", "--n", "3", "--pruned", "--out", census.string()}).status == 0);
  const auto mined = run({"mine", "--census", census.string(), "--max-level", "2"});
  REQUIRE(mined.status == 0);
  CHECK(mined.out.rfind("001: ", 0) == 0);

  const auto csv = run({"mine", "--census", census.string(), "--max-level", "2", "--csv"});
  REQUIRE(csv.status == 0);
  CHECK(csv.out.rfind("seq,level,mask_hex,value_hex,law_text\n", 0) == 0);
  CHECK(count_lines(csv.out) == count_lines(mined.out) + 1);

  const fs::path laws = dir / "laws.txt";
  std::ofstream(laws) << mined.out;
  const auto star = run({"star", "--laws", laws.string()});
  REQUIRE(star.status == 0);
  CHECK(star.out.rfind("seq,level,mask_hex,value_hex,law_text,redundant\n", 0) == 0);
  CHECK(count_lines(star.out) == count_lines(mined.out) + 1);
}

TEST_CASE("witness and mincard") {
  const auto w = run({"witness", "--n", "2", "--require", "Sym,SemiConnex", "--forbid", "Dense", "--dot"});
  CHECK(w.status == 0);
  CHECK(w.out.find("digraph R {") != std::string::npos);
  CHECK(run({"witness", "--n", "4", "--require", "ASym,Dense", "--forbid", "Empty"}).out == "none\n");
  const auto h = run({"witness", "--n", "7", "--require", "ASym,Dense", "--forbid", "Empty",
                      "--heuristic", "--seed", "3", "--restarts", "20000"});
  CHECK(h.status == 0);
  CHECK(h.out != "none\n");
  CHECK(run({"mincard", "--require", "AntiTrans,SemiConnex", "--max", "3"}).out.rfind("1\n", 0) == 0);
  CHECK(run({"mincard", "--require", "Connex", "--forbid", "Refl", "--max", "4"}).out == "none\n");
}

TEST_CASE("verify") {
  const fs::path cache = scratch_dir() / "cache";
  fs::remove_all(cache);
  fs::create_directories(cache);
  ::setenv("RELLAWS_CACHE", cache.c_str(), 1);

  const auto quick = run({"verify"});
  CHECK(quick.status == rellaws::cli::kExitOk);
  CHECK(quick.out.find("PASS relation-counts") != std::string::npos);
  CHECK(quick.out.find("SKIP property-census-unpruned-n5") != std::string::npos);

  // A bogus cached census must be reported as a mismatch naming the table.
  for (const char* name : {"census-n5-pruned0-v1.txt", "census-n5-pruned1-v1.txt"})
    std::ofstream(cache / name) << "relcensus v1 n=5 pruned=" << (name[16] == '1' ? 1 : 0)
                                << " props=24\n000001,1\n";
  const auto bad = run({"verify"});
  CHECK(bad.status == rellaws::cli::kExitMismatch);
  CHECK(bad.out.find("FAIL property-census-unpruned-n5") != std::string::npos);
  CHECK(bad.out.find("FAIL inhabited-vectors-n5") != std::string::npos);

  const auto csv = run({"verify", "--csv"});
  CHECK(csv.status == rellaws::cli::kExitMismatch);
  CHECK(csv.out.rfind("table,cell,expected,actual,status\n", 0) == 0);
  CHECK(csv.out.find("property-census-pruned-n5,Trans,") != std::string::npos);

  ::unsetenv("RELLAWS_CACHE");
  fs::remove_all(cache);
}
