#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abundancy/pairs.hpp"

using namespace abundancy;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("ABUNDANCY_CLI");
  REQUIRE_MESSAGE(bin, "ABUNDANCY_CLI must point at the CLI binary");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

TEST_CASE("classify subcommand") {
  auto r = run_cli("classify 1");
  CHECK(r.exit_code == 0);
  REQUIRE(!lines(r.out).empty());
  CHECK(lines(r.out)[0] == "Deficient");

  r = run_cli("classify 6");
  CHECK(lines(r.out)[0] == "Perfect");

  r = run_cli("classify 14182439040");
  CHECK(lines(r.out)[0] == "Abundant");
  CHECK(r.out.find("multiply perfect of order 5") != std::string::npos);
}

TEST_CASE("pairs csv reproduces the first twenty and round-trips") {
  auto r = run_cli("pairs --max 300 --exclude-amicable --exclude-perfect-pairs --format csv");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 24);  // header + 23 pairs; the first 20 end at 260
  CHECK(ls[0] == "small,large,r_small,r_large,is_amicable,is_coprime,both_perfect");

  SigmaTable table(300);
  PairFilters filters;
  filters.exclude_amicable = true;
  filters.exclude_both_perfect = true;
  auto expect = feebly_pairs(300, table, filters);
  REQUIRE(expect.size() == 23);
  for (std::size_t i = 0; i < expect.size(); ++i) {
    auto cells = split(ls[i + 1], ',');
    REQUIRE(cells.size() == 7);
    CHECK(std::stoull(cells[0]) == expect[i].small);
    CHECK(std::stoull(cells[1]) == expect[i].large);
    CHECK(cells[2] == expect[i].r_small.str());
    CHECK(cells[3] == expect[i].r_large.str());
    CHECK((cells[4] == "1") == expect[i].is_amicable);
    CHECK((cells[5] == "1") == expect[i].is_coprime);
    CHECK((cells[6] == "1") == expect[i].both_perfect);
  }
}

TEST_CASE("pairs jsonl round-trips") {
  auto r = run_cli("pairs --max 300 --format jsonl");
  CHECK(r.exit_code == 0);
  SigmaTable table(300);
  auto expect = feebly_pairs(300, table);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == expect.size());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    auto j = nlohmann::json::parse(ls[i]);
    CHECK(j["small"].get<u64>() == expect[i].small);
    CHECK(j["large"].get<u64>() == expect[i].large);
    CHECK(j["r_small"].get<std::string>() == expect[i].r_small.str());
    CHECK(j["r_large"].get<std::string>() == expect[i].r_large.str());
    CHECK(j["is_amicable"].get<bool>() == expect[i].is_amicable);
    CHECK(j["is_coprime"].get<bool>() == expect[i].is_coprime);
    CHECK(j["both_perfect"].get<bool>() == expect[i].both_perfect);
  }
}

TEST_CASE("identical invocations emit identical bytes") {
  auto a = run_cli("pairs --max 500 --format csv");
  auto b = run_cli("pairs --max 500 --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  auto c = run_cli("stats --max 1000 --bin-width 1/10 --bands 1:500,501:1000");
  auto d = run_cli("stats --max 1000 --bin-width 1/10 --bands 1:500,501:1000");
  CHECK(c.exit_code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("lonely subcommand phrases the verdict") {
  auto r = run_cli("lonely 14182439040");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ProvenLonely") != std::string::npos);
  CHECK(r.out.find("5/4") != std::string::npos);
  CHECK(r.out.find("no amicable partner") != std::string::npos);

  r = run_cli("lonely 2");
  CHECK(r.out.find("PartnerExists(120)") != std::string::npos);

  r = run_cli("lonely 1");
  CHECK(r.out.find("UnitNoPartner") != std::string::npos);
}

TEST_CASE("outlaw subcommand") {
  CHECK(run_cli("outlaw 5/4").out == "ProvenOutlaw\n");
  CHECK(run_cli("outlaw 7/4").out == "Index(4)\n");
  CHECK(run_cli("outlaw 2").out == "Index(6)\n");
}

TEST_CASE("exit codes distinguish domain and usage errors") {
  CHECK(run_cli("outlaw 3/4").exit_code == 1);       // outside (1, infinity)
  CHECK(run_cli("frobnicate").exit_code == 2);       // unknown subcommand
  CHECK(run_cli("pairs").exit_code == 2);            // missing --max
  CHECK(run_cli("pairs --max 100 --format xml").exit_code == 2);
}

TEST_CASE("sieve cache builds, reloads, and survives reuse") {
  std::string path = "cli_cache_test.bin";
  std::filesystem::remove(path);
  auto r = run_cli("sieve --max 2000 --cache " + path);
  CHECK(r.exit_code == 0);
  CHECK(std::filesystem::exists(path));

  // Second run loads the cache and must give identical pair output.
  auto a = run_cli("pairs --max 2000 --cache " + path + " --format csv");
  auto b = run_cli("pairs --max 2000 --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  std::filesystem::remove(path);
}

TEST_CASE("check subcommand reports every reproduction line as PASS") {
  auto r = run_cli("check");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  for (const auto& line : ls) CHECK(line.substr(0, 5) == "PASS:");
}
