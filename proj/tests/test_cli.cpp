#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>

#include "hexmatch/kingwen.hpp"
#include "json.hpp"
#include "process.hpp"

using testing_process::run_cli;
using json = nlohmann::json;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("orbits command", "[cli]") {
  const auto r = run_cli("orbits --n 6 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["result"]["census"]["generic"]["orbits"] == 12);

  const auto one = json::parse(run_cli("orbits --n 1").out);
  CHECK(one["result"]["orbits"].size() == 1);

  const auto four = json::parse(run_cli("orbits --n 4").out);
  CHECK(four["result"]["census"]["generic"]["orbits"] == 2);
  CHECK(four["result"]["census"]["palindrome"]["orbits"] == 2);
  CHECK(four["result"]["census"]["antisymmetric"]["orbits"] == 2);

  CHECK(run_cli("orbits --n 17").exit_code == 1);
  CHECK(run_cli("orbits --n 0").exit_code == 1);
  CHECK(run_cli("orbits --format yaml").exit_code == 1);
}

TEST_CASE("optimize command", "[cli]") {
  const auto a = run_cli("optimize --n 6 --kinds comp,rev");
  REQUIRE(a.exit_code == 0);
  CHECK(json::parse(a.out)["result"]["min_cost"] == 120);
  CHECK(json::parse(a.out)["result"]["unique"] == true);

  const auto b = run_cli("optimize --n 6 --kinds comp,rev,comprev");
  REQUIRE(b.exit_code == 0);
  CHECK(json::parse(b.out)["result"]["min_cost"] == 96);

  const auto c = run_cli("optimize --n 6 --kinds rev");
  CHECK(c.exit_code == 3);
  CHECK(c.out.empty());

  CHECK(run_cli("optimize --kinds bogus").exit_code == 1);
  CHECK(run_cli("optimize").exit_code == 0);
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
}

TEST_CASE("kingwen command", "[cli]") {
  const auto def = run_cli("kingwen");
  REQUIRE(def.exit_code == 0);
  const auto j = json::parse(def.out);
  CHECK(j["result"]["verified"] == true);
  CHECK(j["result"]["total_cost"] == 120);

  const auto csv = run_cli("kingwen --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("kw_first,kw_second,first,second,kinds,distance,category\n", 0) == 0);

  auto v = hexmatch::default_table().values();
  std::swap(v[3], v[4]);
  const auto corrupted =
      write_temp("hexmatch_corrupted.csv", hexmatch::serialize_table(hexmatch::KingWenTable(v)));
  const auto bad = run_cli("kingwen --table " + corrupted.string());
  CHECK(bad.exit_code == 4);
  CHECK(bad.out.find("\"other\": 2") != std::string::npos);

  const auto good =
      write_temp("hexmatch_default.csv", hexmatch::serialize_table(hexmatch::default_table()));
  CHECK(run_cli("kingwen --table " + good.string()).exit_code == 0);

  const auto malformed = write_temp("hexmatch_malformed.csv", "kw,binary\n1,63\n2,x\n");
  CHECK(run_cli("kingwen --table " + malformed.string()).exit_code == 2);

  CHECK(run_cli("kingwen --table /nonexistent/table.csv").exit_code == 1);
}

TEST_CASE("conjecture command", "[cli]") {
  const auto r = run_cli("conjecture --from 1 --to 8");
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  for (const auto& row : j["result"]["rows"]) CHECK(row["optimal_matches_reverse_priority"] == true);
  CHECK(j["result"]["rows"][0]["min_cost_comp_rev"] == 1);
  CHECK(j["result"]["rows"][5]["min_cost_comp_rev"] == 120);

  CHECK(run_cli("conjecture --from 5 --to 3").exit_code == 1);
  CHECK(run_cli("conjecture --to 17").exit_code == 1);
}
