// End-to-end tests of the command line tool: drives the installed binary,
// parses its CSV/JSON output, and checks values, determinism, error exit
// codes, and thread-count independence.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace {

struct CliRun {
  int exit_code;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(GZETA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    size_t cpos = 0;
    while (true) {
      size_t comma = line.find(',', cpos);
      cells.push_back(line.substr(cpos, comma - cpos));
      if (comma == std::string::npos) break;
      cpos = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_CASE("cli computes exact lattice zeta values", "[cli]") {
  CliRun r = run_cli("zeta --graph zd:2 --s -3 --mode exact");
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"s", "value"});
  CHECK(rows[1] == std::vector<std::string>{"-3", "112"});
}

TEST_CASE("cli charpoly lists coefficients by degree", "[cli]") {
  CliRun r = run_cli("charpoly --graph cycle:4");
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"degree", "coefficient"});
  CHECK(rows[1] == std::vector<std::string>{"0", "0"});
  CHECK(rows[2] == std::vector<std::string>{"1", "16"});
  CHECK(rows[3] == std::vector<std::string>{"2", "20"});
  CHECK(rows[4] == std::vector<std::string>{"3", "8"});
  CHECK(rows[5] == std::vector<std::string>{"4", "1"});
}

TEST_CASE("cli functional identity check", "[cli]") {
  CliRun r = run_cli("funceq --kmax 10");
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 12);
  for (size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 2);
    CHECK(rows[i][0] == std::to_string(i - 1));
    CHECK(rows[i][1] == "true");
  }
}

TEST_CASE("cli determinant series is exact", "[cli]") {
  CliRun r = run_cli("regdet --graph zd:1 --series 6");
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 8);
  CHECK(rows[1] == std::vector<std::string>{"1", "1"});
  CHECK(rows[2] == std::vector<std::string>{"0", "2"});
  CHECK(rows[3] == std::vector<std::string>{"-1", "-1"});
  CHECK(rows[4] == std::vector<std::string>{"-2", "2"});
  CHECK(rows[5] == std::vector<std::string>{"-3", "-5"});
  CHECK(rows[6] == std::vector<std::string>{"-4", "14"});
  CHECK(rows[7] == std::vector<std::string>{"-5", "-42"});
}

TEST_CASE("cli heat values", "[cli]") {
  CliRun r = run_cli("heat --graph zd:1 --t 0");
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][1] == "1");

  CliRun c = run_cli("heat --graph cycle:3 --t 1");
  REQUIRE(c.exit_code == 0);
  auto crows = parse_csv(c.output);
  REQUIRE(crows.size() == 2);
  double got = std::stod(crows[1][1]);
  double want = (1.0 + 2.0 * std::exp(-3.0)) / 3.0;
  CHECK(std::fabs(got - want) <= 1e-12);
}

TEST_CASE("cli reports poles as rows, not failures", "[cli]") {
  CliRun r = run_cli("zeta --graph zd:1 --s 0.1:0.5:0.1 --mode closed");
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"s", "re", "im", "status"});
  for (size_t i = 1; i <= 4; ++i) CHECK(rows[i][3] == "ok");
  CHECK(rows[5][1] == "nan");
  CHECK(rows[5][3] == "pole@0.5");
}

TEST_CASE("cli output is deterministic", "[cli]") {
  const std::string args =
      "zeta --graph zd:1 --s 0.05:0.45:0.05 --mode mellin --jobs 1";
  CliRun a = run_cli(args);
  CliRun b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.output == b.output);

  CliRun threaded = run_cli(
      "zeta --graph zd:1 --s 0.05:0.45:0.05 --mode mellin --jobs 2");
  REQUIRE(threaded.exit_code == 0);
  CHECK(threaded.output == a.output);
}

TEST_CASE("cli json output matches csv", "[cli]") {
  CliRun csv = run_cli("charpoly --graph cycle:5 --format csv");
  CliRun js = run_cli("charpoly --graph cycle:5 --format json");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(js.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(js.output);
  auto rows = parse_csv(csv.output);
  REQUIRE(doc["schema"].size() == rows[0].size());
  for (size_t j = 0; j < rows[0].size(); ++j)
    CHECK(doc["schema"][j].get<std::string>() == rows[0][j]);
  REQUIRE(doc["rows"].size() == rows.size() - 1);
  for (size_t i = 0; i < doc["rows"].size(); ++i) {
    auto& jrow = doc["rows"][i];
    REQUIRE(jrow.size() == rows[i + 1].size());
    for (size_t j = 0; j < jrow.size(); ++j)
      CHECK(jrow[j].get<std::string>() == rows[i + 1][j]);
  }
}

TEST_CASE("cli exit codes distinguish failure kinds", "[cli]") {
  // Unknown flag: argument parsing failure.
  CHECK(run_cli("zeta --graph zd:1 --s 0.2 --no-such-flag").exit_code == 2);
  // Malformed graph spec: usage failure.
  CHECK(run_cli("zeta --graph hypercube:3 --s 0.2").exit_code == 2);
  // Non-integer s in exact mode: usage failure.
  CHECK(run_cli("zeta --graph zd:1 --s 0.5 --mode exact").exit_code == 2);
  // Closed form undefined for higher lattices: domain failure.
  CHECK(run_cli("regdet --graph zd:2 --x 1").exit_code == 3);
  // Brute-force forest count beyond the enumeration cap: resource failure.
  CHECK(run_cli("forests --n 12 --k 1 --brute").exit_code == 4);
  // Help exits cleanly.
  CHECK(run_cli("--help").exit_code == 0);
}
