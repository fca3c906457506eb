#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("su2ent_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path unique_path(const std::string& stem) {
  static int counter = 0;
  return work_dir() / (stem + "_" + std::to_string(counter++));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  const fs::path in = unique_path("in"), out = unique_path("out"), err = unique_path("err");
  write_file(in, stdin_text);
  const std::string cmd = std::string("\"") + SU2ENT_CLI_PATH + "\" " + args + " < " +
                          in.string() + " > " + out.string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  RunResult result;
  result.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = read_file(out);
  result.err = read_file(err);
  return result;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

// Every row matches the header width; every cell is a finite number or a boolean.
void check_csv_well_formed(const std::vector<std::vector<std::string>>& rows) {
  REQUIRE(rows.size() >= 2);
  const std::size_t width = rows[0].size();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    REQUIRE(rows[r].size() == width);
    for (const std::string& cell : rows[r]) {
      if (cell == "true" || cell == "false") continue;
      const double v = std::stod(cell);
      CHECK(std::isfinite(v));
    }
  }
}

int column_of(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

const char* kSingletJson = "{\"ts1\": 1, \"ts2\": 1, \"A\": [1.0, 0.0]}";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyzing the singlet certifies entanglement with exit code 2") {
  const RunResult r = run_cli("analyze --state -", kSingletJson);
  REQUIRE(r.code == 2);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["entangled"] == true);
  CHECK(j["negative_Ks"] == nlohmann::json::array({0}));
  CHECK(j["A"][0] == 1.0);
  CHECK(std::abs(j["B"][0].get<double>() + 0.5) < 1e-12);
  CHECK(std::abs(j["dot_correlator"].get<double>() + 0.75) < 1e-12);
}

TEST_CASE("inline weights reproduce the state-file result") {
  const RunResult from_file = run_cli("analyze --state -", kSingletJson);
  const RunResult inline_weights = run_cli("analyze --ts1 1 --ts2 1 --A 1.0,0.0");
  CHECK(inline_weights.code == 2);
  CHECK(inline_weights.out == from_file.out);
}

TEST_CASE("an infinite-temperature thermal state is undetected") {
  const RunResult r = run_cli("analyze --thermal --ts1 2 --ts2 2 --beta 0");
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["entangled"] == false);
  CHECK(std::abs(j["A"][0].get<double>() - 1.0 / 9) < 1e-15);
  CHECK(std::abs(j["A"][2].get<double>() - 5.0 / 9) < 1e-15);
}

TEST_CASE("ring reports carry the invariance residual") {
  const RunResult warm = run_cli("analyze --ring 4 --beta 1");
  REQUIRE(warm.code == 0);
  const nlohmann::json j = nlohmann::json::parse(warm.out);
  CHECK(j["ts1"] == 1);
  CHECK(j["invariance_residual"].get<double>() < 1e-10);
  CHECK(run_cli("analyze --ring 4 --beta 5").code == 2);
}

TEST_CASE("weights without spins are an input error") {
  const RunResult r = run_cli("analyze --A 1.0,0.0");
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("a missing state file is an input error") {
  const RunResult r = run_cli("analyze --state /nonexistent/state.json");
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("a state file and --out produce the stdout bytes") {
  const fs::path state = unique_path("state");
  write_file(state, kSingletJson);
  const RunResult to_stdout = run_cli("analyze --state " + state.string());
  REQUIRE(to_stdout.code == 2);

  const fs::path report = unique_path("report");
  const RunResult to_file =
      run_cli("analyze --state " + state.string() + " --out " + report.string());
  CHECK(to_file.code == 2);
  CHECK(to_file.out.empty());
  CHECK(read_file(report) == to_stdout.out);
}

TEST_CASE("verify passes and reports tight agreement") {
  const RunResult r = run_cli("verify --ts1 2 --ts2 2 --samples 200 --seed 7");
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["samples"] == 200);
  CHECK(j["max_method_deviation"].get<double>() < 1e-9);
  CHECK(j["max_combined_residual"].get<double>() < 1e-10);
  CHECK(j["vandermonde_determinant"].get<double>() > 0.0);
  CHECK(j.find("failing_seed") == j.end());
}

TEST_CASE("verify output is byte-identical across runs") {
  const std::string args = "verify --ts1 1 --ts2 1 --samples 50 --seed 3";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.code == 0);
  CHECK(second.code == 0);
  CHECK_FALSE(first.out.empty());
  CHECK(first.out == second.out);
}

TEST_CASE("verify rejects oversized spins") {
  const RunResult r = run_cli("verify --ts1 20 --ts2 1");
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("a thermal beta sweep crosses the boundary once") {
  const RunResult r =
      run_cli("scan --thermal --ts1 1 --ts2 1 --sweep beta:0:5:0.1");
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  check_csv_well_formed(rows);
  REQUIRE(rows.size() == 52);  // header + 51 grid points
  REQUIRE(rows[0][0] == "beta");
  const int b0 = column_of(rows[0], "B_0");
  const int ppt = column_of(rows[0], "ppt_negative");
  REQUIRE(b0 >= 0);
  REQUIRE(ppt >= 0);
  int sign_changes = 0;
  for (std::size_t r_i = 1; r_i < rows.size(); ++r_i) {
    const double curr = std::stod(rows[r_i][b0]);
    CHECK(rows[r_i][ppt] == ((curr < 0) ? "true" : "false"));
    if (r_i > 1 && (std::stod(rows[r_i - 1][b0]) > 0) != (curr > 0)) ++sign_changes;
  }
  CHECK(sign_changes == 1);
}

TEST_CASE("a two-axis weight sweep visits only the simplex") {
  const RunResult r =
      run_cli("scan --ts1 2 --ts2 2 --sweep A0:0:1:0.5 --sweep A1:0:1:0.5");
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  check_csv_well_formed(rows);
  CHECK(rows[0][0] == "A0");
  CHECK(rows[0][1] == "A1");
  CHECK(rows.size() == 7);  // header + the 6 feasible grid points
  for (std::size_t r_i = 1; r_i < rows.size(); ++r_i)
    CHECK(std::stod(rows[r_i][0]) + std::stod(rows[r_i][1]) <= 1.0 + 1e-12);
}

TEST_CASE("a ring-size sweep emits one row per ring") {
  const RunResult r = run_cli("scan --ring 2 --beta 1 --sweep ring:2:8:2");
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  check_csv_well_formed(rows);
  REQUIRE(rows.size() == 5);
  for (int i = 1; i <= 4; ++i) CHECK(std::stod(rows[i][0]) == 2.0 * i);
}

TEST_CASE("an empty sweep grid is an input error") {
  const RunResult r = run_cli("scan --thermal --ts1 1 --ts2 1 --sweep beta:5:0:0.1");
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("a missing subcommand is an input error") {
  CHECK(run_cli("").code == 1);
}

TEST_CASE("help exits cleanly") {
  const RunResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(r.out.find("analyze") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
  CHECK(r.out.find("scan") != std::string::npos);
}

}  // TEST_SUITE
