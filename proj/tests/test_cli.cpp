#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "limitsets/paper_checks.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LIMITSETS_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& file) { return limitsets::default_data_dir() + "/" + file; }

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("limitsets_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  for (std::string l; std::getline(s, l);) {
    if (!l.empty() && l[0] != '#') out.push_back(l);
  }
  return out;
}

std::size_t words_without_11(std::size_t L) {
  std::size_t n = 0;
  for (std::size_t m = 0; m < (std::size_t{1} << L); ++m) n += (m & (m >> 1)) == 0;
  return n;
}

}  // namespace

TEST_CASE("sft language sizes") {
  Run g = run("sft " + data("golden_mean.sft") + " --res 3");
  CHECK(g.code == 0);
  auto rows = lines(g.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "L,size");
  for (std::size_t L = 1; L <= 4; ++L) {
    CHECK(rows[L] == std::to_string(L) + "," + std::to_string(words_without_11(L)));
  }
  CHECK(rows[4] == "4,8");

  Run f = run("sft " + data("full2.sft") + " --res 2");
  CHECK(f.code == 0);
  CHECK(lines(f.out) == std::vector<std::string>{"L,size", "1,2", "2,4", "3,8"});
}

TEST_CASE("headers echo parameters and outputs are deterministic") {
  fs::path dir = scratch("out");
  Run a = run("sft " + data("golden_mean.sft") + " --res 2 --seed 17 --out " + dir.string());
  Run b = run("sft " + data("golden_mean.sft") + " --res 2 --seed 17");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("# limitsets sft input=", 0) == 0);
  CHECK(a.out.find("res=2") != std::string::npos);
  CHECK(a.out.find("seed=17") != std::string::npos);
  std::ifstream f(dir / "language.csv");
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str() == a.out);

  Run dot = run("sft " + data("golden_mean.sft") + " --res 1 --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("// limitsets sft", 0) == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);

  Run j = run("ict " + data("full2.sft") + " --res 1 --format json");
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["config"]["res"] == 1);
  CHECK(parsed["result"].size() == 1);
  CHECK(parsed["result"][0]["size"] == 4);
}

TEST_CASE("exit codes") {
  fs::path dir = scratch("bad");
  write(dir / "bad_symbol.sft", "0 1\n1z\n");
  write(dir / "empty.sft", "0 1\n0\n1\n");
  CHECK(run("sft " + (dir / "bad_symbol.sft").string()).code == 2);
  CHECK(run("sft " + (dir / "missing.sft").string()).code == 2);
  CHECK(run("sft " + (dir / "empty.sft").string()).code == 3);
  CHECK(run("sft").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("sft " + data("full2.sft") + " --format xml").code == 2);
  CHECK(run("interval " + data("parabola_pair.map") + " --grid 3/7").code == 2);
}

TEST_CASE("limits table carries provenance") {
  Run r = run("limits " + data("points.json") + " gamma --res 1");
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[6] == "gamma,2,2,exact,00 11");
}

TEST_CASE("shadow subcommand") {
  fs::path dir = scratch("shadow");
  write(dir / "lib.json", R"({"alphabet": ["0", "1"], "points": {"z": {"periodic": "0"}, "p": {"periodic": "01"}}})");
  write(dir / "po.json", R"({"direction": "forward", "delta_exponent": 5, "first_index": 0, "entries": ["z", "z", "z"]})");
  std::string base = "shadow " + data("golden_mean.sft") + " " + (dir / "lib.json").string() + " " +
                     (dir / "po.json").string();
  Run ok = run(base + " --res 3 --format json");
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["result"]["rechecked"] == true);
  CHECK(run(base + " --res 5").code == 3);
}

TEST_CASE("construct and interval artifacts") {
  Run c = run("construct " + data("golden_mean.sft") + " --res 2 --format json");
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["config"]["subcommand"] == "construct");

  Run cr = run("interval " + data("parabola_pair.map") + " --grid 1/16");
  CHECK(cr.code == 0);
  CHECK(lines(cr.out).size() == 7);

  Run fals = run("interval " + data("parabola_pair.map") + " --mode falsify --epsilon 1/3 --delta 1/64");
  CHECK(fals.code == 0);
  auto j = nlohmann::json::parse(fals.out)["result"];
  CHECK(j["no_shadow"] == true);
  CHECK(j["rechecked_on_input"] == true);

  Run a2 = run("interval " + data("plateau.map") + " --mode a2 --grid 1/8 --horizon 8");
  CHECK(a2.code == 0);
  CHECK(lines(a2.out) == std::vector<std::string>{"box,lo,hi", "0,-1,-7/8", "8,0,1/8", "15,7/8,1"});
}

TEST_CASE("verify-paper filtering and corrupted corpus") {
  Run g = run("verify-paper --only gamma");
  CHECK(g.code == 0);
  auto rows = lines(g.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].rfind("gamma,", 0) == 0);

  CHECK(run("verify-paper --only no-such-example").code == 2);

  fs::path dir = scratch("corpus");
  for (const auto& e : fs::directory_iterator(limitsets::default_data_dir())) {
    fs::copy_file(e.path(), dir / e.path().filename());
  }
  write(dir / "full3.sft", "0 1 2\n0q\n");
  Run bad = run("verify-paper --only gamma --data " + dir.string());
  CHECK(bad.code == 4);
  CHECK(bad.out.find("full3.sft") != std::string::npos);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}
