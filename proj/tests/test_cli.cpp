#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "sgraph/edgelist.hpp"
#include "sgraph/report_json.hpp"
#include "sgraph/theorems.hpp"

namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("sgraph_cli_test_" + std::to_string(getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name) const { return path_ / name; }
  std::string dir() const { return path_.string(); }

 private:
  fs::path path_;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("analyze") {
  TempDir tmp;
  write_file(tmp.file("c4.edges"), "n 4\n0 1 +\n1 2 +\n2 3 +\n0 3 +\n");

  SUBCASE("human-readable output") {
    const auto res = run_cli("analyze " + tmp.file("c4.edges").string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("rank") != std::string::npos);
    CHECK(res.out.find("lower_optimal_direct      yes") != std::string::npos);
  }
  SUBCASE("json output") {
    const auto res = run_cli("analyze --json " + tmp.file("c4.edges").string());
    CHECK(res.exit_code == 0);
    const auto j = sgraph::Json::parse(res.out);
    CHECK(j["value"] == 6);
    CHECK(j["lower_bound"] == 6);
    CHECK(j["lower_optimal_direct"] == true);
    CHECK(j["lower_optimal_structural"] == true);
  }
  SUBCASE("a negative 4-cycle is not lower-optimal") {
    write_file(tmp.file("c4neg.edges"), "n 4\n0 1 -\n1 2 +\n2 3 +\n0 3 +\n");
    const auto res = run_cli("analyze --json " + tmp.file("c4neg.edges").string());
    CHECK(res.exit_code == 0);
    const auto j = sgraph::Json::parse(res.out);
    CHECK(j["rank"] == 4);
    CHECK(j["lower_optimal_direct"] == false);
    CHECK(j["lower_optimal_structural"] == false);
  }
  SUBCASE("parse failures exit 2") {
    write_file(tmp.file("bad.edges"), "n 2\n0 1 *\n");
    CHECK(run_cli("analyze " + tmp.file("bad.edges").string()).exit_code == 2);
    CHECK(run_cli("analyze " + tmp.file("missing.edges").string()).exit_code == 2);
  }
}

TEST_CASE("rank command") {
  TempDir tmp;
  write_file(tmp.file("p4.edges"), "n 4\n0 1 +\n1 2 -\n2 3 +\n");
  const auto res = run_cli("rank " + tmp.file("p4.edges").string());
  CHECK(res.exit_code == 0);
  CHECK(res.out == "rank 4\nnullity 0\n");

  write_file(tmp.file("c4.edges"), "n 4\n0 1 +\n1 2 +\n2 3 +\n0 3 +\n");
  const auto c4 = run_cli("rank " + tmp.file("c4.edges").string());
  CHECK(c4.exit_code == 0);
  CHECK(c4.out == "rank 2\nnullity 2\n");

  write_file(tmp.file("empty.edges"), "n 6\n");
  const auto empty = run_cli("rank " + tmp.file("empty.edges").string());
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "rank 0\nnullity 6\n");
}

TEST_CASE("verify command") {
  SUBCASE("clean sweep exits 0 with the hand-checked counts") {
    const auto res = run_cli("verify --max-order 3 --connected-only --mod-switching --json");
    CHECK(res.exit_code == 0);
    const auto j = sgraph::Json::parse(res.out);
    CHECK(j["graphs_visited"] == 6);
    CHECK(j["signings_visited"] == 7);
    CHECK(j["bound_violations"] == 0);
    CHECK(j["equivalence_mismatches"] == 0);
    CHECK(j["lower_optimal_count"] == sgraph::Json::array({1, 1, 3}));
  }
  SUBCASE("over-cap order exits 2") {
    CHECK(run_cli("verify --max-order 11").exit_code == 2);
  }
  SUBCASE("worker counts do not change the bytes") {
    const auto one = run_cli("verify --max-order 4 --mod-switching --json --jobs 1");
    const auto eight = run_cli("verify --max-order 4 --mod-switching --json --jobs 8");
    CHECK(one.exit_code == 0);
    CHECK(eight.exit_code == 0);
    CHECK(one.out == eight.out);
  }
}

TEST_CASE("generate command") {
  TempDir tmp;

  SUBCASE("emits verified lower-optimal graphs plus the recipe") {
    const std::string out = tmp.dir() + "/corpus";
    const auto res = run_cli("generate --cycles 4 --steps 1 --count 3 --seed 7 --out " + out);
    CHECK(res.exit_code == 0);
    for (int i = 0; i < 3; ++i) {
      const std::string path = out + "/graph_000" + std::to_string(i) + ".edges";
      REQUIRE(fs::exists(path));
      const auto g = sgraph::read_edge_list_file(path);
      CHECK(g.order() == 6);
      CHECK(sgraph::is_lower_optimal_direct(g));
    }
    REQUIRE(fs::exists(out + "/recipe.json"));
    std::ifstream in(out + "/recipe.json");
    const auto recipe = sgraph::recipe_from_json(sgraph::Json::parse(in));
    CHECK(recipe.seed == 7);
    CHECK(recipe.cycle_lengths == std::vector<int>{4});
  }
  SUBCASE("a residue-2 base cycle has exactly one minus line") {
    const std::string out = tmp.dir() + "/c6";
    const auto res = run_cli("generate --cycles 6 --count 1 --out " + out);
    CHECK(res.exit_code == 0);
    std::ifstream in(out + "/graph_0000.edges");
    std::string line;
    int minus_lines = 0;
    while (std::getline(in, line)) minus_lines += line.ends_with(" -");
    CHECK(minus_lines == 1);
  }
  SUBCASE("odd cycle lengths are rejected") {
    CHECK(run_cli("generate --cycles 5 --count 1 --out " + tmp.dir()).exit_code == 2);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
