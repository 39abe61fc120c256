#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eigensolver/io.hpp"

namespace fs = std::filesystem;
using namespace eigensolver;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("eigensolver_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, const std::string& stdout_file = "/dev/null") {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " > " + stdout_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("solve the running example through the CLI") {
  Scratch s;
  REQUIRE(run("example running --output " + (s / "run.json") + " --tuple " + (s / "tuple.json")) == 0);
  CHECK(run("solve --input " + (s / "run.json") + " --family mixed --output " + (s / "r.json")) == 0);
  const auto rep = read_json_file(s / "r.json");
  REQUIRE(rep.at("solutions").size() == 1);
  CHECK(rep.at("solutions")[0].at("re")[0].get<double>() == doctest::Approx(-1.0));
  CHECK(rep.at("solutions")[0].at("re")[1].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("online path is deterministic") {
  Scratch s;
  REQUIRE(run("example running --output " + (s / "run.json") + " --tuple " + (s / "tuple.json")) == 0);
  const std::string base = "solve --input " + (s / "run.json") + " --family mixed --tuple " + (s / "tuple.json") +
                           " --seed 5 --output ";
  REQUIRE(run(base + (s / "a.json")) == 0);
  REQUIRE(run(base + (s / "b.json")) == 0);
  CHECK(read_json_file(s / "a.json").at("solutions") == read_json_file(s / "b.json").at("solutions"));
  CHECK(read_json_file(s / "a.json").at("gamma") == 2);
}

TEST_CASE("save and reuse a tuple") {
  Scratch s;
  REQUIRE(run("example molecular --output " + (s / "mol.json")) == 0);
  REQUIRE(run("solve --input " + (s / "mol.json") + " --family mixed --save-tuple " + (s / "t.json") +
              " --output " + (s / "r1.json")) == 0);
  REQUIRE(run("solve --input " + (s / "mol.json") + " --family mixed --tuple " + (s / "t.json") + " --output " +
              (s / "r2.json")) == 0);
  CHECK(read_json_file(s / "r1.json").at("solutions").size() == 16);
  CHECK(read_json_file(s / "r2.json").at("solutions").size() == 16);
}

TEST_CASE("exit codes") {
  Scratch s;
  REQUIRE(run("example running --output " + (s / "run.json")) == 0);
  // missing --family
  CHECK(run("solve --input " + (s / "run.json")) == 3);
  CHECK(run("solve --input " + (s / "run.json") + " --family sparse") == 3);
  // unmixed needs structure metadata
  CHECK(run("solve --input " + (s / "run.json") + " --family unmixed") == 3);
  {
    std::ofstream(s / "bad.json") << "{ not json";
  }
  CHECK(run("solve --input " + (s / "bad.json") + " --family dense") == 3);
  // declared degrees too small for the equations: generic failure
  {
    nlohmann::json j = read_json_file(s / "run.json");
    j["structure"] = {{"degrees", {1, 1, 1}}};
    std::ofstream(s / "tiny.json") << j.dump();
  }
  CHECK(run("solve --input " + (s / "tiny.json") + " --family incremental") == 1);
  // x = 0 is a whole line of solutions, so no f0 satisfies the rank condition
  {
    const PolySystem F = {Polynomial(2, {{{1, 0}, 1.0}}), Polynomial(2, {{{1, 0}, 2.0}, {{1, 1}, 1.0}})};
    SystemStructure st;
    st.degrees = std::vector<int>{1, 2};
    std::ofstream(s / "line.json") << system_to_json(F, st).dump();
  }
  CHECK(run("solve --input " + (s / "line.json") + " --family dense") == 2);
  CHECK(run("bench no_such_scenario") == 3);
}

TEST_CASE("bench CLI") {
  Scratch s;
  REQUIRE(run("bench", s / "registry.txt") == 0);
  const std::string reg = slurp(s / "registry.txt");
  for (const char* name : {"table3_small", "table4_small", "square_dense", "infinity_stress"})
    CHECK(reg.find(name) != std::string::npos);

  REQUIRE(run("bench table3_small --output " + (s / "t3.csv")) == 0);
  std::ifstream in(s / "t3.csv");
  std::string header;
  std::getline(in, header);
  std::ifstream g(std::string(GOLDEN_DIR) + "/bench_header.csv");
  std::string expect;
  std::getline(g, expect);
  CHECK(header == expect);
}

TEST_CASE("seed from the environment") {
  Scratch s;
  REQUIRE(run("example running --output " + (s / "run.json")) == 0);
  const std::string cmd = "solve --input " + (s / "run.json") + " --family mixed --output ";
  REQUIRE(run(cmd + (s / "a.json")) == 0);
  ::setenv("EIGENSOLVER_SEED", "1234", 1);
  REQUIRE(run(cmd + (s / "b.json")) == 0);
  ::unsetenv("EIGENSOLVER_SEED");
  CHECK(read_json_file(s / "a.json").at("seed") == 0);
  CHECK(read_json_file(s / "b.json").at("seed") == 1234);
}
