#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string out_path = std::string(POLARCLI_PATH) + ".test_out.tmp";
  std::string cmd = std::string(POLARCLI_PATH) + " " + args + " > " + out_path +
                    " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  std::remove(out_path.c_str());
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("info reports non-degeneracy and Witt index") {
  RunResult r = run_cli("info --form " + fixture("symplectic_gf2_n4.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("radical rank: 0 (non-degenerate)") != std::string::npos);
  CHECK(r.output.find("Witt index: 2") != std::string::npos);
}

TEST_CASE("info on the zero form reports full radical") {
  RunResult r = run_cli("info --form " + fixture("zero_gf3_n4.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("radical rank: 4") != std::string::npos);
}

TEST_CASE("invalid form exits with the config code") {
  RunResult r = run_cli("info --form " + fixture("invalid_gf2_identity.json"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("missing file and bad flags exit with the config code") {
  CHECK(run_cli("info --form /nonexistent.json").exit_code == 2);
  CHECK(run_cli("verify --form " + fixture("symplectic_gf2_n4.json")).exit_code != 0);
}

TEST_CASE("verify W(3,2) k=2: 15 of 35") {
  RunResult r =
      run_cli("verify --form " + fixture("symplectic_gf2_n4.json") + " --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("subspaces: 35") != std::string::npos);
  CHECK(r.output.find("eq7 members: 15") != std::string::npos);
  CHECK(r.output.find("mismatches: 0") != std::string::npos);
}

TEST_CASE("verify hermitian GF(4) k=2: 27 generators") {
  RunResult r =
      run_cli("verify --form " + fixture("hermitian_gf4_n4.json") + " --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("eq7 members: 27") != std::string::npos);
}

TEST_CASE("verify over budget exits with config code") {
  RunResult r = run_cli("verify --form " + fixture("symplectic_gf2_n4.json") +
                        " --k 2 --cap 10");
  CHECK(r.exit_code == 2);
}

TEST_CASE("enumerate counts lines of W(3,2) and W(3,3)") {
  RunResult a = run_cli("enumerate --form " + fixture("symplectic_gf2_n4.json") +
                        " --k 2 --count-only");
  CHECK(a.exit_code == 0);
  CHECK(a.output.find("total: 15") != std::string::npos);
  RunResult b = run_cli("enumerate --form " + fixture("symplectic_gf3_n4.json") +
                        " --k 2 --count-only");
  CHECK(b.exit_code == 0);
  CHECK(b.output.find("total: 40") != std::string::npos);
}

TEST_CASE("enumerate beyond the Witt index is empty") {
  RunResult r = run_cli("enumerate --form " + fixture("symplectic_gf2_n4.json") +
                        " --k 3 --count-only");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("total: 0") != std::string::npos);
}

TEST_CASE("enumerate rejects infinite fields") {
  RunResult r = run_cli("enumerate --form " + fixture("symplectic_q_n4.json") +
                        " --k 2 --count-only");
  CHECK(r.exit_code == 2);
}

TEST_CASE("equations output matches the golden fixtures byte for byte") {
  RunResult q = run_cli("equations --form " + fixture("symplectic_q_n4.json") +
                        " --k 2");
  CHECK(q.exit_code == 0);
  CHECK(q.output == read_file(fixture("golden_equations_q_n4_k2.txt")));

  RunResult g = run_cli("equations --form " + fixture("symplectic_gf2_n4.json") +
                        " --k 2 --self-check");
  CHECK(g.exit_code == 0);
  CHECK(g.output == read_file(fixture("golden_equations_gf2_n4_k2.txt")));
}

TEST_CASE("zero form leaves only the grassmannian relations") {
  RunResult r =
      run_cli("equations --form " + fixture("zero_gf3_n4.json") + " --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("# form equations (0)") != std::string::npos);
}

TEST_CASE("props suite passes and is byte-identical under a fixed seed") {
  std::string args = "props --p 3 --N 3 --trials 200 --seed 7";
  RunResult a = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output.find("all checks passed") != std::string::npos);
  RunResult b = run_cli(args);
  CHECK(a.output == b.output);
}

TEST_CASE("corrupted p_product makes the suite fail") {
  RunResult r = run_cli("props --p 3 --N 3 --trials 20 --seed 7 --corrupt-p-product");
  CHECK(r.exit_code == 1);
}

TEST_CASE("verify reports embed seed and settings, json mirror parses") {
  RunResult r = run_cli("verify --form " + fixture("symplectic_gf2_n4.json") +
                        " --k 2 --format json --seed 42");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"seed\": 42") != std::string::npos);
  CHECK(r.output.find("\"mismatches\": 0") != std::string::npos);
  CHECK(r.output.find("\"cap\"") != std::string::npos);
}

TEST_CASE("verify is deterministic across runs") {
  std::string args = "verify --form " + fixture("symplectic_gf3_n4.json") +
                     " --k 2 --mode sampled --samples 40 --seed 11 --format json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  // strip the timing field before comparing
  auto strip = [](std::string s) {
    auto pos = s.find("\"elapsed_seconds\"");
    if (pos != std::string::npos) {
      auto end = s.find('\n', pos);
      s.erase(pos, end - pos);
    }
    return s;
  };
  CHECK(strip(a.output) == strip(b.output));
}
