#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "metareason/io.hpp"
#include "metareason/sd_solver.hpp"

namespace fs = std::filesystem;
using namespace metareason;

namespace {

struct RunResult {
  int code = -1;
  std::string output;  // stdout and stderr combined
};

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() /
             ("metareason-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& binary, const std::string& args) {
  static int counter = 0;
  const fs::path capture = scratch_dir() / ("out" + std::to_string(counter++) + ".txt");
  const std::string command = binary + " " + args + " > " + capture.string() + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = slurp(capture);
  return result;
}

RunResult cli(const std::string& args) { return run(METAREASON_CLI_PATH, args); }

std::string fixture(const char* name) {
  return std::string(METAREASON_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("solve prints an exact report and exits cleanly") {
  const auto result = cli("solve " + fixture("pp_three_profiles.json"));
  CHECK(result.code == 0);
  CHECK(result.output.find("\"value\": \"5/2\"") != std::string::npos);
  CHECK(result.output.find("\"decision\": true") != std::string::npos);

  const auto trees = cli("solve " + fixture("ae_four_trees.json"));
  CHECK(trees.code == 0);
  CHECK(trees.output.find("\"value\": \"547/240\"") != std::string::npos);

  const auto approx = cli("solve --approx " + fixture("sd_three_states.json"));
  CHECK(approx.code == 0);
  CHECK(approx.output.find("\"value\": \"5/12\"") != std::string::npos);
  CHECK(approx.output.find("\"approx_value\"") != std::string::npos);
}

TEST_CASE("solve rejects source-problem inputs") {
  const auto result = cli("solve " + fixture("ks_two_items.json"));
  CHECK(result.code == 2);
  CHECK(result.output.find("use 'oracle'") != std::string::npos);
}

TEST_CASE("oracle covers the source problems and the profile lattice") {
  const auto knapsack = cli("oracle " + fixture("ks_two_items.json"));
  CHECK(knapsack.code == 0);
  CHECK(knapsack.output.find("\"solvable\": true") != std::string::npos);

  const auto ssat = cli("oracle " + fixture("ssat_contradiction.json"));
  CHECK(ssat.code == 0);
  CHECK(ssat.output.find("\"value\": \"0\"") != std::string::npos);
  CHECK(ssat.output.find("\"decision\": false") != std::string::npos);

  const auto grid = cli("oracle --step 1/4 " + fixture("pp_three_profiles.json"));
  CHECK(grid.code == 0);
  CHECK(grid.output.find("\"grid_value\": \"5/2\"") != std::string::npos);

  const auto unsupported = cli("oracle " + fixture("ae_four_trees.json"));
  CHECK(unsupported.code == 2);
}

TEST_CASE("bad inputs exit with status 2") {
  CHECK(cli("solve /does/not/exist.json").code == 2);
  CHECK(cli("frobnicate x").code == 2);
  CHECK(cli("solve").code == 2);

  const fs::path garbage = scratch_dir() / "garbage.json";
  std::ofstream(garbage) << "{\"kind\": \"knapsack\"";
  CHECK(cli("solve " + garbage.string()).code == 2);

  CHECK(cli("reduce ssat-to-disambiguation " + fixture("ks_two_items.json") + " " +
            (scratch_dir() / "x.json").string())
            .code == 2);
}

TEST_CASE("verify reports equivalence and the fault flag flips it") {
  const auto ok = cli("verify knapsack-to-profiles " + fixture("ks_two_items.json"));
  CHECK(ok.code == 0);
  CHECK(ok.output.find("\"equivalent\": true") != std::string::npos);

  const auto broken =
      cli("verify --inject-fault knapsack-to-profiles " + fixture("ks_two_items.json"));
  CHECK(broken.code == 3);
  CHECK(broken.output.find("\"equivalent\": false") != std::string::npos);
}

TEST_CASE("reduce writes the produced instance") {
  const fs::path out = scratch_dir() / "reduced.json";
  const auto result =
      cli("reduce knapsack-to-profiles " + fixture("ks_two_items.json") + " " + out.string());
  CHECK(result.code == 0);
  CHECK(result.output.empty());
  const auto produced = load_instance(out);
  CHECK(produced.kind() == DocumentKind::PerformanceProfiles);
  CHECK(produced.as<PerformanceProfilesInstance>().budget == Rational(5));
}

TEST_CASE("generate is deterministic per seed and validates its kind") {
  const fs::path a = scratch_dir() / "gen_a.json";
  const fs::path b = scratch_dir() / "gen_b.json";
  CHECK(cli("generate state-disambiguation " + a.string() + " --seed 7").code == 0);
  CHECK(cli("generate state-disambiguation " + b.string() + " --seed 7").code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(load_instance(a).kind() == DocumentKind::StateDisambiguation);

  const fs::path c = scratch_dir() / "gen_c.json";
  CHECK(cli("generate state-disambiguation " + c.string() + " --seed 8").code == 0);
  CHECK(slurp(a) != slurp(c));

  CHECK(cli("generate sudoku " + a.string()).code == 2);
}

TEST_CASE("normalize rewrites disambiguation instances in place of the caller") {
  const fs::path skewed_path = scratch_dir() / "skewed.json";
  store_instance(InstanceDocument(DisambiguationInstance(
                     {"s1", "s2"}, {Rational(1, 4), Rational(3, 4)},
                     {Rational(4), Rational(4)}, {{{0}, {1}}}, 1, Rational(2))),
                 skewed_path);

  const fs::path uniform_path = scratch_dir() / "uniform.json";
  const auto result =
      cli("normalize uniform-prior " + skewed_path.string() + " " + uniform_path.string());
  CHECK(result.code == 0);
  const auto uniform_doc = load_instance(uniform_path);
  const auto& uniform = uniform_doc.as<DisambiguationInstance>();
  CHECK(uniform.prior == std::vector<Rational>(2, Rational(1, 2)));

  const fs::path flat_path = scratch_dir() / "flat.json";
  CHECK(cli("normalize constant-utility " + skewed_path.string() + " " + flat_path.string())
            .code == 0);
  const auto flat_doc = load_instance(flat_path);
  const auto& flat = flat_doc.as<DisambiguationInstance>();
  CHECK(flat.utility == std::vector<Rational>(2, Rational(1)));
  CHECK(flat.target == Rational(1, 2));  // old target 2 over mass 4

  CHECK(cli("normalize frobnicate " + skewed_path.string() + " " + flat_path.string())
            .code == 2);
  CHECK(cli("normalize uniform-prior " + fixture("ks_two_items.json") + " " +
            flat_path.string())
            .code == 2);
}

TEST_CASE("shipped fixtures regenerate byte-identically") {
  const fs::path regen = scratch_dir() / "fixtures";
  const auto result = run(METAREASON_MAKE_FIXTURES_PATH, regen.string());
  REQUIRE(result.code == 0);
  std::size_t checked = 0;
  for (const auto& entry : fs::directory_iterator(METAREASON_FIXTURES_DIR)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().filename().string());
    CHECK(slurp(entry.path()) == slurp(regen / entry.path().filename()));
    ++checked;
  }
  CHECK(checked == 10);
}
