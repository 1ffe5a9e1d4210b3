// End-to-end checks of the kpave executable: exit codes, file output and
// golden JSON reports. Set KPAVE_UPDATE_GOLDEN=1 to rewrite the goldens.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "kpave/matrix_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run kpave_run(const std::string& args) {
  const std::string cmd = std::string(KPAVE_TOOL) + " " + args + " 2>/dev/null";
  Run run;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) run.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return run;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "kpave-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(KPAVE_GOLDEN_DIR) / name;
  if (std::getenv("KPAVE_UPDATE_GOLDEN")) {
    std::ofstream(path) << actual;
    MESSAGE("updated " << path.string());
    return;
  }
  REQUIRE_MESSAGE(fs::exists(path), "missing golden " << path.string());
  CHECK(slurp(path) == actual);
}

void check_envelope(const nlohmann::ordered_json& j) {
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> with_seed = {"tool_version", "command", "seed", "field",
                                              "matroid", "results"};
  std::vector<std::string> without_seed = with_seed;
  without_seed.erase(without_seed.begin() + 2);
  CHECK((keys == with_seed || keys == without_seed));
  CHECK(j["results"].is_array());
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct writes provenance comments") {
    const auto path = scratch("extremal-5-1.txt");
    REQUIRE(kpave_run("construct extremal --rank 5 --k 1 -o " + path.string()).status == 0);
    const auto mf = kpave::read_matrix_file(path);
    CHECK(mf.matroid.rows() == 5);
    CHECK(mf.matroid.size() == 10);
    CHECK(mf.comments == std::vector<std::string>{"construct extremal r=5 k=1", "loose-element 5"});
    CHECK(mf.loose_element == 5);

    const auto c = kpave_run("construct circuit --rank 7");
    CHECK(c.status == 0);
    CHECK(kpave::parse_matrix(c.out).matroid.size() == 8);
    const auto rm = kpave_run("construct reed-muller --m 4");
    CHECK(kpave::parse_matrix(rm.out).matroid.rows() == 5);
    CHECK(kpave::parse_matrix(rm.out).matroid.size() == 16);
    CHECK(kpave_run("construct extremal --rank 5 --k 4").status == 2);
    CHECK(kpave_run("construct extremal --rank 5").status == 2);
    CHECK(kpave_run("construct torus --rank 5").status == 2);
  }

  TEST_CASE("analyze golden reports") {
    const auto circuit = scratch("circuit-5.txt");
    REQUIRE(kpave_run("construct circuit --rank 5 -o " + circuit.string()).status == 0);
    const auto a = kpave_run("analyze --json " + circuit.string());
    CHECK(a.status == 0);
    const auto j = nlohmann::ordered_json::parse(a.out);
    check_envelope(j);
    CHECK(j["results"][0]["girth"] == 6);
    CHECK(j["results"][0]["paving_index"] == 0);
    check_golden("analyze_circuit5.json", a.out);

    const auto ext = scratch("extremal-5-1b.txt");
    REQUIRE(kpave_run("construct extremal --rank 5 --k 1 -o " + ext.string()).status == 0);
    const auto e = kpave_run("analyze --json --element 5 --k 1 " + ext.string());
    CHECK(e.status == 0);
    const auto je = nlohmann::ordered_json::parse(e.out);
    CHECK(je["results"][0]["local_girth"] == 5);
    CHECK(je["results"][0]["looseness_index"] == 1);
    CHECK(je["results"][0]["is_k_loose"] == true);
    check_golden("analyze_extremal5_1_element5.json", e.out);

    const auto rm = scratch("rm5.txt");
    REQUIRE(kpave_run("construct reed-muller --m 5 -o " + rm.string()).status == 0);
    const auto r = nlohmann::ordered_json::parse(kpave_run("analyze --json " + rm.string()).out);
    CHECK(r["results"][0]["paving_index"] == 3);

    CHECK(kpave_run("analyze " + rm.string()).status == 0);
    CHECK(kpave_run("analyze --element 99 " + rm.string()).status == 2);
  }

  TEST_CASE("bounds verdicts and exit codes") {
    const auto ext = scratch("extremal-5-1c.txt");
    REQUIRE(kpave_run("construct extremal --rank 5 --k 1 -o " + ext.string()).status == 0);
    const auto b = kpave_run("bounds --json --theorem T1.1 --k 1 " + ext.string());
    CHECK(b.status == 0);
    const auto j = nlohmann::ordered_json::parse(b.out);
    check_envelope(j);
    CHECK(j["results"][0]["verdict"] == "attained");
    CHECK(j["results"][0]["observed_value"] == 10);
    CHECK(j["results"][0]["bound_value"] == 10);
    check_golden("bounds_extremal5_1_T1.1.json", b.out);

    const auto rm = scratch("rm5b.txt");
    REQUIRE(kpave_run("construct reed-muller --m 5 -o " + rm.string()).status == 0);
    const auto h = kpave_run("bounds --json --theorem T1.4 --k 3 " + rm.string());
    CHECK(h.status == 0);
    CHECK(nlohmann::ordered_json::parse(h.out)["results"][0]["verdict"] == "hypothesis-not-met");

    const auto c9 = scratch("circuit-9.txt");
    REQUIRE(kpave_run("construct circuit --rank 9 -o " + c9.string()).status == 0);
    const auto c = kpave_run("bounds --json --theorem C3.4 --k 2 " + c9.string());
    CHECK(c.status == 0);
    CHECK(nlohmann::ordered_json::parse(c.out)["results"][0]["verdict"] == "holds");

    CHECK(kpave_run("bounds --theorem T1.1 " + ext.string()).status == 2);  // missing --k
    CHECK(kpave_run("bounds --theorem T3.1 " + ext.string()).status == 2);  // wrong field
    CHECK(kpave_run("bounds --theorem X " + ext.string()).status == 2);
    CHECK(kpave_run("bounds --k 1 " + ext.string()).status == 0);           // all theorems
  }

  TEST_CASE("search reports") {
    const auto ne = kpave_run("search --rank 5 --k 1 --q 2 --mode nonexistence --json");
    CHECK(ne.status == 0);
    const auto j = nlohmann::ordered_json::parse(ne.out);
    check_envelope(j);
    CHECK(j["results"][0]["status"] == "confirmed");
    CHECK(j["results"][0]["exhausted"] == true);
    check_golden("search_nonexistence_r5_k1.json", ne.out);

    const auto mx = kpave_run("search --rank 4 --k 1 --q 2 --mode max-size --threads 2 --json");
    CHECK(mx.status == 0);
    const auto jm = nlohmann::ordered_json::parse(mx.out);
    CHECK(jm["results"][0]["best_size"] >= 8);

    const auto cut = kpave_run("search --rank 8 --k 3 --budget 10 --json");
    const auto jc = nlohmann::ordered_json::parse(cut.out);
    CHECK(jc["results"][0]["exhausted"] == false);
    CHECK(jc["results"][0]["claim"] == "bound not certified");

    CHECK(kpave_run("search --rank 5 --k 1 --mode sideways").status == 2);
    CHECK(kpave_run("search --rank 5 --k 1 --q 6").status == 2);
    CHECK(kpave_run("search --rank 5 --k 1 --threads 0").status == 2);
  }

  TEST_CASE("verify and usage errors") {
    const auto v = kpave_run("verify --suite table-1-6 --json");
    CHECK(v.status == 0);
    const auto j = nlohmann::ordered_json::parse(v.out);
    check_envelope(j);
    CHECK(j["seed"] == 0);
    CHECK(j["results"][0]["passed"] == true);
    check_golden("verify_table_1_6.json", v.out);

    const auto human = kpave_run("verify --suite table-1-6");
    CHECK(human.out.find("12") != std::string::npos);
    CHECK(kpave_run("verify --suite nonsense").status == 2);
    CHECK(kpave_run("").status == 2);
    CHECK(kpave_run("analyze /nonexistent/file.txt").status == 2);

    const auto bad = scratch("bad.txt");
    std::ofstream(bad) << "2 2 2\n1 0\n0 5\n";
    CHECK(kpave_run("analyze " + bad.string()).status == 2);
  }
}
