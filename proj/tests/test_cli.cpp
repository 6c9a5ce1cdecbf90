#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "bolkit/gf2.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with the given argument string, capturing stdout.
Run run_cli(const std::string& args) {
  std::string cmd = std::string(BOLKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const fs::path& tmp() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("bolkit_cli_" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(const std::string& name) { return (tmp() / name).string(); }

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string fixture(const char* name) { return std::string(BOLKIT_FIXTURE_DIR) + "/" + name; }

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("check") {
  auto r = run_cli("check " + fixture("bol8_commutant_rnuc.tbl"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "commutant: {1,2,3,4}"));
  CHECK(has(r.out, "left_bol: true"));
  write(file("z2.tbl"), "2\n1 2\n2 1\n");
  r = run_cli("check " + file("z2.tbl"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "associative: true"));
  write(file("bad.tbl"), "3\n1 2 3\n2 2 1\n");
  CHECK(run_cli("check " + file("bad.tbl")).code == 2);
  CHECK(run_cli("check " + file("missing.tbl")).code == 2);
  CHECK(run_cli("check").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
}

TEST_CASE("construct") {
  auto r = run_cli("construct \"q9 000000000\" -o " + file("q9.tbl"));
  CHECK(r.code == 0);
  std::ifstream in(file("q9.tbl"));
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(lines(ss.str()) == 17);  // order line plus 16 rows
  CHECK(ss.str().rfind("16\n", 0) == 0);

  CHECK(run_cli("construct exceptional -o " + file("exc.tbl")).code == 0);
  r = run_cli("iso " + file("exc.tbl") + " " + fixture("bol16_trivial_lnuc.tbl"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "isomorphic: [1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16]"));

  CHECK(run_cli("construct named order12 -o " + file("o12.tbl")).code == 0);
  r = run_cli("check " + file("o12.tbl"));
  CHECK(has(r.out, "order: 12\n"));
  CHECK(has(r.out, "commutant_size: 3\n"));
  CHECK(has(r.out, "commutant_is_subloop: false\n"));

  CHECK(run_cli("construct \"q9 0000\" -o " + file("x.tbl")).code == 2);
  CHECK(run_cli("construct nonsense -o " + file("x.tbl")).code == 2);
}

TEST_CASE("construct then check round trip") {
  for (const char* spec : {"q9 111111111", "exceptional", "named order16cyclic", "named order16elem",
                           "named order4n:7", "named commutant:6",
                           "semidirect K=elem2:2 E=elem2:2 tau=1,1,1,2"}) {
    CAPTURE(spec);
    auto out = file("rt.tbl");
    REQUIRE(run_cli(std::string("construct \"") + spec + "\" -o " + out).code == 0);
    auto r = run_cli("check " + out);
    CHECK(r.code == 0);
    CHECK(has(r.out, "left_bol: true"));
  }
  auto a = run_cli("construct named order12").out;
  auto b = run_cli("construct named order12").out;
  CHECK(a == b);
  CHECK(lines(a) == 13);
}

TEST_CASE("classify") {
  std::string reps;
  std::size_t i = 0;
  for (const auto& p : bolkit::gf2::q9_representatives()) {
    auto f = file("rep" + std::to_string(i++) + ".tbl");
    REQUIRE(run_cli("construct \"q9 " + bolkit::gf2::to_string(p) + "\" -o " + f).code == 0);
    reps += " " + f;
  }
  auto r = run_cli("classify" + reps);
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 19);
  CHECK(r.out.rfind("class 1: size 1 representative ", 0) == 0);
  REQUIRE(run_cli("construct exceptional -o " + file("exc2.tbl")).code == 0);
  CHECK(lines(run_cli("classify" + reps + " " + file("exc2.tbl")).out) == 20);
  r = run_cli("classify " + file("rep0.tbl") + " " + file("rep0.tbl"));
  CHECK(lines(r.out) == 1);
  CHECK(has(r.out, "size 2"));
  write(file("bad2.tbl"), "oops");
  CHECK(run_cli("classify " + file("rep0.tbl") + " " + file("bad2.tbl")).code == 2);
}

TEST_CASE("iso") {
  CHECK(run_cli("iso " + fixture("bol8_commutant_rnuc.tbl") + " " + fixture("bol8_commutant_rnuc.tbl")).code == 0);
  auto r = run_cli("iso " + fixture("bol8_commutant_rnuc.tbl") + " " + fixture("bol16_trivial_lnuc.tbl"));
  CHECK(r.code == 1);
  CHECK(r.out == "not isomorphic\n");
}

TEST_CASE("enumerate-q9") {
  auto r = run_cli("enumerate-q9");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 512);
  CHECK(r.out.rfind("000000000 left_bol=true commutant_size=6 commutant_is_subloop=false\n", 0) == 0);
  auto c = run_cli("enumerate-q9 --classify");
  CHECK(lines(c.out) == 512 + 19);
  CHECK(run_cli("enumerate-q9 --classify").out == c.out);
}

TEST_CASE("oracle") {
  auto r = run_cli("oracle order8");
  CHECK(r.code == 0);
  CHECK(has(r.out, "all_commutants_subloops: true"));
  CHECK(has(r.out, "associative_classes: 5"));
  CHECK(run_cli("oracle order8 --budget 10").code == 1);
  CHECK(run_cli("oracle eight").code == 2);
}

TEST_CASE("verify-paper") {
  auto r = run_cli("verify-paper");
  CHECK(r.code == 0);
  CHECK(has(r.out, "PASS sec6-19-noniso "));
  CHECK(has(r.out, "PASS sec5-order8-oracle "));
  CHECK_FALSE(has(r.out, "FAIL"));
  CHECK(run_cli("verify-paper --fixtures " + file("nowhere")).code == 1);
}
