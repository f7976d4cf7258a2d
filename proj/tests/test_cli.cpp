#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "cli.hpp"
#include "gentle/bq_io.hpp"
#include "gentle/families.hpp"
#include "gentle/generator.hpp"
#include "gentle/transforms.hpp"
#include "support/fixtures.hpp"

using namespace gentle;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult result;
  result.code = cli::run(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

// Scratch directory removed on scope exit.
struct TempDir {
  std::filesystem::path root;

  TempDir() {
    root = std::filesystem::temp_directory_path() /
           ("gentleq_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(root);
  }
  ~TempDir() {
    std::error_code ignored;
    std::filesystem::remove_all(root, ignored);
  }

  std::string path(const std::string& name) const { return (root / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    const std::string p = path(name);
    std::ofstream out(p);
    out << text;
    return p;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

TEST_CASE("cli family and check") {
  TempDir dir;
  const std::string file = dir.path("l0.bq");
  CliResult made = run_cli({"family", "lambda0", "3", "1", "-o", file});
  CHECK(made.code == 0);
  CHECK(made.out.empty());
  CHECK(slurp(file) == write_bq_string(lambda0(3, 1)));

  CliResult checked = run_cli({"check", file});
  CHECK(checked.code == 0);
  CHECK(checked.out ==
        "vertices: 4\n"
        "arrows: 5\n"
        "relations: 3\n"
        "connected: yes\n"
        "gentle: yes\n"
        "cycle_excess: 1\n"
        "two_cycle: yes\n"
        "finite_gldim: yes\n");
}

TEST_CASE("cli family accepts negative parameters after the option terminator") {
  // "--" must precede the whole parameter run: once the vector positional
  // starts collecting, the terminator closes it.
  CliResult made = run_cli({"family", "lambda0", "--", "2", "-1"});
  CHECK(made.code == 0);
  CHECK(made.out == write_bq_string(lambda0(2, -1)));
}

TEST_CASE("cli family rejects bad requests") {
  CHECK(run_cli({"family", "lambda9", "1", "0"}).code == 2);
  CHECK(run_cli({"family", "lambda0", "1"}).code == 2);
  CliResult bad_range = run_cli({"family", "lambda0", "1", "5"});
  CHECK(bad_range.code == 2);
  CHECK(bad_range.err.substr(0, 7) == "error: ");
}

TEST_CASE("cli phi prints the frozen lambda0 value") {
  TempDir dir;
  const std::string file = dir.path("l0.bq");
  REQUIRE(run_cli({"family", "lambda0", "3", "1", "-o", file}).code == 0);
  CliResult phi = run_cli({"phi", file});
  CHECK(phi.code == 0);
  CHECK(phi.out ==
        "phi: (3,5):1\n"
        "norm: 1\n"
        "finite_gldim: yes\n");
}

TEST_CASE("cli threads lists both kinds") {
  TempDir dir;
  const std::string file = dir.write("k.bq", write_bq_string(gentleq_tests::bound_pair()));
  CliResult threads = run_cli({"threads", file});
  CHECK(threads.code == 0);
  CHECK(threads.out ==
        "permitted: alpha\n"
        "permitted: beta\n"
        "forbidden: 1_a\n"
        "forbidden: 1_b\n");
}

TEST_CASE("cli iso distinguishes exit codes") {
  TempDir dir;
  const std::string small = dir.write("small.bq", write_bq_string(gentleq_tests::two_cycle_small()));
  const std::string mid = dir.write("mid.bq", write_bq_string(gentleq_tests::two_cycle_mid()));
  const std::string l0 = dir.path("l0.bq");
  REQUIRE(run_cli({"family", "lambda0", "2", "0", "-o", l0}).code == 0);

  CliResult same = run_cli({"iso", mid, l0});
  CHECK(same.code == 0);
  CHECK(same.out.substr(0, 11) == "isomorphic\n");
  CHECK(same.out.find("vertex ") != std::string::npos);
  CHECK(same.out.find("arrow ") != std::string::npos);

  CliResult differ = run_cli({"iso", small, mid});
  CHECK(differ.code == 1);
  CHECK(differ.out == "not isomorphic\n");
}

TEST_CASE("cli reflect emits an isomorphic two cycle quiver") {
  TempDir dir;
  const std::string file = dir.write("e.bq", write_bq_string(gentleq_tests::two_cycle_small()));
  CliResult reflected = run_cli({"reflect", file, "--vertex", "1"});
  CHECK(reflected.code == 0);
  BoundQuiver image = read_bq_string(reflected.out);
  CHECK(are_isomorphic(image, gentleq_tests::two_cycle_small()).has_value());

  CHECK(run_cli({"reflect", file, "--vertex", "nope"}).code == 2);
  CHECK(run_cli({"reflect", file}).code == 2);
}

TEST_CASE("cli coextend validates the path") {
  TempDir dir;
  const std::string file = dir.write("e.bq", write_bq_string(gentleq_tests::two_cycle_small()));
  CliResult grown = run_cli({"coextend", file, "--path", "beta", "alpha1", "gamma"});
  CHECK(grown.code == 0);
  BoundQuiver image = read_bq_string(grown.out);
  CHECK(image.quiver().vertex_count() == 3);
  CHECK(image.quiver().arrow_count() == 4);

  CHECK(run_cli({"coextend", file, "--path", "beta"}).code == 2);
  CHECK(run_cli({"coextend", file, "--path", "delta"}).code == 2);
}

TEST_CASE("cli shift moves a chain relation") {
  TempDir dir;
  // lambda0(3, 1) with its chain relation one place up; shifting it back down
  // at position 2 recovers lambda0(3, 1) exactly.
  Quiver q({"1", "2", "3", "4"},
           {{"alpha1", "3", "4"},
            {"alpha2", "2", "3"},
            {"alpha3", "1", "2"},
            {"beta", "4", "1"},
            {"gamma", "4", "1"}});
  BoundQuiver raised(q, {make_path(q, {"alpha2", "alpha3"}), make_path(q, {"alpha3", "beta"}),
                         make_path(q, {"gamma", "alpha1"})});
  const std::string file = dir.write("raised.bq", write_bq_string(raised));
  CliResult shifted = run_cli({"shift", file, "--index", "2"});
  CHECK(shifted.code == 0);
  CHECK(shifted.out == write_bq_string(lambda0(3, 1)));

  CHECK(run_cli({"shift", file, "--index", "1"}).code == 2);
  CHECK(run_cli({"shift", file, "--index", "3"}).code == 2);
}

TEST_CASE("cli pipeline reports every step and the final witness") {
  CliResult plain = run_cli({"pipeline", "--p", "1", "--r", "0"});
  CHECK(plain.code == 0);
  CHECK(plain.out.find("step 0:") != std::string::npos);
  CHECK(plain.out.find("isomorphic to lambda0(2, 0)\n") != std::string::npos);
  CHECK(plain.out.find("vertex ") != std::string::npos);
  CHECK(plain.out.find("# gentle bound quiver") == std::string::npos);

  CliResult dumped = run_cli({"pipeline", "--p", "1", "--r", "0", "--dump"});
  CHECK(dumped.code == 0);
  CHECK(dumped.out.find("# gentle bound quiver") != std::string::npos);

  CliResult negative = run_cli({"pipeline", "--p", "2", "--r=-1"});
  CHECK(negative.code == 0);
  CHECK(negative.out.find("isomorphic to lambda0(3, -1)\n") != std::string::npos);

  CHECK(run_cli({"pipeline", "--p", "1", "--r=-1"}).code == 2);
  CHECK(run_cli({"pipeline", "--p", "2", "--r", "2"}).code == 2);
}

TEST_CASE("cli gen is deterministic per seed") {
  TempDir dir;
  const std::string first = dir.path("a.bq");
  const std::string second = dir.path("b.bq");
  REQUIRE(run_cli({"gen", "--seed", "42", "--size", "6", "-o", first}).code == 0);
  REQUIRE(run_cli({"gen", "--seed", "42", "--size", "6", "-o", second}).code == 0);
  CHECK(slurp(first) == slurp(second));
  CHECK(slurp(first) == write_bq_string(random_gentle(42, 6)));

  CHECK(run_cli({"gen", "--seed", "42", "--size", "0"}).code == 2);
}

TEST_CASE("cli sweep output is stable across job counts") {
  TempDir dir;
  const std::string one = dir.path("one.json");
  const std::string four = dir.path("four.json");
  REQUIRE(run_cli({"sweep", "--max", "5", "-o", one}).code == 0);
  REQUIRE(run_cli({"sweep", "--max", "5", "-j", "4", "-o", four}).code == 0);
  CHECK(slurp(one) == slurp(four));

  CHECK(run_cli({"sweep", "--max", "1"}).code == 2);
  CHECK(run_cli({"sweep", "--max", "4", "-j", "0"}).code == 2);
}

TEST_CASE("cli sweep filters by family") {
  CliResult only = run_cli({"sweep", "--family", "lambda0", "--max", "4"});
  CHECK(only.code == 0);
  CHECK(only.out.find("\"family\": \"lambda0\"") != std::string::npos);
  CHECK(only.out.find("lambda1") == std::string::npos);
  CHECK(only.out.find("\"failures\": []") != std::string::npos);

  CHECK(run_cli({"sweep", "--family", "lambda9", "--max", "4"}).code == 2);
}

TEST_CASE("cli input failures exit with code 2") {
  TempDir dir;
  CliResult missing = run_cli({"check", dir.path("absent.bq")});
  CHECK(missing.code == 2);
  CHECK(missing.err.substr(0, 7) == "error: ");

  const std::string broken = dir.write("broken.bq", "vertex a\narrow f a\n");
  CliResult parse_failure = run_cli({"phi", broken});
  CHECK(parse_failure.code == 2);
  CHECK(parse_failure.err.find("line 2, column 1") != std::string::npos);

  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
}

TEST_CASE("cli help succeeds") {
  CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("gentleq") != std::string::npos);
}
