#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "mincplx/cli.hpp"
#include "support.hpp"

using namespace mincplx;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "mincplx_cli_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("sample writes identical files for identical seeds", "[cli]") {
  const std::string a = scratch("a.cplx"), b = scratch("b.cplx");
  REQUIRE(run({"sample", "--n", "30", "--k", "2", "--p", "0.1", "--seed", "7", "--out", a}).code == 0);
  REQUIRE(run({"sample", "--n", "30", "--k", "2", "--p", "0.1", "--seed", "7", "--out", b}).code == 0);
  CHECK(testing_support::read_text(a) == testing_support::read_text(b));
  CHECK(deserialize_complex(testing_support::read_text(a)) == sample_complex({30, 2, 0.1, std::nullopt, 7}));
  const Run stdout_run = run({"sample", "--n", "30", "--p", "0.1", "--seed", "7"});
  CHECK(stdout_run.out == testing_support::read_text(a));
}

TEST_CASE("find-minor exit codes", "[cli]") {
  const std::string empty = scratch("empty.cplx");
  REQUIRE(run({"sample", "--n", "30", "--p", "0", "--out", empty}).code == 0);
  const Run none = run({"find-minor", "--in", empty, "--t", "4"});
  CHECK(none.code == 1);
  CHECK(none.out.rfind("found=false", 0) == 0);

  const std::string full = scratch("full.cplx");
  REQUIRE(run({"sample", "--n", "30", "--p", "1", "--out", full}).code == 0);
  const std::string w = scratch("full.witness");
  const Run hit = run({"find-minor", "--in", full, "--t", "4", "--witness-out", w});
  CHECK(hit.code == 0);
  CHECK(hit.out.rfind("found=true t=4 n=30", 0) == 0);
  const Run verify = run({"find-minor", "--in", full, "--witness-in", w});
  CHECK(verify.code == 0);
  CHECK(verify.out.rfind("valid=true", 0) == 0);
  const Run against_empty = run({"find-minor", "--in", empty, "--witness-in", w});
  CHECK(against_empty.code == 1);
  CHECK(against_empty.out.rfind("valid=false", 0) == 0);
}

TEST_CASE("fill-pi1 summary line", "[cli]") {
  const Run r = run({"fill-pi1", "--n", "40", "--p", "1", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "fillable=true min_good_set=38 n=40 p=1 seed=3\n");
  const Run e = run({"fill-pi1", "--n", "10", "--p", "0", "--seed", "3", "--oracle"});
  CHECK(e.code == 1);
  CHECK(e.out.rfind("fillable=false min_good_set=0 n=10 p=0 seed=3\n", 0) == 0);
  CHECK(e.out.find("oracle_agree=true") != std::string::npos);
  const Run v = run({"fill-pi1", "--n", "5", "--p", "1", "--verbose"});
  CHECK(v.out.find("cycle 1 2 3 face") != std::string::npos);
}

TEST_CASE("bound prints both evaluations", "[cli]") {
  const Run r = run({"bound", "--n", "10", "--c", "0.1", "--K", "2"});
  REQUIRE(r.code == 0);
  double closed = 0, direct = 0;
  REQUIRE(std::sscanf(r.out.c_str(), "closed_form=%lf direct_sum=%lf", &closed, &direct) == 2);
  CHECK(closed == Catch::Approx(direct).epsilon(1e-12));
  CHECK(run({"bound", "--n", "10", "--c", "0.5", "--K", "2"}).code == 2);
}

TEST_CASE("surface and enumerate", "[cli]") {
  const Run g = run({"surface", "--in", testing_support::data_path("genus2_10v.cplx")});
  CHECK(g.code == 0);
  CHECK(g.out == "closed=true chi=-2 orientable=true genus=2 f2=24\n");
  const std::string two = scratch("two.cplx");
  cli::write_file(two, serialize_complex(KComplex(4, 2, {Face{1, 2, 3}, Face{2, 3, 4}})));
  const Run bad = run({"surface", "--in", two});
  CHECK(bad.out == "closed=false chi=1 orientable=false genus=NA f2=2 reason=edge-degree\n");

  const Run e4 = run({"enumerate", "--l", "4"});
  CHECK(e4.out == "1 2 3;1 2 4;1 3 4;2 3 4\n");
  const Run e5 = run({"enumerate", "--l", "5"});
  CHECK(std::count(e5.out.begin(), e5.out.end(), '\n') == 10);
  CHECK(run({"enumerate", "--l", "5", "--oracle"}).out == e5.out);
  CHECK(run({"enumerate", "--l", "9"}).code == 2);
}

TEST_CASE("sweep CSV through the command line", "[cli]") {
  const Run a = run({"sweep", "--mode", "minor", "--n", "30", "--c", "0,30", "--trials", "2", "--repro"});
  CHECK(a.code == 0);
  CHECK(a.out == to_csv(threshold_sweep([] {
                   SweepConfig c;
                   c.ns = {30};
                   c.cs = {0.0, 30.0};
                   c.trials = 2;
                   c.repro = true;
                   return c;
                 }()).rows));
  const Run g = run({"giant", "--n", "200", "--c", "0.5,2", "--trials", "2", "--repro"});
  CHECK(g.code == 0);
  CHECK(g.out.rfind(kCsvHeader, 0) == 0);
  CHECK(run({"sweep", "--mode", "minor", "--n", "30", "--c", "2,1"}).code == 2);
}

TEST_CASE("config files supply defaults the command line overrides", "[cli][config]") {
  const std::string conf = scratch("bound.conf");
  cli::write_file(conf, "# union bound\nn = 10\nc = 0.1\n\nK = 2\n");
  const Run a = run({"bound", "--config", conf});
  REQUIRE(a.code == 0);
  CHECK(a.out == run({"bound", "--n", "10", "--c", "0.1", "--K", "2"}).out);
  const Run b = run({"bound", "--config", conf, "--K", "3"});
  CHECK(b.out == run({"bound", "--n", "10", "--c", "0.1", "--K", "3"}).out);
  CHECK(run({"bound", "--config", scratch("missing.conf")}).code == 2);
}

TEST_CASE("usage errors", "[cli]") {
  const Run unknown = run({"sample", "--n", "10", "--bogus", "1"});
  CHECK(unknown.code == 2);
  CHECK_FALSE(unknown.err.empty());
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"sample", "--n", "10", "--p", "2"}).code == 2);
  CHECK(run({"surface", "--in", scratch("nope.cplx")}).code == 2);
}
