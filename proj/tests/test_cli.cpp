#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "maglap/cli.hpp"
#include "maglap/graph_io.hpp"
#include "test_support.hpp"

using namespace maglap;
using namespace maglap::test;

namespace {

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
public:
  TempFile(const std::string& name, const std::string& content) {
    path_ = (std::filesystem::temp_directory_path() / ("maglap_test_" + name)).string();
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

} // namespace

TEST_CASE("certify matchable on the pendant-cycle fixture") {
  TempFile f("g1.graph", format_graph_file(nonmatchable6(), std::nullopt));
  Run r = run({"certify", "matchable", f.path()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"kind\": \"NonMatchable\"") != std::string::npos);
  CHECK(r.out.find("\"index\": 4") != std::string::npos);
}

TEST_CASE("oracle hamilton prints a cycle for C6") {
  TempFile f("c6.graph", format_graph_file(cycle_graph(6), std::nullopt));
  Run r = run({"oracle", "hamilton", f.path()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("hamiltonian = yes") != std::string::npos);
  CHECK(r.out.find("cycle =") != std::string::npos);
}

TEST_CASE("oracle matching reports mu") {
  TempFile f("g1.graph2", format_graph_file(nonmatchable6(), std::nullopt));
  Run r = run({"oracle", "matching", f.path()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mu = 2") != std::string::npos);
  CHECK(r.out.find("matchable = no") != std::string::npos);
}

TEST_CASE("certify hamiltonian in robust mode returns 1 on K4") {
  TempFile f("k4.graph", format_graph_file(k4(), std::nullopt));
  Run r = run({"certify", "hamiltonian", f.path(), "--mode", "robust"});
  CHECK(r.exit_code == 1);
  CHECK(r.out.empty());
}

TEST_CASE("certify hamiltonian certifies both fixtures") {
  TempFile f1("g1.graph3", format_graph_file(nonmatchable6(), std::nullopt));
  Run r1 = run({"certify", "hamiltonian", f1.path()});
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("NonHamiltonian-ViaMatching") != std::string::npos);

  TempFile f2("g2.graph", format_graph_file(nonhamiltonian6(), std::nullopt));
  Run r2 = run({"certify", "hamiltonian", f2.path(), "--mode", "paper"});
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("NonHamiltonian-ViaCycleComparison") != std::string::npos);
}

TEST_CASE("spectrum command with a pi-form angle") {
  TempFile f("c6.graph2", format_graph_file(cycle_graph(6), std::nullopt));
  Run r = run({"spectrum", f.path(), "--t", "pi/2"});
  CHECK(r.exit_code == 0);
  // constant pi/2 on the fixture's reference arcs is gauge-trivial (flux
  // 4t = 2pi), so the plain C6 spectrum comes back
  std::istringstream vals(r.out);
  double first;
  vals >> first;
  CHECK(first == doctest::Approx(0.0).scale(1).epsilon(1e-9));
}

TEST_CASE("sweep writes a CSV file") {
  TempFile f("g1.graph4", format_graph_file(nonmatchable6(), std::nullopt));
  std::string out_path =
      (std::filesystem::temp_directory_path() / "maglap_test_sweep.csv").string();
  Run r = run({"sweep", f.path(), "--family", "single-chord", "--grid", "16", "--out", out_path});
  CHECK(r.exit_code == 0);
  std::ifstream in(out_path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,lambda_1,lambda_2,lambda_3,lambda_4,lambda_5,lambda_6");
  std::remove(out_path.c_str());
}

TEST_CASE("gauge command compares potentials") {
  Graph g1 = nonmatchable6();
  std::vector<double> a(6, 0.0), b(6, 0.0);
  a[*g1.find_edge(2, 4)] = pi; // flux pi via one cycle edge
  b[*g1.find_edge(1, 3)] = pi; // flux pi via another
  TempFile fa("ga.graph", format_graph_file(g1, MagneticPotential(a)));
  TempFile fb("gb.graph", format_graph_file(g1, MagneticPotential(b)));
  TempFile fz("gz.graph", format_graph_file(g1, constant_potential(g1, 0.0)));

  CHECK(run({"gauge", fa.path(), fb.path()}).exit_code == 0);
  Run diff = run({"gauge", fa.path(), fz.path()});
  CHECK(diff.exit_code == 1);
  CHECK(diff.out.find("not-equivalent") != std::string::npos);
}

TEST_CASE("verify subcommand reports the randomized suite") {
  Run r = run({"verify", "--seed", "3", "--trials", "10"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"certify", "nonsense", "missing.graph"}).exit_code == 2);
  CHECK(run({"spectrum", "/nonexistent/path.graph"}).exit_code == 2);
  CHECK(run({"bogus"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
}
