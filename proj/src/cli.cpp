#include "maglap/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "maglap/graph_io.hpp"
#include "maglap/theorems.hpp"

namespace maglap {

namespace {

ParsedGraph load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Code::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_file(buf.str());
}

std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int cmd_spectrum(const std::string& path, const std::string& t_text, std::ostream& out) {
  ParsedGraph pg = load(path);
  MagneticPotential alpha = !t_text.empty() ? constant_potential(pg.graph, parse_angle(t_text))
                            : pg.potential  ? *pg.potential
                                            : constant_potential(pg.graph, 0.0);
  Spectrum s = spectrum(pg.graph, alpha);
  for (int k = 1; k <= s.size(); ++k) out << (k > 1 ? " " : "") << fmt12(s.lambda(k));
  out << "\n";
  return 0;
}

int cmd_sweep(const std::string& path, const std::string& family, int grid, int chord,
              const std::string& out_path, std::ostream& err) {
  ParsedGraph pg = load(path);
  SweepResult r;
  if (family == "const")
    r = sweep_constant_potential(pg.graph, grid);
  else if (family == "single-chord")
    r = sweep_single_chord(pg.graph, chord, grid);
  else
    r = sweep_chord_fluxes(pg.graph, grid);
  std::ofstream out(out_path);
  if (!out) throw Error(Error::Code::ParseError, "cannot write '" + out_path + "'");
  out << emit_sweep_csv(r);
  err << r.spectra.size() << " spectra written to " << out_path << "\n";
  return 0;
}

int cmd_certify(const std::string& target, const std::string& path, const std::string& mode,
                int grid, std::ostream& out, std::ostream& err) {
  ParsedGraph pg = load(path);
  SweepStrategy strategy;
  if (grid > 0) {
    strategy.const_grid = grid;
    strategy.single_chord_grid = grid;
  }
  std::optional<Certificate> cert;
  if (target == "matchable") {
    cert = certify_nonmatchable(pg.graph, strategy);
  } else {
    const int n = pg.graph.vertex_count();
    if (n % 2 == 0 && n > 3) cert = certify_nonhamiltonian_via_matching(pg.graph, strategy);
    if (!cert) {
      CycleCompareMode m =
          mode == "paper" ? CycleCompareMode::paper : CycleCompareMode::robust;
      cert = certify_nonhamiltonian_via_cycle(pg.graph, grid > 0 ? grid : 64, m, &err, strategy);
    }
  }
  if (!cert) {
    err << "no certificate found\n";
    return 1;
  }
  out << certificate_to_json(*cert) << "\n";
  return 0;
}

int cmd_oracle(const std::string& kind, const std::string& path, std::ostream& out) {
  ParsedGraph pg = load(path);
  if (kind == "matching") {
    Matching m = maximum_matching(pg.graph);
    out << "mu = " << m.size() << "\n";
    out << "matching =";
    for (EdgeId e : m.edges)
      out << " (" << pg.graph.edge(e).u << "," << pg.graph.edge(e).v << ")";
    out << "\n";
    out << "matchable = " << (2 * m.size() == pg.graph.vertex_count() ? "yes" : "no") << "\n";
    return 0;
  }
  HamiltonResult r = find_hamiltonian_cycle(pg.graph);
  switch (r.status) {
    case HamiltonStatus::found: {
      out << "hamiltonian = yes\ncycle =";
      for (int v : r.cycle->vertices) out << " " << v;
      out << "\n";
      break;
    }
    case HamiltonStatus::none:
      out << "hamiltonian = no\n";
      break;
    case HamiltonStatus::unknown:
      out << "hamiltonian = unknown\n";
      break;
  }
  return 0;
}

int cmd_verify(std::uint64_t seed, int trials, std::ostream& out) {
  TheoremReport report = verify_theorem_suite(seed, trials);
  out << report.summary();
  out << (report.all_passed() ? "all checks passed\n" : "FAILURES detected\n");
  return report.all_passed() ? 0 : 1;
}

int cmd_gauge(const std::string& path_a, const std::string& path_b, std::ostream& out) {
  ParsedGraph a = load(path_a), b = load(path_b);
  if (!a.potential || !b.potential)
    throw Error(Error::Code::ParseError, "both files must carry a potential column");
  bool eq = is_gauge_equivalent(MagneticGraph(a.graph, *a.potential),
                                MagneticGraph(b.graph, *b.potential));
  out << (eq ? "equivalent" : "not-equivalent") << "\n";
  return eq ? 0 : 1;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"discrete magnetic Laplacian spectra, sweeps and certificates"};
  app.require_subcommand(1);

  std::string file, file_b, t_text, family = "const", mode = "robust", out_path, target, kind;
  int grid = 0, chord = 0, trials = 200;
  std::uint64_t seed = 0;

  auto* sp = app.add_subcommand("spectrum", "eigenvalues of one magnetic graph");
  sp->add_option("file", file)->required();
  sp->add_option("--t", t_text, "constant potential angle (accepts pi, pi/2, ...)");

  auto* sw = app.add_subcommand("sweep", "spectra over a potential family, as CSV");
  sw->add_option("file", file)->required();
  sw->add_option("--family", family)->check(CLI::IsMember({"const", "chord", "single-chord"}));
  sw->add_option("--grid", grid, "grid points per axis")->default_val(256);
  sw->add_option("--chord", chord, "chord index for single-chord sweeps");
  sw->add_option("--out", out_path)->required();

  auto* ce = app.add_subcommand("certify", "search for a spectral obstruction");
  ce->add_option("target", target)->required()->check(CLI::IsMember({"matchable", "hamiltonian"}));
  ce->add_option("file", file)->required();
  ce->add_option("--mode", mode)->check(CLI::IsMember({"paper", "robust"}));
  ce->add_option("--grid", grid, "sweep grid size");

  auto* orc = app.add_subcommand("oracle", "exact combinatorial search");
  orc->add_option("kind", kind)->required()->check(CLI::IsMember({"matching", "hamilton"}));
  orc->add_option("file", file)->required();

  auto* ve = app.add_subcommand("verify", "randomized spectral-bound suite");
  ve->add_option("--seed", seed)->default_val(0);
  ve->add_option("--trials", trials)->default_val(200);

  auto* ga = app.add_subcommand("gauge", "test two potentials for gauge equivalence");
  ga->add_option("fileA", file)->required();
  ga->add_option("fileB", file_b)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend()); // CLI11 convention
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sp->parsed()) return cmd_spectrum(file, t_text, out);
    if (sw->parsed()) return cmd_sweep(file, family, grid, chord, out_path, err);
    if (ce->parsed()) return cmd_certify(target, file, mode, grid, out, err);
    if (orc->parsed()) return cmd_oracle(kind, file, out);
    if (ve->parsed()) return cmd_verify(seed, trials, out);
    if (ga->parsed()) return cmd_gauge(file, file_b, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace maglap
