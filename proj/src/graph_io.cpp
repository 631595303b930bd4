#include "maglap/graph_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace maglap {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream probe(raw);
    std::string token;
    if (probe >> token) out.push_back({number, raw});
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(Error::Code::ParseError, "line " + std::to_string(line) + ": " + msg);
}

} // namespace

ParsedGraph parse_graph_file(const std::string& text) {
  std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw Error(Error::Code::ParseError, "empty graph file");

  int n = 0, m = 0;
  {
    std::istringstream head(lines[0].text);
    std::string extra;
    if (!(head >> n >> m) || (head >> extra)) fail(lines[0].number, "expected 'n m'");
  }
  if (static_cast<int>(lines.size()) - 1 < m)
    throw Error(Error::Code::ParseError,
                "expected " + std::to_string(m) + " edge lines, found " +
                    std::to_string(lines.size() - 1));
  if (static_cast<int>(lines.size()) - 1 > m)
    fail(lines[m + 1].number, "unexpected content after " + std::to_string(m) + " edge lines");

  std::vector<std::pair<int, int>> pairs;
  std::vector<double> alphas(static_cast<size_t>(m), 0.0);
  bool has_potential = false;
  for (int i = 0; i < m; ++i) {
    const Line& line = lines[static_cast<size_t>(i) + 1];
    std::istringstream row(line.text);
    int u = 0, v = 0;
    if (!(row >> u >> v)) fail(line.number, "expected 'u v [alpha]'");
    double alpha = 0.0;
    if (row >> alpha) {
      has_potential = true;
      std::string extra;
      if (row >> extra) fail(line.number, "trailing content '" + extra + "'");
      if (u > v) alpha = -alpha; // written on the arc u->v; store on reference arc
    }
    pairs.push_back({u, v});
    alphas[static_cast<size_t>(i)] = alpha;
  }

  ParsedGraph out{Graph::from_edge_list(n, pairs), std::nullopt};
  if (has_potential) out.potential = MagneticPotential(std::move(alphas));
  return out;
}

std::string format_graph_file(const Graph& g, const std::optional<MagneticPotential>& potential) {
  std::string out =
      std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out += std::to_string(ed.u) + " " + std::to_string(ed.v);
    if (potential) out += " " + fmt("%.17g", potential->value(e));
    out += "\n";
  }
  return out;
}

std::string emit_sweep_csv(const SweepResult& sweep) {
  std::string out;
  const int dim = sweep.dimension;
  for (int i = 0; i < dim; ++i) {
    if (i) out += ",";
    out += dim == 1 ? "t" : "t" + std::to_string(i + 1);
  }
  const int n = sweep.spectra.empty() ? 0 : sweep.spectra.front().size();
  for (int k = 1; k <= n; ++k) {
    if (dim > 0 || k > 1) out += ",";
    out += "lambda_" + std::to_string(k);
  }
  out += "\n";
  for (std::size_t i = 0; i < sweep.spectra.size(); ++i) {
    for (int d = 0; d < dim; ++d) {
      if (d) out += ",";
      out += fmt("%.12g", sweep.points[i][static_cast<size_t>(d)]);
    }
    for (int k = 1; k <= n; ++k) {
      if (dim > 0 || k > 1) out += ",";
      out += fmt("%.12g", sweep.spectra[i].lambda(k));
    }
    out += "\n";
  }
  return out;
}

std::string certificate_to_json(const Certificate& cert) {
  nlohmann::json j;
  j["kind"] = to_string(cert.kind);
  j["index"] = cert.index;
  j["lhs"] = cert.lhs;
  j["rhs"] = cert.rhs;
  j["margin"] = cert.margin;
  j["tolerance"] = cert.tolerance;
  if (cert.mode) j["mode"] = to_string(*cert.mode);
  j["witness_potential"] = cert.witness_potential.values();
  return j.dump(2);
}

} // namespace maglap
