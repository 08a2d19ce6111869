#include "bdl/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace bdl {

double round10(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return std::strtod(buf, nullptr);
}

ordered_json to_json(const LaurentPoly& f) {
  ordered_json out = ordered_json::array();
  for (const auto& [e, c] : f.terms()) out.push_back({{"exponents", e}, {"coeff", c.get_str()}});
  return out;
}

ordered_json to_json(const LaurentMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json to_json(const RepMatrixBundle& rep, int k) {
  ordered_json j;
  j["schema_version"] = 1;
  j["kind"] = std::string(to_string(rep.kind));
  j["braid"] = rep.braid.to_string();
  j["n"] = rep.braid.strands();
  j["k"] = k;
  j["variables"] = rep.kind == RepKind::lkb ? ordered_json{"q", "t"} : ordered_json{"t"};
  j["rows"] = rep.matrix.rows();
  j["cols"] = rep.matrix.cols();
  j["matrix"] = to_json(rep.matrix);
  return j;
}

std::string to_csv(const LaurentMatrix& m) {
  std::ostringstream os;
  os << "row,col,exponents,coeff\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& [e, c] : m(i, j).terms()) {
        os << i << ',' << j << ',';
        for (std::size_t v = 0; v < e.size(); ++v) os << (v ? ";" : "") << e[v];
        os << ',' << c.get_str() << '\n';
      }
  return os.str();
}

std::string growth_csv(const std::vector<Zeta1Sample>& samples) {
  std::vector<Integer> seq;
  for (const auto& s : samples) seq.push_back(s.trace_of_norms);
  std::ostringstream os;
  os << kGrowthCsvHeader << '\n';
  std::optional<GrowthEstimate> g;
  if (seq.size() >= 3) g = growth_estimate(std::span<const Integer>(seq));
  char buf[32];
  for (std::size_t i = 0; i < samples.size(); ++i) {
    os << samples[i].k << ',' << samples[i].trace_of_norms.get_str() << ','
       << samples[i].norm_of_collected_trace.get_str() << ',';
    if (g) {
      std::snprintf(buf, sizeof buf, "%.10g", g->root_estimates[i]);
      os << buf;
    }
    os << ',';
    if (g && i > 0 && g->ratio_estimates[i - 1]) {
      std::snprintf(buf, sizeof buf, "%.10g", *g->ratio_estimates[i - 1]);
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bdl
