#include "bdl/bounds.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include "bdl/errors.hpp"
#include "bdl/representations.hpp"
#include "bdl/serialize.hpp"

namespace bdl {

std::string_view to_string(BraidClass c) {
  switch (c) {
    case BraidClass::periodic: return "periodic";
    case BraidClass::reducible: return "reducible";
    case BraidClass::pseudo_anosov: return "pseudo-Anosov";
  }
  return "?";
}

B3Oracle b3_oracle(const BraidWord& b) {
  if (b.strands() != 3)
    throw NotApplicable("the B3 oracle needs a 3-strand braid, got n = " + std::to_string(b.strands()));
  const LaurentMatrix m = burau_reduced(b).matrix;
  // Substituting t = -1 is exact over the integers: sum c * (-1)^e.
  B3Oracle out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Integer v = 0;
      for (const auto& [e, c] : m(i, j).terms()) v += (e[0] % 2 == 0) ? c : Integer(-c);
      out.matrix_at_minus1.push_back(v);
    }
  const auto& a = out.matrix_at_minus1;
  out.trace = a[0] + a[3];
  out.determinant = a[0] * a[3] - a[1] * a[2];
  const Integer abs_trace = abs(out.trace);
  // +-I comes from powers of the full twist, which are periodic even though
  // the trace has absolute value 2.
  const bool scalar = a[1] == 0 && a[2] == 0 && a[0] == a[3];
  if (abs_trace < 2 || scalar) {
    out.braid_class = BraidClass::periodic;
  } else if (abs_trace == 2) {
    out.braid_class = BraidClass::reducible;
  } else {
    out.braid_class = BraidClass::pseudo_anosov;
    // Larger root of x^2 - |tr| x + det.
    const double tr = abs_trace.get_d();
    const double disc = tr * tr - 4.0 * out.determinant.get_d();
    out.dilatation = (tr + std::sqrt(disc)) / 2.0;
  }
  return out;
}

int BoundReport::exit_code() const {
  int code = 0;
  for (const auto& e : errors) code = std::max(code, e.exit_code);
  return code;
}

namespace {

template <class F>
void run_stage(BoundReport& report, bool timed, const std::string& name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const Error& e) {
    report.errors.push_back({name, e.what(), e.exit_code()});
  } catch (const std::exception& e) {
    report.errors.push_back({name, e.what(), 1});
  }
  if (timed) {
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    report.timings_ms.emplace_back(name, elapsed.count());
  }
}

}  // namespace

BoundReport analyze(const BraidWord& b, const AnalyzeOptions& opts) {
  BoundReport report;
  report.braid = b.to_string();
  report.n = b.strands();

  run_stage(report, opts.with_timings, "burau", [&] {
    const LaurentMatrix m = burau_reduced(b).matrix;
    report.burau = torus_sup_sr(m, opts.grid, opts.refine);
    report.burau_bound = report.burau->sup_value;
    const double minus_one[] = {std::numbers::pi};
    report.sr_at_minus1 = spectral_radius_at(m, minus_one);
    report.sharpness_gap = report.burau_bound - report.sr_at_minus1;
    report.sharp_at_minus1 = std::abs(report.sharpness_gap) < kSharpnessTolerance;
  });

  if (opts.with_lkb) {
    run_stage(report, opts.with_timings, "lkb", [&] {
      report.lkb = torus_sup_sr(lkb_matrix(b).matrix, opts.grid, opts.refine);
      report.lkb_sup = report.lkb->sup_value;
      report.lkb_bound = std::sqrt(report.lkb_sup);
    });
  }

  if (b.strands() == 3) run_stage(report, opts.with_timings, "oracle", [&] { report.oracle = b3_oracle(b); });

  if (opts.with_zeta1) {
    run_stage(report, opts.with_timings, "zeta1", [&] {
      Zeta1Summary z;
      for (auto& s : zeta1_trace_data(b, opts.kmax, opts.term_cap)) {
        z.k_values.push_back(s.k);
        z.trace_of_norms.push_back(std::move(s.trace_of_norms));
        z.norm_of_collected_trace.push_back(std::move(s.norm_of_collected_trace));
      }
      z.growth = growth_estimate(std::span<const Integer>(z.trace_of_norms));
      report.zeta1 = std::move(z);
    });
  }
  return report;
}

namespace {

ordered_json complex_json(Complex z) { return ordered_json{{"re", round10(z.real())}, {"im", round10(z.imag())}}; }

ordered_json strings(const std::vector<Integer>& xs) {
  ordered_json out = ordered_json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

ordered_json optional_reals(const std::vector<std::optional<double>>& xs) {
  ordered_json out = ordered_json::array();
  for (const auto& x : xs) out.push_back(x ? ordered_json(round10(*x)) : ordered_json(nullptr));
  return out;
}

}  // namespace

std::string to_json(const BoundReport& r) {
  ordered_json j;
  j["schema_version"] = 1;
  j["braid"] = r.braid;
  j["n"] = r.n;

  ordered_json bounds;
  if (r.burau) {
    bounds["burau"] = {{"sup", round10(r.burau_bound)}, {"argmax_t", complex_json(r.burau->argmax.at(0))}};
  } else {
    bounds["burau"] = nullptr;
  }
  if (r.lkb) {
    bounds["lkb"] = {{"sup", round10(r.lkb_sup)}, {"bound", round10(r.lkb_bound)}};
  } else {
    bounds["lkb"] = nullptr;
  }
  bounds["direction"] = "lower";
  j["bounds"] = std::move(bounds);

  j["sharpness"] = {{"at_minus1", r.sharp_at_minus1}, {"gap", round10(r.sharpness_gap)}};

  if (r.oracle) {
    ordered_json o;
    o["class"] = std::string(to_string(r.oracle->braid_class));
    o["dilatation"] = r.oracle->dilatation ? ordered_json(round10(*r.oracle->dilatation)) : ordered_json(nullptr);
    j["oracle"] = std::move(o);
  } else {
    j["oracle"] = nullptr;
  }

  if (r.zeta1) {
    ordered_json z;
    z["k_values"] = r.zeta1->k_values;
    z["trace_of_norms"] = strings(r.zeta1->trace_of_norms);
    z["norm_of_collected_trace"] = strings(r.zeta1->norm_of_collected_trace);
    z["growth_estimate"] = round10(r.zeta1->growth.estimate);
    z["ratio_estimates"] = optional_reals(r.zeta1->growth.ratio_estimates);
    j["zeta1"] = std::move(z);
  } else {
    j["zeta1"] = nullptr;
  }

  if (r.timings_ms.empty()) {
    j["timings_ms"] = nullptr;
  } else {
    ordered_json t;
    for (const auto& [stage, ms] : r.timings_ms) t[stage] = round10(ms);
    j["timings_ms"] = std::move(t);
  }

  ordered_json errors = ordered_json::array();
  for (const auto& e : r.errors) errors.push_back({{"stage", e.stage}, {"message", e.message}, {"exit_code", e.exit_code}});
  j["errors"] = std::move(errors);
  return j.dump(2) + "\n";
}

}  // namespace bdl
