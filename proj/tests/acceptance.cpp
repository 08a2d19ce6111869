// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bdl/bounds.hpp"
#include "bdl/free_group.hpp"
#include "bdl/representations.hpp"
#include "bdl/samples.hpp"
#include "bdl/spectral.hpp"

#ifndef BDL_EXE
#error "BDL_EXE must name the bdl executable"
#endif

using namespace bdl;

namespace {

constexpr double kLambda = 2.618033988749895;

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os.precision(3);
  os << secs;
  if (secs > limit_s) {
    out.passed = false;
    out.detail += " [over the " + std::to_string(static_cast<int>(limit_s)) + " s budget]";
  }
  if (!out.passed) ++failures;
  std::printf("%s criterion %d: %s (%s s)%s%s\n", out.passed ? "PASS" : "FAIL", id, title, os.str().c_str(),
              out.detail.empty() ? "" : " : ", out.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

Outcome braid_relations() {
  int checked = 0;
  for (RepKind kind : {RepKind::burau_reduced, RepKind::lkb, RepKind::fox_specialized})
    for (int n = 3; n <= 5; ++n)
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const bool adjacent = j == i + 1;
          const BraidWord lhs = adjacent ? BraidWord(n, {i, j, i}) : BraidWord(n, {i, j});
          const BraidWord rhs = adjacent ? BraidWord(n, {j, i, j}) : BraidWord(n, {j, i});
          if (representation(kind, lhs).matrix != representation(kind, rhs).matrix)
            return {false, std::string(to_string(kind)) + " fails " + lhs.to_string() + " = " + rhs.to_string()};
          ++checked;
        }
  return {true, std::to_string(checked) + " exact identities"};
}

Outcome fox_identity() {
  samples::Rng rng(0x5eed0002);
  for (int c = 0; c < 200; ++c) {
    const int n = rng.uniform(1, 4);
    const FreeWord w = samples::random_free_word(rng, n, 12);
    GroupRingElement lhs;
    for (int i = 1; i <= n; ++i)
      lhs += fox_derivative(w, i, n) * (GroupRingElement::of(FreeWord::generator(i)) - GroupRingElement::one());
    if (lhs != GroupRingElement::of(w) - GroupRingElement::one()) return {false, "word " + w.to_string()};
  }
  return {true, "200 words"};
}

Outcome burau_sharp() {
  const BraidWord beta(3, {1, -2});
  const TorusSupResult r = torus_sup_sr(burau_reduced(beta).matrix, 256, 3);
  const double dist = std::abs(std::remainder(r.argmax_angles[0] - std::numbers::pi, 2 * std::numbers::pi));
  const double oracle = *b3_oracle(beta).dilatation;
  const bool ok = std::abs(r.sup_value - kLambda) <= 1e-6 && dist <= r.final_step &&
                  std::abs(r.sup_value - oracle) <= 1e-6;
  return {ok, fmt("sup %.10f, |arg t - pi| %.3g, oracle %.10f", r.sup_value, dist, oracle)};
}

Outcome recover_inequalities() {
  samples::Rng rng(0x5eed0004);
  AnalyzeOptions opts;
  opts.grid = 128;
  opts.refine = 2;
  opts.with_lkb = true;
  int found = 0;
  double worst_burau = -1e9, worst_lkb = -1e9;
  while (found < 25) {
    const BraidWord b = samples::random_braid(rng, 3, rng.uniform(1, 8));
    const B3Oracle o = b3_oracle(b);
    if (o.braid_class != BraidClass::pseudo_anosov) continue;
    ++found;
    const BoundReport r = analyze(b, opts);
    if (!r.errors.empty()) return {false, b.to_string() + ": " + r.errors[0].message};
    const double lambda = *o.dilatation;
    worst_burau = std::max(worst_burau, r.burau_bound - lambda);
    worst_lkb = std::max(worst_lkb, r.lkb_sup - lambda * lambda);
    if (r.burau_bound > lambda + 1e-6 || r.lkb_sup > lambda * lambda + 1e-6)
      return {false, "braid " + b.to_string() + fmt(": burau %.8f lkb %.8f lambda %.8f", r.burau_bound, r.lkb_sup, lambda)};
  }
  return {true, fmt("max(burau - lambda) %.3g, max(lkb - lambda^2) %.3g", worst_burau, worst_lkb)};
}

Outcome zeta1_growth() {
  std::vector<Integer> seq;
  for (const auto& s : zeta1_trace_data(BraidWord(3, {1, -2}), 12)) seq.push_back(s.trace_of_norms);
  const GrowthEstimate g = growth_estimate(std::span<const Integer>(seq));
  bool ok = std::abs(g.estimate - kLambda) <= 0.10 * kLambda;
  const auto& r = g.ratio_estimates;
  for (std::size_t i = r.size() - 3; i < r.size(); ++i) {
    ok = ok && r[i] && std::abs(*r[i] - kLambda) <= 0.05 * kLambda;
    if (i > r.size() - 3) ok = ok && std::abs(*r[i] - kLambda) <= std::abs(*r[i - 1] - kLambda);
  }
  return {ok, fmt("estimate %.6f, last ratios %.6f %.6f", g.estimate, r[r.size() - 2].value_or(0), r.back().value_or(0))};
}

Outcome trace_estimate() {
  samples::Rng rng(0x5eed0006);
  std::vector<LaurentMatrix> cases;
  for (int c = 0; c < 10; ++c) cases.push_back(samples::random_laurent_matrix(rng, 2, rng.uniform(1, 2), 3, 3));
  const LaurentPoly t = LaurentPoly::variable(1, 0);
  cases.push_back(LaurentMatrix{{t, LaurentPoly::constant(1, 1)}, {LaurentPoly(1), LaurentPoly::constant(1, 2)}});
  std::ostringstream detail;
  detail.precision(6);
  bool ok = true;
  int failed = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const double sup = torus_sup_sr(cases[c], 512, 3).sup_value;
    const double growth = trace_power_growth(cases[c], 30).norm_of_trace_growth.estimate;
    const bool pass = sup > 1.05 ? std::abs(growth - sup) <= 0.02 * sup : growth <= 1.1;
    if (!pass) {
      ok = false;
      ++failed;
      detail << "case " << c << " growth " << growth << " vs sup " << sup << " (" << (growth / sup - 1) * 100
             << "%); ";
    }
  }
  if (ok) detail << cases.size() << " cases";
  else detail << failed << " of " << cases.size() << " cases outside tolerance";
  return {ok, detail.str()};
}

Outcome sine_lemma() {
  double worst = 0.0;
  for (int m = 1; m <= 64; ++m) worst = std::max(worst, std::abs(sine_product(m) - (m + 1)));
  return {worst < 1e-8, fmt("max deviation %.3g", worst)};
}

Outcome polynomial_lemma() {
  samples::Rng rng(0x5eed0008);
  double worst = 0.0;
  for (int c = 0; c < 100; ++c) {
    const LaurentPoly f = samples::random_laurent(rng, rng.uniform(1, 3), rng.uniform(0, 6), 10);
    int m = 0;
    for (auto [lo, hi] : f.exponent_ranges()) m = std::max(m, hi - lo);
    const CoefficientBound b = coefficient_bound_check(f, 8 * (m + 1));
    if (!b.holds) return {false, "case " + std::to_string(c) + ": " + f.to_string()};
    if (b.rhs > 0) worst = std::max(worst, b.lhs.get_d() / b.rhs);
  }
  return {true, fmt("100 polynomials, max lhs/rhs %.4f", worst)};
}

unsigned long long enumerate(int remaining, int part) {
  if (remaining == 0) return 1;
  if (part == 0) return 0;
  unsigned long long total = 0;
  for (int used = 0; used <= remaining; used += part) total += enumerate(remaining - used, part - 1);
  return total;
}

Outcome summand_lemma() {
  for (int m = 1; m <= 20; ++m)
    if (partition_count(m) != Integer(std::to_string(enumerate(m, m)))) return {false, "mismatch at m = " + std::to_string(m)};
  if (partition_count(1) != 1 || partition_count(4) != 5) return {false, "S_1 or S_4 wrong"};
  for (int m = 2; m <= 100; ++m)
    if (partition_count(m) < partition_count(m - 1)) return {false, "not monotone at m = " + std::to_string(m)};
  auto root = [](int m) { return std::pow(partition_count(m).get_d(), 1.0 / m); };
  const bool ok = root(100) < 1.25 && root(40) > root(60) && root(60) > root(80) && root(80) > root(100);
  return {ok, fmt("S_100^(1/100) = %.5f", root(100))};
}

Outcome norm_order() {
  samples::Rng rng(0x5eed000a);
  long instances = 0;
  for (int c = 0; c < 20; ++c) {
    const BraidWord b = samples::random_braid(rng, 3, rng.uniform(1, 8));
    const GroupRingMatrix fox = fox_matrix(b);
    Integer diag = 0;
    for (std::size_t i = 0; i < fox.rows(); ++i) diag += norm(fox(i, i));
    if (norm(fox.trace()) > diag) return {false, "group ring trace, braid " + b.to_string()};
    for (std::size_t i = 0; i < fox.rows(); ++i)
      for (std::size_t j = 0; j < fox.cols(); ++j) {
        if (norm(specialize(fox(i, j))) > norm(fox(i, j))) return {false, "specialization, braid " + b.to_string()};
        ++instances;
      }
    for (const auto& s : zeta1_trace_data(b, 3)) {
      if (s.norm_of_collected_trace > s.trace_of_norms) return {false, "zeta1 trace, braid " + b.to_string()};
      ++instances;
    }
    const TracePowerGrowth g = trace_power_growth(burau_reduced(b).matrix, 8);
    for (std::size_t k = 0; k < g.norm_of_trace.size(); ++k) {
      if (g.norm_of_trace[k] > g.trace_of_norm[k]) return {false, "laurent trace, braid " + b.to_string()};
      ++instances;
    }
  }
  return {true, std::to_string(instances) + " instances"};
}

std::string run_capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + command);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  if (status != 0) throw std::runtime_error("'" + command + "' exited with status " + std::to_string(status));
  return out;
}

Outcome determinism() {
  const std::string args = " bound --n 3 --word 1,-2,1,-2 --lkb --zeta1 --kmax 6";
  const std::string exe = std::string("\"") + BDL_EXE + "\"";
  const std::string reference = run_capture(exe + args);
  for (int run = 0; run < 2; ++run)
    if (run_capture(exe + args) != reference) return {false, "repeat run differs"};
  for (const char* threads : {"1", "4"})
    if (run_capture(std::string("BDL_THREADS=") + threads + " " + exe + args) != reference)
      return {false, std::string("BDL_THREADS=") + threads + " differs"};
  return {true, std::to_string(reference.size()) + " bytes identical over 5 runs"};
}

}  // namespace

int main() {
  criterion(1, "braid relations are exact for burau, lkb, fox (n <= 5)", 30, braid_relations);
  criterion(2, "fox fundamental identity on 200 random words", 5, fox_identity);
  criterion(3, "burau sup for sigma1 sigma2^-1 is sharp at t = -1", 10, burau_sharp);
  criterion(4, "burau and lkb lower bounds on 25 pseudo-Anosov 3-braids", 300, recover_inequalities);
  criterion(5, "zeta1 trace-of-norms growth for sigma1 sigma2^-1", 120, zeta1_growth);
  criterion(6, "trace growth agrees with the torus sup on random 2x2 matrices", 180, trace_estimate);
  criterion(7, "sine product identity for M <= 64", 1, sine_lemma);
  criterion(8, "coefficient bound on 100 random polynomials", 120, polynomial_lemma);
  criterion(9, "partition recursion, monotonicity and root decay", 10, summand_lemma);
  criterion(10, "trace and specialization never increase norms", 30, norm_order);
  criterion(11, "bound JSON is byte-identical across runs and thread counts", 60, determinism);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
