#include "bdl/checks.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include "bdl/errors.hpp"
#include "bdl/free_group.hpp"
#include "bdl/representations.hpp"
#include "bdl/samples.hpp"
#include "bdl/spectral.hpp"

namespace bdl {

namespace {

constexpr double kGoldenSquare = 2.618033988749895;  // (3 + sqrt 5) / 2

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

void add(CheckSummary& s, std::string name, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    s.results.push_back({std::move(name), ok, std::move(detail)});
  } catch (const std::exception& e) {
    s.results.push_back({std::move(name), false, std::string("exception: ") + e.what()});
  }
}

unsigned long long count_tuples(int remaining, int index) {
  // Choose n_index for index = current part size, descending.
  if (remaining == 0) return 1;
  if (index == 0) return 0;
  unsigned long long total = 0;
  for (int used = 0; used <= remaining; used += index) total += count_tuples(remaining - used, index - 1);
  return total;
}

}  // namespace

unsigned long long enumerate_weighted_tuples(int m) { return count_tuples(m, m); }

bool CheckSummary::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

std::string CheckSummary::to_text() const {
  std::ostringstream os;
  for (const auto& r : results)
    os << (r.passed ? "PASS " : "FAIL ") << suite << '/' << r.name << (r.detail.empty() ? "" : ": ") << r.detail
       << '\n';
  os << suite << ": " << (passed() ? "passed" : "FAILED") << '\n';
  return os.str();
}

CheckSummary check_relations() {
  CheckSummary s{"relations", {}};
  for (RepKind kind : {RepKind::burau_reduced, RepKind::lkb, RepKind::fox_specialized}) {
    add(s, std::string(to_string(kind)) + " braid relations n<=5", [kind]() -> std::pair<bool, std::string> {
      int checked = 0;
      for (int n = 3; n <= 5; ++n)
        for (int i = 1; i <= n - 1; ++i)
          for (int j = i + 1; j <= n - 1; ++j) {
            BraidWord lhs(n), rhs(n);
            if (j == i + 1) {
              lhs = BraidWord(n, {i, j, i});
              rhs = BraidWord(n, {j, i, j});
            } else {
              lhs = BraidWord(n, {i, j});
              rhs = BraidWord(n, {j, i});
            }
            if (representation(kind, lhs).matrix != representation(kind, rhs).matrix)
              return {false, "relation fails for sigma_" + std::to_string(i) + ", sigma_" + std::to_string(j) +
                                 " in B_" + std::to_string(n)};
            ++checked;
          }
      return {true, std::to_string(checked) + " relations"};
    });
    add(s, std::string(to_string(kind)) + " inverse law n<=5", [kind]() -> std::pair<bool, std::string> {
      for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n - 1; ++i)
          if (!(generator_matrix(kind, n, i) * generator_matrix(kind, n, -i)).is_identity())
            return {false, "sigma_" + std::to_string(i) + " in B_" + std::to_string(n)};
      return {true, ""};
    });
  }
  add(s, "artin action relations n<=5", []() -> std::pair<bool, std::string> {
    for (int n = 3; n <= 5; ++n)
      for (int i = 1; i + 1 <= n - 1; ++i)
        if (artin_image(BraidWord(n, {i, i + 1, i})) != artin_image(BraidWord(n, {i + 1, i, i + 1})))
          return {false, "B_" + std::to_string(n)};
    return {true, ""};
  });
  return s;
}

CheckSummary check_lemmas() {
  CheckSummary s{"lemmas", {}};
  add(s, "sine product M<=64", []() -> std::pair<bool, std::string> {
    double worst = 0.0;
    for (int m = 1; m <= 64; ++m) worst = std::max(worst, std::abs(sine_product(m) - (m + 1)));
    return {worst < 1e-8, fmt("max deviation %.3g", worst)};
  });
  add(s, "coefficient bound, 100 random polynomials", []() -> std::pair<bool, std::string> {
    samples::Rng rng(0x5eed0001);
    double worst = 0.0;
    for (int c = 0; c < 100; ++c) {
      const int vars = rng.uniform(1, 3);
      const int span = rng.uniform(0, 6);
      const LaurentPoly f = samples::random_laurent(rng, vars, span, 10);
      const int m = f.is_zero() ? 0 : [&] {
        int d = 0;
        for (auto [lo, hi] : f.exponent_ranges()) d = std::max(d, hi - lo);
        return d;
      }();
      const CoefficientBound b = coefficient_bound_check(f, 8 * (m + 1));
      if (!b.holds) return {false, "case " + std::to_string(c) + " violates the bound"};
      if (b.rhs > 0) worst = std::max(worst, b.lhs.get_d() / b.rhs);
    }
    return {true, fmt("max lhs/rhs %.4f", worst)};
  });
  add(s, "partition recursion vs enumeration m<=20", []() -> std::pair<bool, std::string> {
    for (int m = 1; m <= 20; ++m)
      if (partition_count(m) != Integer(std::to_string(enumerate_weighted_tuples(m)))) return {false, "m = " + std::to_string(m)};
    return {partition_count(1) == 1 && partition_count(4) == 5, "S_1 = 1, S_4 = 5"};
  });
  add(s, "partition growth", []() -> std::pair<bool, std::string> {
    const auto table = partition_table(100);
    std::vector<double> s_m(101, 0.0);
    for (int m = 1; m <= 100; ++m) {
      Integer total = 0;
      for (const auto& x : table[m]) total += x;
      s_m[m] = total.get_d();
      if (m > 1 && s_m[m] < s_m[m - 1]) return {false, "not monotone at m = " + std::to_string(m)};
    }
    auto root = [&](int m) { return std::pow(s_m[m], 1.0 / m); };
    const bool decreasing = root(40) > root(60) && root(60) > root(80) && root(80) > root(100);
    return {root(100) < 1.25 && decreasing, fmt("S_100^(1/100) = %.5f", root(100))};
  });
  return s;
}

CheckSummary check_theorem1() {
  CheckSummary s{"theorem1", {}};
  const BraidWord beta(3, {1, -2});
  add(s, "zeta1 trace-of-norms growth k<=12", [&]() -> std::pair<bool, std::string> {
    std::vector<Integer> seq;
    for (auto& x : zeta1_trace_data(beta, 12)) seq.push_back(x.trace_of_norms);
    const GrowthEstimate g = growth_estimate(std::span<const Integer>(seq));
    bool ok = std::abs(g.estimate - kGoldenSquare) <= 0.10 * kGoldenSquare;
    const std::size_t r = g.ratio_estimates.size();
    for (std::size_t i = r - 3; i < r; ++i)
      ok = ok && g.ratio_estimates[i] && std::abs(*g.ratio_estimates[i] - kGoldenSquare) <= 0.05 * kGoldenSquare;
    return {ok, fmt("estimate %.6f, last ratio %.6f", g.estimate, g.ratio_estimates.back().value_or(0.0))};
  });
  add(s, "burau trace growth matches torus sup", [&]() -> std::pair<bool, std::string> {
    const LaurentMatrix a = burau_reduced(beta).matrix;
    const double sup = torus_sup_sr(a, 256, 3).sup_value;
    const double growth = trace_power_growth(a, 30).norm_of_trace_growth.estimate;
    return {std::abs(growth - sup) <= 0.02 * sup, fmt("growth %.6f, sup %.6f", growth, sup)};
  });
  add(s, "trace growth vs torus sup, random 2x2", []() -> std::pair<bool, std::string> {
    samples::Rng rng(0x5eed0006);
    std::vector<LaurentMatrix> cases;
    for (int c = 0; c < 10; ++c) cases.push_back(samples::random_laurent_matrix(rng, 2, rng.uniform(1, 2), 3, 3));
    const LaurentPoly t = LaurentPoly::variable(1, 0);
    cases.push_back(LaurentMatrix{{t, LaurentPoly::constant(1, 1)}, {LaurentPoly(1), LaurentPoly::constant(1, 2)}});
    std::ostringstream detail;
    bool ok = true;
    for (std::size_t c = 0; c < cases.size(); ++c) {
      const double sup = torus_sup_sr(cases[c], 512, 3).sup_value;
      const double growth = trace_power_growth(cases[c], 30).norm_of_trace_growth.estimate;
      const bool pass = sup > 1.05 ? std::abs(growth - sup) <= 0.02 * sup : growth <= 1.1;
      ok = ok && pass;
      if (!pass) detail << "case " << c << " growth " << growth << " sup " << sup << "; ";
    }
    return {ok, detail.str()};
  });
  return s;
}

CheckSummary check_suite(std::string_view name) {
  if (name == "relations") return check_relations();
  if (name == "lemmas") return check_lemmas();
  if (name == "theorem1") return check_theorem1();
  if (name == "all") {
    CheckSummary all{"all", {}};
    for (auto part : {check_relations(), check_lemmas(), check_theorem1()})
      for (auto& r : part.results) all.results.push_back({part.suite + "/" + r.name, r.passed, r.detail});
    return all;
  }
  throw ParseError("unknown check suite '" + std::string(name) + "'");
}

}  // namespace bdl
