#include "bdl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "bdl/errors.hpp"
#include "bdl/parallel.hpp"

namespace bdl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double log_of(const Integer& a) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, a.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

int resolve_window(std::size_t length, int window) {
  if (length < 3) throw DomainError("growth estimate needs at least 3 values, got " + std::to_string(length));
  const int k = static_cast<int>(length);
  if (window == 0) window = (k + 2) / 3;
  if (window < 1 || window > k) throw RangeError("growth window must lie in 1.." + std::to_string(k));
  return window;
}

void finish(GrowthEstimate& g) {
  const int k = static_cast<int>(g.root_estimates.size());
  double best = 1.0;
  for (int i = k - g.window; i < k; ++i) best = std::max(best, g.root_estimates[i]);
  g.estimate = best;
}

std::size_t checked_point_count(int grid, int vars) {
  double points = std::pow(static_cast<double>(grid), vars);
  if (points > static_cast<double>(kMaxTorusPoints))
    throw ResourceLimit("torus grid " + std::to_string(grid) + "^" + std::to_string(vars) + " exceeds " +
                        std::to_string(kMaxTorusPoints) + " points");
  return static_cast<std::size_t>(points);
}

/// Angle of grid index j; j/grid is formed first so nested grids (grid and
/// 2*grid) produce bit-identical angles.
double grid_angle(std::size_t j, int grid) { return kTwoPi * (static_cast<double>(j) / grid); }

}  // namespace

double spectral_radius(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("spectral radius of a non-square matrix");
  if (m.rows() > 64) throw RangeError("spectral radius supports dimension <= 64");
  if (!m.allFinite()) throw DomainError("spectral radius of a matrix with non-finite entries");
  if (m.rows() == 0) return 0.0;
  if (m.rows() == 1) return std::abs(m(0, 0));
  const Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) throw DomainError("eigenvalue iteration did not converge");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_radius_at(const LaurentMatrix& a, std::span<const double> angles) {
  std::vector<Complex> point(angles.size());
  for (std::size_t v = 0; v < angles.size(); ++v) point[v] = std::polar(1.0, angles[v]);
  return spectral_radius(matrix_eval(a, point));
}

TorusSupResult torus_sup_sr(const LaurentMatrix& a, int grid, int refine_rounds) {
  if (!a.is_square()) throw DomainError("torus sup of a non-square matrix");
  if (grid < 8) throw RangeError("torus grid must be at least 8");
  if (refine_rounds < 0) throw RangeError("refine rounds must be nonnegative");
  const int vars = a.var_count();
  if (vars > 3) throw RangeError("torus scan supports at most 3 variables");
  const std::size_t points = checked_point_count(grid, vars);

  auto angles_of = [&](std::size_t idx) {
    // Variable 0 is the most significant digit: idx order is lexicographic.
    std::vector<double> angles(vars);
    for (int v = vars - 1; v >= 0; --v) {
      angles[v] = grid_angle(idx % grid, grid);
      idx /= grid;
    }
    return angles;
  };

  std::vector<double> values(points);
  parallel_for(points, [&](std::size_t idx) { values[idx] = spectral_radius_at(a, angles_of(idx)); });

  std::size_t best_idx = 0;
  for (std::size_t idx = 1; idx < points; ++idx)
    if (values[idx] > values[best_idx]) best_idx = idx;

  TorusSupResult result;
  result.grid = grid;
  result.refine_rounds = refine_rounds;
  result.sup_value = values[best_idx];
  result.argmax_angles = angles_of(best_idx);

  double step = kTwoPi / grid;
  constexpr int kHalfWidth = 8;  // +-2 previous steps at 4x resolution
  const std::size_t side = 2 * kHalfWidth + 1;
  std::size_t local_points = 1;
  for (int v = 0; v < vars; ++v) local_points *= side;
  for (int round = 0; round < refine_rounds; ++round) {
    step /= 4.0;
    const std::vector<double> center = result.argmax_angles;
    auto local_angles = [&](std::size_t idx) {
      std::vector<double> angles(vars);
      for (int v = vars - 1; v >= 0; --v) {
        const int offset = static_cast<int>(idx % side) - kHalfWidth;
        angles[v] = center[v] + offset * step;
        idx /= side;
      }
      return angles;
    };
    std::vector<double> local(local_points);
    parallel_for(local_points, [&](std::size_t idx) { local[idx] = spectral_radius_at(a, local_angles(idx)); });
    for (std::size_t idx = 0; idx < local_points; ++idx)
      if (local[idx] > result.sup_value) {
        result.sup_value = local[idx];
        result.argmax_angles = local_angles(idx);
      }
  }
  result.final_step = step;
  for (double& theta : result.argmax_angles) theta = std::remainder(theta, kTwoPi);
  result.argmax.reserve(vars);
  for (double theta : result.argmax_angles) result.argmax.push_back(std::polar(1.0, theta));
  return result;
}

GrowthEstimate growth_estimate(std::span<const double> seq, int window) {
  GrowthEstimate g;
  g.window = resolve_window(seq.size(), window);
  g.values.assign(seq.begin(), seq.end());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!(seq[i] >= 0.0)) throw DomainError("growth estimate needs nonnegative values");
    g.root_estimates.push_back(seq[i] == 0.0 ? 0.0 : std::pow(seq[i], 1.0 / static_cast<double>(i + 1)));
    if (i > 0) {
      if (seq[i] > 0.0 && seq[i - 1] > 0.0)
        g.ratio_estimates.emplace_back(seq[i] / seq[i - 1]);
      else
        g.ratio_estimates.emplace_back(std::nullopt);
    }
  }
  finish(g);
  return g;
}

GrowthEstimate growth_estimate(std::span<const Integer> seq, int window) {
  GrowthEstimate g;
  g.window = resolve_window(seq.size(), window);
  std::vector<double> logs;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0) throw DomainError("growth estimate needs nonnegative values");
    g.values.push_back(seq[i].get_d());
    logs.push_back(seq[i] == 0 ? -INFINITY : log_of(seq[i]));
    g.root_estimates.push_back(seq[i] == 0 ? 0.0 : std::exp(logs.back() / static_cast<double>(i + 1)));
    if (i > 0) {
      if (seq[i] != 0 && seq[i - 1] != 0)
        g.ratio_estimates.emplace_back(std::exp(logs[i] - logs[i - 1]));
      else
        g.ratio_estimates.emplace_back(std::nullopt);
    }
  }
  finish(g);
  return g;
}

TracePowerGrowth trace_power_growth(const LaurentMatrix& a, int kmax, std::size_t term_cap) {
  if (!a.is_square()) throw DomainError("trace powers of a non-square matrix");
  if (kmax < 3) throw RangeError("trace_power_growth needs kmax >= 3");
  TracePowerGrowth out;
  LaurentMatrix p = a;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) p = p * a;
    if (p.term_count() > term_cap)
      throw ResourceLimit("A^" + std::to_string(k) + " holds " + std::to_string(p.term_count()) +
                          " terms, cap is " + std::to_string(term_cap));
    out.norm_of_trace.push_back(norm_of_trace(p));
    out.trace_of_norm.push_back(trace_of_norm(p));
    out.total_norm.push_back(total_norm(p));
  }
  out.norm_of_trace_growth = growth_estimate(std::span<const Integer>(out.norm_of_trace));
  out.trace_of_norm_growth = growth_estimate(std::span<const Integer>(out.trace_of_norm));
  out.total_norm_growth = growth_estimate(std::span<const Integer>(out.total_norm));
  return out;
}

std::vector<std::vector<Integer>> partition_table(int m_max) {
  if (m_max < 0) throw RangeError("partition table size must be nonnegative");
  std::vector<std::vector<Integer>> s(m_max + 1);
  for (int m = 0; m <= m_max; ++m) s[m].assign(m + 1, 0);
  s[0][0] = 1;
  // S[m][k] = S[m-1][k-1] + S[m-k][k], the second term vanishing for k > m-k.
  for (int m = 1; m <= m_max; ++m)
    for (int k = 1; k <= m; ++k) {
      s[m][k] = s[m - 1][k - 1];
      if (k <= m - k) s[m][k] += s[m - k][k];
    }
  return s;
}

Integer partition_count(int m) {
  if (m < 1) throw RangeError("partition_count needs m >= 1");
  const auto table = partition_table(m);
  Integer total = 0;
  for (const auto& x : table[m]) total += x;
  return total;
}

double sine_product(int degree) {
  if (degree < 1) throw RangeError("sine_product needs M >= 1");
  const double theta = std::numbers::pi / (degree + 1);
  double p = 1.0;
  for (int k = 1; k <= degree; ++k) p *= 2.0 * std::sin(k * theta);
  return p;
}

CoefficientBound coefficient_bound_check(const LaurentPoly& f, int grid) {
  CoefficientBound out;
  out.var_count = f.var_count();
  out.grid = grid;
  out.lhs = norm(f);
  if (f.is_zero()) {
    if (grid < 8) throw RangeError("coefficient bound grid must be at least 8");
    out.holds = true;
    return out;
  }
  const auto ranges = f.exponent_ranges();
  for (const auto& [lo, hi] : ranges) out.degree = std::max(out.degree, hi - lo);
  if (grid < 8 * (out.degree + 1))
    throw RangeError("coefficient bound grid " + std::to_string(grid) + " is below 8(M+1) = " +
                     std::to_string(8 * (out.degree + 1)));
  const int vars = f.var_count();
  const std::size_t points = checked_point_count(grid, vars);

  // Work with the shifted polynomial; on roots of unity x^e = w^(j*e mod grid).
  std::vector<Complex> roots(grid);
  for (int r = 0; r < grid; ++r) roots[r] = std::polar(1.0, grid_angle(r, grid));
  struct Term {
    std::vector<int> e;
    double c;
  };
  std::vector<Term> terms;
  for (const auto& [e, c] : f.terms()) {
    Term t{e, c.get_d()};
    for (int v = 0; v < vars; ++v) t.e[v] -= ranges[v].first;
    terms.push_back(std::move(t));
  }
  std::vector<double> moduli(points);
  parallel_for(points, [&](std::size_t idx) {
    std::vector<long> j(vars);
    std::size_t rest = idx;
    for (int v = vars - 1; v >= 0; --v) {
      j[v] = static_cast<long>(rest % grid);
      rest /= grid;
    }
    Complex sum(0.0, 0.0);
    for (const auto& t : terms) {
      long r = 0;
      for (int v = 0; v < vars; ++v) r += j[v] * t.e[v];
      sum += t.c * roots[r % grid];
    }
    moduli[idx] = std::abs(sum);
  });
  const double sup = *std::max_element(moduli.begin(), moduli.end());
  out.rhs = std::pow(static_cast<double>(out.degree + 1), vars) * sup;
  out.holds = out.lhs.get_d() <= kGridSupSlack * out.rhs;
  return out;
}

}  // namespace bdl
