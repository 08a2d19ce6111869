#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bdl/laurent.hpp"

namespace bdl {

/// Largest eigenvalue modulus. Throws DomainError for non-square input or
/// non-finite entries, RangeError above dimension 64.
double spectral_radius(const ComplexMatrix& m);

/// Spectral radius of A with variable v set to exp(i * angles[v]).
double spectral_radius_at(const LaurentMatrix& a, std::span<const double> angles);

struct TorusSupResult {
  /// Best spectral radius found; a lower bound for the true supremum.
  double sup_value = 0.0;
  std::vector<Complex> argmax;
  std::vector<double> argmax_angles;
  int grid = 0;
  int refine_rounds = 0;
  /// Angular step of the last refinement round (grid step if no rounds).
  double final_step = 0.0;
};

inline constexpr std::size_t kMaxTorusPoints = 10'000'000;

/// Grid scan of the spectral radius over angles 2*pi*j/grid in every
/// variable, followed by `refine_rounds` local passes, each at 4x the
/// previous resolution over +-2 previous steps around the incumbent. The
/// incumbent only moves on a strict improvement, and grid points are
/// visited in lexicographic index order, so the result does not depend on
/// the worker count.
TorusSupResult torus_sup_sr(const LaurentMatrix& a, int grid, int refine_rounds);

struct GrowthEstimate {
  std::vector<double> values;
  /// values[k-1]^{1/k}
  std::vector<double> root_estimates;
  /// values[k]/values[k-1]; empty where either value is zero.
  std::vector<std::optional<double>> ratio_estimates;
  double estimate = 1.0;
  int window = 0;
};

/// estimate = max(1, max of a_k^{1/k} over the last `window` indices).
/// window = 0 selects ceil(K/3). Requires K >= 3 and 1 <= window <= K.
GrowthEstimate growth_estimate(std::span<const double> seq, int window = 0);
/// Same for exact integers; roots are taken through logarithms so values
/// beyond double range are fine.
GrowthEstimate growth_estimate(std::span<const Integer> seq, int window = 0);

struct TracePowerGrowth {
  std::vector<Integer> norm_of_trace;  ///< ||tr A^k||
  std::vector<Integer> trace_of_norm;  ///< tr ||A^k||
  std::vector<Integer> total_norm;     ///< sum_ij ||(A^k)_ij||
  GrowthEstimate norm_of_trace_growth;
  GrowthEstimate trace_of_norm_growth;
  GrowthEstimate total_norm_growth;
};

/// Exact powers A^1..A^kmax by repeated multiplication. Throws
/// ResourceLimit if a power holds more than `term_cap` terms.
TracePowerGrowth trace_power_growth(const LaurentMatrix& a, int kmax, std::size_t term_cap = 10'000'000);

/// S[m][k] for 0 <= k <= m <= m_max: the number of (n_1..n_m) with
/// sum i*n_i = m and largest nonzero index k, built from
/// S[m+1][k+1] = S[m][k] + S[m-k][k+1].
std::vector<std::vector<Integer>> partition_table(int m_max);
/// S_m = sum_k S[m][k]. Requires m >= 1.
Integer partition_count(int m);

/// prod_{k=1}^{M} 2 sin(k pi / (M+1)).
double sine_product(int degree);

struct CoefficientBound {
  Integer lhs;       ///< ||f||
  double rhs = 0.0;  ///< (M+1)^n * max over the grid of |f|
  int degree = 0;    ///< M: largest per-variable exponent span
  int var_count = 0;
  int grid = 0;
  bool holds = false;  ///< lhs <= 1.02 * rhs
};

inline constexpr double kGridSupSlack = 1.02;

/// Checks sum |a_I| <= (M+1)^n sup_torus |f| against a grid sup (scaled by
/// kGridSupSlack). The grid needs at least 8(M+1) points per variable;
/// smaller grids throw RangeError.
CoefficientBound coefficient_bound_check(const LaurentPoly& f, int grid);

}  // namespace bdl
