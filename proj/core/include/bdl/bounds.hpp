#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdl/braid.hpp"
#include "bdl/free_group.hpp"
#include "bdl/spectral.hpp"

namespace bdl {

enum class BraidClass { periodic, reducible, pseudo_anosov };

std::string_view to_string(BraidClass c);

/// Classification of a 3-braid from its reduced Burau matrix at t = -1,
/// an integer matrix M with det M = 1: |tr M| < 2 periodic, = 2 reducible,
/// > 2 pseudo-Anosov with dilatation (|tr M| + sqrt(tr M^2 - 4)) / 2.
struct B3Oracle {
  BraidClass braid_class = BraidClass::periodic;
  std::optional<double> dilatation;
  Integer trace;
  Integer determinant;
  /// Row-major entries of M.
  std::vector<Integer> matrix_at_minus1;
};

/// Throws NotApplicable unless b has 3 strands.
B3Oracle b3_oracle(const BraidWord& b);

struct AnalyzeOptions {
  int grid = 256;
  int refine = 3;
  int kmax = 10;
  bool with_zeta1 = false;
  bool with_lkb = false;
  bool with_timings = false;
  std::size_t term_cap = kDefaultTermCap;
};

struct StageError {
  std::string stage;
  std::string message;
  int exit_code = 1;
};

struct Zeta1Summary {
  std::vector<int> k_values;
  std::vector<Integer> trace_of_norms;
  std::vector<Integer> norm_of_collected_trace;
  GrowthEstimate growth;  ///< of trace_of_norms
};

/// Dilatation bounds for one braid. Every *_bound is a lower bound: the
/// Burau sup for the dilatation, the LKB sup for its square.
struct BoundReport {
  std::string braid;
  int n = 0;
  std::optional<TorusSupResult> burau;
  double burau_bound = 1.0;
  std::optional<TorusSupResult> lkb;
  double lkb_sup = 1.0;
  double lkb_bound = 1.0;  ///< sqrt(lkb_sup)
  double sr_at_minus1 = 0.0;
  bool sharp_at_minus1 = false;
  double sharpness_gap = 0.0;  ///< burau_bound - sr_at_minus1
  std::optional<B3Oracle> oracle;
  std::optional<Zeta1Summary> zeta1;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<StageError> errors;

  /// Worst exit code among stage errors, 0 if none.
  int exit_code() const;
};

inline constexpr double kSharpnessTolerance = 1e-6;

/// Runs the Burau scan, optionally the LKB scan and the zeta1 growth
/// sequence, and the B3 oracle when n = 3. A failing stage is recorded in
/// `errors` and the remaining stages still run.
BoundReport analyze(const BraidWord& b, const AnalyzeOptions& opts = {});

/// Stable-key-order JSON (schema_version 1); reals rounded to 10
/// significant digits, exact integers as decimal strings.
std::string to_json(const BoundReport& report);

}  // namespace bdl
