// bdl: braid representation matrices, dilatation bounds and trace growth.

#include <cmath>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bdl/bounds.hpp"
#include "bdl/braid.hpp"
#include "bdl/checks.hpp"
#include "bdl/errors.hpp"
#include "bdl/free_group.hpp"
#include "bdl/representations.hpp"
#include "bdl/serialize.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNotApplicable = 3;
constexpr int kExitCheckFailed = 5;

struct BraidArgs {
  int n = 0;
  std::string word;
};

void add_braid_options(CLI::App* cmd, BraidArgs& args) {
  cmd->add_option("--n", args.n, "strand count")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--word", args.word, "comma-separated Artin letters, e.g. \"1,-2\"")->required();
}

int run_rep(const BraidArgs& args, const std::string& kind_text, int k, const std::string& out) {
  const bdl::BraidWord b = bdl::parse_braid(args.word, args.n);
  const bdl::RepKind kind = bdl::parse_rep_kind(kind_text);
  const bdl::RepMatrixBundle rep = bdl::representation(kind, bdl::power(b, k));
  if (out == "csv")
    std::cout << bdl::to_csv(rep.matrix);
  else
    std::cout << bdl::to_json(rep, k).dump(2) << '\n';
  return 0;
}

int run_bound(const BraidArgs& args, const bdl::AnalyzeOptions& opts, bool require_oracle) {
  const bdl::BraidWord b = bdl::parse_braid(args.word, args.n);
  if (require_oracle && b.strands() != 3) {
    std::cerr << "bdl: the B3 oracle applies only to 3-strand braids\n";
    return kExitNotApplicable;
  }
  const bdl::BoundReport report = bdl::analyze(b, opts);
  std::cout << bdl::to_json(report);
  for (const auto& e : report.errors) std::cerr << "bdl: stage " << e.stage << " failed: " << e.message << '\n';
  return report.exit_code();
}

int run_growth(const BraidArgs& args, int kmax, std::size_t cap, const std::string& out) {
  const bdl::BraidWord b = bdl::parse_braid(args.word, args.n);
  const auto samples = bdl::zeta1_trace_data(b, kmax, cap);
  if (out == "json") {
    bdl::ordered_json j;
    j["schema_version"] = 1;
    j["braid"] = b.to_string();
    j["n"] = b.strands();
    bdl::ordered_json ks = bdl::ordered_json::array(), tn = ks, nc = ks;
    std::vector<bdl::Integer> seq;
    for (const auto& s : samples) {
      ks.push_back(s.k);
      tn.push_back(s.trace_of_norms.get_str());
      nc.push_back(s.norm_of_collected_trace.get_str());
      seq.push_back(s.trace_of_norms);
    }
    j["k_values"] = ks;
    j["trace_of_norms"] = tn;
    j["norm_of_collected_trace"] = nc;
    j["growth_estimate"] = seq.size() >= 3 ? bdl::ordered_json(bdl::round10(
                                                 bdl::growth_estimate(std::span<const bdl::Integer>(seq)).estimate))
                                           : bdl::ordered_json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << bdl::growth_csv(samples);
  }
  return 0;
}

int run_check(const std::string& suite) {
  const bdl::CheckSummary summary = bdl::check_suite(suite);
  std::cout << summary.to_text();
  return summary.passed() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid representation matrices, dilatation lower bounds and trace growth"};
  app.require_subcommand(1);

  BraidArgs braid;

  auto* rep = app.add_subcommand("rep", "print a representation matrix of a braid power");
  std::string kind = "burau";
  int rep_k = 1;
  std::string rep_out = "json";
  add_braid_options(rep, braid);
  rep->add_option("--kind", kind, "burau | lkb | fox")->check(CLI::IsMember({"burau", "lkb", "fox"}));
  rep->add_option("--k", rep_k, "power of the braid")->check(CLI::NonNegativeNumber);
  rep->add_option("--out", rep_out, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* bound = app.add_subcommand("bound", "dilatation lower bounds and diagnostics as JSON");
  bdl::AnalyzeOptions opts;
  bool require_oracle = false;
  add_braid_options(bound, braid);
  bound->add_option("--grid", opts.grid, "torus grid points per variable")->check(CLI::Range(8, 1 << 20));
  bound->add_option("--refine", opts.refine, "local refinement rounds")->check(CLI::Range(0, 32));
  bound->add_option("--kmax", opts.kmax, "iterations for the zeta1 growth sequence")->check(CLI::Range(3, 64));
  bound->add_flag("--zeta1", opts.with_zeta1, "include the group-ring trace growth sequence");
  bound->add_flag("--lkb", opts.with_lkb, "include the Lawrence-Krammer-Bigelow torus scan");
  bound->add_flag("--timings", opts.with_timings, "record per-stage wall time (output is then run-dependent)");
  bound->add_flag("--oracle", require_oracle, "fail with exit code 3 unless the B3 oracle applies");
  bound->add_option("--term-cap", opts.term_cap, "resource cap on zeta1 terms");

  auto* growth = app.add_subcommand("growth", "group-ring trace norms of braid powers");
  int growth_kmax = 10;
  std::size_t growth_cap = bdl::kDefaultTermCap;
  std::string growth_out = "csv";
  add_braid_options(growth, braid);
  growth->add_option("--kmax", growth_kmax, "largest power")->required()->check(CLI::Range(1, 64));
  growth->add_option("--term-cap", growth_cap, "resource cap on terms");
  growth->add_option("--out", growth_out, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* check = app.add_subcommand("check", "run a deterministic invariant suite");
  std::string suite = "all";
  check->add_option("--suite", suite, "relations | lemmas | theorem1 | all")
      ->check(CLI::IsMember({"relations", "lemmas", "theorem1", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*rep) return run_rep(braid, kind, rep_k, rep_out);
    if (*bound) return run_bound(braid, opts, require_oracle);
    if (*growth) return run_growth(braid, growth_kmax, growth_cap, growth_out);
    if (*check) return run_check(suite);
  } catch (const bdl::Error& e) {
    std::cerr << "bdl: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "bdl: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
