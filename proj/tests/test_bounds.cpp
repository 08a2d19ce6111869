#include <doctest.h>

#include <nlohmann/json.hpp>

#include "bdl/bounds.hpp"
#include "bdl/errors.hpp"
#include "bdl/samples.hpp"

using namespace bdl;

namespace {

constexpr double kPhi2 = 2.618033988749895;

}  // namespace

TEST_CASE("b3 oracle") {
  const B3Oracle pa = b3_oracle(BraidWord(3, {1, -2}));
  CHECK(pa.braid_class == BraidClass::pseudo_anosov);
  REQUIRE(pa.dilatation.has_value());
  CHECK(std::abs(*pa.dilatation - kPhi2) < 1e-9);
  CHECK(pa.determinant == 1);

  const B3Oracle per = b3_oracle(BraidWord(3, {1, 2}));
  CHECK(per.braid_class == BraidClass::periodic);
  CHECK(per.trace == 1);
  CHECK_FALSE(per.dilatation.has_value());

  CHECK(b3_oracle(BraidWord(3, {1})).braid_class == BraidClass::reducible);
  CHECK(b3_oracle(BraidWord(3, {})).braid_class == BraidClass::periodic);
  // The full twist maps to -I at t = -1.
  CHECK(b3_oracle(BraidWord(3, {1, 2, 1, 2, 1, 2})).braid_class == BraidClass::periodic);
  CHECK_THROWS_AS(b3_oracle(BraidWord(4, {1})), NotApplicable);

  CHECK(to_string(BraidClass::pseudo_anosov) == "pseudo-Anosov");
}

TEST_CASE("analyze sigma1 sigma2^-1") {
  AnalyzeOptions opts;
  opts.with_lkb = true;
  const BoundReport r = analyze(BraidWord(3, {1, -2}), opts);
  CHECK(r.errors.empty());
  CHECK(r.exit_code() == 0);
  REQUIRE(r.burau.has_value());
  CHECK(std::abs(r.burau_bound - kPhi2) < 1e-6);
  CHECK(r.sharp_at_minus1);
  CHECK(std::abs(r.sharpness_gap) < 1e-6);
  REQUIRE(r.oracle.has_value());
  CHECK(std::abs(*r.oracle->dilatation - r.burau_bound) < 1e-6);
  CHECK(r.lkb_sup <= kPhi2 * kPhi2 + 1e-6);
  CHECK(r.lkb_bound == doctest::Approx(std::sqrt(r.lkb_sup)));
  CHECK_FALSE(r.zeta1.has_value());
}

TEST_CASE("analyze on four strands leaves the oracle empty") {
  const BoundReport r = analyze(BraidWord(4, {1, 2, -3}));
  CHECK(r.errors.empty());
  CHECK_FALSE(r.oracle.has_value());
  CHECK(r.burau_bound >= 1.0);
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["oracle"].is_null());
  CHECK(j["n"] == 4);
}

TEST_CASE("analyze records stage failures") {
  AnalyzeOptions opts;
  opts.with_zeta1 = true;
  opts.kmax = 12;
  opts.term_cap = 100;
  const BoundReport r = analyze(BraidWord(3, {1, -2}), opts);
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].stage == "zeta1");
  CHECK(r.exit_code() == 4);
  CHECK(r.burau.has_value());
}

TEST_CASE("bound JSON is stable and complete") {
  AnalyzeOptions opts;
  opts.with_zeta1 = true;
  opts.kmax = 6;
  const std::string first = to_json(analyze(BraidWord(3, {1, -2}), opts));
  const std::string second = to_json(analyze(BraidWord(3, {1, -2}), opts));
  CHECK(first == second);
  CHECK(first.back() == '\n');

  const auto j = nlohmann::json::parse(first);
  CHECK(j["schema_version"].is_number_integer());
  CHECK(j["braid"] == "1,-2");
  CHECK(j["bounds"]["burau"]["sup"].get<double>() == doctest::Approx(kPhi2).epsilon(1e-9));
  CHECK(j["bounds"]["burau"]["argmax_t"]["re"].get<double>() == doctest::Approx(-1.0));
  CHECK(j["bounds"]["lkb"].is_null());
  CHECK(j["sharpness"]["at_minus1"] == true);
  CHECK(j["oracle"]["class"] == "pseudo-Anosov");
  CHECK(j["zeta1"]["k_values"].size() == 6);
  CHECK(j["zeta1"]["trace_of_norms"][0] == "4");
  CHECK(j["timings_ms"].is_null());
  CHECK(j["errors"].empty());

  std::vector<std::string> keys;
  const auto ordered = nlohmann::ordered_json::parse(first);
  for (const auto& [key, value] : ordered.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"schema_version", "braid", "n", "bounds", "sharpness", "oracle", "zeta1",
                                         "timings_ms", "errors"});
}

TEST_CASE("lower bounds hold on random pseudo-Anosov 3-braids") {
  samples::Rng rng(0x5eed0004);
  AnalyzeOptions opts;
  opts.grid = 128;
  opts.refine = 2;
  opts.with_lkb = true;
  int found = 0;
  while (found < 10) {
    const BraidWord b = samples::random_braid(rng, 3, rng.uniform(1, 8));
    const B3Oracle o = b3_oracle(b);
    if (o.braid_class != BraidClass::pseudo_anosov) continue;
    ++found;
    CAPTURE(b.to_string());
    const BoundReport r = analyze(b, opts);
    CHECK(r.errors.empty());
    CHECK(r.burau_bound <= *o.dilatation + 1e-6);
    CHECK(r.lkb_sup <= *o.dilatation * *o.dilatation + 1e-6);
    CHECK(r.sr_at_minus1 <= r.burau_bound + 1e-9);
  }
}
