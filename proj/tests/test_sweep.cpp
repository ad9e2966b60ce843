#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "loopring/sweep.hpp"

using namespace loopring;

namespace {

std::string render(const SweepResult& r, ReportFormat f) {
  std::ostringstream os;
  write_sweep_report(os, r, f);
  return os.str();
}

}  // namespace

TEST_CASE("odd SRAR loops of order 5 are groups", "[sweep]") {
  SweepSpec spec;
  spec.orders = {5};
  spec.checks = {SweepCheck::odd_srar_associative};
  const auto r = run_sweep(spec);
  REQUIRE(r.cells.size() == 1);
  CHECK(r.cells[0].loops_scanned == 56);
  CHECK(r.cells[0].violations == 0);
  CHECK_FALSE(r.cells[0].first_violation);
}

TEST_CASE("every check at order 2", "[sweep]") {
  SweepSpec spec;
  spec.orders = {2};
  spec.checks.assign(kAllSweepChecks.begin(), kAllSweepChecks.end());
  const auto r = run_sweep(spec);
  CHECK(r.cells.size() == kAllSweepChecks.size());
  for (const auto& c : r.cells) {
    CHECK(c.loops_scanned == 1);
    CHECK(c.violations == 0);
  }
  CHECK(r.ok());
}

TEST_CASE("ring right Bol matches SRAR on all loops of order 5", "[sweep]") {
  SweepSpec spec;
  spec.orders = {5};
  spec.checks = {SweepCheck::ring_bol_equiv, SweepCheck::ring_alt_equiv};
  const auto r = run_sweep(spec);
  CHECK(r.violations() == 0);
  REQUIRE(r.find(5, SweepCheck::ring_bol_equiv));
  CHECK(r.find(5, SweepCheck::ring_bol_equiv)->loops_scanned == 56);
  CHECK(r.find(4, SweepCheck::ring_bol_equiv) == nullptr);
}

TEST_CASE("sweep gating", "[sweep]") {
  SweepSpec spec;
  std::string why;
  CHECK(sweep_allowed(SweepCheck::allthree, 6, spec));
  CHECK_FALSE(sweep_allowed(SweepCheck::allthree, 7, spec, &why));
  CHECK(why == "allthree at order 7 requires --long");
  CHECK_FALSE(sweep_allowed(SweepCheck::ring_bol_equiv, 6, spec));
  CHECK_FALSE(sweep_allowed(SweepCheck::allthree, 8, spec));
  spec.long_run = true;
  CHECK(sweep_allowed(SweepCheck::allthree, 7, spec));
  CHECK(sweep_allowed(SweepCheck::ring_bol_equiv, 6, spec));
  CHECK_FALSE(sweep_allowed(SweepCheck::ring_bol_equiv, 7, spec));
  spec.caps.three_var = 5;
  CHECK_FALSE(sweep_allowed(SweepCheck::ring_bol_equiv, 6, spec, &why));
  CHECK(why == "ring_bol_equiv at order 6 exceeds the ring cap 5");
  CHECK(sweep_allowed(SweepCheck::ring_alt_equiv, 6, spec));
}

TEST_CASE("out-of-cap requests throw", "[sweep]") {
  SweepSpec spec;
  spec.orders = {6};
  spec.checks = {SweepCheck::ring_bol_equiv};
  try {
    run_sweep(spec);
    FAIL("accepted");
  } catch (const LoopError& e) {
    CHECK(e.kind() == ErrorKind::order_exceeds_cap);
  }
  spec.orders = {7};
  spec.checks = {SweepCheck::moufang_implies_bol};
  CHECK_THROWS_AS(run_sweep(spec), LoopError);
}

TEST_CASE("check names round-trip", "[sweep]") {
  for (auto c : kAllSweepChecks) CHECK(parse_sweep_check(to_string(c)) == c);
  CHECK_THROWS_AS(parse_sweep_check("lemma_9_9"), LoopError);
}

TEST_CASE("sweep results do not depend on the worker count", "[sweep]") {
  SweepSpec spec;
  spec.orders = {4, 5, 6};
  spec.checks = {SweepCheck::allthree, SweepCheck::pair_coverage, SweepCheck::extra_characterization,
                 SweepCheck::bol_implies_ralt_rip};
  const auto one = run_sweep(spec);
  spec.jobs = 4;
  const auto four = run_sweep(spec);
  for (auto f : {ReportFormat::json, ReportFormat::csv, ReportFormat::text}) CHECK(render(one, f) == render(four, f));
  CHECK(one.find(6, SweepCheck::allthree)->loops_scanned == 9408);
  CHECK(one.find(6, SweepCheck::allthree)->applicable == 80);
}

TEST_CASE("sweep report formats", "[sweep]") {
  SweepSpec spec;
  spec.orders = {3};
  spec.checks = {SweepCheck::lip_equiv, SweepCheck::odd_srar_associative};
  const auto r = run_sweep(spec);
  CHECK(render(r, ReportFormat::csv) ==
        "order,check,loops_scanned,applicable,violations\n"
        "3,lip_equiv,1,1,0\n"
        "3,odd_srar_associative,1,1,0\n");
  const auto j = nlohmann::json::parse(render(r, ReportFormat::json));
  CHECK(j["aggregates"]["cells"] == 2);
  CHECK(j["aggregates"]["violations"] == 0);
  CHECK(j["records"][0]["check"] == "lip_equiv");
  CHECK(j["records"][0]["first_violation"].is_null());
  CHECK(render(r, ReportFormat::text).find("sweep passed") != std::string::npos);
}
