#include <catch2/catch_amalgamated.hpp>

#include "loopring/fixtures.hpp"
#include "loopring/theorems.hpp"
#include "support.hpp"

using namespace loopring;

namespace {

template <class Fn>
ErrorKind thrown_kind(Fn&& fn) {
  try {
    fn();
  } catch (const LoopError& e) {
    return e.kind();
  }
  FAIL("nothing thrown");
  return ErrorKind::malformed;
}

// First non-Bol loop of order 5 in enumeration order.
LoopTable non_bol5() {
  for (const auto& L : support::all_loops(5)) {
    if (!is_right_bol(L)) return L;
  }
  FAIL("no non-Bol loop");
  return {};
}

}  // namespace

TEST_CASE("verifiers reject loops outside their hypothesis", "[theorems]") {
  const auto L = non_bol5();
  CHECK(thrown_kind([&] { verify_lip_equivalence(L); }) == ErrorKind::not_bol);
  CHECK(thrown_kind([&] { verify_commute_or_lip(L); }) == ErrorKind::not_bol);
  CHECK(thrown_kind([&] { verify_pair_coverage(L); }) == ErrorKind::not_bol);
  CHECK(thrown_kind([&] { verify_allthree(L); }) == ErrorKind::not_srar);
  CHECK(thrown_kind([&] { verify_allthree(fixtures::bol16()); }) == ErrorKind::not_srar);
}

TEST_CASE("order-16 fixture: Bol lemmas hold, SRAR lemma does not apply", "[theorems]") {
  const auto L = fixtures::bol16();
  CHECK_FALSE(verify_lip_equivalence(L));
  CHECK_FALSE(verify_commute_or_lip(L));
  const auto r = verify_pair_coverage(L);
  CHECK(r.ok());
  for (const auto& c : r.clauses) CHECK_FALSE(c.hypothesis);
  CHECK(verify_bol_implies_ralt_rip(L) == ImplicationCheck{true, true});
  CHECK(verify_moufang_implies_bol(L) == ImplicationCheck{false, false});
  CHECK_FALSE(verify_bol_lip_implies_moufang(L).hypothesis);
  CHECK(verify_extra_characterization(L).ok());
  // D', E' or F' everywhere does not make a Bol loop SRAR.
  CHECK(triple_coverage(L).def_everywhere);
  CHECK_FALSE(is_srar(L).holds);
}

TEST_CASE("order-12 fixture satisfies every implication", "[theorems]") {
  const auto L = fixtures::moufang12();
  CHECK_FALSE(verify_allthree(L));
  CHECK_FALSE(verify_lip_equivalence(L));
  CHECK(verify_commute_or_lip(L));
  CHECK(verify_pair_coverage(L).ok());
  CHECK(verify_ra2_implies_srar(L) == ImplicationCheck{true, true});
  CHECK_FALSE(verify_pairs_imply_ra2(L).hypothesis);
  CHECK(verify_bol_lip_implies_moufang(L) == ImplicationCheck{true, true});
  const auto x = verify_extra_characterization(L);
  CHECK_FALSE(x.extra_identity);
  CHECK_FALSE(x.moufang_squares_in_nucleus);
}

TEST_CASE("every implication holds on all loops of order at most 6", "[theorems]") {
  std::size_t bol = 0, srar = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& L : support::all_loops(n)) {
      REQUIRE(verify_odd_srar_associative(L).ok());
      REQUIRE(verify_ra2_implies_srar(L).ok());
      REQUIRE(verify_pairs_imply_ra2(L).ok());
      REQUIRE(verify_moufang_implies_bol(L).ok());
      REQUIRE(verify_bol_implies_ralt_rip(L).ok());
      REQUIRE(verify_bol_lip_implies_moufang(L).ok());
      REQUIRE(verify_extra_characterization(L).ok());
      if (!is_right_bol(L)) continue;
      ++bol;
      REQUIRE_FALSE(verify_lip_equivalence(L));
      REQUIRE_NOTHROW(verify_commute_or_lip(L));
      REQUIRE(verify_pair_coverage(L).ok());
      if (!is_srar(L).holds) continue;
      ++srar;
      REQUIRE_FALSE(verify_allthree(L));
    }
  }
  // Every Bol loop of order at most 6 is a group, hence SRAR.
  CHECK(bol == 1 + 1 + 1 + 4 + 6 + 80);
  CHECK(srar == bol);
}

TEST_CASE("SRAR quadruples carry one or three conditions", "[theorems]") {
  const auto L = fixtures::moufang12();
  const auto p = quad_profile(L);
  CHECK(p.total() == 12 * 12 * 12 * 12);
  for (std::uint8_t m = 0; m < 8; ++m) {
    const int bits = std::popcount(m);
    if (bits == 0 || bits == 2) CHECK(p.counts[m] == 0);
  }
}
