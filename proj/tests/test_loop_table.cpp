#include <catch2/catch_amalgamated.hpp>

#include "loopring/fixtures.hpp"
#include "loopring/identities.hpp"
#include "loopring/loop_table.hpp"
#include "support.hpp"

using namespace loopring;

namespace {

ErrorKind kind_of(const std::vector<std::vector<int>>& raw) {
  try {
    validate_table(raw);
  } catch (const LoopError& e) {
    return e.kind();
  }
  FAIL("table was accepted");
  return ErrorKind::malformed;
}

}  // namespace

TEST_CASE("validate_table accepts the two fixtures", "[loop-core]") {
  const auto bol = fixtures::bol16();
  CHECK(bol.order() == 16);
  CHECK(bol.identity() == 0);
  CHECK(bol.to_raw() == fixtures::bol16_raw());

  const auto mfg = fixtures::moufang12();
  CHECK(mfg.order() == 12);
  CHECK(mfg.identity() == 0);
  CHECK(mfg.to_raw() == fixtures::moufang12_raw());
}

TEST_CASE("validate_table rejects malformed input", "[loop-core]") {
  CHECK(kind_of({}) == ErrorKind::malformed);
  CHECK(kind_of({{1, 2}, {2}}) == ErrorKind::malformed);
  CHECK(kind_of({{1, 2}, {2, 3}}) == ErrorKind::malformed);
  CHECK(kind_of({{1, 2}, {0, 1}}) == ErrorKind::malformed);
}

TEST_CASE("validate_table rejects non-Latin squares", "[loop-core]") {
  // Row 2 repeats 2.
  CHECK(kind_of({{1, 2, 3}, {2, 2, 1}, {3, 1, 2}}) == ErrorKind::not_latin);
  // Rows are permutations but column 1 repeats.
  CHECK(kind_of({{1, 2, 3}, {1, 3, 2}, {3, 1, 2}}) == ErrorKind::not_latin);

  try {
    validate_table({{1, 2, 3}, {2, 3, 1}, {2, 1, 3}});
    FAIL("accepted");
  } catch (const LoopError& e) {
    CHECK(e.kind() == ErrorKind::not_latin);
    CHECK(std::string(e.what()) == "NotLatin: column 1 repeats 2");
  }
}

TEST_CASE("validate_table requires a two-sided identity", "[loop-core]") {
  // Latin, no identity: x*y = x - y mod 3.
  CHECK(kind_of({{1, 3, 2}, {2, 1, 3}, {3, 2, 1}}) == ErrorKind::no_identity);
}

TEST_CASE("identity need not be element 1", "[loop-core]") {
  // Z_3 written with 0 as label 2.
  const auto L = validate_table({{3, 1, 2}, {1, 2, 3}, {2, 3, 1}});
  CHECK(L.identity() == 1);
  const auto N = normalize_identity(L);
  CHECK(N.identity() == 0);
  CHECK(N == cyclic_group(3));
  CHECK(is_group(N));
}

TEST_CASE("inverses and divisions on every loop of order 5", "[loop-core]") {
  for (const auto& L : support::all_loops(5)) {
    const auto n = static_cast<Element>(L.order());
    for (Element x = 0; x < n; ++x) {
      CHECK(L.mul(x, L.rinv(x)) == L.identity());
      CHECK(L.mul(L.linv(x), x) == L.identity());
      for (Element a = 0; a < n; ++a) {
        // a\x solves a*y = x; x/a solves y*a = x.
        CHECK(L.mul(a, L.left_divide(a, x)) == x);
        CHECK(L.mul(L.right_divide(x, a), a) == x);
      }
    }
  }
}

TEST_CASE("ordering follows table content", "[loop-core]") {
  const auto loops = support::all_loops(4);
  REQUIRE(loops.size() == 4);
  CHECK(std::is_sorted(loops.begin(), loops.end()));
  CHECK(cyclic_group(3) < loops.front());
  CHECK(loops[0] != loops[1]);
}

TEST_CASE("nuclei of groups are the whole group", "[loop-core]") {
  for (std::size_t n : {1, 2, 5, 7}) {
    const auto nuc = nuclei(cyclic_group(n));
    CHECK(nuc.nucleus.size() == n);
    CHECK(nuc.center.size() == n);
  }
}

TEST_CASE("nuclei of the fixtures", "[loop-core]") {
  const auto bol = nuclei(fixtures::bol16());
  CHECK(bol.left.size() == 4);
  CHECK(bol.middle.size() == 2);
  CHECK(bol.right.size() == 2);
  // Nucleus {1,5}; every square is 1 or 5.
  CHECK(bol.nucleus == std::vector<Element>{0, 4});
  CHECK(squares_in_nucleus(fixtures::bol16()));

  // Moufang loops have equal left, middle and right nuclei.
  const auto mfg = nuclei(fixtures::moufang12());
  CHECK(mfg.left == mfg.middle);
  CHECK(mfg.middle == mfg.right);
  CHECK(mfg.nucleus == std::vector<Element>{0});
}

TEST_CASE("nucleus is the intersection and the center commutes", "[loop-core]") {
  for (const auto& L : support::all_loops(6)) {
    const auto nuc = nuclei(L);
    std::vector<Element> lm, lmr;
    std::set_intersection(nuc.left.begin(), nuc.left.end(), nuc.middle.begin(), nuc.middle.end(),
                          std::back_inserter(lm));
    std::set_intersection(lm.begin(), lm.end(), nuc.right.begin(), nuc.right.end(), std::back_inserter(lmr));
    REQUIRE(nuc.nucleus == lmr);
    REQUIRE(nuc.contains(L.identity()));
    for (Element a : nuc.center) {
      for (Element x = 0; x < L.order(); ++x) REQUIRE(L.mul(a, x) == L.mul(x, a));
    }
  }
}

TEST_CASE("relabelled copies validate to isomorphic loops", "[loop-core]") {
  const auto M = fixtures::moufang12();
  const std::vector<int> perm = {3, 0, 1, 2, 11, 10, 9, 8, 7, 6, 5, 4};
  const auto L = validate_table(support::relabel(M, perm));
  CHECK(L.identity() == 3);
  CHECK(is_moufang(L));
  CHECK(nuclei(L).nucleus.size() == 1);
}
