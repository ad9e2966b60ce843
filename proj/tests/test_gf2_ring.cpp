#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "loopring/fixtures.hpp"
#include "loopring/gf2_ring.hpp"
#include "support.hpp"

using namespace loopring;

namespace {

// Coefficient vectors and a schoolbook product, independent of bit tricks.
using Coeffs = std::vector<int>;

Coeffs coeffs(std::size_t n, std::uint64_t bits) {
  Coeffs c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<int>((bits >> i) & 1u);
  return c;
}

Coeffs naive_mul(const LoopTable& L, const Coeffs& a, const Coeffs& b) {
  const auto n = L.order();
  Coeffs out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[L.mul(static_cast<Element>(i), static_cast<Element>(j))] += a[i] * b[j];
  for (auto& v : out) v %= 2;
  return out;
}

Coeffs naive_add(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % 2;
  return out;
}

bool naive_right_alternative(const LoopTable& L) {
  const auto n = L.order();
  for (std::uint64_t a = 0; a < (1u << n); ++a)
    for (std::uint64_t b = 0; b < (1u << n); ++b) {
      const auto A = coeffs(n, a), B = coeffs(n, b);
      if (naive_mul(L, naive_mul(L, A, B), B) != naive_mul(L, A, naive_mul(L, B, B))) return false;
    }
  return true;
}

bool naive_right_bol(const LoopTable& L) {
  const auto n = L.order();
  for (std::uint64_t a = 0; a < (1u << n); ++a)
    for (std::uint64_t b = 0; b < (1u << n); ++b)
      for (std::uint64_t c = 0; c < (1u << n); ++c) {
        const auto A = coeffs(n, a), B = coeffs(n, b), C = coeffs(n, c);
        const auto lhs = naive_mul(L, naive_mul(L, naive_mul(L, A, B), C), B);
        const auto rhs = naive_mul(L, A, naive_mul(L, naive_mul(L, B, C), B));
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("Gf2Elem basics", "[gf2-ring]") {
  const Gf2Elem a(4, 0b0110), b(4, 0b0011);
  CHECK((a + b).bits() == 0b0101);
  CHECK((a + a).is_zero());
  CHECK(a.support() == std::vector<int>{2, 3});
  CHECK(a.to_string() == "[2,3]");
  CHECK(Gf2Elem::zero(4).to_string() == "[]");
  CHECK(Gf2Elem::basis(4, 3).support() == std::vector<int>{4});
  CHECK(Gf2Elem(3, 0xff).bits() == 0b111);
  CHECK_THROWS_AS(a + Gf2Elem(5, 1), LoopError);
  CHECK_THROWS_AS(Gf2Elem(65, 1), LoopError);
}

TEST_CASE("rmul checks lengths", "[gf2-ring]") {
  const auto Z = cyclic_group(3);
  try {
    rmul(Z, Gf2Elem(3, 1), Gf2Elem(4, 1));
    FAIL("accepted");
  } catch (const LoopError& e) {
    CHECK(e.kind() == ErrorKind::length_mismatch);
  }
  CHECK_THROWS_AS(LoopRing(Z).mul(Gf2Elem(2, 1), Gf2Elem(3, 1)), LoopError);
}

TEST_CASE("rmul agrees with a schoolbook product", "[gf2-ring]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& L : support::all_loops(n)) {
      const LoopRing ring(L);
      for (std::uint64_t a = 0; a < (1u << n); ++a)
        for (std::uint64_t b = 0; b < (1u << n); ++b) {
          const auto p = rmul(L, Gf2Elem(n, a), Gf2Elem(n, b));
          REQUIRE(coeffs(n, p.bits()) == naive_mul(L, coeffs(n, a), coeffs(n, b)));
          REQUIRE(ring.mul(a, b) == p.bits());
        }
    }
  }
}

TEST_CASE("table and direct products agree on larger loops", "[gf2-ring]") {
  std::mt19937_64 rng(7);
  for (const auto& L : {cyclic_group(8), cyclic_group(10), fixtures::moufang12(), fixtures::bol16()}) {
    const auto n = L.order();
    const LoopRing ring(L);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    for (int i = 0; i < 2000; ++i) {
      const Gf2Elem a(n, rng() & mask), b(n, rng() & mask);
      REQUIRE(ring.mul(a, b) == rmul(L, a, b));
    }
  }
}

TEST_CASE("ring axioms on small loop rings", "[gf2-ring]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& L : support::all_loops(n)) {
      const std::uint64_t size = std::uint64_t{1} << n;
      const auto one = Gf2Elem::basis(n, L.identity());
      for (std::uint64_t a = 0; a < size; ++a) {
        const Gf2Elem A(n, a);
        REQUIRE(rmul(L, one, A) == A);
        REQUIRE(rmul(L, A, one) == A);
        for (std::uint64_t b = 0; b < size; ++b)
          for (std::uint64_t c = 0; c < size; ++c) {
            const Gf2Elem B(n, b), C(n, c);
            REQUIRE(rmul(L, A, B + C) == rmul(L, A, B) + rmul(L, A, C));
            REQUIRE(rmul(L, A + B, C) == rmul(L, A, C) + rmul(L, B, C));
            // Every loop of order at most 4 is a group.
            REQUIRE(rmul(L, rmul(L, A, B), C) == rmul(L, A, rmul(L, B, C)));
          }
      }
    }
  }
}

TEST_CASE("sampled ring axioms up to order 8", "[gf2-ring]") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 5; n <= 8; ++n) {
    const auto Z = cyclic_group(n);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    const auto one = Gf2Elem::basis(n, Z.identity());
    for (std::uint64_t a = 0; a <= mask; ++a) {
      REQUIRE(rmul(Z, one, Gf2Elem(n, a)) == Gf2Elem(n, a));
      REQUIRE(rmul(Z, Gf2Elem(n, a), one) == Gf2Elem(n, a));
    }
    for (int i = 0; i < 3000; ++i) {
      const Gf2Elem A(n, rng() & mask), B(n, rng() & mask), C(n, rng() & mask);
      REQUIRE(rmul(Z, A, B + C) == rmul(Z, A, B) + rmul(Z, A, C));
      REQUIRE(rmul(Z, A + B, C) == rmul(Z, A, C) + rmul(Z, B, C));
      REQUIRE(rmul(Z, rmul(Z, A, B), C) == rmul(Z, A, rmul(Z, B, C)));
    }
  }
}

TEST_CASE("ring identity scans agree with naive scans", "[gf2-ring]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& L : support::all_loops(n)) {
      CHECK(ring_identity_holds(L, RingIdentity::right_alternative) == naive_right_alternative(L));
      CHECK(ring_identity_holds(L, RingIdentity::right_bol) == naive_right_bol(L));
    }
  }
  for (const auto& L : support::all_loops(5)) {
    REQUIRE(ring_identity_holds(L, RingIdentity::right_alternative) == naive_right_alternative(L));
  }
  // A few non-group loops of order 5 for the three-variable scan.
  int done = 0;
  for (const auto& L : support::all_loops(5)) {
    if (is_group(L)) continue;
    const auto w = ring_identity_check(L, RingIdentity::right_bol);
    REQUIRE(w);
    CHECK_FALSE(naive_right_bol(L));
    const auto n = L.order();
    const auto lhs = rmul(L, rmul(L, rmul(L, w->tuple[0], w->tuple[1]), w->tuple[2]), w->tuple[1]);
    const auto rhs = rmul(L, w->tuple[0], rmul(L, rmul(L, w->tuple[1], w->tuple[2]), w->tuple[1]));
    CHECK(lhs == w->lhs);
    CHECK(rhs == w->rhs);
    CHECK(lhs != rhs);
    CHECK(w->lhs.length() == n);
    if (++done == 3) break;
  }
}

TEST_CASE("group rings satisfy all four identities", "[gf2-ring]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto Z = cyclic_group(n);
    CHECK(ring_identity_holds(Z, RingIdentity::right_bol));
    CHECK(ring_identity_holds(Z, RingIdentity::right_moufang));
    CHECK(ring_identity_holds(Z, RingIdentity::right_alternative));
    CHECK(ring_identity_holds(Z, RingIdentity::left_alternative));
  }
}

TEST_CASE("alternative loop rings are right Moufang", "[gf2-ring]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& L : support::all_loops(n)) {
      if (ring_identity_holds(L, RingIdentity::left_alternative) &&
          ring_identity_holds(L, RingIdentity::right_alternative)) {
        CHECK(ring_identity_holds(L, RingIdentity::right_moufang));
      }
    }
  }
}

TEST_CASE("ring caps", "[gf2-ring]") {
  const auto M = fixtures::moufang12();
  try {
    ring_identity_check(M, RingIdentity::right_alternative);
    FAIL("accepted");
  } catch (const LoopError& e) {
    CHECK(e.kind() == ErrorKind::order_exceeds_cap);
  }
  const auto Z7 = cyclic_group(7);
  CHECK_THROWS_AS(ring_identity_check(Z7, RingIdentity::right_bol), LoopError);
  CHECK(ring_identity_holds(Z7, RingIdentity::right_alternative));
  RingCaps raised;
  raised.three_var = 7;
  CHECK(ring_identity_holds(cyclic_group(4), RingIdentity::right_bol, raised));
  CHECK(RingCaps{}.for_arity(2) == 8);
  CHECK(RingCaps{}.for_arity(3) == 6);
}

TEST_CASE("ring witnesses are deterministic and printable", "[gf2-ring]") {
  const auto loops = support::all_loops(5);
  const auto it = std::find_if(loops.begin(), loops.end(), [](const LoopTable& L) { return !is_group(L); });
  REQUIRE(it != loops.end());
  const auto one = ring_identity_check(*it, RingIdentity::right_alternative, {}, 1);
  const auto four = ring_identity_check(*it, RingIdentity::right_alternative, {}, 4);
  REQUIRE(one);
  REQUIRE(four);
  CHECK(to_string(*one) == to_string(*four));
  CHECK(to_string(*one).rfind("ring_right_alternative fails at ([", 0) == 0);
}

TEST_CASE("oracles agree on all loops of order at most 5", "[gf2-ring]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& L : support::all_loops(n)) {
      REQUIRE(oracle_equiv_srar(L));
      const auto r = oracle_equiv_ra2(L);
      REQUIRE(r.ok());
      REQUIRE(r.left_half_literal_ok());
      REQUIRE(r.right_half_literal_ok());
    }
  }
}
