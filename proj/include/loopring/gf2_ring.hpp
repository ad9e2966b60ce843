#pragma once

// The loop ring of a finite loop over the two-element field, and a brute
// force check of ring identities over every ring element. This side never
// looks at the pointwise conditions; it only knows the loop product and
// distributivity, which is what makes it usable as an oracle for them.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "loopring/conditions.hpp"
#include "loopring/detail/scan.hpp"
#include "loopring/error.hpp"
#include "loopring/identities.hpp"
#include "loopring/loop_table.hpp"

namespace loopring {

/// An element of GF(2)L: bit i set means basis element i has coefficient 1.
class Gf2Elem {
 public:
  static constexpr std::size_t kMaxLength = 64;

  Gf2Elem() = default;
  Gf2Elem(std::size_t length, std::uint64_t bits) : bits_(bits), length_(length) {
    if (length > kMaxLength) {
      throw LoopError(ErrorKind::length_mismatch, "GF(2) elements hold at most 64 coefficients");
    }
    if (length < kMaxLength) bits_ &= (std::uint64_t{1} << length) - 1;
  }

  static Gf2Elem zero(std::size_t length) { return {length, 0}; }
  static Gf2Elem basis(std::size_t length, Element g) { return {length, std::uint64_t{1} << g}; }

  std::size_t length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool test(Element g) const noexcept { return (bits_ >> g) & 1u; }
  bool is_zero() const noexcept { return bits_ == 0; }

  friend Gf2Elem operator+(const Gf2Elem& a, const Gf2Elem& b) {
    if (a.length_ != b.length_) {
      throw LoopError(ErrorKind::length_mismatch, "adding elements of lengths " +
                                                      std::to_string(a.length_) + " and " +
                                                      std::to_string(b.length_));
    }
    return {a.length_, a.bits_ ^ b.bits_};
  }

  friend bool operator==(const Gf2Elem&, const Gf2Elem&) = default;

  /// 1-indexed basis elements with coefficient 1, ascending.
  std::vector<int> support() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < length_; ++i) {
      if (test(static_cast<Element>(i))) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
  }

  /// e.g. "[2,3]"; the zero element is "[]".
  std::string to_string() const {
    std::string out = "[";
    bool first = true;
    for (int g : support()) {
      if (!first) out += ',';
      out += std::to_string(g);
      first = false;
    }
    return out + "]";
  }

 private:
  std::uint64_t bits_ = 0;
  std::size_t length_ = 0;
};

/// Product in GF(2)L straight from the definition: the coefficient of g is
/// the parity of the number of pairs (i in a, j in b) with i·j = g.
inline Gf2Elem rmul(const LoopTable& loop, const Gf2Elem& a, const Gf2Elem& b) {
  const std::size_t n = loop.order();
  if (a.length() != n || b.length() != n) {
    throw LoopError(ErrorKind::length_mismatch,
                    "ring elements of lengths " + std::to_string(a.length()) + " and " +
                        std::to_string(b.length()) + " for a loop of order " + std::to_string(n));
  }
  std::uint64_t out = 0;
  for (std::uint64_t ra = a.bits(); ra; ra &= ra - 1) {
    const auto i = static_cast<Element>(std::countr_zero(ra));
    for (std::uint64_t rb = b.bits(); rb; rb &= rb - 1) {
      const auto j = static_cast<Element>(std::countr_zero(rb));
      out ^= std::uint64_t{1} << loop.mul(i, j);
    }
  }
  return {n, out};
}

/// GF(2)L with a precomputed multiplication table over all 4^n pairs of
/// elements when n is small enough, for the brute-force scans.
class LoopRing {
 public:
  static constexpr std::size_t kTableOrder = 10;

  explicit LoopRing(const LoopTable& loop) : loop_(&loop), n_(loop.order()) {
    if (n_ > Gf2Elem::kMaxLength) {
      throw LoopError(ErrorKind::order_exceeds_cap, "loop rings are limited to order 64");
    }
    if (n_ > kTableOrder) return;
    const std::size_t size = std::size_t{1} << n_;
    table_.assign(size * size, 0);
    // Row of each basis element, built by distributing over b's bits.
    for (std::size_t i = 0; i < n_; ++i) {
      auto* row = &table_[(std::size_t{1} << i) * size];
      for (std::size_t b = 1; b < size; ++b) {
        const auto j = static_cast<Element>(std::countr_zero(b));
        row[b] = static_cast<std::uint16_t>(row[b & (b - 1)] ^ (1u << loop.mul(static_cast<Element>(i), j)));
      }
    }
    // Remaining rows by distributing over a's bits.
    for (std::size_t a = 1; a < size; ++a) {
      if ((a & (a - 1)) == 0) continue;
      const auto* rest = &table_[(a & (a - 1)) * size];
      const auto* low = &table_[(a & (~a + 1)) * size];
      auto* row = &table_[a * size];
      for (std::size_t b = 0; b < size; ++b) row[b] = rest[b] ^ low[b];
    }
  }

  std::size_t order() const noexcept { return n_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    if (!table_.empty()) return table_[(a << n_) | b];
    std::uint64_t out = 0;
    for (std::uint64_t ra = a; ra; ra &= ra - 1) {
      const auto i = static_cast<Element>(std::countr_zero(ra));
      for (std::uint64_t rb = b; rb; rb &= rb - 1) {
        out ^= std::uint64_t{1} << loop_->mul(i, static_cast<Element>(std::countr_zero(rb)));
      }
    }
    return out;
  }

  Gf2Elem mul(const Gf2Elem& a, const Gf2Elem& b) const {
    if (a.length() != n_ || b.length() != n_) {
      throw LoopError(ErrorKind::length_mismatch, "ring element length differs from loop order");
    }
    return {n_, mul(a.bits(), b.bits())};
  }

 private:
  const LoopTable* loop_;
  std::size_t n_;
  std::vector<std::uint16_t> table_;
};

enum class RingIdentity {
  right_alternative,  // (ab)b = a(bb)
  left_alternative,   // (aa)b = a(ab)
  right_bol,          // [(ab)c]b = a[(bc)b]
  right_moufang,      // [(ab)c]b = a[b(cb)]
};

constexpr std::string_view to_string(RingIdentity id) noexcept {
  switch (id) {
    case RingIdentity::right_alternative: return "ring_right_alternative";
    case RingIdentity::left_alternative: return "ring_left_alternative";
    case RingIdentity::right_bol: return "ring_right_bol";
    case RingIdentity::right_moufang: return "ring_right_moufang";
  }
  return "?";
}

constexpr std::size_t arity(RingIdentity id) noexcept {
  return id == RingIdentity::right_bol || id == RingIdentity::right_moufang ? 3 : 2;
}

/// Largest loop order each scan accepts. The cost is 2^(arity·n) tuples.
struct RingCaps {
  std::size_t two_var = 8;
  std::size_t three_var = 6;

  std::size_t for_arity(std::size_t k) const noexcept { return k == 3 ? three_var : two_var; }
};

struct RingWitness {
  RingIdentity id;
  std::vector<Gf2Elem> tuple;
  Gf2Elem lhs;
  Gf2Elem rhs;
};

inline std::string to_string(const RingWitness& w) {
  std::ostringstream os;
  os << to_string(w.id) << " fails at (";
  for (std::size_t i = 0; i < w.tuple.size(); ++i) os << (i ? "," : "") << w.tuple[i].to_string();
  os << "): lhs=" << w.lhs.to_string() << " rhs=" << w.rhs.to_string();
  return os.str();
}

namespace detail {

inline void require_ring_cap(const LoopTable& loop, std::size_t k, const RingCaps& caps) {
  const std::size_t n = loop.order();
  const std::size_t cap = caps.for_arity(k);
  if (n > cap) {
    throw LoopError(ErrorKind::order_exceeds_cap,
                    "order " + std::to_string(n) + " exceeds the " + std::to_string(k) +
                        "-variable ring cap " + std::to_string(cap) + "; raise it to at least " +
                        std::to_string(n));
  }
  if (k * n >= 64) {
    throw LoopError(ErrorKind::order_exceeds_cap,
                    "order " + std::to_string(n) + " is too large to enumerate " +
                        std::to_string(k) + " ring variables");
  }
}

}  // namespace detail

/// Scans every tuple of ring elements for the identity's variables, in
/// order of appearance (a, b, c) and increasing bit-vector value. Returns
/// the first failing tuple, or nothing when the identity holds in GF(2)L.
inline std::optional<RingWitness> ring_identity_check(const LoopTable& loop, RingIdentity id,
                                                      const RingCaps& caps = {}, unsigned jobs = 1) {
  const std::size_t k = arity(id);
  detail::require_ring_cap(loop, k, caps);
  const std::size_t n = loop.order();
  const LoopRing ring(loop);
  const std::uint64_t size = std::uint64_t{1} << n;

  auto sides = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) -> std::pair<std::uint64_t, std::uint64_t> {
    switch (id) {
      case RingIdentity::right_alternative:
        return {ring.mul(ring.mul(a, b), b), ring.mul(a, ring.mul(b, b))};
      case RingIdentity::left_alternative:
        return {ring.mul(ring.mul(a, a), b), ring.mul(a, ring.mul(a, b))};
      case RingIdentity::right_bol:
        return {ring.mul(ring.mul(ring.mul(a, b), c), b), ring.mul(a, ring.mul(ring.mul(b, c), b))};
      case RingIdentity::right_moufang:
        return {ring.mul(ring.mul(ring.mul(a, b), c), b), ring.mul(a, ring.mul(b, ring.mul(c, b)))};
    }
    return {0, 0};
  };

  return detail::first_hit(size, jobs, [&](std::size_t a) -> std::optional<RingWitness> {
    for (std::uint64_t b = 0; b < size; ++b) {
      for (std::uint64_t c = 0; c < (k == 3 ? size : 1); ++c) {
        const auto [lhs, rhs] = sides(a, b, c);
        if (lhs != rhs) {
          RingWitness w{id, {Gf2Elem(n, a), Gf2Elem(n, b)}, Gf2Elem(n, lhs), Gf2Elem(n, rhs)};
          if (k == 3) w.tuple.emplace_back(n, c);
          return w;
        }
      }
    }
    return std::nullopt;
  });
}

inline bool ring_identity_holds(const LoopTable& loop, RingIdentity id, const RingCaps& caps = {},
                                unsigned jobs = 1) {
  return !ring_identity_check(loop, id, caps, jobs).has_value();
}

/// Whether the ring right Bol identity and the pointwise SRAR criterion
/// agree on `loop`. False means the two routes disagree, which is a bug.
inline bool oracle_equiv_srar(const LoopTable& loop, const RingCaps& caps = {}, unsigned jobs = 1) {
  const bool ring = ring_identity_holds(loop, RingIdentity::right_bol, caps, jobs);
  return ring == is_srar(loop, jobs).holds;
}

/// Whether A/B/C (resp. A*/B*/C*) is nonempty at every triple.
struct PointwiseAbc {
  bool left_everywhere = true;
  bool right_everywhere = true;
};

inline PointwiseAbc pointwise_abc(const LoopTable& loop) {
  PointwiseAbc p;
  const std::size_t n = loop.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto c = abc_conditions(loop, static_cast<Element>(x), static_cast<Element>(y),
                                      static_cast<Element>(z));
        p.left_everywhere = p.left_everywhere && !c.left.empty();
        p.right_everywhere = p.right_everywhere && !c.right.empty();
      }
    }
  }
  return p;
}

/// Both routes for alternativity of GF(2)L, side by side.
///
/// Linearizing (ab)b = a(bb) over GF(2) gives the A*/B*/C* pairings at
/// triples with y != z, and the loop's own right alternative law on the
/// diagonal y = z (where C* holds trivially). So the ring is right
/// alternative exactly when the pointwise condition holds and the loop is
/// right alternative; likewise on the left. The bare pointwise form
/// (`*_half_literal_ok`) drops the diagonal term and is only guaranteed for
/// loops that are alternative, e.g. Moufang loops.
struct Ra2OracleReport {
  bool moufang = false;
  bool loop_left_alternative = false;
  bool loop_right_alternative = false;
  bool left_pointwise = false;   // A/B/C somewhere at every triple
  bool right_pointwise = false;  // A*/B*/C* somewhere at every triple
  bool ring_left_alternative = false;
  bool ring_right_alternative = false;
  bool ra2 = false;

  bool left_half_literal_ok() const noexcept { return left_pointwise == ring_left_alternative; }
  bool right_half_literal_ok() const noexcept { return right_pointwise == ring_right_alternative; }
  bool left_half_ok() const noexcept {
    return (left_pointwise && loop_left_alternative) == ring_left_alternative;
  }
  bool right_half_ok() const noexcept {
    return (right_pointwise && loop_right_alternative) == ring_right_alternative;
  }
  /// For Moufang loops: RA2 exactly when the ring is alternative, and both
  /// literal halves hold.
  bool moufang_ok() const noexcept {
    if (!moufang) return true;
    return ra2 == (ring_left_alternative && ring_right_alternative) && left_half_literal_ok() &&
           right_half_literal_ok();
  }
  bool ok() const noexcept { return left_half_ok() && right_half_ok() && moufang_ok(); }
};

inline Ra2OracleReport oracle_equiv_ra2(const LoopTable& loop, const RingCaps& caps = {}, unsigned jobs = 1) {
  Ra2OracleReport r;
  r.ring_left_alternative = ring_identity_holds(loop, RingIdentity::left_alternative, caps, jobs);
  r.ring_right_alternative = ring_identity_holds(loop, RingIdentity::right_alternative, caps, jobs);
  const auto p = pointwise_abc(loop);
  r.left_pointwise = p.left_everywhere;
  r.right_pointwise = p.right_everywhere;
  r.loop_left_alternative = holds(loop, Identity::left_alternative, jobs);
  r.loop_right_alternative = holds(loop, Identity::right_alternative, jobs);
  r.moufang = is_moufang(loop, jobs);
  r.ra2 = is_ra2(loop, jobs).holds;
  return r;
}

}  // namespace loopring
