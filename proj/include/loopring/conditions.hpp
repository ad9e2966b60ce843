#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "loopring/detail/scan.hpp"
#include "loopring/identities.hpp"
#include "loopring/loop_table.hpp"
#include "loopring/witness.hpp"

namespace loopring {

/// Which family of three pointwise conditions a CondSet ranges over.
enum class CondFamily {
  quad,        // D, E, F on quadruples
  triple,      // D', E', F' on triples
  left_abc,    // A, B, C
  right_abc,   // A*, B*, C*
};

/// Bit positions shared by all four families: the first condition of each
/// family (D, D', A, A*) is bit 0, and so on.
namespace cond {
inline constexpr std::uint8_t D = 1;
inline constexpr std::uint8_t E = 2;
inline constexpr std::uint8_t F = 4;
inline constexpr std::uint8_t all = 7;
}  // namespace cond

template <CondFamily Family>
class CondSet {
 public:
  constexpr CondSet() = default;
  constexpr explicit CondSet(std::uint8_t mask) : mask_(mask & cond::all) {}

  constexpr std::uint8_t mask() const noexcept { return mask_; }
  constexpr bool has(std::uint8_t bit) const noexcept { return (mask_ & bit) != 0; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr int size() const noexcept { return std::popcount(mask_); }

  static constexpr std::array<std::string_view, 3> names() noexcept {
    switch (Family) {
      case CondFamily::quad: return {"D", "E", "F"};
      case CondFamily::triple: return {"D'", "E'", "F'"};
      case CondFamily::left_abc: return {"A", "B", "C"};
      case CondFamily::right_abc: return {"A*", "B*", "C*"};
    }
    return {"?", "?", "?"};
  }

  /// e.g. "{D',F'}" or "{}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 3; ++i) {
      if (!has(static_cast<std::uint8_t>(1u << i))) continue;
      if (!first) out += ',';
      out += names()[i];
      first = false;
    }
    return out + "}";
  }

  /// Same conditions under another family's names, e.g. D ↦ D'.
  template <CondFamily Other>
  constexpr CondSet<Other> as() const noexcept {
    return CondSet<Other>(mask_);
  }

  friend constexpr bool operator==(CondSet, CondSet) = default;

 private:
  std::uint8_t mask_ = 0;
};

using QuadConds = CondSet<CondFamily::quad>;
using TripleConds = CondSet<CondFamily::triple>;
using LeftAbcConds = CondSet<CondFamily::left_abc>;
using RightAbcConds = CondSet<CondFamily::right_abc>;

namespace detail {

// Four products p, q, r, s satisfy the first condition when they pair as
// p=q, r=s; the second as p=s, q=r; the third as p=r, q=s.
constexpr std::uint8_t pairings(Element p, Element q, Element r, Element s) noexcept {
  std::uint8_t m = 0;
  if (p == q && r == s) m |= cond::D;
  if (p == s && q == r) m |= cond::E;
  if (p == r && q == s) m |= cond::F;
  return m;
}

// First pair of products that differ, for witness reporting.
inline void pick_sides(Witness& w, const QuadValues& q) {
  if (q.s != q.t) {
    w.lhs = q.s;
    w.rhs = q.t;
  } else {
    w.lhs = q.u;
    w.rhs = q.v;
  }
}

}  // namespace detail

inline QuadValues quad_values(const LoopTable& L, Element x, Element y, Element z, Element w) noexcept {
  return {
      L.mul(L.mul(L.mul(x, y), z), w),
      L.mul(x, L.mul(L.mul(y, z), w)),
      L.mul(L.mul(L.mul(x, w), z), y),
      L.mul(x, L.mul(L.mul(w, z), y)),
  };
}

inline QuadConds quad_conditions(const QuadValues& q) noexcept {
  return QuadConds(detail::pairings(q.s, q.t, q.u, q.v));
}

inline QuadConds quad_conditions(const LoopTable& L, Element x, Element y, Element z, Element w) noexcept {
  return quad_conditions(quad_values(L, x, y, z, w));
}

/// Products (xy)z, x(yz), (xz)y, x(zy).
inline QuadValues triple_values(const LoopTable& L, Element x, Element y, Element z) noexcept {
  return {L.mul(L.mul(x, y), z), L.mul(x, L.mul(y, z)), L.mul(L.mul(x, z), y), L.mul(x, L.mul(z, y))};
}

/// D'(x,y,z): (xy)z = x(yz) and (xz)y = x(zy)
/// E'(x,y,z): (xy)z = x(zy) and (xz)y = x(yz)
/// F'(x,y,z): (xy)z = (xz)y and x(yz) = x(zy)
inline TripleConds triple_conditions(const LoopTable& L, Element x, Element y, Element z) noexcept {
  const auto q = triple_values(L, x, y, z);
  return TripleConds(detail::pairings(q.s, q.t, q.u, q.v));
}

/// Products (xy)z, x(yz), (yx)z, y(xz).
inline QuadValues left_abc_values(const LoopTable& L, Element x, Element y, Element z) noexcept {
  return {L.mul(L.mul(x, y), z), L.mul(x, L.mul(y, z)), L.mul(L.mul(y, x), z), L.mul(y, L.mul(x, z))};
}

struct AbcConds {
  LeftAbcConds left;    // A, B, C
  RightAbcConds right;  // A*, B*, C*
};

/// A(x,y,z):  (xy)z = x(yz) and (yx)z = y(xz)
/// B(x,y,z):  (xy)z = y(xz) and x(yz) = (yx)z
/// C(x,y,z):  (xy)z = (yx)z and x(yz) = y(xz)
/// A*(x,y,z): (xy)z = x(yz) and (xz)y = x(zy)
/// B*(x,y,z): (xy)z = x(zy) and x(yz) = (xz)y
/// C*(x,y,z): (xy)z = (xz)y and x(yz) = x(zy)
inline AbcConds abc_conditions(const LoopTable& L, Element x, Element y, Element z) noexcept {
  const auto l = left_abc_values(L, x, y, z);
  const Element xy_z = L.mul(L.mul(x, y), z);
  const Element x_yz = L.mul(x, L.mul(y, z));
  const Element xz_y = L.mul(L.mul(x, z), y);
  const Element x_zy = L.mul(x, L.mul(z, y));
  std::uint8_t star = 0;
  if (xy_z == x_yz && xz_y == x_zy) star |= cond::D;
  if (xy_z == x_zy && x_yz == xz_y) star |= cond::E;
  if (xy_z == xz_y && x_yz == x_zy) star |= cond::F;
  return {LeftAbcConds(detail::pairings(l.s, l.t, l.u, l.v)), RightAbcConds(star)};
}

/// Outcome of a decision procedure together with its first counterexample.
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// Right Bol and, at every quadruple, at least one of D, E, F. Bol is
/// checked first; the witness comes from whichever check fails first.
inline Verdict is_srar(const LoopTable& loop, unsigned jobs = 1) {
  if (auto w = check_identity(loop, Identity::right_bol, jobs)) return {false, std::move(w)};
  const std::size_t n = loop.order();
  auto w = detail::first_hit(n, jobs, [&](std::size_t xi) -> std::optional<Witness> {
    const auto x = static_cast<Element>(xi);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t wi = 0; wi < n; ++wi) {
          const auto q = quad_values(loop, x, static_cast<Element>(y), static_cast<Element>(z),
                                     static_cast<Element>(wi));
          if (quad_conditions(q).empty()) {
            Witness out{Check::quad_def,
                        {x, static_cast<Element>(y), static_cast<Element>(z), static_cast<Element>(wi)},
                        0,
                        0,
                        q};
            detail::pick_sides(out, q);
            return out;
          }
        }
      }
    }
    return std::nullopt;
  });
  if (w) return {false, std::move(w)};
  return {};
}

/// Moufang and, at every triple, some of A, B, C and some of A*, B*, C*.
inline Verdict is_ra2(const LoopTable& loop, unsigned jobs = 1) {
  if (auto w = check_identity(loop, Identity::right_moufang, jobs)) return {false, std::move(w)};
  const std::size_t n = loop.order();
  auto w = detail::first_hit(n, jobs, [&](std::size_t xi) -> std::optional<Witness> {
    const auto x = static_cast<Element>(xi);
    for (std::size_t yi = 0; yi < n; ++yi) {
      const auto y = static_cast<Element>(yi);
      for (std::size_t zi = 0; zi < n; ++zi) {
        const auto z = static_cast<Element>(zi);
        const auto c = abc_conditions(loop, x, y, z);
        if (c.left.empty()) {
          const auto q = left_abc_values(loop, x, y, z);
          Witness out{Check::triple_abc, {x, y, z}, 0, 0, q};
          detail::pick_sides(out, q);
          return out;
        }
        if (c.right.empty()) {
          const auto q = triple_values(loop, x, y, z);
          Witness out{Check::triple_abc_star, {x, y, z}, 0, 0, q};
          detail::pick_sides(out, q);
          return out;
        }
      }
    }
    return std::nullopt;
  });
  if (w) return {false, std::move(w)};
  return {};
}

/// Number of triples (resp. quadruples) realizing each subset of the three
/// conditions, indexed by the subset's bit mask.
struct TripleProfile {
  std::array<std::uint64_t, 8> counts{};
  std::uint64_t total() const noexcept {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
  friend bool operator==(const TripleProfile&, const TripleProfile&) = default;
};

struct QuadProfile {
  std::array<std::uint64_t, 8> counts{};
  std::uint64_t total() const noexcept {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
  friend bool operator==(const QuadProfile&, const QuadProfile&) = default;
};

inline TripleProfile triple_profile(const LoopTable& loop) {
  TripleProfile p;
  const std::size_t n = loop.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        ++p.counts[triple_conditions(loop, static_cast<Element>(x), static_cast<Element>(y),
                                     static_cast<Element>(z))
                       .mask()];
      }
    }
  }
  return p;
}

inline QuadProfile quad_profile(const LoopTable& loop) {
  QuadProfile p;
  const std::size_t n = loop.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t w = 0; w < n; ++w) {
          ++p.counts[quad_conditions(loop, static_cast<Element>(x), static_cast<Element>(y),
                                     static_cast<Element>(z), static_cast<Element>(w))
                         .mask()];
        }
      }
    }
  }
  return p;
}

/// Whether D'∨E'∨F', D'∨E', D'∨F' and E'∨F' hold at every triple.
struct TripleCoverage {
  bool def_everywhere = true;
  bool de_everywhere = true;
  bool df_everywhere = true;
  bool ef_everywhere = true;
  friend bool operator==(const TripleCoverage&, const TripleCoverage&) = default;
};

inline TripleCoverage coverage_of(const TripleProfile& p) {
  TripleCoverage c;
  for (std::uint8_t mask = 0; mask < 8; ++mask) {
    if (p.counts[mask] == 0) continue;
    c.def_everywhere = c.def_everywhere && mask != 0;
    c.de_everywhere = c.de_everywhere && (mask & (cond::D | cond::E)) != 0;
    c.df_everywhere = c.df_everywhere && (mask & (cond::D | cond::F)) != 0;
    c.ef_everywhere = c.ef_everywhere && (mask & (cond::E | cond::F)) != 0;
  }
  return c;
}

inline TripleCoverage triple_coverage(const LoopTable& loop) { return coverage_of(triple_profile(loop)); }

}  // namespace loopring
