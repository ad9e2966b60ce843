#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "loopring/detail/scan.hpp"
#include "loopring/loop_table.hpp"
#include "loopring/witness.hpp"

namespace loopring {

namespace detail {

inline constexpr std::size_t arity(Identity id) noexcept {
  switch (id) {
    case Identity::right_bol:
    case Identity::right_moufang:
    case Identity::extra:
    case Identity::associative:
      return 3;
    default:
      return 2;
  }
}

struct Sides {
  Element lhs, rhs;
};

// Both sides of each identity. Arguments follow the order in which the
// variables first appear in the equation: (x,y,z) for three-variable
// identities, (x,y) or (y,z) for two-variable ones.
inline Sides evaluate(const LoopTable& L, Identity id, Element a, Element b, Element c) noexcept {
  auto m = [&L](Element p, Element q) { return L.mul(p, q); };
  switch (id) {
    case Identity::right_bol:  // [(xy)z]y = x[(yz)y]
      return {m(m(m(a, b), c), b), m(a, m(m(b, c), b))};
    case Identity::right_moufang:  // [(xy)z]y = x[y(zy)]
      return {m(m(m(a, b), c), b), m(a, m(b, m(c, b)))};
    case Identity::flexible:  // (yz)y = y(zy)
      return {m(m(a, b), a), m(a, m(b, a))};
    case Identity::right_alternative:  // (xy)y = x(yy)
      return {m(m(a, b), b), m(a, m(b, b))};
    case Identity::left_alternative:  // (xx)y = x(xy)
      return {m(m(a, a), b), m(a, m(a, b))};
    case Identity::rip:  // (xy)y^ρ = x
      return {m(m(a, b), L.rinv(b)), a};
    case Identity::lip:  // x^λ(xy) = y
      return {m(L.linv(a), m(a, b)), b};
    case Identity::extra:  // [(xy)z]x = x[y(zx)]
      return {m(m(m(a, b), c), a), m(a, m(b, m(c, a)))};
    case Identity::commutative:
      return {m(a, b), m(b, a)};
    case Identity::associative:
      return {m(m(a, b), c), m(a, m(b, c))};
  }
  return {0, 0};
}

}  // namespace detail

/// Decides `id` on `loop` by scanning every tuple of its free variables in
/// lexicographic order. Returns the first counterexample, or nothing when
/// the identity holds. `jobs` splits the outermost variable across threads
/// without changing the answer.
inline std::optional<Witness> check_identity(const LoopTable& loop, Identity id, unsigned jobs = 1) {
  const std::size_t n = loop.order();
  const std::size_t k = detail::arity(id);
  return detail::first_hit(n, jobs, [&](std::size_t ai) -> std::optional<Witness> {
    const auto a = static_cast<Element>(ai);
    for (std::size_t bi = 0; bi < n; ++bi) {
      const auto b = static_cast<Element>(bi);
      for (std::size_t ci = 0; ci < (k == 3 ? n : 1); ++ci) {
        const auto c = static_cast<Element>(ci);
        const auto [lhs, rhs] = detail::evaluate(loop, id, a, b, c);
        if (lhs != rhs) {
          Witness w{to_check(id), {a, b}, lhs, rhs, std::nullopt};
          if (k == 3) w.tuple.push_back(c);
          return w;
        }
      }
    }
    return std::nullopt;
  });
}

inline bool holds(const LoopTable& loop, Identity id, unsigned jobs = 1) {
  return !check_identity(loop, id, jobs).has_value();
}

inline bool is_moufang(const LoopTable& loop, unsigned jobs = 1) {
  return holds(loop, Identity::right_moufang, jobs);
}

inline bool is_right_bol(const LoopTable& loop, unsigned jobs = 1) {
  return holds(loop, Identity::right_bol, jobs);
}

inline bool is_group(const LoopTable& loop, unsigned jobs = 1) {
  return holds(loop, Identity::associative, jobs);
}

/// Extra identity [(xy)z]x = x[y(zx)]. A positive answer is cross-checked
/// against the Moufang-plus-squares-in-nucleus characterization; a
/// disagreement throws TheoremViolation.
inline bool is_extra(const LoopTable& loop, unsigned jobs = 1) {
  if (!holds(loop, Identity::extra, jobs)) return false;
  if (!is_moufang(loop, jobs) || !squares_in_nucleus(loop)) {
    throw TheoremViolation("extra identity holds but the loop is not Moufang with squares in the nucleus");
  }
  return true;
}

}  // namespace loopring
