#pragma once

// Executable forms of the structural results about SRAR and RA2 loops.
// Each verifier evaluates a hypothesis and a conclusion on one concrete
// loop. The statements are proved, so on a correct implementation every
// implication comes out true; the sweeps count the ones that do not.

#include <array>
#include <cstddef>
#include <optional>

#include "loopring/conditions.hpp"
#include "loopring/error.hpp"
#include "loopring/identities.hpp"
#include "loopring/loop_table.hpp"
#include "loopring/witness.hpp"

namespace loopring {

struct ImplicationCheck {
  bool hypothesis = false;
  bool conclusion = false;
  bool ok() const noexcept { return !hypothesis || conclusion; }
  friend bool operator==(const ImplicationCheck&, const ImplicationCheck&) = default;
};

namespace detail {

inline void require_bol(const LoopTable& loop) {
  if (auto w = check_identity(loop, Identity::right_bol)) {
    throw LoopError(ErrorKind::not_bol, "loop is not right Bol: " + to_string(*w));
  }
}

}  // namespace detail

/// In an SRAR loop each quadruple satisfies all of D, E, F or exactly one.
/// Returns the first quadruple satisfying none or two. Throws NotSrar when
/// the loop is not SRAR.
inline std::optional<Witness> verify_allthree(const LoopTable& loop) {
  if (auto v = is_srar(loop); !v) {
    throw LoopError(ErrorKind::not_srar, "loop is not SRAR: " + to_string(*v.witness));
  }
  const std::size_t n = loop.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t w = 0; w < n; ++w) {
          const auto tuple = std::array{static_cast<Element>(x), static_cast<Element>(y),
                                        static_cast<Element>(z), static_cast<Element>(w)};
          const auto q = quad_values(loop, tuple[0], tuple[1], tuple[2], tuple[3]);
          const int size = quad_conditions(q).size();
          if (size == 0 || size == 2) {
            Witness out{Check::allthree, {tuple.begin(), tuple.end()}, 0, 0, q};
            detail::pick_sides(out, q);
            return out;
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// In a Bol loop, x^{-1}(xy) = y exactly when x(x^{-1}y) = y. Returns the
/// first pair where the two disagree. Throws NotBol.
inline std::optional<Witness> verify_lip_equivalence(const LoopTable& loop) {
  detail::require_bol(loop);
  const std::size_t n = loop.order();
  for (std::size_t xi = 0; xi < n; ++xi) {
    const auto x = static_cast<Element>(xi);
    const Element xinv = loop.rinv(x);
    for (std::size_t yi = 0; yi < n; ++yi) {
      const auto y = static_cast<Element>(yi);
      const Element left = loop.mul(xinv, loop.mul(x, y));
      const Element right = loop.mul(x, loop.mul(xinv, y));
      if ((left == y) != (right == y)) return Witness{Check::lip_equiv, {x, y}, left, right, std::nullopt};
    }
  }
  return std::nullopt;
}

/// Whether every pair of a Bol loop commutes or satisfies x^{-1}(xy) = y.
/// When it does the loop must be Moufang; if it is not, TheoremViolation is
/// thrown. Throws NotBol.
inline bool verify_commute_or_lip(const LoopTable& loop) {
  detail::require_bol(loop);
  const std::size_t n = loop.order();
  bool hypothesis = true;
  for (std::size_t xi = 0; xi < n && hypothesis; ++xi) {
    const auto x = static_cast<Element>(xi);
    for (std::size_t yi = 0; yi < n && hypothesis; ++yi) {
      const auto y = static_cast<Element>(yi);
      const Element xy = loop.mul(x, y);
      hypothesis = xy == loop.mul(y, x) || loop.mul(loop.rinv(x), xy) == y;
    }
  }
  if (hypothesis && !is_moufang(loop)) {
    throw TheoremViolation("every pair commutes or has the left inverse property, yet the loop is not Moufang");
  }
  return hypothesis;
}

/// The three pair-coverage implications for a Bol loop:
///   D' or E' everywhere  =>  RA2 and extra
///   D' or F' everywhere  =>  group
///   E' or F' everywhere  =>  abelian group
struct PairCoverageReport {
  std::array<ImplicationCheck, 3> clauses;
  bool ok() const noexcept { return clauses[0].ok() && clauses[1].ok() && clauses[2].ok(); }
};

/// Throws NotBol.
inline PairCoverageReport verify_pair_coverage(const LoopTable& loop) {
  detail::require_bol(loop);
  const auto cov = triple_coverage(loop);
  const bool assoc = is_group(loop);
  const bool comm = holds(loop, Identity::commutative);
  PairCoverageReport r;
  r.clauses[0].hypothesis = cov.de_everywhere;
  r.clauses[0].conclusion = is_ra2(loop).holds && is_extra(loop);
  r.clauses[1].hypothesis = cov.df_everywhere;
  r.clauses[1].conclusion = assoc;
  r.clauses[2].hypothesis = cov.ef_everywhere;
  r.clauses[2].conclusion = assoc && comm;
  return r;
}

/// SRAR of odd order => associative.
inline ImplicationCheck verify_odd_srar_associative(const LoopTable& loop) {
  ImplicationCheck c;
  c.hypothesis = loop.order() % 2 == 1 && is_srar(loop).holds;
  c.conclusion = c.hypothesis ? is_group(loop) : false;
  return c;
}

/// RA2 => SRAR.
inline ImplicationCheck verify_ra2_implies_srar(const LoopTable& loop) {
  ImplicationCheck c;
  c.hypothesis = is_ra2(loop).holds;
  c.conclusion = c.hypothesis ? is_srar(loop).holds : false;
  return c;
}

/// Bol with D'∨E', D'∨F' or E'∨F' at every triple => RA2.
inline ImplicationCheck verify_pairs_imply_ra2(const LoopTable& loop) {
  ImplicationCheck c;
  if (is_right_bol(loop)) {
    const auto cov = triple_coverage(loop);
    c.hypothesis = cov.de_everywhere || cov.df_everywhere || cov.ef_everywhere;
  }
  c.conclusion = c.hypothesis ? is_ra2(loop).holds : false;
  return c;
}

inline ImplicationCheck verify_moufang_implies_bol(const LoopTable& loop) {
  ImplicationCheck c;
  c.hypothesis = is_moufang(loop);
  c.conclusion = c.hypothesis ? is_right_bol(loop) : false;
  return c;
}

/// Right Bol => right alternative and right inverse property.
inline ImplicationCheck verify_bol_implies_ralt_rip(const LoopTable& loop) {
  ImplicationCheck c;
  c.hypothesis = is_right_bol(loop);
  c.conclusion = c.hypothesis && holds(loop, Identity::right_alternative) && holds(loop, Identity::rip);
  return c;
}

/// Right Bol with the left inverse property => Moufang.
inline ImplicationCheck verify_bol_lip_implies_moufang(const LoopTable& loop) {
  ImplicationCheck c;
  c.hypothesis = is_right_bol(loop) && holds(loop, Identity::lip);
  c.conclusion = c.hypothesis ? is_moufang(loop) : false;
  return c;
}

/// Extra identity <=> Moufang with every square in the nucleus. Unlike
/// `is_extra`, both sides are evaluated independently and reported.
struct ExtraCharacterization {
  bool extra_identity = false;
  bool moufang_squares_in_nucleus = false;
  bool ok() const noexcept { return extra_identity == moufang_squares_in_nucleus; }
};

inline ExtraCharacterization verify_extra_characterization(const LoopTable& loop) {
  return {holds(loop, Identity::extra), is_moufang(loop) && squares_in_nucleus(loop)};
}

}  // namespace loopring
