#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "loopring/loop_table.hpp"

namespace loopring {

/// Loop identities decided by exhaustive scan.
enum class Identity {
  right_bol,
  right_moufang,
  flexible,
  right_alternative,
  left_alternative,
  rip,
  lip,
  extra,
  commutative,
  associative,
};

inline constexpr std::array kAllIdentities = {
    Identity::right_bol,       Identity::right_moufang, Identity::flexible, Identity::right_alternative,
    Identity::left_alternative, Identity::rip,          Identity::lip,      Identity::extra,
    Identity::commutative,     Identity::associative,
};

/// What a witness falsifies: one of the identities above, or one of the
/// pointwise conditions.
enum class Check {
  right_bol,
  right_moufang,
  flexible,
  right_alternative,
  left_alternative,
  rip,
  lip,
  extra,
  commutative,
  associative,
  quad_def,      // D, E, F all fail at a quadruple
  triple_abc,    // A, B, C all fail at a triple
  triple_abc_star,  // A*, B*, C* all fail at a triple
  allthree,      // a quadruple satisfies exactly two or none of D, E, F
  lip_equiv,     // x^{-1}(xy) = y and x(x^{-1}y) = y disagree
};

constexpr Check to_check(Identity id) noexcept { return static_cast<Check>(static_cast<int>(id)); }

constexpr std::string_view to_string(Identity id) noexcept {
  switch (id) {
    case Identity::right_bol: return "right_bol";
    case Identity::right_moufang: return "right_moufang";
    case Identity::flexible: return "flexible";
    case Identity::right_alternative: return "right_alternative";
    case Identity::left_alternative: return "left_alternative";
    case Identity::rip: return "rip";
    case Identity::lip: return "lip";
    case Identity::extra: return "extra";
    case Identity::commutative: return "commutative";
    case Identity::associative: return "associative";
  }
  return "?";
}

constexpr std::string_view to_string(Check c) noexcept {
  switch (c) {
    case Check::quad_def: return "D/E/F";
    case Check::triple_abc: return "A/B/C";
    case Check::triple_abc_star: return "A*/B*/C*";
    case Check::allthree: return "all-three-or-one";
    case Check::lip_equiv: return "lip_equiv";
    default: return to_string(static_cast<Identity>(static_cast<int>(c)));
  }
}

/// The four products compared by the quadruple conditions:
/// s = [(xy)z]w, t = x[(yz)w], u = [(xw)z]y, v = x[(wz)y].
struct QuadValues {
  Element s, t, u, v;
  friend bool operator==(const QuadValues&, const QuadValues&) = default;
};

/// The lexicographically first tuple at which a check fails, with the two
/// sides that differ. `quad` is filled for quadruple and triple conditions,
/// whose failure involves four products rather than two.
struct Witness {
  Check check;
  std::vector<Element> tuple;
  Element lhs = 0;
  Element rhs = 0;
  std::optional<QuadValues> quad;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// 1-indexed rendering, e.g. `D/E/F empty at (2,2,3,9): S=11 T=9 U=13 V=16`.
inline std::string to_string(const Witness& w) {
  std::ostringstream os;
  os << to_string(w.check);
  switch (w.check) {
    case Check::quad_def:
    case Check::triple_abc:
    case Check::triple_abc_star:
      os << " empty at ";
      break;
    case Check::allthree:
    case Check::lip_equiv:
      os << " violated at ";
      break;
    default:
      os << " fails at ";
  }
  os << '(';
  for (std::size_t i = 0; i < w.tuple.size(); ++i) os << (i ? "," : "") << w.tuple[i] + 1;
  os << "): ";
  if (w.quad) {
    // Triple conditions (i) compare (xy)z, x(yz), (yx)z, y(xz); the
    // starred ones are the quadruple products with w = e.
    const std::array<std::string_view, 4> labels =
        w.check == Check::triple_abc
            ? std::array<std::string_view, 4>{"(xy)z", "x(yz)", "(yx)z", "y(xz)"}
            : std::array<std::string_view, 4>{"S", "T", "U", "V"};
    os << labels[0] << '=' << w.quad->s + 1 << ' ' << labels[1] << '=' << w.quad->t + 1 << ' '
       << labels[2] << '=' << w.quad->u + 1 << ' ' << labels[3] << '=' << w.quad->v + 1;
  } else {
    os << "lhs=" << w.lhs + 1 << " rhs=" << w.rhs + 1;
  }
  return os.str();
}

}  // namespace loopring
