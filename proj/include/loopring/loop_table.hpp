#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loopring/error.hpp"

namespace loopring {

/// Internal 0-based element index. All external I/O adds one.
using Element = std::uint8_t;

inline constexpr std::size_t kMaxOrder = 256;

/// A finite loop stored as its Cayley table.
///
/// Instances are only produced by `validate_table` (or by the enumerator,
/// which builds tables that are Latin by construction), so every LoopTable
/// in the program is a Latin square with a two-sided identity and both
/// inverse maps filled in.
class LoopTable {
 public:
  LoopTable() = default;

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element x, Element y) const noexcept {
    return cells_[static_cast<std::size_t>(x) * order_ + y];
  }

  /// x^ρ with x·x^ρ = e.
  Element rinv(Element x) const noexcept { return rinv_[x]; }
  /// x^λ with x^λ·x = e.
  Element linv(Element x) const noexcept { return linv_[x]; }

  /// The unique x with a·x = b.
  Element left_divide(Element a, Element b) const noexcept {
    auto r = row(a);
    return static_cast<Element>(std::find(r.begin(), r.end(), b) - r.begin());
  }

  /// The unique y with y·a = b.
  Element right_divide(Element b, Element a) const noexcept {
    for (std::size_t y = 0; y < order_; ++y) {
      if (mul(static_cast<Element>(y), a) == b) return static_cast<Element>(y);
    }
    return static_cast<Element>(order_);
  }

  std::span<const Element> row(Element x) const noexcept {
    return {cells_.data() + static_cast<std::size_t>(x) * order_, order_};
  }
  std::span<const Element> cells() const noexcept { return cells_; }

  /// Table content as 1-indexed rows, the form used in catalogs.
  std::vector<std::vector<int>> to_raw() const {
    std::vector<std::vector<int>> raw(order_, std::vector<int>(order_));
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) raw[i][j] = cells_[i * order_ + j] + 1;
    }
    return raw;
  }

  friend bool operator==(const LoopTable& a, const LoopTable& b) noexcept {
    return a.order_ == b.order_ && a.cells_ == b.cells_;
  }
  /// Orders by size, then row-major table content (enumeration order).
  friend std::strong_ordering operator<=>(const LoopTable& a, const LoopTable& b) noexcept {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(),
                                                  b.cells_.begin(), b.cells_.end());
  }

  // Installs a table already known to be a Latin square with identity
  // `identity`. Reuses storage, which matters for the enumerator.
  void assign_unchecked(std::size_t order, std::span<const Element> cells, Element identity) {
    order_ = order;
    identity_ = identity;
    cells_.assign(cells.begin(), cells.end());
    rinv_.resize(order);
    linv_.resize(order);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        if (cells_[x * order + y] == identity) rinv_[x] = static_cast<Element>(y);
        if (cells_[y * order + x] == identity) linv_[x] = static_cast<Element>(y);
      }
    }
  }

 private:
  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> cells_;
  std::vector<Element> rinv_;
  std::vector<Element> linv_;
};

/// Checks a 1-indexed square array for the loop axioms and builds the table.
/// The identity is searched for, not assumed to be element 1.
inline LoopTable validate_table(const std::vector<std::vector<int>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw LoopError(ErrorKind::malformed, "empty table");
  if (n > kMaxOrder) {
    throw LoopError(ErrorKind::malformed,
                    "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  std::vector<Element> cells(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw LoopError(ErrorKind::malformed, "row " + std::to_string(i + 1) + " has " +
                                                std::to_string(raw[i].size()) +
                                                " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const int v = raw[i][j];
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw LoopError(ErrorKind::malformed, "entry " + std::to_string(v) + " at row " +
                                                  std::to_string(i + 1) + ", column " +
                                                  std::to_string(j + 1) + " is outside 1.." +
                                                  std::to_string(n));
      }
      cells[i * n + j] = static_cast<Element>(v - 1);
    }
  }

  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = cells[i * n + j];
      if (seen[v]) {
        throw LoopError(ErrorKind::not_latin, "row " + std::to_string(i + 1) + " repeats " +
                                                  std::to_string(v + 1));
      }
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t i = 0; i < n; ++i) {
      const Element v = cells[i * n + j];
      if (seen[v]) {
        throw LoopError(ErrorKind::not_latin, "column " + std::to_string(j + 1) + " repeats " +
                                                  std::to_string(v + 1));
      }
      seen[v] = true;
    }
  }

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool two_sided = true;
    for (std::size_t x = 0; x < n && two_sided; ++x) {
      two_sided = cells[e * n + x] == x && cells[x * n + e] == x;
    }
    if (two_sided) identity = static_cast<Element>(e);
  }
  if (!identity) throw LoopError(ErrorKind::no_identity, "no element is a two-sided identity");

  LoopTable table;
  table.assign_unchecked(n, cells, *identity);
  return table;
}

/// Relabels elements so the identity becomes element 1 (index 0), by
/// swapping the identity's label with label 1.
inline LoopTable normalize_identity(const LoopTable& loop) {
  const std::size_t n = loop.order();
  const Element e = loop.identity();
  auto relabel = [e](Element v) -> Element {
    if (v == e) return 0;
    if (v == 0) return e;
    return v;
  };
  std::vector<Element> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element px = relabel(static_cast<Element>(x));
      const Element py = relabel(static_cast<Element>(y));
      cells[px * n + py] = relabel(loop.mul(static_cast<Element>(x), static_cast<Element>(y)));
    }
  }
  LoopTable out;
  out.assign_unchecked(n, cells, 0);
  return out;
}

/// The cyclic group Z_n with element k+1 standing for k.
inline LoopTable cyclic_group(std::size_t n) {
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) raw[i][j] = static_cast<int>((i + j) % n) + 1;
  }
  return validate_table(raw);
}

/// Left, middle and right nuclei as sorted element lists.
struct Nucleus {
  std::vector<Element> left;
  std::vector<Element> middle;
  std::vector<Element> right;
  std::vector<Element> nucleus;
  std::vector<Element> center;

  bool contains(Element a) const {
    return std::binary_search(nucleus.begin(), nucleus.end(), a);
  }
};

inline Nucleus nuclei(const LoopTable& loop) {
  const std::size_t n = loop.order();
  Nucleus out;
  for (std::size_t ai = 0; ai < n; ++ai) {
    const auto a = static_cast<Element>(ai);
    bool in_left = true, in_middle = true, in_right = true;
    for (std::size_t xi = 0; xi < n; ++xi) {
      const auto x = static_cast<Element>(xi);
      for (std::size_t yi = 0; yi < n; ++yi) {
        const auto y = static_cast<Element>(yi);
        in_left = in_left && loop.mul(loop.mul(a, x), y) == loop.mul(a, loop.mul(x, y));
        in_middle = in_middle && loop.mul(loop.mul(x, a), y) == loop.mul(x, loop.mul(a, y));
        in_right = in_right && loop.mul(loop.mul(x, y), a) == loop.mul(x, loop.mul(y, a));
      }
    }
    if (in_left) out.left.push_back(a);
    if (in_middle) out.middle.push_back(a);
    if (in_right) out.right.push_back(a);
    if (in_left && in_middle && in_right) out.nucleus.push_back(a);
  }
  for (Element a : out.nucleus) {
    bool central = true;
    for (std::size_t x = 0; x < n && central; ++x) {
      central = loop.mul(a, static_cast<Element>(x)) == loop.mul(static_cast<Element>(x), a);
    }
    if (central) out.center.push_back(a);
  }
  return out;
}

inline bool squares_in_nucleus(const LoopTable& loop, const Nucleus& nuc) {
  for (std::size_t x = 0; x < loop.order(); ++x) {
    const auto e = static_cast<Element>(x);
    if (!nuc.contains(loop.mul(e, e))) return false;
  }
  return true;
}

inline bool squares_in_nucleus(const LoopTable& loop) { return squares_in_nucleus(loop, nuclei(loop)); }

}  // namespace loopring
