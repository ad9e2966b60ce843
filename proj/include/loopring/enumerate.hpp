#pragma once

#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "loopring/error.hpp"
#include "loopring/loop_table.hpp"

namespace loopring {

/// Largest order `enumerate_loops` accepts; order 7 already has
/// 16 942 080 normalized tables.
inline constexpr std::size_t kMaxEnumerationOrder = 7;

namespace detail {

// Backtracking over the cells of a reduced Latin square, row-major, each
// cell trying values in increasing order. Rows and column 0 are fixed to
// the identity pattern.
class ReducedSquareSearch {
 public:
  explicit ReducedSquareSearch(std::size_t n) : n_(n), cells_(n * n), row_used_(n), col_used_(n) {
    for (std::size_t i = 0; i < n; ++i) {
      cells_[i] = static_cast<Element>(i);
      cells_[i * n] = static_cast<Element>(i);
      row_used_[i] = 1u << i;
      col_used_[i] = 1u << i;
    }
  }

  // Visits every completion of row 1, in increasing order, with all later
  // rows still open.
  template <class Fn>
  void for_each_second_row(Fn&& fn) {
    fill_row(1, 1, [&] { fn(std::vector<Element>(cells_.begin() + n_, cells_.begin() + 2 * n_)); });
  }

  // Completes the square from a fixed row 1 and visits each completion.
  template <class Fn>
  void for_each_completion(const std::vector<Element>& second_row, Fn&& fn) {
    reset();
    if (n_ < 2) {
      fn(cells_);
      return;
    }
    for (std::size_t c = 0; c < n_; ++c) place(1, c, second_row[c]);
    fill(2, 1, fn);
  }

  // Every completion from scratch.
  template <class Fn>
  void for_each(Fn&& fn) {
    reset();
    fill(1, 1, fn);
  }

 private:
  void reset() {
    for (std::size_t r = 1; r < n_; ++r) {
      row_used_[r] = 1u << r;
      for (std::size_t c = 1; c < n_; ++c) cells_[r * n_ + c] = 0;
    }
    for (std::size_t c = 1; c < n_; ++c) col_used_[c] = 1u << c;
  }

  void place(std::size_t r, std::size_t c, Element v) {
    cells_[r * n_ + c] = v;
    row_used_[r] |= 1u << v;
    col_used_[c] |= 1u << v;
  }

  template <class Fn>
  void fill(std::size_t r, std::size_t c, Fn& fn) {
    if (r >= n_) {
      fn(cells_);
      return;
    }
    const std::size_t next_r = c + 1 == n_ ? r + 1 : r;
    const std::size_t next_c = c + 1 == n_ ? 1 : c + 1;
    const std::uint32_t full = (1u << n_) - 1;
    for (std::uint32_t free = full & ~(row_used_[r] | col_used_[c]); free; free &= free - 1) {
      const auto v = static_cast<Element>(std::countr_zero(free));
      const std::uint32_t bit = 1u << v;
      cells_[r * n_ + c] = v;
      row_used_[r] |= bit;
      col_used_[c] |= bit;
      fill(next_r, next_c, fn);
      row_used_[r] &= ~bit;
      col_used_[c] &= ~bit;
    }
  }

  template <class Fn>
  void fill_row(std::size_t r, std::size_t c, Fn&& fn) {
    if (c >= n_) {
      fn();
      return;
    }
    const std::uint32_t full = (1u << n_) - 1;
    for (std::uint32_t free = full & ~(row_used_[r] | col_used_[c]); free; free &= free - 1) {
      const auto v = static_cast<Element>(std::countr_zero(free));
      const std::uint32_t bit = 1u << v;
      cells_[r * n_ + c] = v;
      row_used_[r] |= bit;
      col_used_[c] |= bit;
      fill_row(r, c + 1, fn);
      row_used_[r] &= ~bit;
      col_used_[c] &= ~bit;
    }
  }

  std::size_t n_;
  std::vector<Element> cells_;
  std::vector<std::uint32_t> row_used_;
  std::vector<std::uint32_t> col_used_;
};

}  // namespace detail

/// Calls `visit(const LoopTable&)` once for every loop of order `n` whose
/// identity is element 1 (every reduced Latin square), in lexicographic
/// order of row-major content, and returns how many were visited.
///
/// With jobs > 1 the second rows are handed out to worker threads, so
/// `visit` runs concurrently and must be thread-safe; the visiting order
/// is then unspecified but the set of tables and the count are not.
template <class Visitor>
std::uint64_t enumerate_loops(std::size_t n, Visitor&& visit, unsigned jobs = 1) {
  if (n == 0) throw LoopError(ErrorKind::malformed, "loop order must be positive");
  if (n > kMaxEnumerationOrder) {
    throw LoopError(ErrorKind::order_too_large, "enumeration is limited to order " +
                                                    std::to_string(kMaxEnumerationOrder) + ", got " +
                                                    std::to_string(n));
  }

  if (jobs <= 1 || n < 3) {
    detail::ReducedSquareSearch search(n);
    LoopTable loop;
    std::uint64_t count = 0;
    search.for_each([&](const std::vector<Element>& cells) {
      loop.assign_unchecked(n, cells, 0);
      visit(static_cast<const LoopTable&>(loop));
      ++count;
    });
    return count;
  }

  std::vector<std::vector<Element>> prefixes;
  detail::ReducedSquareSearch(n).for_each_second_row([&](std::vector<Element> row) {
    prefixes.push_back(std::move(row));
  });

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  std::mutex guard;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&] {
      detail::ReducedSquareSearch search(n);
      LoopTable loop;
      std::uint64_t count = 0;
      try {
        for (std::size_t i = next++; i < prefixes.size(); i = next++) {
          search.for_each_completion(prefixes[i], [&](const std::vector<Element>& cells) {
            loop.assign_unchecked(n, cells, 0);
            visit(static_cast<const LoopTable&>(loop));
            ++count;
          });
        }
      } catch (...) {
        std::lock_guard lock(guard);
        if (!error) error = std::current_exception();
        next = prefixes.size();
      }
      total += count;
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return total.load();
}

}  // namespace loopring
