#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace loopring::detail {

/// Runs `probe(i)` for i in [0, count) and returns the result for the
/// smallest i whose probe is engaged. With jobs > 1 the range is split into
/// interleaved stripes; a worker stops once every index it could still try
/// lies past the best hit found so far, so the answer never depends on
/// the worker count.
template <class Probe>
auto first_hit(std::size_t count, unsigned jobs, Probe probe) -> decltype(probe(std::size_t{})) {
  using Result = decltype(probe(std::size_t{}));
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto r = probe(i)) return r;
    }
    return Result{};
  }

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::atomic<std::size_t> best{count};
  std::mutex guard;
  Result best_result{};
  std::exception_ptr error;
  std::size_t error_index = count;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        Result r{};
        try {
          r = probe(i);
        } catch (...) {
          std::lock_guard lock(guard);
          if (!error || i < error_index) {
            error = std::current_exception();
            error_index = i;
          }
          return;
        }
        if (r) {
          std::lock_guard lock(guard);
          if (i < best.load(std::memory_order_relaxed)) {
            best.store(i, std::memory_order_relaxed);
            best_result = std::move(r);
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error && error_index < best.load()) std::rethrow_exception(error);
  return best_result;
}

/// Applies `fn(i)` for i in [0, count) on up to `jobs` threads and returns
/// results in index order.
template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) {
  using Value = decltype(fn(std::size_t{}));
  std::vector<std::optional<Value>> slots(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            slots[i].emplace(fn(i));
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    // Rethrow the failure a sequential run would have hit first.
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<Value> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace loopring::detail
