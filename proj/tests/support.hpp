#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "loopring/enumerate.hpp"
#include "loopring/loop_table.hpp"

namespace support {

inline std::string fixture_path(const std::string& file) { return std::string(LOOPRING_FIXTURE_DIR) + "/" + file; }

inline std::vector<loopring::LoopTable> all_loops(std::size_t n) {
  std::vector<loopring::LoopTable> out;
  loopring::enumerate_loops(n, [&](const loopring::LoopTable& L) { out.push_back(L); });
  return out;
}

// Reduced Latin squares counted row by row from permutations, with no shared
// code path with the library's search.
inline std::uint64_t count_reduced_squares(int n) {
  std::vector<std::vector<int>> rows(n);
  std::vector<std::vector<std::vector<int>>> candidates(n);
  for (int r = 1; r < n; ++r) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
      if (v != r) rest.push_back(v);
    }
    do {
      std::vector<int> row{r};
      row.insert(row.end(), rest.begin(), rest.end());
      candidates[r].push_back(row);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  rows[0].resize(n);
  std::iota(rows[0].begin(), rows[0].end(), 0);
  std::uint64_t count = 0;
  auto place = [&](auto& self, int r) -> void {
    if (r == n) {
      ++count;
      return;
    }
    for (const auto& cand : candidates[r]) {
      bool ok = true;
      for (int c = 0; c < n && ok; ++c) {
        for (int q = 0; q < r && ok; ++q) ok = rows[q][c] != cand[c];
      }
      if (!ok) continue;
      rows[r] = cand;
      self(self, r + 1);
    }
  };
  place(place, 1);
  return count;
}

// Relabel a table by a permutation of 0..n-1 (an isomorphic copy).
inline std::vector<std::vector<int>> relabel(const loopring::LoopTable& L, const std::vector<int>& perm) {
  const auto n = L.order();
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      raw[perm[x]][perm[y]] = perm[L.mul(static_cast<loopring::Element>(x), static_cast<loopring::Element>(y))] + 1;
    }
  }
  return raw;
}

}  // namespace support
