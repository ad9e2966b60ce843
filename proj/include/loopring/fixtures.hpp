#pragma once

#include <vector>

#include "loopring/loop_table.hpp"

namespace loopring::fixtures {

/// Non-Moufang right Bol loop 16.7.2.1 of Moorhouse's list. It is not
/// SRAR, yet D', E' or F' holds at every triple.
inline const std::vector<std::vector<int>>& bol16_raw() {
  static const std::vector<std::vector<int>> raw = {
      {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16},
      {2, 1, 4, 3, 8, 7, 6, 5, 10, 11, 12, 9, 15, 13, 16, 14},
      {3, 4, 1, 2, 6, 5, 8, 7, 11, 12, 9, 10, 16, 15, 14, 13},
      {4, 3, 2, 1, 7, 8, 5, 6, 12, 9, 10, 11, 14, 16, 13, 15},
      {5, 8, 6, 7, 1, 3, 4, 2, 16, 14, 13, 15, 11, 10, 12, 9},
      {6, 7, 5, 8, 3, 1, 2, 4, 13, 15, 16, 14, 9, 12, 10, 11},
      {7, 6, 8, 5, 4, 2, 1, 3, 15, 16, 14, 13, 10, 9, 11, 12},
      {8, 5, 7, 6, 2, 4, 3, 1, 14, 13, 15, 16, 12, 11, 9, 10},
      {9, 10, 13, 12, 16, 11, 15, 14, 5, 7, 6, 8, 3, 4, 2, 1},
      {10, 9, 15, 11, 14, 12, 13, 16, 8, 5, 7, 6, 4, 1, 3, 2},
      {11, 12, 16, 10, 13, 9, 14, 15, 6, 8, 5, 7, 1, 2, 4, 3},
      {12, 11, 14, 9, 15, 10, 16, 13, 7, 6, 8, 5, 2, 3, 1, 4},
      {13, 15, 9, 14, 11, 16, 10, 12, 3, 2, 1, 4, 5, 8, 7, 6},
      {14, 16, 12, 13, 10, 15, 11, 9, 2, 1, 4, 3, 7, 5, 6, 8},
      {15, 13, 10, 16, 12, 14, 9, 11, 4, 3, 2, 1, 8, 6, 5, 7},
      {16, 14, 11, 15, 9, 13, 12, 10, 1, 4, 3, 2, 6, 7, 8, 5},
  };
  return raw;
}

/// The smallest nonassociative Moufang loop, M(S_3, 2), order 12. It is RA2,
/// but no pair of D', E', F' covers every triple.
inline const std::vector<std::vector<int>>& moufang12_raw() {
  static const std::vector<std::vector<int>> raw = {
      {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
      {2, 3, 1, 5, 6, 4, 8, 9, 7, 12, 10, 11},
      {3, 1, 2, 6, 4, 5, 9, 7, 8, 11, 12, 10},
      {4, 6, 5, 1, 3, 2, 10, 11, 12, 7, 8, 9},
      {5, 4, 6, 2, 1, 3, 11, 12, 10, 9, 7, 8},
      {6, 5, 4, 3, 2, 1, 12, 10, 11, 8, 9, 7},
      {7, 9, 8, 10, 11, 12, 1, 3, 2, 4, 5, 6},
      {8, 7, 9, 11, 12, 10, 2, 1, 3, 6, 4, 5},
      {9, 8, 7, 12, 10, 11, 3, 2, 1, 5, 6, 4},
      {10, 11, 12, 7, 9, 8, 4, 6, 5, 1, 2, 3},
      {11, 12, 10, 8, 7, 9, 5, 4, 6, 3, 1, 2},
      {12, 10, 11, 9, 8, 7, 6, 5, 4, 2, 3, 1},
  };
  return raw;
}

inline const char* bol16_name() { return "16.7.2.1"; }
inline const char* moufang12_name() { return "12/1"; }

inline LoopTable bol16() { return validate_table(bol16_raw()); }
inline LoopTable moufang12() { return validate_table(moufang12_raw()); }

}  // namespace loopring::fixtures
