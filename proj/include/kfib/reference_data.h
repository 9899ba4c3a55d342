#pragma once

#include <array>
#include <string_view>
#include <vector>

namespace kfib::reference {

/// Reference triangle of a_{n,m} (rows m, columns n = 1..9) for k = 2 and
/// k = 3. Zero marks an empty cell.
inline const std::vector<std::vector<long>> kTriangleK2 = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1},   {1, 2, 3, 4, 5, 6, 7, 8, 9},    {0, 0, 1, 3, 6, 10, 15, 21, 28},
    {0, 0, 0, 0, 1, 4, 10, 20, 35}, {0, 0, 0, 0, 0, 0, 1, 5, 15}, {0, 0, 0, 0, 0, 0, 0, 0, 1},
};

inline const std::vector<std::vector<long>> kTriangleK3 = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1},     {1, 2, 3, 4, 5, 6, 7, 8, 9},      {0, 1, 3, 6, 10, 15, 21, 28, 36},
    {0, 0, 0, 2, 7, 16, 30, 50, 77}, {0, 0, 0, 0, 1, 6, 19, 45, 90}, {0, 0, 0, 0, 0, 0, 3, 16, 51},
};

/// Reference 15-decimal limits of the expected bit value, k = 2..13.
inline constexpr std::array<std::string_view, 12> kLimitTable = {
    "0.276393202250021", "0.381580077680607", "0.433657112297348", "0.462073883180840",
    "0.478227505713290", "0.487545982771861", "0.492928265543398", "0.496019724266083",
    "0.497779940783496", "0.498772398758879", "0.499326557312936", "0.499633184444604",
};

/// The avoiders of length 4 listed as examples, in order.
inline const std::vector<std::string_view> kWordsLength4K2 = {"0000", "0001", "0010", "0100",
                                                              "0101", "1000", "1001", "1010"};
inline const std::vector<std::string_view> kWordsLength4K3 = {"0000", "0001", "0010", "0011", "0100",
                                                              "0101", "0110", "1000", "1001", "1010",
                                                              "1011", "1100", "1101"};

}  // namespace kfib::reference
