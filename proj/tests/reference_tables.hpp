#pragma once

// Hand-entered K1/K2 reference data, kept independent of the embedded
// catalog data and of the doubling code.

#include <array>
#include <string_view>
#include <vector>

#include "gyro/permutation.hpp"

namespace reference {

inline const std::vector<std::vector<int>> kK1 = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 3, 2, 1, 0},
    {7, 6, 5, 4, 2, 3, 0, 1},
};

// 'A' marks gyr[a,b] = (4,5)(6,7), 'I' the identity.
inline constexpr std::array<std::string_view, 8> kK1Gyr = {
    "IIIIIIII", "IIIIIIII", "IIIIAAAA", "IIIIAAAA",
    "IIAAIIAA", "IIAAIIAA", "IIAAAAII", "IIAAAAII",
};

inline const std::vector<std::vector<int>> kK2 = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14},
    {2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 12, 13},
    {3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8, 15, 14, 13, 12},
    {4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15, 8, 9, 10, 11},
    {5, 4, 7, 6, 1, 0, 3, 2, 13, 12, 15, 14, 9, 8, 11, 10},
    {6, 7, 4, 5, 3, 2, 1, 0, 14, 15, 12, 13, 11, 10, 9, 8},
    {7, 6, 5, 4, 2, 3, 0, 1, 15, 14, 13, 12, 10, 11, 8, 9},
    {8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3, 4, 5, 6, 7},
    {9, 8, 11, 10, 13, 12, 15, 14, 1, 0, 3, 2, 5, 4, 7, 6},
    {10, 11, 8, 9, 14, 15, 12, 13, 2, 3, 0, 1, 6, 7, 4, 5},
    {11, 10, 9, 8, 15, 14, 13, 12, 3, 2, 1, 0, 7, 6, 5, 4},
    {12, 13, 14, 15, 8, 9, 10, 11, 4, 5, 6, 7, 0, 1, 2, 3},
    {13, 12, 15, 14, 9, 8, 11, 10, 5, 4, 7, 6, 1, 0, 3, 2},
    {14, 15, 12, 13, 11, 10, 9, 8, 6, 7, 4, 5, 3, 2, 1, 0},
    {15, 14, 13, 12, 10, 11, 8, 9, 7, 6, 5, 4, 2, 3, 0, 1},
};

// 'A' marks gyr[a,b] = (4,5)(6,7)(12,13)(14,15).
inline constexpr std::array<std::string_view, 16> kK2Gyr = {
    "IIIIIIIIIIIIIIII", "IIIIIIIIIIIIIIII", "IIIIAAAAIIIIAAAA", "IIIIAAAAIIIIAAAA",
    "IIAAIIAAIIAAIIAA", "IIAAIIAAIIAAIIAA", "IIAAAAIIIIAAAAII", "IIAAAAIIIIAAAAII",
    "IIIIIIIIIIIIIIII", "IIIIIIIIIIIIIIII", "IIIIAAAAIIIIAAAA", "IIIIAAAAIIIIAAAA",
    "IIAAIIAAIIAAIIAA", "IIAAIIAAIIAAIIAA", "IIAAAAIIIIAAAAII", "IIAAAAIIIIAAAAII",
};

inline gyro::Permutation k1_a() { return gyro::Permutation::from_cycles(8, {{4, 5}, {6, 7}}); }
inline gyro::Permutation k2_a()
{
    return gyro::Permutation::from_cycles(16, {{4, 5}, {6, 7}, {12, 13}, {14, 15}});
}

inline const std::vector<std::vector<int>> kK1Normals = {
    {0}, {0, 1}, {0, 1, 2, 3}, {0, 1, 4, 5}, {0, 1, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7},
};

inline const std::vector<std::vector<int>> kK2Normals = {
    {0},
    {0, 1},
    {0, 1, 2, 3},
    {0, 1, 4, 5},
    {0, 1, 6, 7},
    {0, 1, 2, 3, 4, 5, 6, 7},
    {0, 8},
    {0, 9},
    {0, 1, 8, 9},
    {0, 1, 10, 11},
    {0, 1, 12, 13},
    {0, 1, 14, 15},
    {0, 1, 2, 3, 8, 9, 10, 11},
    {0, 1, 2, 3, 12, 13, 14, 15},
    {0, 1, 4, 5, 8, 9, 12, 13},
    {0, 1, 4, 5, 10, 11, 14, 15},
    {0, 1, 6, 7, 8, 9, 14, 15},
    {0, 1, 6, 7, 10, 11, 12, 13},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
};

// Nondegenerate entries of the K2 list above.
inline const std::vector<std::vector<int>> kK2Nondegenerate = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {0, 1, 2, 3, 12, 13, 14, 15},
    {0, 1, 4, 5, 10, 11, 14, 15},
    {0, 1, 6, 7, 10, 11, 12, 13},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
};

}  // namespace reference
