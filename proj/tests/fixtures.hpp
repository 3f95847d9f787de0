#pragma once

// Values produced by tests/oracle/oracle.py (sympy, direct Fox calculus and
// Sylvester determinants), frozen in tests/oracle/oracle_output.json.

#include <map>
#include <string>

namespace fixtures {

inline constexpr const char* kTrefoil = "gens: x y\nrels: x y x y^-1 x^-1 y^-1\n";
inline constexpr const char* kFigureEight = "gens: a b\nrels: a b a^-1 b^-1 a b^-1 a^-1 b a b^-1\n";
inline constexpr const char* kFiveTwo =
    "gens: a b\nrels: a b a b^-1 a^-1 b a b^-1 a^-1 b^-1 a b a^-1 b^-1\n";
inline constexpr const char* kTrefoilTwoBridge = "gens: a b\nrels: a b a b^-1 a^-1 b^-1\n";
inline constexpr const char* kFreeZ = "gens: x\nrels:\n";
inline constexpr const char* kZ2 = "gens: x y\nrels: x y x^-1 y^-1\n";

inline constexpr const char* kTrefoilAlexander = "t^2 - t + 1";
inline constexpr const char* kFigureEightAlexander = "t^2 - 3*t + 1";
inline constexpr const char* kFiveTwoAlexander = "2*t^2 - 3*t + 2";

// d(x y x y^-1 x^-1 y^-1)/dx as words with coefficients.
inline const std::map<std::string, int> kTrefoilDx = {{"1", 1}, {"x y", 1}, {"x y x y^-1 x^-1", -1}};
inline constexpr const char* kTrefoilDxAbelian = "t^2 - t + 1";
inline constexpr const char* kCommutatorDxAbelian = "1 - t2";

inline constexpr const char* kGcdT2m1T2m2t1 = "t - 1";
inline constexpr const char* kPhi6 = "t^2 - t + 1";
inline constexpr long kResTm1Phi3 = 3;
inline constexpr long kResTm2Tm3 = 1;
// k in 1..12, p in {3,5,7,11,13}, p not dividing k
inline constexpr int kResCyclotomicCount = 52;

// Q(z)/P(z) in Z[z] for P = t^2 + 1, Q = t + 1 and primitive n-th roots z;
// n = 4 is skipped (Phi_4 = P).
inline const std::map<unsigned long, bool> kScanT2p1Tp1 = {
    {2, true},   {3, true},   {5, true},   {6, true},   {7, true},   {8, false},
    {9, true},   {10, true},  {11, true},  {12, false}, {13, true},  {14, true},
    {15, true},  {16, false}, {17, true},  {18, true},  {19, true},  {20, false}};
inline constexpr unsigned long kScanFirstFailure = 8;
inline constexpr bool kDivides2T3 = false;

// Inverse of -t^-1 - 1 kept to u-value 2.
inline constexpr const char* kNovikovInverse = "t^2 - t";

}  // namespace fixtures
