#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fibered/errors.hpp"

namespace fibered {

/// Exponent vector in Z^r; also used as an element of the free abelian group.
using Exponent = std::vector<long>;

inline Exponent& operator+=(Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionMismatch("exponent length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Exponent operator+(Exponent a, const Exponent& b) { return a += b; }

inline Exponent operator-(Exponent a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionMismatch("exponent length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Exponent operator-(Exponent a) {
  for (auto& x : a) x = -x;
  return a;
}

inline Exponent scaled(Exponent a, long k) {
  for (auto& x : a) x *= k;
  return a;
}

inline bool is_zero(const Exponent& a) {
  for (long x : a)
    if (x != 0) return false;
  return true;
}

inline std::string to_string(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

}  // namespace fibered
