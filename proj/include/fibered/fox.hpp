#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "fibered/bigint.hpp"
#include "fibered/errors.hpp"
#include "fibered/word.hpp"

namespace fibered {

/// Element of the integral group ring of the free group: a finite sum of
/// reduced words with nonzero integer coefficients.
class FreeGroupRingElement {
 public:
  using Terms = std::map<Word, Integer>;

  FreeGroupRingElement() = default;

  static FreeGroupRingElement one() { return from_word(Word{}); }
  static FreeGroupRingElement from_word(const Word& w, const Integer& c = 1) {
    FreeGroupRingElement e;
    e.add_term(w, c);
    return e;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Word& w, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FreeGroupRingElement& operator+=(const FreeGroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  FreeGroupRingElement& operator-=(const FreeGroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend FreeGroupRingElement operator+(FreeGroupRingElement a, const FreeGroupRingElement& b) {
    return a += b;
  }
  friend FreeGroupRingElement operator-(FreeGroupRingElement a, const FreeGroupRingElement& b) {
    return a -= b;
  }
  friend FreeGroupRingElement operator*(const FreeGroupRingElement& a,
                                        const FreeGroupRingElement& b) {
    FreeGroupRingElement r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
  }
  friend bool operator==(const FreeGroupRingElement&, const FreeGroupRingElement&) = default;

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      const bool neg = c < 0;
      Integer a = neg ? Integer(-c) : c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (w.empty()) {
        s += a.get_str();
      } else {
        if (a != 1) s += a.get_str() + "*";
        s += w.to_string(names);
      }
    }
    return s;
  }

 private:
  Terms terms_;
};

/// Fox derivative d(w)/d(x_gen) of an arbitrary (not necessarily reduced)
/// letter sequence, using d(vw) = dv + v dw, d(x^n) = 1 + x + ... + x^{n-1}
/// and d(x^-n) = -(x^-1 + ... + x^-n).
inline FreeGroupRingElement fox_derivative(std::span<const Letter> letters, std::size_t gen,
                                           std::size_t num_generators) {
  if (gen >= num_generators)
    throw IndexOutOfRange("generator index " + std::to_string(gen) + " out of range");
  FreeGroupRingElement d;
  std::vector<Letter> prefix;
  for (const auto& l : letters) {
    if (l.gen >= num_generators)
      throw IndexOutOfRange("word uses generator " + std::to_string(l.gen));
    const long step = l.exp > 0 ? 1 : -1;
    for (long k = 0; k < std::labs(l.exp); ++k) {
      if (l.gen == gen) {
        if (step > 0) {
          d.add_term(free_reduce(prefix), 1);
        } else {
          prefix.push_back({gen, -1});
          d.add_term(free_reduce(prefix), -1);
          prefix.pop_back();
        }
      }
      prefix.push_back({l.gen, step});
    }
  }
  return d;
}

inline FreeGroupRingElement fox_derivative(const Word& w, std::size_t gen,
                                           std::size_t num_generators) {
  return fox_derivative(std::span<const Letter>(w.letters()), gen, num_generators);
}

/// Row of the relator Jacobian: (d r / d x_0, ..., d r / d x_{p-1}).
inline std::vector<FreeGroupRingElement> fox_jacobian_row(const Word& relator,
                                                          std::size_t num_generators) {
  std::vector<FreeGroupRingElement> row;
  row.reserve(num_generators);
  for (std::size_t i = 0; i < num_generators; ++i)
    row.push_back(fox_derivative(relator, i, num_generators));
  return row;
}

}  // namespace fibered
