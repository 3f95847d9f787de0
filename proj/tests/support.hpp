#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "fibered/fibered.hpp"

namespace fibered {
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.to_string(); }
}  // namespace fibered

namespace testing_support {

using namespace fibered;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random letter sequence (not necessarily reduced).
inline std::vector<Letter> random_letters(Rng& rng, std::size_t gens, std::size_t len) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i)
    out.push_back({static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gens) - 1)),
                   uniform(rng, 0, 1) ? 1L : -1L});
  return out;
}

inline Word random_word(Rng& rng, std::size_t gens, std::size_t len) {
  return free_reduce(random_letters(rng, gens, len));
}

inline LaurentPoly random_poly(Rng& rng, std::size_t nvars, std::size_t terms, long emin,
                               long emax, long cmax) {
  LaurentPoly p(nvars);
  for (std::size_t i = 0; i < terms; ++i) {
    Exponent e(nvars);
    for (auto& x : e) x = uniform(rng, emin, emax);
    p.add_term(e, uniform(rng, -cmax, cmax));
  }
  return p;
}

inline LaurentMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t nvars,
                                   std::size_t terms, long emin, long emax, long cmax) {
  LaurentMatrix m = zero_matrix(rows, cols, nvars);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(rng, nvars, terms, emin, emax, cmax);
  return m;
}

/// Laplace expansion along the first row; independent of the library's
/// elimination code.
inline LaurentPoly cofactor_det(const LaurentMatrix& m, std::size_t nvars) {
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::one(nvars);
  if (n == 1) return m(0, 0);
  LaurentPoly d(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    LaurentMatrix minor = zero_matrix(n - 1, n - 1, nvars);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, mc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, mc++) = m(r, c);
      }
    LaurentPoly t = m(0, j) * cofactor_det(minor, nvars);
    if (j % 2) d -= t;
    else d += t;
  }
  return d;
}

/// A u-monic Laurent polynomial: a signed monomial plus terms of larger u-value.
inline LaurentPoly random_u_monic(Rng& rng, const WeightFunctional& u, std::size_t extra,
                                  long emax, long cmax) {
  const std::size_t nv = u.dim();
  for (;;) {
    Exponent v(nv);
    for (auto& x : v) x = uniform(rng, -2, 2);
    LaurentPoly p = LaurentPoly::monomial(v, uniform(rng, 0, 1) ? 1 : -1);
    const Level lv = u.value(v);
    for (std::size_t i = 0; i < extra; ++i) {
      Exponent e(nv);
      for (auto& x : e) x = uniform(rng, -emax, emax);
      if (u.value(e) > lv) p.add_term(e, uniform(rng, -cmax, cmax));
    }
    if (is_u_monic(p, u)) return p;
  }
}

/// One random Tietze move or relator manipulation that preserves the group
/// (up to isomorphism).
inline GroupPresentation random_tietze_move(Rng& rng, GroupPresentation pres) {
  const std::size_t p = pres.num_generators();
  const std::size_t q = pres.num_relators();
  switch (uniform(rng, 0, 5)) {
    case 0: {  // conjugate a relator
      if (q == 0) break;
      auto& r = pres.relators[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(q) - 1))];
      const Word w = random_word(rng, p, 3);
      r = w * r * w.inverse();
      break;
    }
    case 1: {  // invert a relator
      if (q == 0) break;
      auto& r = pres.relators[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(q) - 1))];
      r = r.inverse();
      break;
    }
    case 2: {  // multiply a relator by a conjugate of another
      if (q < 2) break;
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(q) - 1));
      auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(q) - 2));
      if (j >= i) ++j;
      const Word w = random_word(rng, p, 2);
      pres.relators[i] = pres.relators[i] * w * pres.relators[j] * w.inverse();
      break;
    }
    case 3: {  // new generator z with relator z = w
      const Word w = random_word(rng, p, 3);
      pres.generators.push_back("z" + std::to_string(p));
      pres.relators.push_back(Word::generator(p) * w.inverse());
      break;
    }
    case 4: {  // cyclic permutation of a relator
      if (q == 0) break;
      auto& r = pres.relators[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(q) - 1))];
      auto ex = r.expanded();
      if (ex.size() < 2) break;
      std::rotate(ex.begin(), ex.begin() + 1, ex.end());
      r = free_reduce(ex);
      break;
    }
    default: {  // append a consequence of the relators (the product of two)
      if (q == 0) break;
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(q) - 1));
      const Word w = random_word(rng, p, 2);
      pres.relators.push_back(w * pres.relators[i] * w.inverse() * pres.relators[i]);
      break;
    }
  }
  return pres;
}

}  // namespace testing_support
