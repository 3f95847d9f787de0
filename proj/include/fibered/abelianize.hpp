#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fibered/bigint.hpp"
#include "fibered/exponent.hpp"
#include "fibered/presentation.hpp"

namespace fibered {

/// A homomorphism from the free group on p generators to Z^rank, given by the
/// images of the generators. For a presentation it is only meaningful when
/// every relator maps to zero.
struct Character {
  std::size_t rank = 0;
  std::vector<Exponent> images;

  std::size_t num_generators() const noexcept { return images.size(); }

  Exponent apply(std::span<const Letter> letters) const {
    Exponent e(rank, 0);
    for (const auto& l : letters) {
      if (l.gen >= images.size()) throw IndexOutOfRange("character: generator out of range");
      for (std::size_t k = 0; k < rank; ++k) e[k] += l.exp * images[l.gen][k];
    }
    return e;
  }
  Exponent apply(const Word& w) const { return apply(std::span<const Letter>(w.letters())); }

  bool kills(const GroupPresentation& pres) const {
    for (const auto& r : pres.relators)
      if (!is_zero(apply(r))) return false;
    return true;
  }

  friend bool operator==(const Character&, const Character&) = default;
};

struct AbelianizationData {
  /// psi: generator -> free part Z^r of H_1, torsion discarded.
  Character psi;
  /// Invariant factors d_i > 1 of the torsion subgroup, ascending.
  std::vector<Integer> torsion;

  std::size_t rank() const noexcept { return psi.rank; }
};

using IntegerMatrix = std::vector<std::vector<Integer>>;

inline std::vector<long> exponent_sums(const Word& w, std::size_t num_generators) {
  std::vector<long> v(num_generators, 0);
  for (const auto& l : w.letters()) v.at(l.gen) += l.exp;
  return v;
}

namespace detail {

// Smith normal form of a (rows x cols) integer matrix by unimodular row and
// column operations. Returns the nonzero diagonal and the column transform V
// (cols x cols) with U A V = diag.
inline std::pair<std::vector<Integer>, IntegerMatrix> smith_form(IntegerMatrix a,
                                                                  std::size_t cols) {
  const std::size_t rows = a.size();
  IntegerMatrix v(cols, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (auto& row : a) std::swap(row[c1], row[c2]);
    for (auto& row : v) std::swap(row[c1], row[c2]);
  };
  // col[c2] -= f * col[c1]
  auto col_op = [&](std::size_t c1, std::size_t c2, const Integer& f) {
    for (auto& row : a) row[c2] -= f * row[c1];
    for (auto& row : v) row[c2] -= f * row[c1];
  };
  auto row_op = [&](std::size_t r1, std::size_t r2, const Integer& f) {
    for (std::size_t c = 0; c < cols; ++c) a[r2][c] -= f * a[r1][c];
  };

  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return {diag, v};
      std::swap(a[t], a[pr]);
      swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        if (q != 0) row_op(t, i, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        if (q != 0) col_op(t, j, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility d_t | remaining block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!divisible(a[i][j], a[t][t])) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = 0; c < cols; ++c) a[t][c] += a[bad][c];
    }
    if (a[t][t] < 0) {
      for (auto& row : a) row[t] = -row[t];
      for (auto& row : v) row[t] = -row[t];
    }
    diag.push_back(a[t][t]);
  }
  return {diag, v};
}

// Row Hermite normal form (row lattice preserved).
inline IntegerMatrix hermite_rows(IntegerMatrix h) {
  const std::size_t rows = h.size();
  if (rows == 0) return h;
  const std::size_t cols = h[0].size();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = pr; i < rows; ++i)
        if (h[i][c] != 0 && (best == rows || abs(h[i][c]) < abs(h[best][c]))) best = i;
      if (best == rows) break;
      std::swap(h[pr], h[best]);
      bool done = true;
      for (std::size_t i = pr + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[pr][c].get_mpz_t());
        for (std::size_t k = 0; k < cols; ++k) h[i][k] -= q * h[pr][k];
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (h[pr][c] == 0) continue;
    if (h[pr][c] < 0)
      for (auto& x : h[pr]) x = -x;
    for (std::size_t i = 0; i < pr; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[pr][c].get_mpz_t());
      if (q != 0)
        for (std::size_t k = 0; k < cols; ++k) h[i][k] -= q * h[pr][k];
    }
    ++pr;
  }
  return h;
}

}  // namespace detail

/// Free part of H_1 of the presented group.
///
/// The relator exponent-sum matrix is brought to Smith form; the last
/// p - s columns of the column transform span the integral functionals that
/// kill every relator. Those functionals are put in Hermite normal form so
/// that psi is canonical (the trefoil gives psi(x) = psi(y) = 1).
inline AbelianizationData abelianize(const GroupPresentation& pres) {
  const std::size_t p = pres.num_generators();
  IntegerMatrix rel;
  for (const auto& r : pres.relators) {
    auto sums = exponent_sums(r, p);
    rel.emplace_back(sums.begin(), sums.end());
  }
  auto [diag, v] = detail::smith_form(rel, p);
  const std::size_t s = diag.size();
  const std::size_t r = p - s;

  IntegerMatrix functionals(r, std::vector<Integer>(p));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < p; ++i) functionals[k][i] = v[i][s + k];
  functionals = detail::hermite_rows(std::move(functionals));

  AbelianizationData ab;
  ab.psi.rank = r;
  ab.psi.images.assign(p, Exponent(r, 0));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      if (!functionals[k][i].fits_slong_p())
        throw Error("abelianization: coefficient does not fit in a machine word");
      ab.psi.images[i][k] = functionals[k][i].get_si();
    }
  for (const auto& d : diag)
    if (d > 1) ab.torsion.push_back(d);
  return ab;
}

}  // namespace fibered
