#pragma once

#include <cstdint>
#include <vector>

#include "fibered/laurent_algebra.hpp"
#include "fibered/matrix.hpp"

namespace fibered {

namespace detail {

struct ClearedMatrix {
  LaurentMatrix poly;  // every entry a genuine polynomial
  Exponent total_shift;
  bool zero_row = false;
};

// Multiplies each row by the monomial that makes its minimal exponents zero.
inline ClearedMatrix clear_monomials(const LaurentMatrix& m, std::size_t nvars) {
  ClearedMatrix out{m, Exponent(nvars, 0), false};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Exponent mins(nvars, 0);
    bool any = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& x = m(i, j);
      if (x.is_zero()) continue;
      const Exponent e = x.min_exponents();
      for (std::size_t v = 0; v < nvars; ++v) mins[v] = any ? std::min(mins[v], e[v]) : e[v];
      any = true;
    }
    if (!any) {
      out.zero_row = true;
      continue;
    }
    const Exponent s = -mins;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!out.poly(i, j).is_zero()) out.poly(i, j) = out.poly(i, j).shifted(s);
    out.total_shift += s;
  }
  return out;
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant over the polynomial ring after
/// clearing monomial denominators row by row. Pivots are chosen with the
/// fewest terms.
inline LaurentPoly det_bareiss(const LaurentMatrix& m, std::size_t nvars) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::one(nvars);
  auto cleared = detail::clear_monomials(m, nvars);
  if (cleared.zero_row) return LaurentPoly(nvars);
  LaurentMatrix& a = cleared.poly;
  int sign = 1;
  LaurentPoly prev = LaurentPoly::one(nvars);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a(i, k).is_zero() && (piv == n || a(i, k).num_terms() < a(piv, k).num_terms())) piv = i;
    if (piv == n) return LaurentPoly(nvars);
    if (piv != k) {
      a.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a(k, k) * a(i, j);
        if (!a(i, k).is_zero() && !a(k, j).is_zero()) v -= a(i, k) * a(k, j);
        a(i, j) = prev.is_one() ? std::move(v) : detail::exact(v, prev);
      }
      a(i, k) = LaurentPoly(nvars);
    }
    prev = a(k, k);
  }
  LaurentPoly d = a(n - 1, n - 1).shifted(-cleared.total_shift);
  return sign < 0 ? -d : d;
}

namespace detail {

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Primes just below 2^31, descending; computed once.
inline std::uint64_t nth_prime(std::size_t i) {
  static std::vector<std::uint64_t> primes;
  std::uint64_t c = primes.empty() ? (1ULL << 31) : primes.back();
  while (primes.size() <= i) {
    do {
      --c;
    } while (!is_prime_u32(c));
    primes.push_back(c);
  }
  return primes[i];
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

inline std::uint64_t det_mod(std::vector<std::uint64_t>& a, std::size_t n, std::uint64_t p) {
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = p - det;
    }
    const std::uint64_t pk = a[k * n + k];
    det = det * pk % p;
    const std::uint64_t inv = inv_mod(pk, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      std::uint64_t f = a[i * n + k];
      if (f == 0) continue;
      f = f * inv % p;
      const std::uint64_t nf = p - f;
      std::uint64_t* ri = &a[i * n];
      const std::uint64_t* rk = &a[k * n];
      for (std::size_t j = k + 1; j < n; ++j) ri[j] = (ri[j] + nf * rk[j]) % p;
    }
  }
  return det;
}

// Coefficients (ascending) of the unique polynomial of degree <= N through
// (x_i, y_i), x_i = i, by Newton divided differences mod p.
inline std::vector<std::uint64_t> interpolate_mod(const std::vector<std::uint64_t>& y,
                                                  std::uint64_t p) {
  const std::size_t m = y.size();
  std::vector<std::uint64_t> c(y);
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) {
      const std::uint64_t num = (c[i] + p - c[i - 1]) % p;
      c[i] = num * inv_mod(j, p) % p;  // x_i - x_{i-j} = j
      if (i == j) break;
    }
  // Horner expansion of the Newton form: c0 + (x-0)(c1 + (x-1)(c2 + ...)).
  std::vector<std::uint64_t> poly(m, 0);
  for (std::size_t k = m; k-- > 0;) {
    // poly = poly * (x - k) + c[k]
    std::vector<std::uint64_t> next(m, 0);
    for (std::size_t d = 0; d + 1 < m; ++d) {
      if (poly[d] == 0) continue;
      next[d + 1] = (next[d + 1] + poly[d]) % p;
      next[d] = (next[d] + (p - (k % p)) * poly[d]) % p;
    }
    next[0] = (next[0] + c[k]) % p;
    poly.swap(next);
  }
  return poly;
}

}  // namespace detail

/// Exact determinant by Kronecker substitution, evaluation/interpolation
/// modulo word-size primes and Chinese remaindering.
///
/// Enough primes are used to exceed twice the bound
/// prod_i sqrt(sum_j |M_ij|_1^2) on every coefficient (Hadamard's inequality on
/// the unit torus combined with Parseval), so the result is exact, not
/// probabilistic.
inline LaurentPoly det_modular(const LaurentMatrix& m, std::size_t nvars) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::one(nvars);
  auto cleared = detail::clear_monomials(m, nvars);
  if (cleared.zero_row) return LaurentPoly(nvars);
  const LaurentMatrix& a = cleared.poly;

  std::vector<long> deg(nvars, 0);
  Integer bound_sq = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> row_max(nvars, 0);
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = a(i, j);
      if (x.is_zero()) continue;
      const Exponent e = x.max_exponents();
      for (std::size_t v = 0; v < nvars; ++v) row_max[v] = std::max(row_max[v], e[v]);
      const Integer nrm = x.norm1();
      s += nrm * nrm;
    }
    for (std::size_t v = 0; v < nvars; ++v) deg[v] += row_max[v];
    bound_sq *= s;
  }
  std::vector<std::uint64_t> weight(nvars, 1);
  std::uint64_t top = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (v) weight[v] = weight[v - 1] * static_cast<std::uint64_t>(deg[v - 1] + 1);
    top += static_cast<std::uint64_t>(deg[v]) * weight[v];
    if (top > (1ULL << 24)) return det_bareiss(m, nvars);
  }
  const std::size_t points = static_cast<std::size_t>(top) + 1;

  struct Entry {
    std::vector<std::pair<std::uint64_t, Integer>> terms;
  };
  std::vector<Entry> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [e, c] : a(i, j).terms()) {
        std::uint64_t k = 0;
        for (std::size_t v = 0; v < nvars; ++v) k += static_cast<std::uint64_t>(e[v]) * weight[v];
        entries[i * n + j].terms.emplace_back(k, c);
      }

  std::vector<Integer> coeffs(points, 0);
  Integer modulus = 1;
  const Integer need = 4 * bound_sq;  // modulus^2 > 4 * bound^2
  std::vector<std::uint64_t> work(n * n), values(points), powers(points);
  for (std::size_t pi = 0; modulus * modulus <= need; ++pi) {
    const std::uint64_t p = detail::nth_prime(pi);
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> red(n * n);
    for (std::size_t idx = 0; idx < n * n; ++idx)
      for (const auto& [k, c] : entries[idx].terms) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
        red[idx].emplace_back(k, r.get_ui());
      }
    for (std::size_t x = 0; x < points; ++x) {
      powers[0] = 1;
      for (std::size_t d = 1; d < points; ++d) powers[d] = powers[d - 1] * x % p;
      for (std::size_t idx = 0; idx < n * n; ++idx) {
        std::uint64_t s = 0;
        for (const auto& [k, c] : red[idx]) s = (s + c * powers[k]) % p;
        work[idx] = s;
      }
      values[x] = detail::det_mod(work, n, p);
    }
    const auto residues = detail::interpolate_mod(values, p);
    Integer mod_p;
    mpz_fdiv_r_ui(mod_p.get_mpz_t(), modulus.get_mpz_t(), p);
    const std::uint64_t inv = detail::inv_mod(mod_p.get_ui(), p);
    for (std::size_t d = 0; d < points; ++d) {
      Integer cur;
      mpz_fdiv_r_ui(cur.get_mpz_t(), coeffs[d].get_mpz_t(), p);
      const std::uint64_t diff = (residues[d] + p - cur.get_ui()) % p;
      const std::uint64_t t = diff * inv % p;
      coeffs[d] += modulus * Integer(static_cast<unsigned long>(t));
    }
    modulus *= p;
  }
  const Integer half = modulus / 2;
  LaurentPoly d(nvars);
  for (std::size_t k = 0; k < points; ++k) {
    Integer c = coeffs[k];
    if (c > half) c -= modulus;
    if (c == 0) continue;
    Exponent e(nvars, 0);
    std::uint64_t rest = k;
    for (std::size_t v = nvars; v-- > 0;) {
      e[v] = static_cast<long>(rest / weight[v]);
      rest %= weight[v];
    }
    d.add_term(e, c);
  }
  return d.shifted(-cleared.total_shift);
}

/// Exact determinant: Bareiss for small matrices, modular above.
inline LaurentPoly det(const LaurentMatrix& m, std::size_t nvars) {
  if (m.rows() <= 6) return det_bareiss(m, nvars);
  return det_modular(m, nvars);
}

inline LaurentPoly det(const LaurentMatrix& m) { return det(m, matrix_nvars(m)); }

/// Cofactor transpose: adj(A) * A = A * adj(A) = det(A) * I.
inline LaurentMatrix adjugate(const LaurentMatrix& a, std::size_t nvars) {
  if (!a.is_square()) throw DimensionMismatch("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  LaurentMatrix adj = zero_matrix(n, n, nvars);
  if (n == 1) {
    adj(0, 0) = LaurentPoly::one(nvars);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentMatrix minor = zero_matrix(n - 1, n - 1, nvars);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      LaurentPoly d = det(minor, nvars);
      adj(i, j) = (i + j) % 2 ? -d : d;
    }
  return adj;
}

/// Calls f(rows) for every k-subset of {0..n-1} in lexicographic order
/// until f returns false.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// gcd of all maximal (cols x cols) minors, unit-normalized: 0 when there
/// are fewer rows than columns, 1 when there are no columns. Stops as soon
/// as the running gcd is 1.
inline LaurentPoly maximal_minors_gcd(const LaurentMatrix& m, std::size_t nvars) {
  if (m.cols() == 0) return LaurentPoly::one(nvars);
  if (m.rows() < m.cols()) return LaurentPoly(nvars);
  if (m.is_square()) return normalize(det(m, nvars));
  LaurentPoly g(nvars);
  for_each_subset(m.rows(), m.cols(), [&](const std::vector<std::size_t>& rows) {
    g = gcd(g, det(m.select_rows(rows), nvars));
    return !g.is_one();
  });
  return g;
}

}  // namespace fibered
