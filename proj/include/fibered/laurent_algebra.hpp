#pragma once

#include <optional>
#include <vector>

#include "fibered/laurent.hpp"
#include "fibered/weight.hpp"

namespace fibered {

/// Canonical representative of a Laurent polynomial up to the units
/// +-t^v: minimal exponent 0 in every variable and a positive coefficient on
/// the lexicographically smallest exponent. `poly == sign * t^shift * input`.
struct UnitNormalForm {
  LaurentPoly poly;
  int sign = 1;
  Exponent shift;
};

inline UnitNormalForm normalize_with_unit(const LaurentPoly& a) {
  UnitNormalForm nf{a, 1, Exponent(a.nvars(), 0)};
  if (a.is_zero()) return nf;
  nf.shift = -a.min_exponents();
  nf.poly = a.shifted(nf.shift);
  if (nf.poly.terms().begin()->second < 0) {
    nf.sign = -1;
    nf.poly = -nf.poly;
  }
  return nf;
}

inline LaurentPoly normalize(const LaurentPoly& a) { return normalize_with_unit(a).poly; }

inline bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  return normalize(a) == normalize(b);
}

namespace detail {

// Exact division of genuine polynomials (all exponents >= 0) by leading
// terms in lex order. Returns nullopt as soon as a leading term fails to
// divide.
inline std::optional<LaurentPoly> poly_divide_exact(LaurentPoly rem, const LaurentPoly& b) {
  const std::size_t n = b.nvars();
  LaurentPoly q(n);
  const auto& [eb, cb] = b.leading();
  Exponent e(n);
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.leading();
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = er[i] - eb[i];
      if (e[i] < 0) return std::nullopt;
    }
    if (!divisible(cr, cb)) return std::nullopt;
    const Integer c = divexact(cr, cb);
    q.add_term(e, c);
    rem -= b.shifted(e) * c;
  }
  return q;
}

using UPoly = std::vector<LaurentPoly>;  // coefficients in one variable, index = degree

inline UPoly coefficients_in(const LaurentPoly& a, std::size_t var) {
  UPoly out;
  for (const auto& [e, c] : a.terms()) {
    const auto d = static_cast<std::size_t>(e[var]);
    if (out.size() <= d) out.resize(d + 1, LaurentPoly(a.nvars()));
    Exponent f = e;
    f[var] = 0;
    out[d].add_term(f, c);
  }
  return out;
}

inline LaurentPoly from_coefficients(const UPoly& c, std::size_t var, std::size_t nvars) {
  LaurentPoly p(nvars);
  for (std::size_t d = 0; d < c.size(); ++d)
    for (const auto& [e, k] : c[d].terms()) {
      Exponent f = e;
      f[var] = static_cast<long>(d);
      p.add_term(f, k);
    }
  return p;
}

inline void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = poly_divide_exact(a, b);
  if (!q) throw InvariantViolation("expected exact division failed");
  return *q;
}

inline LaurentPoly ipow(const LaurentPoly& a, std::size_t k) {
  LaurentPoly r = LaurentPoly::one(a.nvars());
  for (std::size_t i = 0; i < k; ++i) r *= a;
  return r;
}

// lc(B)^(deg A - deg B + 1) * A mod B in D[x].
inline UPoly pseudo_remainder(UPoly r, const UPoly& b) {
  const LaurentPoly& lcb = b.back();
  const std::size_t db = b.size() - 1;
  long e = static_cast<long>(r.size()) - static_cast<long>(db);
  while (!r.empty() && r.size() - 1 >= db) {
    const LaurentPoly lcr = r.back();
    const std::size_t d = r.size() - 1 - db;
    for (auto& c : r) c *= lcb;
    for (std::size_t i = 0; i <= db; ++i) r[i + d] -= lcr * b[i];
    trim(r);
    --e;
  }
  if (e > 0) {
    const LaurentPoly f = ipow(lcb, static_cast<std::size_t>(e));
    for (auto& c : r) c *= f;
  }
  return r;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b, long var);

inline LaurentPoly content_in(const UPoly& c, long var) {
  LaurentPoly g(c.empty() ? 0 : c[0].nvars());
  for (const auto& x : c) {
    g = poly_gcd(g, x, var - 1);
    if (g.is_constant() && !g.is_zero() && abs(g.terms().begin()->second) == 1) break;
  }
  return g;
}

// Primitive part of a polynomial in `var` over D = Z[t_0..t_{var-1}] via
// the subresultant PRS; a and b primitive with positive degree in var.
inline LaurentPoly subresultant_gcd(const LaurentPoly& a, const LaurentPoly& b, long var) {
  const std::size_t n = a.nvars();
  const auto v = static_cast<std::size_t>(var);
  UPoly A = coefficients_in(a, v), B = coefficients_in(b, v);
  if (A.size() < B.size()) std::swap(A, B);
  LaurentPoly g = LaurentPoly::one(n), h = LaurentPoly::one(n);
  while (true) {
    const std::size_t delta = A.size() - B.size();
    UPoly r = pseudo_remainder(A, B);
    if (r.empty()) break;
    if (r.size() == 1) return LaurentPoly::one(n);
    A = std::move(B);
    const LaurentPoly div = g * ipow(h, delta);
    for (auto& c : r) c = exact(c, div);
    B = std::move(r);
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact(ipow(g, delta), ipow(h, delta - 1));
    }
  }
  const LaurentPoly cont = content_in(B, var);
  return exact(from_coefficients(B, v, n), cont);
}

// gcd of polynomials in which variables above `var` do not occur.
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b, long var) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::size_t n = a.nvars();
  if (var < 0) {
    return LaurentPoly::constant(n, gcd(a.terms().begin()->second, b.terms().begin()->second));
  }
  const auto v = static_cast<std::size_t>(var);
  UPoly ca = coefficients_in(a, v), cb = coefficients_in(b, v);
  if (ca.size() == 1 && cb.size() == 1) return poly_gcd(a, b, var - 1);
  const LaurentPoly conta = content_in(ca, var);
  const LaurentPoly contb = content_in(cb, var);
  const LaurentPoly c = poly_gcd(conta, contb, var - 1);
  if (ca.size() == 1 || cb.size() == 1) return c;
  const LaurentPoly pa = exact(a, conta);
  const LaurentPoly pb = exact(b, contb);
  return c * subresultant_gcd(pa, pb, var);
}

}  // namespace detail

/// Exact quotient a / b in the Laurent ring, or nullopt if b does not divide a.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("divide_exact");
  if (a.nvars() != b.nvars()) throw DimensionMismatch("divide_exact: different rings");
  if (a.is_zero()) return LaurentPoly(a.nvars());
  const Exponent ma = a.min_exponents(), mb = b.min_exponents();
  auto q = detail::poly_divide_exact(a.shifted(-ma), b.shifted(-mb));
  if (!q) return std::nullopt;
  return q->shifted(ma - mb);
}

/// gcd in the UFD Z[t^{+-1}], unit-normalized; gcd(a, 0) = normalize(a).
///
/// Recursive: contents with respect to the last variable are handled by
/// recursion on the remaining variables, primitive parts by a subresultant
/// PRS over the coefficient ring.
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("gcd: different rings");
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  const LaurentPoly pa = a.shifted(-a.min_exponents());
  const LaurentPoly pb = b.shifted(-b.min_exponents());
  return normalize(detail::poly_gcd(pa, pb, static_cast<long>(a.nvars()) - 1));
}

/// Terms of `a` whose exponent has minimal u-value.
inline LaurentPoly u_minimal_part(const LaurentPoly& a, const WeightFunctional& u) {
  if (a.is_zero()) throw ZeroPolynomial("u_minimal_part");
  LaurentPoly m(a.nvars());
  std::optional<Level> best;
  for (const auto& [e, c] : a.terms()) {
    Level l = u.value(e);
    if (!best || l < *best) {
      best = std::move(l);
      m = LaurentPoly(a.nvars());
      m.add_term(e, c);
    } else if (l == *best) {
      m.add_term(e, c);
    }
  }
  return m;
}

/// Minimal u-value over the support; nullopt for the zero polynomial.
inline std::optional<Level> min_level(const LaurentPoly& a, const WeightFunctional& u) {
  std::optional<Level> best;
  for (const auto& [e, c] : a.terms()) {
    Level l = u.value(e);
    if (!best || l < *best) best = std::move(l);
  }
  return best;
}

/// True iff a != 0 and its u-minimal part is +-t^v.
inline bool is_u_monic(const LaurentPoly& a, const WeightFunctional& u) {
  if (a.is_zero()) return false;
  const LaurentPoly m = u_minimal_part(a, u);
  return m.is_monomial() && abs(m.terms().begin()->second) == 1;
}

}  // namespace fibered
