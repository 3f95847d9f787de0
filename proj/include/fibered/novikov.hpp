#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "fibered/determinant.hpp"
#include "fibered/laurent_algebra.hpp"
#include "fibered/weight.hpp"

namespace fibered {

/// Truncation of a series to the terms of u-value <= cutoff. `lost` is set
/// when terms were discarded.
inline LaurentPoly truncate_to(const LaurentPoly& a, const WeightFunctional& u, const Cutoff& c,
                               bool* lost = nullptr) {
  if (!c) return a;
  LaurentPoly r(a.nvars());
  for (const auto& [e, k] : a.terms()) {
    if (level_le(u.value(e), c))
      r.add_term(e, k);
    else if (lost)
      *lost = true;
  }
  return r;
}

/// Terms by increasing u-value, ties by exponent: 1 - t + t^2.
inline std::string render_by_level(const LaurentPoly& a, const WeightFunctional& u) {
  std::vector<std::pair<Exponent, Integer>> v(a.terms().begin(), a.terms().end());
  std::stable_sort(v.begin(), v.end(),
                   [&](const auto& x, const auto& y) { return u.value(x.first) < u.value(y.first); });
  return render_terms(v, a.nvars());
}

/// Element of the Novikov completion of Z[Z^r] known modulo terms of
/// u-value > cutoff; a missing cutoff means the series is an exact
/// polynomial.
class NovikovSeries {
 public:
  NovikovSeries(LaurentPoly poly, WeightFunctional u, Cutoff cutoff = std::nullopt)
      : u_(std::move(u)), cutoff_(std::move(cutoff)) {
    if (poly.nvars() != u_.dim()) throw DimensionMismatch("series and u have different ranks");
    poly_ = truncate_to(poly, u_, cutoff_);
  }

  const LaurentPoly& poly() const noexcept { return poly_; }
  const WeightFunctional& u() const noexcept { return u_; }
  const Cutoff& cutoff() const noexcept { return cutoff_; }
  bool is_exact() const noexcept { return !cutoff_; }

  std::optional<Level> min_level() const { return fibered::min_level(poly_, u_); }

  NovikovSeries truncated(const Cutoff& c) const {
    return NovikovSeries(poly_, u_, min_cutoff(cutoff_, c));
  }

  /// Equality of the known parts up to the common cutoff.
  bool congruent(const NovikovSeries& o, const Cutoff& c) const {
    const Cutoff m = min_cutoff(c, min_cutoff(cutoff_, o.cutoff_));
    return truncate_to(poly_ - o.poly_, u_, m).is_zero();
  }

  std::string to_string() const {
    std::string s = render_by_level(poly_, u_);
    if (cutoff_) s += " + O(u > " + fibered::to_string(*cutoff_) + ")";
    return s;
  }

 private:
  LaurentPoly poly_;
  WeightFunctional u_;
  Cutoff cutoff_;
};

namespace detail {

// min(min-level of x, cutoff of x): a lower bound for the u-value of
// anything x could contribute. nullopt when x is exactly zero.
inline Cutoff effective_min(const NovikovSeries& x) {
  const auto m = x.min_level();
  if (!m) return x.cutoff();
  return min_cutoff(*m, x.cutoff());
}

inline Cutoff add_levels(const Cutoff& c, const Cutoff& shift_by) {
  if (!c || !shift_by) return std::nullopt;
  return *c + *shift_by;
}

// Smallest k >= 1 with k * delta > limit (lexicographically) for a
// positive level delta, or nullopt if no such k exists.
inline std::optional<long> steps_to_exceed(const Level& delta, const Level& limit) {
  std::size_t i = 0;
  while (i < delta.size() && delta[i] == 0) ++i;
  if (i == delta.size()) return std::nullopt;
  for (std::size_t j = 0; j < i; ++j) {
    if (limit[j] < 0) return 1;
    if (limit[j] > 0) return std::nullopt;
  }
  Rational f = limit[i] / delta[i];
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), f.get_num_mpz_t(), f.get_den_mpz_t());
  Integer k = fl + 1;
  if (k < 1) k = 1;
  if (!k.fits_slong_p()) throw NotTerminating("geometric series needs too many terms");
  return k.get_si();
}

}  // namespace detail

/// Product certified exact up to min(C_a + min u(b), C_b + min u(a)).
inline NovikovSeries nv_mul(const NovikovSeries& a, const NovikovSeries& b) {
  if (!(a.u() == b.u())) throw FunctionalMismatch();
  if (a.poly().is_zero() && a.is_exact()) return a;
  if (b.poly().is_zero() && b.is_exact()) return b;
  const auto ma = detail::effective_min(a), mb = detail::effective_min(b);
  const Cutoff c =
      min_cutoff(detail::add_levels(a.cutoff(), mb), detail::add_levels(b.cutoff(), ma));
  return NovikovSeries(truncate_to(a.poly() * b.poly(), a.u(), c), a.u(), c);
}

inline NovikovSeries nv_add(const NovikovSeries& a, const NovikovSeries& b) {
  if (!(a.u() == b.u())) throw FunctionalMismatch();
  const Cutoff c = min_cutoff(a.cutoff(), b.cutoff());
  return NovikovSeries(a.poly() + b.poly(), a.u(), c);
}

/// Inverse of a u-monic series: writing a = s t^v (1 - n) with supp(n) in
/// {u > 0}, returns s t^-v sum n^k. The result is exact to level
/// C - u(v), so that a * a^-1 = 1 modulo {u > C}. Throws NotTerminating when
/// the cutoff can never be reached (lexicographic levels).
inline NovikovSeries nv_invert_unit(const NovikovSeries& a, const Level& c) {
  const auto& u = a.u();
  if (a.poly().is_zero()) throw NotAUnit();
  const LaurentPoly m = u_minimal_part(a.poly(), u);
  if (!m.is_monomial() || abs(m.terms().begin()->second) != 1) throw NotAUnit();
  const auto& [v, s] = *m.terms().begin();
  const Level mv = u.value(v);
  // t^-v s a = 1 - n
  const Exponent neg_v = -v;
  const LaurentPoly unit_inv = LaurentPoly::monomial(neg_v, s);
  const LaurentPoly n = LaurentPoly::one(u.dim()) - a.poly().shifted(neg_v) * s;

  Cutoff target = c - mv;
  if (a.cutoff()) target = min_cutoff(target, *a.cutoff() - scaled(mv, 2));
  const Level sum_limit = *target + mv;  // level for sum n^k before the shift

  LaurentPoly sum = LaurentPoly::one(u.dim());
  bool lost = false;
  if (!n.is_zero()) {
    const Level delta = *min_level(n, u);
    const Level zero = u.zero_level();
    if (!(sum_limit < zero)) {
      const auto k = detail::steps_to_exceed(delta, sum_limit);
      if (!k) throw NotTerminating("u-levels of n^k never exceed the cutoff");
      LaurentPoly power = LaurentPoly::one(u.dim());
      for (long i = 1; i < *k && !power.is_zero(); ++i) {
        power = truncate_to(power * n, u, sum_limit, &lost);
        sum += power;
      }
      lost = true;
    } else {
      lost = true;
    }
  }
  const LaurentPoly inv = sum * unit_inv;
  if (!lost && a.is_exact()) return NovikovSeries(inv, u);
  return NovikovSeries(inv, u, target);
}

struct NovikovMatrix {
  LaurentMatrix matrix;
  Cutoff cutoff;  // common cutoff of all entries
};

/// (I + A)^-1 = sum (-A)^k truncated at C, for supp(A) in {u > 0}.
inline NovikovMatrix nv_invert_matrix(const LaurentMatrix& m, const WeightFunctional& u,
                                      const Level& c) {
  if (!m.is_square()) throw DimensionMismatch("matrix inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t nv = u.dim();
  LaurentMatrix a = m - identity_matrix(n, nv);
  std::optional<Level> delta;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto l = min_level(a(i, j), u);
      if (!l) continue;
      if (!is_positive(*l)) throw NotUnipotentForm();
      if (!delta || *l < *delta) delta = l;
    }
  LaurentMatrix sum = identity_matrix(n, nv);
  if (!delta) return {sum, std::nullopt};
  const LaurentMatrix neg_a = scaled(a, LaurentPoly::constant(nv, -1));
  LaurentMatrix power = identity_matrix(n, nv);
  bool lost = false;
  const auto k = c < u.zero_level() ? std::optional<long>(1) : detail::steps_to_exceed(*delta, c);
  if (!k) throw NotTerminating("u-levels of A^k never exceed the cutoff");
  bool vanished = false;
  for (long i = 1; i < *k; ++i) {
    power = power * neg_a;
    bool any = false;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        power(r, s) = truncate_to(power(r, s), u, c, &lost);
        if (!power(r, s).is_zero()) any = true;
      }
    sum = sum + power;
    if (!any) {
      vanished = true;
      break;
    }
  }
  // The loop stops either because the power vanished exactly or because
  // every further power lies above the cutoff.
  if (vanished && !lost) return {sum, std::nullopt};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) sum(r, s) = truncate_to(sum(r, s), u, c);
  return {sum, c};
}

/// Division by increasing u-value: repeatedly divides the u-minimal part
/// of the remainder by that of x and subtracts quotient * x. Returns q with
/// y = q x modulo {u > C}, exact when the remainder vanishes.
inline NovikovSeries nv_divide(const NovikovSeries& y, const NovikovSeries& x, const Level& c,
                               std::size_t max_steps = 100000) {
  if (!(y.u() == x.u())) throw FunctionalMismatch();
  const auto& u = y.u();
  if (x.poly().is_zero()) throw ZeroPolynomial("nv_divide");
  const LaurentPoly mx = u_minimal_part(x.poly(), u);
  const Level lx = *min_level(mx, u);
  Cutoff limit = min_cutoff(c, y.cutoff());
  if (x.cutoff()) {
    if (const auto ly = y.min_level()) limit = min_cutoff(limit, *x.cutoff() + (*ly - lx));
  }
  bool lost = false;
  LaurentPoly rem = truncate_to(y.poly(), u, limit, &lost);
  LaurentPoly q(u.dim());
  for (std::size_t step = 1;; ++step) {
    if (rem.is_zero()) break;
    if (step > max_steps) throw NotTerminating("division did not reach the cutoff");
    const LaurentPoly m = u_minimal_part(rem, u);
    const auto d = divide_exact(m, mx);
    if (!d) throw NotDivisibleAtStep(step, m.to_string());
    q += *d;
    rem = truncate_to(rem - *d * x.poly(), u, limit, &lost);
  }
  if (!lost && y.is_exact() && x.is_exact()) return NovikovSeries(q, u);
  return NovikovSeries(q, u, *limit - lx);
}

/// A square matrix over Z[Z^r] is invertible over the Novikov ring iff its
/// determinant is u-monic.
inline bool square_invertibility(const LaurentMatrix& m, const WeightFunctional& u) {
  return is_u_monic(det(m, u.dim()), u);
}

/// True iff every term of X D - I has strictly positive u-value.
inline bool verify_certificate(const LaurentMatrix& x, const LaurentMatrix& d,
                               const WeightFunctional& u) {
  if (x.cols() != d.rows() || x.rows() != d.cols())
    throw DimensionMismatch("certificate shapes do not compose to a square matrix");
  const LaurentMatrix diff = x * d - identity_matrix(x.rows(), u.dim());
  for (std::size_t i = 0; i < diff.rows(); ++i)
    for (std::size_t j = 0; j < diff.cols(); ++j)
      for (const auto& [e, k] : diff(i, j).terms())
        if (!is_positive(u.value(e))) return false;
  return true;
}

/// X = adj(D) * trunc(det(D)^-1) with the inverse taken to level 0, so that
/// X D = (1 + e) I with supp(e) in {u > 0}. Requires det(D) u-monic.
inline LaurentMatrix inverse_truncation_certificate(const LaurentMatrix& d,
                                                    const WeightFunctional& u) {
  const LaurentPoly dd = det(d, u.dim());
  const NovikovSeries inv = nv_invert_unit(NovikovSeries(dd, u), u.zero_level());
  return scaled(adjugate(d, u.dim()), inv.poly());
}

}  // namespace fibered
