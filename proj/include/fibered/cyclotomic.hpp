#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibered/bigint.hpp"
#include "fibered/errors.hpp"
#include "fibered/laurent.hpp"

namespace fibered {

/// Polynomial in Z[t] as ascending coefficients with a nonzero leading
/// coefficient; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }
  IntPoly(std::initializer_list<long> c) {
    for (long x : c) c_.emplace_back(x);
    trim();
  }
  static IntPoly constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }
  static IntPoly monomial(std::size_t d, const Integer& c = 1) {
    std::vector<Integer> v(d + 1, 0);
    v[d] = c;
    return IntPoly(std::move(v));
  }

  const std::vector<Integer>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const Integer& leading() const { return c_.back(); }
  Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

  Integer content() const {
    Integer g = 0;
    for (const auto& x : c_) g = gcd(g, x);
    return g;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return IntPoly(std::move(v));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return IntPoly(std::move(v));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(v));
  }
  friend IntPoly operator*(const Integer& k, const IntPoly& a) {
    std::vector<Integer> v(a.c_);
    for (auto& x : v) x *= k;
    return IntPoly(std::move(v));
  }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly divexact_by(const Integer& k) const {
    std::vector<Integer> v(c_);
    for (auto& x : v) x = divexact(x, k);
    return IntPoly(std::move(v));
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t d = c_.size(); d-- > 0;) {
      const Integer& x = c_[d];
      if (x == 0) continue;
      const bool neg = x < 0;
      const Integer a = neg ? Integer(-x) : x;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (d == 0)
        s += a.get_str();
      else {
        if (a != 1) s += a.get_str() + "*";
        s += "t";
        if (d != 1) s += "^" + std::to_string(d);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

namespace detail {

// lc(b)^(deg a - deg b + 1) a mod b.
inline IntPoly int_pseudo_remainder(IntPoly a, const IntPoly& b) {
  const long db = b.degree();
  long e = a.degree() - db + 1;
  while (!a.is_zero() && a.degree() >= db) {
    const IntPoly shift = IntPoly::monomial(static_cast<std::size_t>(a.degree() - db), a.leading());
    a = b.leading() * a - shift * b;
    --e;
  }
  if (e > 0) a = pow(b.leading(), static_cast<unsigned long>(e)) * a;
  return a;
}

// Standard resultant Res(A, B) = lc(A)^deg B prod_{A(x)=0} B(x), by the
// subresultant algorithm.
inline Integer standard_resultant(IntPoly a, IntPoly b) {
  if (a.is_zero() || b.is_zero()) throw ZeroPolynomial("resultant");
  if (a.degree() == 0) return pow(a.leading(), static_cast<unsigned long>(b.degree()));
  if (b.degree() == 0) return pow(b.leading(), static_cast<unsigned long>(a.degree()));
  Integer s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  const Integer ca = a.content(), cb = b.content();
  a = a.divexact_by(ca);
  b = b.divexact_by(cb);
  const Integer t = pow(ca, static_cast<unsigned long>(b.degree())) *
                    pow(cb, static_cast<unsigned long>(a.degree()));
  Integer g = 1, h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = int_pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = r.divexact_by(g * pow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = divexact(pow(g, static_cast<unsigned long>(delta)), pow(h, static_cast<unsigned long>(delta - 1)));
    if (b.degree() <= 0) break;
  }
  const long da = a.degree();
  h = divexact(pow(b.leading(), static_cast<unsigned long>(da)),
               pow(h, static_cast<unsigned long>(da - 1)));
  return s * t * h;
}

}  // namespace detail

/// Determinant of the Sylvester matrix with the deg P rows of Q's
/// coefficients first; equals prod over roots a of Q of P(a) times
/// lc(Q)^deg P. res(t-2, t-3) = 1, res(t-1, t^2+t+1) = 3.
inline Integer resultant(const IntPoly& p, const IntPoly& q) {
  return detail::standard_resultant(q, p);
}

/// Quotient and remainder over Z for a divisor with unit leading coefficient.
inline std::pair<IntPoly, IntPoly> divmod_monic(IntPoly a, const IntPoly& b) {
  if (b.is_zero() || abs(b.leading()) != 1) throw InvariantViolation("divisor is not monic");
  IntPoly q;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const IntPoly m =
        IntPoly::monomial(static_cast<std::size_t>(a.degree() - b.degree()), a.leading() * b.leading());
    q = q + m;
    a = a - m * b;
  }
  return {q, a};
}

/// Phi_n by dividing t^n - 1 by Phi_d for the proper divisors d of n.
inline IntPoly cyclotomic_poly(unsigned long n) {
  if (n == 0) throw InvariantViolation("cyclotomic index must be positive");
  static std::map<unsigned long, IntPoly> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly f = IntPoly::monomial(n) - IntPoly{1};
  for (unsigned long d = 1; d < n; ++d)
    if (n % d == 0) f = divmod_monic(f, cyclotomic_poly(d)).first;
  memo.emplace(n, f);
  return f;
}

inline unsigned long euler_phi(unsigned long n) {
  unsigned long r = n;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// res(Phi_k, Phi_kp), checked against p^phi(k).
inline Integer res_cyclotomic_identity(unsigned long k, unsigned long p) {
  if (!is_prime(p) || k == 0 || k % p == 0)
    throw InvariantViolation("identity needs p prime, k >= 1 and p not dividing k");
  const Integer r = resultant(cyclotomic_poly(k), cyclotomic_poly(k * p));
  const Integer expected = pow(Integer(p), euler_phi(k));
  if (r != expected)
    throw InvariantViolation("res(Phi_" + std::to_string(k) + ", Phi_" + std::to_string(k * p) +
                             ") = " + r.get_str() + ", expected " + expected.get_str());
  return r;
}

namespace detail {

using RatPoly = std::vector<Rational>;  // ascending, trimmed

inline void trim(RatPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline RatPoly to_rat(const IntPoly& a) {
  return RatPoly(a.coefficients().begin(), a.coefficients().end());
}

inline RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline RatPoly rat_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline std::pair<RatPoly, RatPoly> rat_divmod(RatPoly a, const RatPoly& b) {
  RatPoly q;
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t d = a.size() - b.size();
    const Rational c = a.back() / b.back();
    if (q.size() <= d) q.resize(d + 1, 0);
    q[d] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + d] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

// Inverse of a modulo m over Q by the extended Euclidean algorithm;
// nullopt when gcd(a, m) is not constant.
inline std::optional<RatPoly> rat_inverse_mod(const RatPoly& a, const RatPoly& m) {
  RatPoly r0 = m, r1 = rat_divmod(a, m).second;
  RatPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = rat_divmod(r0, r1);
    RatPoly s = rat_sub(s0, rat_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) return std::nullopt;
  for (auto& c : s0) c /= r0[0];
  return rat_divmod(s0, m).second;
}

}  // namespace detail

/// Whether Q(z)/P(z) lies in Z[z] = Z[t]/(Phi_n) for a primitive n-th root
/// of unity z. Throws ZeroDenominator when P(z) = 0.
inline bool divides_in_cyclotomic_ring(const IntPoly& p, const IntPoly& q, unsigned long n) {
  const auto phi = detail::to_rat(cyclotomic_poly(n));
  const auto pm = detail::rat_divmod(detail::to_rat(p), phi).second;
  if (pm.empty()) throw ZeroDenominator();
  const auto inv = detail::rat_inverse_mod(pm, phi);
  if (!inv) throw ZeroDenominator();
  const auto quot = detail::rat_divmod(detail::rat_mul(*inv, detail::to_rat(q)), phi).second;
  for (const auto& c : quot)
    if (c.get_den() != 1) return false;
  return true;
}

/// Exact divisibility in Z[t].
inline bool divides_in_zt(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero()) return q.is_zero();
  auto [quot, rem] = detail::rat_divmod(detail::to_rat(q), detail::to_rat(p));
  if (!rem.empty()) return false;
  for (const auto& c : quot)
    if (c.get_den() != 1) return false;
  return true;
}

struct DivisibilityScan {
  std::vector<std::pair<unsigned long, std::optional<bool>>> rows;  // nullopt: Phi_n | P, skipped
  bool all_pass = true;
  std::optional<unsigned long> first_failure;
  bool divides_in_zt = false;
};

/// Per-n test over [lo, hi] plus the exact Z[t] check. Finite evidence
/// only; it says nothing about n beyond the range.
inline DivisibilityScan divisibility_scan(const IntPoly& p, const IntPoly& q, unsigned long lo,
                                          unsigned long hi) {
  DivisibilityScan s;
  for (unsigned long n = lo; n <= hi; ++n) {
    std::optional<bool> v;
    try {
      v = divides_in_cyclotomic_ring(p, q, n);
    } catch (const ZeroDenominator&) {
    }
    if (v && !*v) {
      s.all_pass = false;
      if (!s.first_failure) s.first_failure = n;
    }
    s.rows.emplace_back(n, v);
  }
  s.divides_in_zt = divides_in_zt(p, q);
  return s;
}

inline IntPoly to_int_poly(const LaurentPoly& a) {
  if (a.nvars() != 1) throw DimensionMismatch("expected a polynomial in one variable");
  std::vector<Integer> c;
  for (const auto& [e, k] : a.terms()) {
    if (e[0] < 0) throw DimensionMismatch("negative exponent in a polynomial of Z[t]");
    const auto d = static_cast<std::size_t>(e[0]);
    if (c.size() <= d) c.resize(d + 1, 0);
    c[d] = k;
  }
  return IntPoly(std::move(c));
}

/// Parses "t^2 + 1" (one variable t, no negative powers).
inline IntPoly parse_int_poly(const std::string& text) { return to_int_poly(parse_laurent(text, 1)); }

}  // namespace fibered
