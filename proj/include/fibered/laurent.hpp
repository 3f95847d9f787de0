#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibered/bigint.hpp"
#include "fibered/errors.hpp"
#include "fibered/exponent.hpp"

namespace fibered {

/// Element of Z[t_1^{+-1}, ..., t_r^{+-1}] stored as a sparse map from
/// exponent vectors (lexicographically ordered) to nonzero coefficients.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Integer& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static LaurentPoly one(std::size_t nvars) { return constant(nvars, 1); }
  static LaurentPoly monomial(const Exponent& e, const Integer& c = 1) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
  }
  static LaurentPoly variable(std::size_t nvars, std::size_t i, long power = 1) {
    Exponent e(nvars, 0);
    e.at(i) = power;
    return monomial(e);
  }

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && fibered::is_zero(terms_.begin()->first));
  }
  bool is_one() const noexcept {
    return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
  }

  Integer coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Exponent& e, const Integer& c) {
    if (e.size() != nvars_) throw DimensionMismatch("term has wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Lexicographically largest term (the leading term for exact division).
  const std::pair<const Exponent, Integer>& leading() const { return *terms_.rbegin(); }

  Exponent min_exponents() const {
    Exponent m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }
  Exponent max_exponents() const {
    Exponent m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
      first = false;
    }
    return m;
  }

  /// Sum of absolute values of the coefficients.
  Integer norm1() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += abs(c);
    return s;
  }

  /// Multiplication by the monomial t^shift.
  LaurentPoly shifted(const Exponent& shift) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Integer& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& k) { return a *= k; }
  friend LaurentPoly operator*(const Integer& k, LaurentPoly a) { return a *= k; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check(b);
    LaurentPoly r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        auto [it, inserted] = r.terms_.try_emplace(e);
        mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Monomial substitution t_i -> t^{images[i]} into a ring with
  /// images[i].size() variables (a ring homomorphism).
  LaurentPoly substitute(const std::vector<Exponent>& images) const {
    if (images.size() != nvars_) throw DimensionMismatch("substitution arity mismatch");
    const std::size_t m = images.empty() ? 0 : images[0].size();
    LaurentPoly r(m);
    for (const auto& [e, c] : terms_) {
      Exponent f(m, 0);
      for (std::size_t i = 0; i < nvars_; ++i)
        for (std::size_t k = 0; k < m; ++k) f[k] += e[i] * images[i][k];
      r.add_term(f, c);
    }
    return r;
  }

  std::string to_string() const;

 private:
  void check(const LaurentPoly& o) const {
    if (o.nvars_ != nvars_) throw DimensionMismatch("Laurent polynomials in different rings");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

inline std::string variable_name(std::size_t nvars, std::size_t i) {
  return nvars == 1 ? std::string("t") : "t" + std::to_string(i + 1);
}

/// Renders terms in the given order as `c*t1^a1*t2^a2 + ...`.
template <class Range>
std::string render_terms(const Range& terms, std::size_t nvars) {
  std::string s;
  for (const auto& [e, c] : terms) {
    const bool neg = c < 0;
    const Integer a = neg ? Integer(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variable_name(nvars, i);
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + '*' + mono;
  }
  return s.empty() ? "0" : s;
}

/// Highest exponent first (t^2 - t + 1).
inline std::string LaurentPoly::to_string() const {
  std::vector<std::pair<Exponent, Integer>> v(terms_.rbegin(), terms_.rend());
  return render_terms(v, nvars_);
}

namespace detail {

class LaurentParser {
 public:
  LaurentParser(std::string_view s, std::optional<std::size_t> nvars) : s_(s), nvars_(nvars) {}

  LaurentPoly parse() {
    std::vector<std::pair<std::vector<std::pair<std::size_t, long>>, Integer>> raw;
    std::size_t max_var = 0;
    bool plain_t = false;
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Integer coef = 1;
      bool have_coef = false;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coef = Integer(read_digits());
        have_coef = true;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          skip();
          if (pos_ >= s_.size() || s_[pos_] != 't') fail("expected variable after '*'");
        }
      }
      std::vector<std::pair<std::size_t, long>> factors;
      while (pos_ < s_.size() && s_[pos_] == 't') {
        ++pos_;
        std::size_t var = 0;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          var = std::stoul(read_digits());
          if (var == 0) fail("variables are numbered from t1");
          max_var = std::max(max_var, var);
          --var;
        } else {
          plain_t = true;
        }
        long power = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip();
          bool neg = false;
          if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
          }
          if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected exponent");
          power = std::stol(read_digits());
          if (neg) power = -power;
        }
        factors.emplace_back(var, power);
        skip();
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          skip();
          if (pos_ >= s_.size() || s_[pos_] != 't') fail("expected variable after '*'");
        }
      }
      if (!have_coef && factors.empty()) fail("expected term");
      raw.emplace_back(std::move(factors), sign * coef);
    }
    std::size_t n = nvars_.value_or(std::max<std::size_t>(max_var, 1));
    if (plain_t && max_var > 1) fail("cannot mix 't' with numbered variables");
    if (max_var > n) fail("variable index exceeds ring dimension");
    LaurentPoly p(n);
    for (const auto& [factors, c] : raw) {
      Exponent e(n, 0);
      for (const auto& [v, k] : factors) {
        if (n == 0) fail("constant ring has no variables");
        e[v] += k;
      }
      p.add_term(e, c);
    }
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string read_digits() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in polynomial '" + std::string(s_) + "'", 1, pos_ + 1);
  }

  std::string_view s_;
  std::optional<std::size_t> nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `3*t1^2*t2^-1 - t1 + 5` or `1 + t - t^-2`. Without an explicit
/// ring dimension, `t` means one variable and `tk` means at least k.
inline LaurentPoly parse_laurent(std::string_view text,
                                 std::optional<std::size_t> nvars = std::nullopt) {
  return detail::LaurentParser(text, nvars).parse();
}

}  // namespace fibered
