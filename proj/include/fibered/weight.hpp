#pragma once

#include <compare>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fibered/abelianize.hpp"
#include "fibered/bigint.hpp"
#include "fibered/exponent.hpp"
#include "fibered/presentation.hpp"

namespace fibered {

/// A u-value: one rational per row of the weight functional, ordered
/// lexicographically. Sums of levels are componentwise.
using Level = std::vector<Rational>;

inline Level operator+(Level a, const Level& b) {
  if (a.size() != b.size()) throw DimensionMismatch("level length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline Level operator-(Level a, const Level& b) {
  if (a.size() != b.size()) throw DimensionMismatch("level length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline Level scaled(Level a, long k) {
  for (auto& x : a) x *= k;
  return a;
}
inline bool is_zero(const Level& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}
inline bool is_positive(const Level& a) {
  for (const auto& x : a) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

inline std::string to_string(const Level& l) {
  if (l.size() == 1) return l[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ",";
    s += l[i].get_str();
  }
  return s + ")";
}

/// Cutoff level; std::nullopt stands for +infinity (exact polynomial).
using Cutoff = std::optional<Level>;

inline bool level_le(const Level& a, const Cutoff& c) { return !c || !(*c < a); }

inline Cutoff min_cutoff(const Cutoff& a, const Cutoff& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

inline Cutoff shift(const Cutoff& c, const Level& d) {
  if (!c) return c;
  return *c + d;
}

/// The class u as an ordered list of rational functionals on Z^r; u-values
/// are compared lexicographically across rows. A single row is an ordinary
/// real-valued class with rational weights.
class WeightFunctional {
 public:
  WeightFunctional() = default;
  WeightFunctional(std::size_t dim, std::vector<std::vector<Rational>> rows)
      : dim_(dim), rows_(std::move(rows)) {
    bool nonzero = false;
    for (auto& row : rows_) {
      if (row.size() != dim_)
        throw DimensionMismatch("weight row has length " + std::to_string(row.size()) +
                                ", expected " + std::to_string(dim_));
      for (auto& x : row) {
        x.canonicalize();
        if (x != 0) nonzero = true;
      }
    }
    if (!nonzero) throw ZeroFunctional();
  }

  static WeightFunctional from_integers(std::vector<std::vector<long>> rows) {
    std::size_t dim = rows.empty() ? 0 : rows[0].size();
    std::vector<std::vector<Rational>> q;
    for (auto& row : rows) q.emplace_back(row.begin(), row.end());
    return WeightFunctional(dim, std::move(q));
  }

  /// Identity rows: the lexicographic order on Z^r.
  static WeightFunctional lexicographic(std::size_t dim) {
    std::vector<std::vector<long>> rows(dim, std::vector<long>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) rows[i][i] = 1;
    return from_integers(std::move(rows));
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }

  Level value(const Exponent& e) const {
    if (e.size() != dim_) throw DimensionMismatch("exponent length does not match weight dimension");
    Level v(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Rational s = 0;
      for (std::size_t i = 0; i < dim_; ++i)
        if (e[i] != 0) s += rows_[k][i] * e[i];
      v[k] = s;
    }
    return v;
  }

  Level zero_level() const { return Level(rows_.size(), Rational(0)); }

  /// The first row as a primitive integer vector (positive multiple), used to
  /// specialize multivariable polynomials to one variable.
  std::vector<long> primitive_first_row() const {
    Integer den = 1;
    for (const auto& x : rows_.front()) den = lcm(den, x.get_den());
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& x : rows_.front()) {
      Integer v = x.get_num() * (den / x.get_den());
      ints.push_back(v);
      g = gcd(g, v);
    }
    std::vector<long> out;
    for (auto& v : ints) out.push_back((g == 0 ? v : Integer(v / g)).get_si());
    return out;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k) s += ";";
      for (std::size_t i = 0; i < dim_; ++i) {
        if (i) s += ",";
        s += rows_[k][i].get_str();
      }
    }
    return s + "]";
  }

  friend bool operator==(const WeightFunctional& a, const WeightFunctional& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<Rational>> rows_;
};

/// Validates u given as rows over the free part Z^r of H_1. Since u is
/// evaluated through psi it kills relators automatically; the check is kept
/// as an explicit invariant.
inline WeightFunctional validate_u(const GroupPresentation& pres, const AbelianizationData& ab,
                                   std::vector<std::vector<Rational>> rows) {
  WeightFunctional u(ab.rank(), std::move(rows));
  for (const auto& r : pres.relators)
    if (!is_zero(u.value(ab.psi.apply(r))))
      throw InvariantViolation("u does not vanish on relator " + r.to_string(pres.generators));
  return u;
}

/// Parses "1,0;0,1" (rows separated by ';', entries by ',', rationals "a/b").
inline std::vector<std::vector<Rational>> parse_weight_rows(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Rational> vals;
    std::stringstream es(row);
    std::string tok;
    while (std::getline(es, tok, ',')) {
      auto b = tok.find_first_not_of(" \t");
      auto e = tok.find_last_not_of(" \t");
      if (b == std::string::npos) throw ParseError("empty weight entry", 1, 1);
      try {
        vals.push_back(parse_rational(tok.substr(b, e - b + 1)));
      } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational '" + tok + "'", 1, 1);
      }
    }
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw ParseError("empty weight functional", 1, 1);
  return rows;
}

/// Parses a level "3" or "3,0" (componentwise, compared lexicographically).
inline Level parse_level(const std::string& text) {
  auto rows = parse_weight_rows(text);
  if (rows.size() != 1) throw ParseError("level must be a single comma-separated tuple", 1, 1);
  return rows[0];
}

}  // namespace fibered
