#pragma once

#include <vector>

#include "fibered/determinant.hpp"

namespace fibered {

/// Module over Z[t^{+-1}] presented as coker(R^q -> R^p, v -> v A): rows of
/// the q x p matrix A are the relations among p generators.
struct ModulePresentation {
  LaurentMatrix matrix;
  std::size_t nvars = 1;

  std::size_t num_relations() const noexcept { return matrix.rows(); }
  std::size_t num_generators() const noexcept { return matrix.cols(); }
};

/// All p-minors in lexicographic order of row subsets, deduplicated up to
/// unit; zero minors are dropped. Empty when q < p.
inline std::vector<LaurentPoly> fitting_generators(const ModulePresentation& mp) {
  std::vector<LaurentPoly> out;
  const auto& a = mp.matrix;
  if (a.rows() < a.cols()) return out;
  if (a.cols() == 0) return {LaurentPoly::one(mp.nvars)};
  std::vector<LaurentPoly> seen;
  for_each_subset(a.rows(), a.cols(), [&](const std::vector<std::size_t>& rows) {
    LaurentPoly d = det(a.select_rows(rows), mp.nvars);
    if (d.is_zero()) return true;
    LaurentPoly n = normalize(d);
    for (const auto& s : seen)
      if (s == n) return true;
    seen.push_back(n);
    out.push_back(std::move(n));
    return true;
  });
  return out;
}

/// gcd of the Fitting generators, unit-normalized.
inline LaurentPoly order(const ModulePresentation& mp) {
  return maximal_minors_gcd(mp.matrix, mp.nvars);
}

struct AnnihilatorWitness {
  LaurentPoly minor;
  LaurentMatrix x;  // p x q, with X * A = minor * I_p
};

/// For the p-minor on the given rows, X = adj(A_rows) placed in those
/// columns and zero elsewhere; the identity X A = mu I is checked before
/// returning.
inline AnnihilatorWitness annihilator_witness(const ModulePresentation& mp,
                                              const std::vector<std::size_t>& rows) {
  const auto& a = mp.matrix;
  const std::size_t p = a.cols(), q = a.rows();
  if (q < p) throw DimensionMismatch("fewer relations than generators");
  if (rows.size() != p) throw DimensionMismatch("minor needs exactly p rows");
  for (auto r : rows)
    if (r >= q) throw IndexOutOfRange("minor row out of range");
  const LaurentMatrix sub = a.select_rows(rows);
  LaurentPoly mu = det(sub, mp.nvars);
  if (mu.is_zero()) throw ZeroMinor();
  const LaurentMatrix adj = adjugate(sub, mp.nvars);
  LaurentMatrix x = zero_matrix(p, q, mp.nvars);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < p; ++k) x(i, rows[k]) = adj(i, k);
  if (x * a != scaled(identity_matrix(p, mp.nvars), mu))
    throw InvariantViolation("annihilator witness failed X*A = mu*I");
  return {std::move(mu), std::move(x)};
}

}  // namespace fibered
