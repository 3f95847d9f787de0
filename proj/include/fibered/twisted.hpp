#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fibered/abelianize.hpp"
#include "fibered/determinant.hpp"
#include "fibered/fox.hpp"
#include "fibered/laurent_algebra.hpp"
#include "fibered/quotients.hpp"
#include "fibered/weight.hpp"

namespace fibered {

/// alpha(g) = t^{psi(g)} * P(phi(g)) as a |Q| x |Q| matrix.
inline LaurentMatrix alpha(const Word& g, const Character& psi, const FiniteQuotient& fq) {
  const std::size_t n = fq.order();
  LaurentMatrix m = zero_matrix(n, n, psi.rank);
  const auto act = fq.left_action(fq.evaluate(g));
  const LaurentPoly mono = LaurentPoly::monomial(psi.apply(g));
  for (std::size_t j = 0; j < n; ++j) m(act[j], j) = mono;
  return m;
}

inline LaurentMatrix alpha(const FreeGroupRingElement& x, const Character& psi,
                           const FiniteQuotient& fq) {
  const std::size_t n = fq.order();
  LaurentMatrix m = zero_matrix(n, n, psi.rank);
  for (const auto& [w, c] : x.terms()) {
    const auto act = fq.left_action(fq.evaluate(w));
    const Exponent e = psi.apply(w);
    for (std::size_t j = 0; j < n; ++j) m(act[j], j).add_term(e, c);
  }
  return m;
}

struct TwistedMatrix {
  LaurentMatrix matrix;  // (q |Q|) x ((p-1) |Q|)
  std::size_t deleted = 0;
  std::size_t block = 1;
  std::size_t nvars = 0;
};

/// Index of the first generator with nonzero u-value.
inline std::size_t first_deletable_generator(const Character& psi, const WeightFunctional& u) {
  for (std::size_t i = 0; i < psi.images.size(); ++i)
    if (!is_zero(u.value(psi.images[i]))) return i;
  throw NoDeletableGenerator();
}

inline std::vector<std::size_t> deletable_generators(const Character& psi, const WeightFunctional& u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < psi.images.size(); ++i)
    if (!is_zero(u.value(psi.images[i]))) out.push_back(i);
  return out;
}

/// Block (j, m) = alpha(d r_j / d x_m) for m != deleted. Each Fox term is a
/// monomial times a permutation, so entries are written directly.
inline TwistedMatrix twisted_alexander_matrix(const GroupPresentation& pres, const Character& psi,
                                              const FiniteQuotient& fq, std::size_t deleted) {
  const std::size_t p = pres.num_generators(), q = pres.num_relators();
  if (deleted >= p) throw IndexOutOfRange("deleted generator out of range");
  if (psi.images.size() != p) throw DimensionMismatch("psi does not match the presentation");
  const std::size_t n = fq.order();
  TwistedMatrix tm{zero_matrix(q * n, (p - 1) * n, psi.rank), deleted, n, psi.rank};
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t m = 0, col = 0; m < p; ++m) {
      if (m == deleted) continue;
      const auto d = fox_derivative(pres.relators[j], m, p);
      for (const auto& [w, c] : d.terms()) {
        const auto act = fq.left_action(fq.evaluate(w));
        const Exponent e = psi.apply(w);
        for (std::size_t k = 0; k < n; ++k) tm.matrix(j * n + act[k], col * n + k).add_term(e, c);
      }
      ++col;
    }
  }
  return tm;
}

enum class Verdict { Monic, NonMonic, Zero };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Monic:
      return "Monic";
    case Verdict::NonMonic:
      return "NonMonic";
    case Verdict::Zero:
      return "Zero";
  }
  return "?";
}

inline constexpr const char* kOrderCaveat =
    "order computed as ord(coker A_1), equal to the twisted Alexander polynomial up to a u-monic factor";

struct MonicityVerdict {
  Verdict verdict = Verdict::Zero;
  LaurentPoly order;         // unit-normalized
  LaurentPoly minimal_part;  // zero when order is zero
  bool caveat = true;
  std::size_t deleted = 0;
};

inline MonicityVerdict verdict_for(const LaurentPoly& order, const WeightFunctional& u,
                                   std::size_t deleted) {
  MonicityVerdict v;
  v.order = order;
  v.deleted = deleted;
  v.minimal_part = LaurentPoly(order.nvars());
  if (order.is_zero()) {
    v.verdict = Verdict::Zero;
    return v;
  }
  v.minimal_part = u_minimal_part(order, u);
  v.verdict = is_u_monic(order, u) ? Verdict::Monic : Verdict::NonMonic;
  return v;
}

/// Order of coker of the column-deleted twisted matrix, with its verdict.
inline MonicityVerdict twisted_order(const GroupPresentation& pres, const Character& psi,
                                     const FiniteQuotient& fq, const WeightFunctional& u,
                                     std::optional<std::size_t> deleted = std::nullopt) {
  if (u.dim() != psi.rank) throw DimensionMismatch("u and psi have different ranks");
  const std::size_t del = deleted ? *deleted : first_deletable_generator(psi, u);
  if (is_zero(u.value(psi.images.at(del))))
    throw InvariantViolation("deleted generator has u-value zero");
  const TwistedMatrix tm = twisted_alexander_matrix(pres, psi, fq, del);
  return verdict_for(maximal_minors_gcd(tm.matrix, tm.nvars), u, del);
}

/// Classical (multivariable) Alexander polynomial order: the trivial quotient.
inline MonicityVerdict alexander_order(const GroupPresentation& pres, const Character& psi,
                                       const WeightFunctional& u) {
  return twisted_order(pres, psi, trivial_quotient(pres.num_generators()), u);
}

/// t_i -> t^{w_i}.
inline LaurentPoly specialize(const LaurentPoly& a, const std::vector<long>& weights) {
  std::vector<Exponent> images;
  for (long w : weights) images.push_back(Exponent{w});
  return a.substitute(images);
}

struct ScanEntry {
  FiniteQuotient quotient;
  MonicityVerdict verdict;
  bool cached = false;  // same kernel as an earlier quotient
};

struct ScanReport {
  std::size_t degree_bound = 0;
  std::vector<ScanEntry> verdicts;
  std::optional<std::size_t> witness;  // position in verdicts

  bool not_fibered() const noexcept { return witness.has_value(); }
  std::string conclusion() const {
    if (witness) return "NOT fibered (certified)";
    return "no obstruction up to degree " + std::to_string(degree_bound) + " (consistent with fibered)";
  }
};

/// Runs twisted_order over enumerate_quotients(pres, max_degree) in
/// canonical order. A NonMonic or Zero verdict certifies that u is not
/// fibered; by default the scan stops at the first such witness. Quotients
/// with a kernel already seen reuse its verdict.
inline ScanReport fibered_obstruction_scan(const GroupPresentation& pres, const Character& psi,
                                           const WeightFunctional& u, std::size_t max_degree,
                                           bool stop_at_witness = true,
                                           std::size_t cap = kDefaultMaxDegree) {
  ScanReport rep;
  rep.degree_bound = max_degree;
  std::map<std::vector<std::vector<std::size_t>>, MonicityVerdict> cache;
  for (auto& fq : enumerate_quotients(pres, max_degree, cap)) {
    const auto sig = fq.kernel_signature();
    auto it = cache.find(sig);
    bool cached = it != cache.end();
    if (!cached) it = cache.emplace(sig, twisted_order(pres, psi, fq, u)).first;
    rep.verdicts.push_back({std::move(fq), it->second, cached});
    if (it->second.verdict != Verdict::Monic && !rep.witness) {
      rep.witness = rep.verdicts.size() - 1;
      if (stop_at_witness) break;
    }
  }
  return rep;
}

struct CrossCheck {
  MonicityVerdict group;     // twisted order of G for the quotient
  MonicityVerdict subgroup;  // Alexander order of H with u restricted
  SubgroupPresentation rs;

  bool agree() const noexcept {
    return (group.verdict == Verdict::Monic) == (subgroup.verdict == Verdict::Monic);
  }
};

/// Compares monicity of the twisted order for fq with that of the ordinary
/// order of H = ker(fq) computed from its Reidemeister-Schreier presentation.
inline CrossCheck subgroup_cross_check(const GroupPresentation& pres, const Character& psi,
                                       const FiniteQuotient& fq, const WeightFunctional& u) {
  CrossCheck cc{twisted_order(pres, psi, fq, u), {}, reidemeister_schreier(pres, fq, psi)};
  cc.subgroup = alexander_order(cc.rs.presentation, cc.rs.psi, u);
  return cc;
}

}  // namespace fibered
