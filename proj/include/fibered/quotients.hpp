#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fibered/abelianize.hpp"
#include "fibered/presentation.hpp"

namespace fibered {

/// Permutation of {0, ..., k-1} in one-line notation: p[i] is the image of i.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(std::size_t k) {
  Permutation p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// (a * b)(i) = a(b(i)): apply b first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

inline Permutation inverse(const Permutation& a) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return c;
}

inline bool is_identity(const Permutation& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i)) return false;
  return true;
}

/// phi(w) for the homomorphism sending x_i to images[i]; phi(vw) = phi(v) * phi(w).
inline Permutation evaluate(const std::vector<Permutation>& images, std::span<const Letter> letters,
                            std::size_t degree) {
  Permutation acc = identity_permutation(degree);
  for (const auto& l : letters) {
    const Permutation& g = images.at(l.gen);
    const Permutation gi = l.exp < 0 ? inverse(g) : g;
    for (long k = 0; k < std::labs(l.exp); ++k) acc = compose(acc, gi);
  }
  return acc;
}

/// A homomorphism phi: G -> S_k together with the finite group Q = phi(G),
/// which stands in for the normal subgroup H = ker(phi) of index |Q|.
///
/// Elements of Q are labelled by breadth-first search from the identity,
/// multiplying on the left by the generator images in order; the labelling
/// (and hence every matrix built from it) depends only on the kernel.
class FiniteQuotient {
 public:
  FiniteQuotient(std::size_t degree, std::vector<Permutation> images)
      : degree_(degree), images_(std::move(images)) {
    for (const auto& g : images_)
      if (g.size() != degree_) throw DimensionMismatch("permutation has wrong degree");
    elements_.push_back(identity_permutation(degree_));
    index_.emplace(elements_[0], 0);
    for (std::size_t j = 0; j < elements_.size(); ++j)
      for (const auto& g : images_) {
        Permutation h = compose(g, elements_[j]);
        if (index_.try_emplace(h, elements_.size()).second) elements_.push_back(std::move(h));
      }
    left_.assign(images_.size(), std::vector<std::size_t>(elements_.size()));
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t j = 0; j < elements_.size(); ++j)
        left_[i][j] = index_of(compose(images_[i], elements_[j]));
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& images() const noexcept { return images_; }
  /// |Q| = [G : H].
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  std::size_t index_of(const Permutation& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) throw InvariantViolation("permutation outside the image group");
    return it->second;
  }

  Permutation evaluate(const Word& w) const {
    return fibered::evaluate(images_, std::span<const Letter>(w.letters()), degree_);
  }

  bool kills(const GroupPresentation& pres) const {
    for (const auto& r : pres.relators)
      if (!is_identity(evaluate(r))) return false;
    return true;
  }

  /// j -> label of g * e_j.
  std::vector<std::size_t> left_action(const Permutation& g) const {
    std::vector<std::size_t> out(order());
    for (std::size_t j = 0; j < order(); ++j) out[j] = index_of(compose(g, elements_[j]));
    return out;
  }

  /// j -> label of e_j * g (right cosets Hw correspond to phi(w)).
  std::vector<std::size_t> right_action(const Permutation& g) const {
    std::vector<std::size_t> out(order());
    for (std::size_t j = 0; j < order(); ++j) out[j] = index_of(compose(elements_[j], g));
    return out;
  }

  /// Generator left-multiplication tables in BFS labels. Two quotients have
  /// equal signatures iff their kernels coincide.
  const std::vector<std::vector<std::size_t>>& kernel_signature() const noexcept { return left_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> images_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::vector<std::size_t>> left_;
};

namespace detail {

inline std::vector<Permutation> all_permutations(std::size_t k) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(k);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

// One permutation per cycle type: consecutive blocks as cycles (0 1 .. m-1).
inline std::vector<Permutation> cycle_type_representatives(std::size_t k) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> cur;
  partitions(k, k, cur, parts);
  std::vector<Permutation> out;
  for (const auto& part : parts) {
    Permutation p(k);
    std::size_t start = 0;
    for (auto len : part) {
      for (std::size_t i = 0; i < len; ++i)
        p[start + i] = static_cast<int>(start + (i + 1) % len);
      start += len;
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has_common_fixed_point(const std::vector<Permutation>& images, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    bool fixed = true;
    for (const auto& g : images)
      if (g[i] != static_cast<int>(i)) {
        fixed = false;
        break;
      }
    if (fixed) return true;
  }
  return false;
}

class QuotientSearch {
 public:
  QuotientSearch(const GroupPresentation& pres, std::size_t k) : pres_(pres), k_(k) {
    perms_ = all_permutations(k);
    // A relator can be tested once its largest generator is assigned.
    by_last_.resize(pres.num_generators());
    for (const auto& r : pres.relators)
      if (!r.empty()) by_last_[r.max_generator() - 1].push_back(&r);
  }

  void run(std::vector<std::vector<Permutation>>& out) {
    const std::size_t p = pres_.num_generators();
    if (p == 0) return;
    images_.assign(p, Permutation());
    for (const auto& first : cycle_type_representatives(k_)) {
      images_[0] = first;
      if (!relators_hold(0)) continue;
      centralizer_.clear();
      centralizer_inv_.clear();
      for (const auto& c : perms_)
        if (compose(c, first) == compose(first, c)) {
          centralizer_.push_back(c);
          centralizer_inv_.push_back(inverse(c));
        }
      extend(1, out);
    }
  }

 private:
  bool relators_hold(std::size_t gen) const {
    for (const Word* r : by_last_[gen])
      if (!is_identity(evaluate(images_, std::span<const Letter>(r->letters()), k_))) return false;
    return true;
  }

  // Keeps only the lexicographically least tuple in its orbit under
  // conjugation by the centralizer of the first image.
  bool is_canonical() const {
    const std::size_t p = images_.size();
    for (std::size_t ci = 0; ci < centralizer_.size(); ++ci) {
      const auto& c = centralizer_[ci];
      const auto& cinv = centralizer_inv_[ci];
      for (std::size_t g = 1; g < p; ++g) {
        const Permutation conj = compose(compose(c, images_[g]), cinv);
        if (conj < images_[g]) return false;
        if (images_[g] < conj) break;
      }
    }
    return true;
  }

  void extend(std::size_t gen, std::vector<std::vector<Permutation>>& out) {
    if (gen == images_.size()) {
      if (k_ > 1 && has_common_fixed_point(images_, k_)) return;
      if (!is_canonical()) return;
      out.push_back(images_);
      return;
    }
    for (const auto& g : perms_) {
      images_[gen] = g;
      if (relators_hold(gen)) extend(gen + 1, out);
    }
  }

  const GroupPresentation& pres_;
  std::size_t k_;
  std::vector<Permutation> perms_;
  std::vector<std::vector<const Word*>> by_last_;
  std::vector<Permutation> images_;
  std::vector<Permutation> centralizer_, centralizer_inv_;
};

}  // namespace detail

inline constexpr std::size_t kDefaultMaxDegree = 7;

/// All homomorphisms G -> S_k, 1 <= k <= max_degree, up to conjugation in
/// S_k. Homomorphisms whose images share a fixed point are omitted for
/// k > 1, since they already occur in lower degree; in particular the
/// trivial quotient appears exactly once. Sorted by degree, then images.
inline std::vector<FiniteQuotient> enumerate_quotients(const GroupPresentation& pres,
                                                       std::size_t max_degree,
                                                       std::size_t cap = kDefaultMaxDegree) {
  if (max_degree > cap)
    throw BoundExceeded("max degree " + std::to_string(max_degree) + " exceeds cap " +
                        std::to_string(cap));
  std::vector<FiniteQuotient> out;
  for (std::size_t k = 1; k <= max_degree; ++k) {
    std::vector<std::vector<Permutation>> found;
    detail::QuotientSearch(pres, k).run(found);
    std::sort(found.begin(), found.end());
    for (auto& imgs : found) out.emplace_back(k, std::move(imgs));
  }
  return out;
}

/// The trivial quotient Q = 1 (H = G).
inline FiniteQuotient trivial_quotient(std::size_t num_generators) {
  return FiniteQuotient(1, std::vector<Permutation>(num_generators, Permutation{0}));
}

/// Integer 0/1 matrix of left multiplication by phi(g) on Q, with the
/// column convention P[g e_j][j] = 1 so that P(vw) = P(v) P(w).
using PermutationMatrix = std::vector<std::vector<int>>;

inline PermutationMatrix permutation_matrix(const FiniteQuotient& fq, const Permutation& g) {
  const std::size_t n = fq.order();
  PermutationMatrix m(n, std::vector<int>(n, 0));
  const auto act = fq.left_action(g);
  for (std::size_t j = 0; j < n; ++j) m[act[j]][j] = 1;
  return m;
}

inline std::vector<PermutationMatrix> regular_representation(const FiniteQuotient& fq) {
  std::vector<PermutationMatrix> out;
  for (const auto& g : fq.images()) out.push_back(permutation_matrix(fq, g));
  return out;
}

/// Presentation of H = ker(phi) obtained by Reidemeister-Schreier rewriting.
struct SubgroupPresentation {
  GroupPresentation presentation;
  /// Schreier generator s as a word in the generators of G.
  std::vector<Word> inclusion;
  /// psi restricted to H, written on the Schreier generators.
  Character psi;
  /// Right coset representatives, one per element of Q.
  std::vector<Word> transversal;
};

/// Schreier transversal by BFS on the coset graph (edges x_i and x_i^-1 in
/// generator order); generators are the non-tree edges
/// s_{c,i} = T_c x_i T_{c x_i}^-1; relators are the rewrites of T_c r_j T_c^-1.
inline SubgroupPresentation reidemeister_schreier(const GroupPresentation& pres,
                                                  const FiniteQuotient& fq, const Character& psi) {
  const std::size_t p = pres.num_generators();
  const std::size_t n = fq.order();
  std::vector<std::vector<std::size_t>> right(p), right_inv(p);
  for (std::size_t i = 0; i < p; ++i) {
    right[i] = fq.right_action(fq.images()[i]);
    right_inv[i] = fq.right_action(inverse(fq.images()[i]));
  }
  std::vector<Word> tr(n);
  std::vector<bool> seen(n, false);
  // tree[c][i]: edge c --x_i--> c x_i belongs to the spanning tree.
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(p, false));
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::size_t c = queue[qi];
    for (std::size_t i = 0; i < p; ++i) {
      for (int sign : {1, -1}) {
        const std::size_t d = sign > 0 ? right[i][c] : right_inv[i][c];
        if (seen[d]) continue;
        seen[d] = true;
        tr[d] = tr[c] * Word::generator(i, sign);
        if (sign > 0)
          tree[c][i] = true;
        else
          tree[d][i] = true;
        queue.push_back(d);
      }
    }
  }

  SubgroupPresentation sp;
  sp.transversal = tr;
  sp.psi.rank = psi.rank;
  std::vector<std::vector<std::size_t>> gen_of(n, std::vector<std::size_t>(p, SIZE_MAX));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < p; ++i) {
      if (tree[c][i]) continue;
      const std::size_t d = right[i][c];
      Word s = tr[c] * Word::generator(i) * tr[d].inverse();
      gen_of[c][i] = sp.presentation.generators.size();
      sp.presentation.generators.push_back(pres.generators[i] + "_" + std::to_string(c));
      sp.psi.images.push_back(psi.apply(s));
      sp.inclusion.push_back(std::move(s));
    }
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& r : pres.relators) {
      std::vector<Letter> out;
      std::size_t cur = c;
      for (const auto& l : r.expanded()) {
        if (l.exp > 0) {
          if (gen_of[cur][l.gen] != SIZE_MAX) out.push_back({gen_of[cur][l.gen], 1});
          cur = right[l.gen][cur];
        } else {
          const std::size_t prev = right_inv[l.gen][cur];
          if (gen_of[prev][l.gen] != SIZE_MAX) out.push_back({gen_of[prev][l.gen], -1});
          cur = prev;
        }
      }
      if (cur != c) throw InvariantViolation("relator does not lie in the kernel");
      sp.presentation.relators.push_back(free_reduce(out));
    }
  return sp;
}

}  // namespace fibered
