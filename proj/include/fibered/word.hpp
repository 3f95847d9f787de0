#pragma once

#include <compare>
#include <cstddef>
#include <cstdlib>
#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fibered/errors.hpp"

namespace fibered {

/// One syllable x_gen^exp of a free-group word.
struct Letter {
  std::size_t gen = 0;
  long exp = 1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class Word;
Word free_reduce(std::span<const Letter> letters);

/// Freely reduced word in the generators x_0, ..., x_{p-1}.
///
/// Adjacent syllables always have distinct generators and no syllable has a
/// zero exponent, so two words are equal as group elements of the free group
/// iff they compare equal.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> letters) { *this = free_reduce(letters); }
  Word(std::initializer_list<Letter> letters)
      : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  static Word generator(std::size_t gen, long exp = 1) {
    return Word({Letter{gen, exp}});
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t syllables() const noexcept { return letters_.size(); }

  /// Length as a sequence of x_i^{+-1}.
  std::size_t length() const noexcept {
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(std::labs(l.exp));
    return n;
  }

  std::size_t max_generator() const noexcept {
    std::size_t m = 0;
    for (const auto& l : letters_) m = std::max(m, l.gen + 1);
    return m;
  }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back({it->gen, -it->exp});
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> all(a.letters_);
    all.insert(all.end(), b.letters_.begin(), b.letters_.end());
    return free_reduce(all);
  }

  /// Expanded into unit syllables x_i^{+-1}.
  std::vector<Letter> expanded() const {
    std::vector<Letter> out;
    out.reserve(length());
    for (const auto& l : letters_) {
      const long step = l.exp > 0 ? 1 : -1;
      for (long k = 0; k < std::labs(l.exp); ++k) out.push_back({l.gen, step});
    }
    return out;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
      if (!s.empty()) s += ' ';
      s += l.gen < names.size() ? names[l.gen] : "x" + std::to_string(l.gen);
      if (l.exp != 1) s += '^' + std::to_string(l.exp);
    }
    return s;
  }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend Word free_reduce(std::span<const Letter> letters);
  std::vector<Letter> letters_;
};

/// Canonical freely reduced form: merges adjacent powers of the same
/// generator and drops zero exponents, using a stack so that cancellation
/// cascades (x y y^-1 x^-1 reduces to the empty word).
inline Word free_reduce(std::span<const Letter> letters) {
  Word w;
  auto& st = w.letters_;
  for (const auto& l : letters) {
    if (l.exp == 0) continue;
    if (!st.empty() && st.back().gen == l.gen) {
      st.back().exp += l.exp;
      if (st.back().exp == 0) st.pop_back();
    } else {
      st.push_back(l);
    }
  }
  return w;
}

}  // namespace fibered
