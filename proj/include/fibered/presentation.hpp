#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fibered/errors.hpp"
#include "fibered/word.hpp"

namespace fibered {

/// Finite presentation <x_0, ..., x_{p-1} | r_0, ..., r_{q-1}>.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  /// Non-fatal notes from parsing, e.g. relators that reduce to the identity.
  std::vector<std::string> warnings;

  std::size_t num_generators() const noexcept { return generators.size(); }
  std::size_t num_relators() const noexcept { return relators.size(); }
  long deficiency() const noexcept {
    return static_cast<long>(generators.size()) - static_cast<long>(relators.size());
  }

  /// Renders in the same grammar parse_presentation accepts, one relator per line.
  std::string to_text() const {
    std::string s = "gens:";
    for (const auto& g : generators) s += ' ' + g;
    s += "\nrels:\n";
    for (const auto& r : relators)
      s += "  " + (r.empty() ? generators.front() + "^0" : r.to_string(generators)) + '\n';
    return s;
  }

  /// FNV-1a of to_text(); stable across platforms.
  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : to_text()) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

namespace detail {

inline bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  GroupPresentation parse() {
    GroupPresentation pres;
    bool seen_gens = false;
    bool in_rels = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      std::string_view line = text_.substr(pos, end - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      parse_line(pres, line, line_no, seen_gens, in_rels);
      pos = end + 1;
    }
    if (!seen_gens) throw ParseError("missing 'gens:' line", line_no, 1);
    if (!in_rels) throw ParseError("missing 'rels:' line", line_no, 1);
    return pres;
  }

 private:
  void parse_line(GroupPresentation& pres, std::string_view line, std::size_t line_no,
                  bool& seen_gens, bool& in_rels) {
    std::size_t col = skip_ws(line, 0);
    if (col >= line.size()) return;
    if (line.substr(col, 5) == "gens:") {
      if (seen_gens) throw ParseError("duplicate 'gens:' line", line_no, col + 1);
      seen_gens = true;
      parse_gens(pres, line, col + 5, line_no);
      return;
    }
    if (line.substr(col, 5) == "rels:") {
      if (!seen_gens) throw ParseError("'rels:' before 'gens:'", line_no, col + 1);
      if (in_rels) throw ParseError("duplicate 'rels:' line", line_no, col + 1);
      in_rels = true;
      parse_relators(pres, line, col + 5, line_no);
      return;
    }
    if (!in_rels) throw ParseError("expected 'gens:' or 'rels:'", line_no, col + 1);
    parse_relators(pres, line, col, line_no);
  }

  static std::size_t skip_ws(std::string_view s, std::size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
  }

  static void parse_gens(GroupPresentation& pres, std::string_view line, std::size_t i,
                         std::size_t line_no) {
    while (true) {
      i = skip_ws(line, i);
      if (i >= line.size()) break;
      if (!is_ident_start(line[i])) throw ParseError("expected generator name", line_no, i + 1);
      std::size_t j = i;
      while (j < line.size() && is_ident_char(line[j])) ++j;
      std::string name(line.substr(i, j - i));
      for (const auto& g : pres.generators)
        if (g == name) throw ParseError("duplicate generator '" + name + "'", line_no, i + 1);
      pres.generators.push_back(std::move(name));
      i = j;
    }
    if (pres.generators.empty()) throw ParseError("empty generator list", line_no, line.size() + 1);
  }

  // Relators on one line are separated by ',' or ';'; every line after
  // 'rels:' starts a new relator.
  static void parse_relators(GroupPresentation& pres, std::string_view line, std::size_t i,
                             std::size_t line_no) {
    std::vector<Letter> letters;
    bool have_tokens = false;
    auto flush = [&](std::size_t at) {
      if (!have_tokens) return;
      Word w = free_reduce(letters);
      if (w.empty())
        pres.warnings.push_back("line " + std::to_string(line_no) + ", column " +
                                std::to_string(at) + ": trivial relator (reduces to identity)");
      pres.relators.push_back(std::move(w));
      letters.clear();
      have_tokens = false;
    };
    while (true) {
      i = skip_ws(line, i);
      if (i >= line.size()) break;
      if (line[i] == ',' || line[i] == ';') {
        if (!have_tokens) throw ParseError("empty relator", line_no, i + 1);
        flush(i + 1);
        ++i;
        continue;
      }
      if (!is_ident_start(line[i])) throw ParseError("expected generator name", line_no, i + 1);
      const std::size_t start = i;
      std::size_t j = i;
      while (j < line.size() && is_ident_char(line[j])) ++j;
      std::string_view name = line.substr(i, j - i);
      std::size_t gen = pres.generators.size();
      for (std::size_t g = 0; g < pres.generators.size(); ++g)
        if (pres.generators[g] == name) gen = g;
      if (gen == pres.generators.size())
        throw ParseError("unknown generator '" + std::string(name) + "'", line_no, start + 1);
      long exp = 1;
      if (j < line.size() && line[j] == '^') {
        std::size_t k = j + 1;
        bool neg = false;
        if (k < line.size() && (line[k] == '-' || line[k] == '+')) {
          neg = line[k] == '-';
          ++k;
        }
        const std::size_t digits = k;
        long value = 0;
        while (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) {
          value = value * 10 + (line[k] - '0');
          if (value > 1000000) throw ParseError("exponent too large", line_no, digits + 1);
          ++k;
        }
        if (k == digits) throw ParseError("expected integer exponent", line_no, digits + 1);
        exp = neg ? -value : value;
        j = k;
      }
      if (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
          line[j] != ',' && line[j] != ';')
        throw ParseError("unexpected character '" + std::string(1, line[j]) + "'", line_no, j + 1);
      letters.push_back({gen, exp});
      have_tokens = true;
      i = j;
    }
    flush(line.size() + 1);
  }

  std::string_view text_;
};

}  // namespace detail

/// Parses the presentation grammar:
///
///     # comment
///     gens: x y
///     rels: x y x y^-1 x^-1 y^-1
///
/// Each line after `rels:` holds one relator; `,` or `;` separate several
/// relators on one line. Relators are stored freely reduced.
inline GroupPresentation parse_presentation(std::string_view text) {
  return detail::PresentationParser(text).parse();
}

}  // namespace fibered
