#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grammalc/alphabet.hpp"
#include "grammalc/error.hpp"
#include "grammalc/expr.hpp"
#include "grammalc/integer.hpp"
#include "grammalc/laurent_poly.hpp"

namespace grammalc {

/// A set of substitution rules letter -> Laurent polynomial. Letters without a
/// rule are constants for the induced derivative D.
class Grammar {
 public:
  Grammar(AlphabetPtr alphabet, const std::vector<std::pair<std::string, LaurentPoly>>& rules,
          std::string name = {}, std::string note = {})
      : alphabet_(std::move(alphabet)),
        rules_(alphabet_->size()),
        name_(std::move(name)),
        note_(std::move(note)) {
    for (const auto& [letter, body] : rules) {
      if (!same_alphabet(body.alphabet_ptr(), alphabet_)) throw AlphabetMismatch();
      const std::size_t i = alphabet_->index_of(letter);
      if (rules_[i]) throw Error("duplicate rule for letter '" + letter + "'");
      rules_[i] = body;
    }
  }

  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const std::string& name() const noexcept { return name_; }
  const std::string& note() const noexcept { return note_; }

  const std::optional<LaurentPoly>& rule(std::size_t letter) const { return rules_.at(letter); }
  const std::optional<LaurentPoly>& rule(std::string_view letter) const {
    return rules_.at(alphabet_->index_of(letter));
  }

  LaurentPoly parse(std::string_view text) const { return parse_expr(text, alphabet_); }

 private:
  AlphabetPtr alphabet_;
  std::vector<std::optional<LaurentPoly>> rules_;
  std::string name_;
  std::string note_;
};

/// The formal derivative: D(m) = sum_v e_v * m / v * rule(v), extended linearly.
/// Signed exponents make this the right rule on Laurent monomials too.
inline LaurentPoly derive(const Grammar& g, const LaurentPoly& p) {
  if (!same_alphabet(p.alphabet_ptr(), g.alphabet_ptr())) throw AlphabetMismatch();
  LaurentPoly out(g.alphabet_ptr());
  const std::size_t nvars = g.alphabet().size();
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t v = 0; v < nvars; ++v) {
      const int e = m[v];
      const auto& body = g.rule(v);
      if (e == 0 || !body) continue;
      const Monomial lowered = m.shifted(v, -1);
      const Integer scale = c * e;
      for (const auto& [rm, rc] : body->terms()) out.add_term(lowered * rm, scale * rc);
    }
  }
  return out;
}

inline LaurentPoly derive_n(const Grammar& g, LaurentPoly p, unsigned n) {
  if (!same_alphabet(p.alphabet_ptr(), g.alphabet_ptr())) throw AlphabetMismatch();
  for (unsigned i = 0; i < n && !p.is_zero(); ++i) p = derive(g, p);
  return p;
}

/// D^0(p), ..., D^n(p).
inline std::vector<LaurentPoly> derive_sequence(const Grammar& g, const LaurentPoly& p, unsigned n) {
  if (!same_alphabet(p.alphabet_ptr(), g.alphabet_ptr())) throw AlphabetMismatch();
  std::vector<LaurentPoly> out;
  out.reserve(n + 1);
  out.push_back(p);
  for (unsigned i = 1; i <= n; ++i) out.push_back(derive(g, out.back()));
  return out;
}

/// sum_k C(n,k) D^k(u) D^(n-k)(v); equals derive_n(g, u*v, n).
inline LaurentPoly leibniz_expand(const Grammar& g, const LaurentPoly& u, const LaurentPoly& v, unsigned n) {
  const auto du = derive_sequence(g, u, n);
  const auto dv = derive_sequence(g, v, n);
  LaurentPoly out(g.alphabet_ptr());
  for (unsigned k = 0; k <= n; ++k) out += binomial(n, k) * (du[k] * dv[n - k]);
  return out;
}

inline bool is_constant(const Grammar& g, const LaurentPoly& p) { return derive(g, p).is_zero(); }

namespace alphabets {

inline const AlphabetPtr& dumont() {
  static const AlphabetPtr a = make_alphabet({"A", "S"});
  return a;
}

inline const AlphabetPtr& ramanujan_shor() {
  static const AlphabetPtr a = make_alphabet({"a", "x", "y", "w"});
  return a;
}

inline const AlphabetPtr& abel() {
  static const AlphabetPtr a = make_alphabet({"a1", "a2", "x1", "x2", "y", "w"});
  return a;
}

}  // namespace alphabets

namespace detail {

inline Grammar make_grammar(const AlphabetPtr& alpha,
                            std::initializer_list<std::pair<const char*, const char*>> rules,
                            std::string name, std::string note = {}) {
  std::vector<std::pair<std::string, LaurentPoly>> parsed;
  for (const auto& [head, body] : rules) parsed.emplace_back(head, parse_expr(body, alpha));
  return Grammar(alpha, parsed, std::move(name), std::move(note));
}

}  // namespace detail

/// Built-in grammars: "G" (A,S), "H" (a,x,y,w) and "Hprime" (a1,a2,x1,x2,y,w).
inline const Grammar& builtin(std::string_view name) {
  static const Grammar g = detail::make_grammar(alphabets::dumont(),
                                                {{"A", "A^3*S"}, {"S", "A*S^2"}}, "G");
  static const Grammar h = detail::make_grammar(
      alphabets::ramanujan_shor(),
      {{"a", "a*x*y"}, {"x", "x*y*w"}, {"y", "y^3*w"}, {"w", "y*w^2"}}, "H",
      "the rule w -> y*w^2 is sometimes printed as t -> y*w^2; t is read as w");
  static const Grammar hp = detail::make_grammar(
      alphabets::abel(),
      {{"a1", "a1*x1*y"},
       {"a2", "a2*x2*y"},
       {"x1", "x1*y*w"},
       {"x2", "x2*y*w"},
       {"y", "y^3*w"},
       {"w", "y*w^2"}},
      "Hprime");
  if (name == "G") return g;
  if (name == "H") return h;
  if (name == "Hprime" || name == "H'") return hp;
  throw Error("unknown builtin grammar '" + std::string(name) + "'");
}

/// Grammar DSL: one `letter -> expression` rule per line, `#` starts a comment.
/// The alphabet is every identifier in order of first appearance.
inline Grammar parse_grammar(std::string_view text, std::string name = {}) {
  struct Line {
    std::string head;
    std::string body;
    std::size_t offset;
  };
  std::vector<Line> lines;
  std::vector<std::string> letters;
  auto remember = [&letters](const std::vector<std::string>& found) {
    for (const auto& n : found) {
      bool seen = false;
      for (const auto& l : letters) seen = seen || l == n;
      if (!seen) letters.push_back(n);
    }
  };

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const auto arrow = line.find("->");
      if (arrow == std::string_view::npos) throw ParseError("expected '->'", start + first);
      std::string_view head = line.substr(0, arrow);
      const auto hb = head.find_first_not_of(" \t");
      const auto he = head.find_last_not_of(" \t");
      head = hb == std::string_view::npos ? std::string_view{} : head.substr(hb, he - hb + 1);
      if (head.empty() || scan_letters(head) != std::vector<std::string>{std::string(head)}) {
        throw ParseError("rule head must be a single letter", start + first);
      }
      std::string body(line.substr(arrow + 2));
      remember({std::string(head)});
      remember(scan_letters(body));
      lines.push_back({std::string(head), std::move(body), start + arrow + 2});
    }
    if (end == text.size()) break;
    start = end + 1;
  }

  AlphabetPtr alpha = make_alphabet(letters);
  std::vector<std::pair<std::string, LaurentPoly>> rules;
  for (const auto& l : lines) {
    try {
      rules.emplace_back(l.head, parse_expr(l.body, alpha));
    } catch (const ParseError& e) {
      throw ParseError("in rule for '" + l.head + "': " + e.what(), l.offset + e.position());
    }
  }
  return Grammar(alpha, rules, std::move(name));
}

}  // namespace grammalc
