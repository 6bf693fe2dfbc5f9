#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grammalc/alphabet.hpp"
#include "grammalc/error.hpp"
#include "grammalc/integer.hpp"
#include "grammalc/monomial.hpp"

namespace grammalc {

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept in an unordered map; zero coefficients are never stored, so
/// two values are equal exactly when their term maps agree. Ordering is only
/// imposed when printing (see canonical_less).
class LaurentPoly {
 public:
  using TermMap = std::unordered_map<Monomial, Integer, MonomialHash>;

  explicit LaurentPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  static LaurentPoly constant(AlphabetPtr alphabet, const Integer& c) {
    LaurentPoly p(std::move(alphabet));
    p.add_term(Monomial(p.alphabet_->size()), c);
    return p;
  }

  static LaurentPoly term(AlphabetPtr alphabet, Monomial m, const Integer& c = 1) {
    LaurentPoly p(std::move(alphabet));
    p.add_term(m, c);
    return p;
  }

  static LaurentPoly letter(AlphabetPtr alphabet, std::string_view name, int exp = 1) {
    const std::size_t i = alphabet->index_of(name);
    Monomial m = Monomial(alphabet->size()).with(i, exp);
    return term(std::move(alphabet), std::move(m));
  }

  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Returns the (monomial, coefficient) pairs in print order.
  std::vector<std::pair<Monomial, Integer>> sorted_terms() const {
    std::vector<std::pair<Monomial, Integer>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
  }

  /// Accumulates c*m, erasing the entry if it cancels.
  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    require_same(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& other) {
    require_same(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }

  LaurentPoly& operator*=(const Integer& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& entry : terms_) entry.second *= c;
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Integer(-1); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same(b);
    LaurentPoly out(a.alphabet_);
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }

  LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return same_alphabet(a.alphabet_, b.alphabet_) && a.terms_ == b.terms_;
  }

  void require_same(const LaurentPoly& other) const {
    if (!same_alphabet(alphabet_, other.alphabet_)) throw AlphabetMismatch();
  }

 private:
  AlphabetPtr alphabet_;
  TermMap terms_;
};

inline LaurentPoly pow(const LaurentPoly& p, unsigned n) {
  LaurentPoly result = LaurentPoly::constant(p.alphabet_ptr(), 1);
  LaurentPoly base = p;
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n != 0) base *= base;
  }
  return result;
}

/// Canonical rendering, e.g. "2*A^3*S^3 + 4*A^4*S^3 + 3*A^5*S^3" or "x*w^-1".
inline std::string canonical_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms()) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += p.alphabet().name(i);
      if (m[i] != 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << canonical_text(p);
}

/// Exact partial evaluation. Letters sent to a value other than +-1 must carry
/// a nonnegative exponent in every term; the result lives over the letters
/// that were not assigned (original order kept).
inline LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, Integer>& assignment) {
  const Alphabet& alpha = p.alphabet();
  std::vector<std::optional<Integer>> value(alpha.size());
  for (const auto& [name, v] : assignment) value[alpha.index_of(name)] = v;

  std::vector<std::string> kept;
  std::vector<std::size_t> kept_index;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!value[i]) {
      kept.push_back(alpha.name(i));
      kept_index.push_back(i);
    }
  }
  AlphabetPtr target = kept.size() == alpha.size() ? p.alphabet_ptr() : make_alphabet(kept);

  LaurentPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    Integer coeff = c;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (!value[i] || m[i] == 0) continue;
      const Integer& v = *value[i];
      if (m[i] < 0) {
        if (v == 1) continue;
        if (v == -1) {
          if ((-m[i]) % 2 != 0) coeff = -coeff;
          continue;
        }
        throw EvaluationError("cannot evaluate " + alpha.name(i) + "^" + std::to_string(m[i]) +
                              " at " + to_string(v) + " inside integer Laurent polynomials");
      }
      coeff *= ipow(v, static_cast<unsigned>(m[i]));
    }
    std::vector<int> exps(kept_index.size());
    for (std::size_t j = 0; j < kept_index.size(); ++j) exps[j] = m[kept_index[j]];
    out.add_term(Monomial(std::move(exps)), coeff);
  }
  return out;
}

/// Splits p by powers of `letter`: p = sum_e letter^e * part_e, parts sorted
/// by e. Each part is over the same alphabet with zero exponent on `letter`.
inline std::vector<std::pair<int, LaurentPoly>> collect(const LaurentPoly& p, std::string_view letter) {
  const std::size_t idx = p.alphabet().index_of(letter);
  std::map<int, LaurentPoly> buckets;
  for (const auto& [m, c] : p.terms()) {
    auto it = buckets.try_emplace(m[idx], p.alphabet_ptr()).first;
    it->second.add_term(m.with(idx, 0), c);
  }
  if (buckets.empty()) return {{0, LaurentPoly(p.alphabet_ptr())}};
  return {buckets.begin(), buckets.end()};
}

/// Moves p onto `target`, sending each letter to `mapping[letter]` (default:
/// the letter of the same name). Several letters may merge into one.
inline LaurentPoly rename(const LaurentPoly& p, const AlphabetPtr& target,
                          const std::map<std::string, std::string>& mapping = {}) {
  const Alphabet& alpha = p.alphabet();
  std::vector<std::size_t> dest(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    auto it = mapping.find(alpha.name(i));
    dest[i] = target->index_of(it == mapping.end() ? alpha.name(i) : it->second);
  }
  LaurentPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> exps(target->size(), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) exps[dest[i]] += m[i];
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

}  // namespace grammalc
