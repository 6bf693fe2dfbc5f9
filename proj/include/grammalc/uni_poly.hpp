#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "grammalc/error.hpp"
#include "grammalc/integer.hpp"
#include "grammalc/laurent_poly.hpp"

namespace grammalc {

/// Univariate Laurent polynomial; exponent -> nonzero coefficient.
class UniPoly {
 public:
  UniPoly() = default;

  static UniPoly constant(const Integer& c) {
    UniPoly p;
    p.add(0, c);
    return p;
  }

  /// c * x^e
  static UniPoly monomial(int e, const Integer& c = 1) {
    UniPoly p;
    p.add(e, c);
    return p;
  }

  /// x + c
  static UniPoly linear(const Integer& c) { return monomial(1) + constant(c); }

  static UniPoly from_ascending(const std::vector<Integer>& coeffs) {
    UniPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add(static_cast<int>(i), coeffs[i]);
    return p;
  }

  const std::map<int, Integer>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Integer coefficient(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  /// Highest exponent; -1 for the zero polynomial.
  int degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  int low_degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

  /// Coefficients of x^0..x^width-1, explicit zeros included.
  std::vector<Integer> ascending(int width) const {
    if (low_degree() < 0) throw Error("ascending coefficient list of a Laurent polynomial");
    std::vector<Integer> out(static_cast<std::size_t>(std::max(width, 0)));
    for (const auto& [e, c] : coeffs_) {
      if (e >= width) throw Error("coefficient list narrower than the degree");
      out[static_cast<std::size_t>(e)] = c;
    }
    return out;
  }

  void add(int e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  UniPoly& operator+=(const UniPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
  }
  UniPoly& operator*=(const Integer& s) {
    if (s == 0) {
      coeffs_.clear();
    } else {
      for (auto& entry : coeffs_) entry.second *= s;
    }
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Integer(-1); }
  friend UniPoly operator*(UniPoly a, const Integer& s) { return a *= s; }
  friend UniPoly operator*(const Integer& s, UniPoly a) { return a *= s; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    for (const auto& [ea, ca] : a.coeffs_) {
      for (const auto& [eb, cb] : b.coeffs_) out.add(ea + eb, ca * cb);
    }
    return out;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// p(x + c); requires nonnegative exponents.
  UniPoly shifted(const Integer& c) const {
    if (low_degree() < 0) throw Error("cannot shift a polynomial with negative exponents");
    UniPoly out;
    for (const auto& [e, coeff] : coeffs_) {
      // (x + c)^e = sum_i C(e, i) c^(e-i) x^i
      for (int i = 0; i <= e; ++i) {
        out.add(i, coeff * binomial(e, i) * ipow(c, static_cast<unsigned>(e - i)));
      }
    }
    return out;
  }

  /// Evaluation at an integer; negative exponents only at +-1.
  Integer evaluate(const Integer& v) const {
    Integer sum = 0;
    for (const auto& [e, c] : coeffs_) {
      if (e < 0) {
        if (v != 1 && v != -1) throw EvaluationError("negative exponent evaluated off +-1");
        sum += ((-e) % 2 != 0 && v == -1) ? Integer(-c) : c;
      } else {
        sum += c * ipow(v, static_cast<unsigned>(e));
      }
    }
    return sum;
  }

  Rational evaluate(const Rational& v) const {
    Rational sum = 0;
    for (const auto& [e, c] : coeffs_) {
      Rational term = 1;
      const Rational base = e < 0 ? Rational(1) / v : v;
      for (int i = 0; i < (e < 0 ? -e : e); ++i) term *= base;
      sum += Rational(c) * term;
    }
    return sum;
  }

 private:
  std::map<int, Integer> coeffs_;
};

inline UniPoly pow(const UniPoly& p, unsigned n) {
  UniPoly result = UniPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) result *= p;
  return result;
}

/// Descending-exponent rendering, e.g. "x^2 + 3*x + 2".
inline std::string to_text(const UniPoly& p, std::string_view var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string power;
    if (e != 0) {
      power = std::string(var);
      if (e != 1) power += "^" + std::to_string(e);
    }
    if (power.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += power;
    } else {
      out += to_string(mag) + "*" + power;
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << to_text(p); }

/// Reads p as a polynomial in `letter`; every other letter must have exponent 0.
inline UniPoly to_uni(const LaurentPoly& p, std::string_view letter) {
  const std::size_t idx = p.alphabet().index_of(letter);
  UniPoly out;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != idx && m[i] != 0) {
        throw Error("polynomial involves letters other than '" + std::string(letter) + "'");
      }
    }
    out.add(m[idx], c);
  }
  return out;
}

inline LaurentPoly to_laurent(const UniPoly& p, const AlphabetPtr& alphabet, std::string_view letter) {
  const std::size_t idx = alphabet->index_of(letter);
  LaurentPoly out(alphabet);
  for (const auto& [e, c] : p.coefficients()) {
    out.add_term(Monomial(alphabet->size()).with(idx, e), c);
  }
  return out;
}

/// p(z) computed inside the Laurent ring of z (nonnegative exponents of p only).
inline LaurentPoly compose(const UniPoly& p, const LaurentPoly& z) {
  if (p.low_degree() < 0) throw Error("compose requires nonnegative exponents");
  LaurentPoly result(z.alphabet_ptr());
  const auto& cs = p.coefficients();
  if (cs.empty()) return result;
  // Horner from the top exponent down.
  int e = cs.rbegin()->first;
  for (; e >= 0; --e) {
    result *= z;
    result += LaurentPoly::constant(z.alphabet_ptr(), p.coefficient(e));
  }
  return result;
}

}  // namespace grammalc
