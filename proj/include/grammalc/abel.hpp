#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grammalc/error.hpp"
#include "grammalc/grammar.hpp"
#include "grammalc/integer.hpp"
#include "grammalc/laurent_poly.hpp"
#include "grammalc/report.hpp"

namespace grammalc {

namespace abel {

/// Alphabet {x1, x2} of the evaluated identities.
inline const AlphabetPtr& variables() {
  static const AlphabetPtr a = make_alphabet({"x1", "x2"});
  return a;
}

/// c1*x1 + c2*x2 + c0
struct Linear {
  int c1 = 0;
  int c2 = 0;
  long long c0 = 0;

  friend auto operator<=>(const Linear&, const Linear&) = default;

  /// A bare variable x1 or x2, which may carry a negative power in the Laurent ring.
  bool is_variable() const { return c0 == 0 && ((c1 == 1 && c2 == 0) || (c1 == 0 && c2 == 1)); }

  LaurentPoly to_poly() const {
    const AlphabetPtr& alpha = variables();
    LaurentPoly p = LaurentPoly::constant(alpha, c0);
    if (c1 != 0) p += Integer(c1) * LaurentPoly::letter(alpha, "x1");
    if (c2 != 0) p += Integer(c2) * LaurentPoly::letter(alpha, "x2");
    return p;
  }

  Rational evaluate(const Rational& x1, const Rational& x2) const {
    return Rational(c1) * x1 + Rational(c2) * x2 + Rational(c0);
  }
};

inline Linear x1_plus(long long c) { return {1, 0, c}; }
inline Linear x2_plus(long long c) { return {0, 1, c}; }
inline Linear sum_plus(long long c) { return {1, 1, c}; }

/// scalar * prod form^exponent. Equal forms merge their exponents, which is
/// how a prefactor (x+c) cancels a summand factor (x+c)^-1.
struct FactorProduct {
  Integer scalar = 1;
  std::map<Linear, int> powers;

  FactorProduct& times(const Linear& form, int exp = 1) {
    if (exp == 0) return *this;
    if (form.c1 == 0 && form.c2 == 0) {
      // Integer constant factor.
      if (exp < 0) throw CancellationError("negative power of an integer constant");
      scalar *= ipow(Integer(form.c0), static_cast<unsigned>(exp));
      return *this;
    }
    int& e = powers[form];
    e += exp;
    if (e == 0) powers.erase(form);
    return *this;
  }

  FactorProduct& times(const Integer& c) {
    scalar *= c;
    return *this;
  }

  /// Expands in the Laurent ring. Surviving negative powers must sit on x1 or x2.
  LaurentPoly expand() const {
    const AlphabetPtr& alpha = variables();
    LaurentPoly out = LaurentPoly::constant(alpha, scalar);
    for (const auto& [form, exp] : powers) {
      if (exp >= 0) {
        out *= pow(form.to_poly(), static_cast<unsigned>(exp));
      } else if (form.is_variable()) {
        out *= LaurentPoly::letter(alpha, form.c1 == 1 ? "x1" : "x2", exp);
      } else {
        throw CancellationError("uncancelled negative power of a non-monomial linear factor");
      }
    }
    return out;
  }

  Rational evaluate(const Rational& x1, const Rational& x2) const {
    Rational v = Rational(scalar);
    for (const auto& [form, exp] : powers) {
      const Rational base = form.evaluate(x1, x2);
      const Rational b = exp < 0 ? Rational(1) / base : base;
      for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) v *= b;
    }
    return v;
  }
};

using FactorSum = std::vector<FactorProduct>;

inline LaurentPoly expand(const FactorSum& sum) {
  LaurentPoly out(variables());
  for (const auto& term : sum) out += term.expand();
  return out;
}

inline Rational evaluate(const FactorSum& sum, const Rational& x1, const Rational& x2) {
  Rational v = 0;
  for (const auto& term : sum) v += term.evaluate(x1, x2);
  return v;
}

}  // namespace abel

/// The Abel-type sums sum_k C(n,k) pre * (x1+k)^(k+p) (x2+n-k)^(n-k+q) handled here.
enum class AbelCase { MinusOneZero, MinusOneMinusOne, MinusTwoZero, MinusTwoMinusTwo };

inline constexpr AbelCase kAbelCases[] = {AbelCase::MinusOneZero, AbelCase::MinusOneMinusOne,
                                          AbelCase::MinusTwoZero, AbelCase::MinusTwoMinusTwo};

inline std::string abel_case_name(AbelCase c) {
  switch (c) {
    case AbelCase::MinusOneZero: return "abel(-1,0)";
    case AbelCase::MinusOneMinusOne: return "abel(-1,-1)";
    case AbelCase::MinusTwoZero: return "abel(-2,0)";
    case AbelCase::MinusTwoMinusTwo: return "abel(-2,-2)";
  }
  return "abel";
}

/// Smallest n for which the closed form is claimed.
inline int abel_min_n(AbelCase c) { return c == AbelCase::MinusTwoZero ? 2 : 1; }

/// (p, q) exponent offsets of the summand.
inline std::pair<int, int> abel_offsets(AbelCase c) {
  switch (c) {
    case AbelCase::MinusOneZero: return {-1, 0};
    case AbelCase::MinusOneMinusOne: return {-1, -1};
    case AbelCase::MinusTwoZero: return {-2, 0};
    case AbelCase::MinusTwoMinusTwo: return {-2, -2};
  }
  return {0, 0};
}

/// Left side as a list of summands, prefactors already merged.
inline abel::FactorSum abel_summands(AbelCase c, int n) {
  using namespace abel;
  const auto [p, q] = abel_offsets(c);
  FactorSum out;
  for (int k = 0; k <= n; ++k) {
    FactorProduct t;
    t.times(binomial(n, k));
    t.times(x1_plus(0));
    if (c == AbelCase::MinusOneMinusOne || c == AbelCase::MinusTwoMinusTwo) t.times(x2_plus(0));
    if (c == AbelCase::MinusTwoZero || c == AbelCase::MinusTwoMinusTwo) t.times(x1_plus(1));
    if (c == AbelCase::MinusTwoMinusTwo) t.times(x2_plus(1));
    t.times(x1_plus(k), k + p);
    t.times(x2_plus(n - k), n - k + q);
    out.push_back(std::move(t));
  }
  return out;
}

/// Closed right side.
inline abel::FactorSum abel_closed_form(AbelCase c, int n) {
  using namespace abel;
  FactorSum out;
  switch (c) {
    case AbelCase::MinusOneZero:
      out.push_back(FactorProduct{}.times(sum_plus(n), n));
      break;
    case AbelCase::MinusOneMinusOne:
      out.push_back(FactorProduct{}.times(sum_plus(0)).times(sum_plus(n), n - 1));
      break;
    case AbelCase::MinusTwoZero:
      out.push_back(FactorProduct{}.times(x1_plus(0), -1).times(x1_plus(1)).times(sum_plus(n), n));
      out.push_back(FactorProduct{}.times(Integer(-n)).times(sum_plus(n), n - 1));
      break;
    case AbelCase::MinusTwoMinusTwo:
      // ((x1+x2)^3 - 3n(x1+x2) - 2n)(x1+x2+n)^(n-3) + (x1+x2)^2 (x1 x2)^-1 (x1+x2+1)(x1+x2+n)^(n-2)
      out.push_back(FactorProduct{}.times(sum_plus(0), 3).times(sum_plus(n), n - 3));
      out.push_back(FactorProduct{}.times(Integer(-3 * n)).times(sum_plus(0)).times(sum_plus(n), n - 3));
      out.push_back(FactorProduct{}.times(Integer(-2 * n)).times(sum_plus(n), n - 3));
      out.push_back(FactorProduct{}
                        .times(sum_plus(0), 2)
                        .times(x1_plus(0), -1)
                        .times(x2_plus(0), -1)
                        .times(sum_plus(1))
                        .times(sum_plus(n), n - 2));
      break;
  }
  return out;
}

namespace detail {

struct SubCheck {
  std::string name;
  bool passed;
  std::string lhs;
  std::string rhs;
};

inline SubCheck sub_compare(std::string name, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  return {std::move(name), lhs == rhs, canonical_text(lhs), canonical_text(rhs)};
}

inline const std::map<std::string, Integer>& abel_evaluation() {
  static const std::map<std::string, Integer> sigma{{"a1", 1}, {"a2", 1}, {"y", 1}, {"w", 1}};
  return sigma;
}

inline LaurentPoly closed_single(const abel::FactorProduct& f) { return f.expand(); }

// Grammatical route over H': Leibniz product plus the evaluated ingredients.
inline std::vector<SubCheck> abel_grammar_route(AbelCase c, int n) {
  using namespace abel;
  const Grammar& g = builtin("Hprime");
  const auto& sigma = abel_evaluation();
  auto P = [&](const char* text) { return g.parse(text); };
  auto eval = [&](const LaurentPoly& p) { return rename(substitute(p, sigma), variables()); };
  const unsigned un = static_cast<unsigned>(n);

  std::vector<SubCheck> subs;
  LaurentPoly u = P("a1");
  LaurentPoly v = P("a2*y");
  if (c == AbelCase::MinusOneMinusOne) v = P("a2");
  if (c == AbelCase::MinusTwoZero || c == AbelCase::MinusTwoMinusTwo) {
    u = P("a1*y^-1 + a1*x1^-1*w");
    subs.push_back(sub_compare("D(s1)=a1*x1", derive(g, u), P("a1*x1")));
  }
  if (c == AbelCase::MinusTwoMinusTwo) {
    v = P("a2*y^-1 + a2*x2^-1*w");
    subs.push_back(sub_compare("D(s2)=a2*x2", derive(g, v), P("a2*x2")));
  }

  const LaurentPoly leibniz = leibniz_expand(g, u, v, un);
  const LaurentPoly direct = derive_n(g, u * v, un);
  subs.push_back(sub_compare("leibniz", leibniz, direct));

  // Ingredient evaluations D^k(u)|, D^k(v)| for k <= n.
  const auto du = derive_sequence(g, u, un);
  const auto dv = derive_sequence(g, v, un);
  for (int k = 0; k <= n; ++k) {
    FactorProduct fu;
    if (c == AbelCase::MinusTwoZero || c == AbelCase::MinusTwoMinusTwo) {
      fu.times(x1_plus(0)).times(x1_plus(1)).times(x1_plus(k), k - 2);
    } else {
      fu.times(x1_plus(0)).times(x1_plus(k), k - 1);
    }
    subs.push_back(sub_compare("D^" + std::to_string(k) + "(u)|", eval(du[static_cast<std::size_t>(k)]),
                               fu.expand()));
    FactorProduct fv;
    switch (c) {
      case AbelCase::MinusOneZero:
      case AbelCase::MinusTwoZero:
        fv.times(x2_plus(k), k);
        break;
      case AbelCase::MinusOneMinusOne:
        fv.times(x2_plus(0)).times(x2_plus(k), k - 1);
        break;
      case AbelCase::MinusTwoMinusTwo:
        fv.times(x2_plus(0)).times(x2_plus(1)).times(x2_plus(k), k - 2);
        break;
    }
    subs.push_back(sub_compare("D^" + std::to_string(k) + "(v)|", eval(dv[static_cast<std::size_t>(k)]),
                               fv.expand()));
  }

  // Products with a1*a2 collapse onto the single-letter formulas with x = x1 + x2.
  auto dn = [&](const char* text) { return derive_n(g, P(text), un); };
  const LaurentPoly s_n = sum_plus(n).to_poly();
  const LaurentPoly s = sum_plus(0).to_poly();
  if (c == AbelCase::MinusOneZero || c == AbelCase::MinusTwoZero) {
    subs.push_back(sub_compare("D^n(a1*a2*y)|", eval(dn("a1*a2*y")), pow(s_n, un)));
  }
  if (c != AbelCase::MinusOneZero) {
    subs.push_back(sub_compare("D^n(a1*a2)|", eval(dn("a1*a2")), s * pow(s_n, un - 1)));
  }
  if (c == AbelCase::MinusTwoZero) {
    const LaurentPoly rhs = dn("a1*a2") + P("x1^-1*w") * dn("a1*a2*y");
    subs.push_back(sub_compare("D^n(s1*a2*y) split", direct, rhs));
  }
  if (c == AbelCase::MinusTwoMinusTwo) {
    const LaurentPoly rhs = dn("a1*a2*y^-2") + P("(x1^-1 + x2^-1)*w") * dn("a1*a2*y^-1") +
                            P("x1^-1*x2^-1*w^2") * dn("a1*a2");
    subs.push_back(sub_compare("D^n(s1*s2) split", direct, rhs));
    if (n >= 2) {
      const LaurentPoly f = s * (s + LaurentPoly::constant(variables(), 1)) * pow(s_n, un - 2) -
                            pow(s_n, un - 1);
      subs.push_back(sub_compare("D^n(a1*a2*y^-1)|", eval(dn("a1*a2*y^-1")), f));
    }
    if (n >= 3) {
      const LaurentPoly cubic = pow(s, 3) - Integer(3 * n) * s - LaurentPoly::constant(variables(), 2 * n);
      subs.push_back(sub_compare("D^n(a1*a2*y^-2)|", eval(dn("a1*a2*y^-2")), cubic * pow(s_n, un - 3)));
    }
  }

  subs.push_back(sub_compare("D^n(u*v)| vs summands", eval(leibniz), expand(abel_summands(c, n))));
  try {
    const LaurentPoly closed = expand(abel_closed_form(c, n));
    subs.push_back(sub_compare("D^n(u*v)| vs closed form", eval(direct), closed));
  } catch (const CancellationError&) {
    // Closed form is not a Laurent polynomial for this n; covered by the grid route.
  }
  return subs;
}

}  // namespace detail

/// Verifies one Abel-type identity at a given n by three routes: symbolic
/// expansion of both sides (where the closed side is a Laurent polynomial),
/// exact rational evaluation on the grid x1, x2 in 1..n+6, and the
/// grammatical derivation over H'.
inline CheckReport abel_check(int n, AbelCase c) {
  const CheckParams params{{"n", n}};
  const std::string name = abel_case_name(c);
  if (n < abel_min_n(c)) {
    return make_report(name, params, false, "", "", "n below the range of the identity");
  }

  std::vector<detail::SubCheck> subs;
  const abel::FactorSum lhs_terms = abel_summands(c, n);
  const abel::FactorSum rhs_terms = abel_closed_form(c, n);

  // A surviving (x_i + c)^-1 with c != 0 in a summand is a hard error.
  const LaurentPoly lhs = abel::expand(lhs_terms);
  std::string routes;
  try {
    const LaurentPoly rhs = abel::expand(rhs_terms);
    subs.push_back(detail::sub_compare("symbolic", lhs, rhs));
    routes += "symbolic";
  } catch (const CancellationError&) {
    routes += "grid-only";
  }

  // Both sides have degree at most n + 1 per variable once multiplied by
  // x1 x2 (x1+x2+n)^max(0, 3-n), so agreement on n + 6 points per axis is exact.
  bool grid_ok = true;
  std::string grid_lhs, grid_rhs;
  for (int i = 1; i <= n + 6 && grid_ok; ++i) {
    for (int j = 1; j <= n + 6 && grid_ok; ++j) {
      const Rational a = abel::evaluate(lhs_terms, i, j);
      const Rational b = abel::evaluate(rhs_terms, i, j);
      if (a != b) {
        grid_ok = false;
        grid_lhs = "(" + std::to_string(i) + "," + std::to_string(j) + ") -> " + a.str();
        grid_rhs = b.str();
      }
    }
  }
  subs.push_back({"grid", grid_ok, grid_lhs, grid_rhs});
  routes += ",grid";

  for (auto& s : detail::abel_grammar_route(c, n)) subs.push_back(std::move(s));
  routes += ",grammar";

  for (const auto& s : subs) {
    if (!s.passed) return make_report(name, params, false, s.lhs, s.rhs, "failed: " + s.name);
  }
  return make_report(name, params, true, canonical_text(lhs), routes.find("symbolic") == 0
                                                                   ? canonical_text(abel::expand(rhs_terms))
                                                                   : "(rational)",
                     routes + "; " + std::to_string(subs.size()) + " sub-checks");
}

inline CheckReports verify_abel(int nmax) {
  CheckReports out;
  for (AbelCase c : kAbelCases) {
    for (int n = abel_min_n(c); n <= nmax; ++n) out.push_back(abel_check(n, c));
  }
  return out;
}

}  // namespace grammalc
