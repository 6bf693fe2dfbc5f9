#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "grammalc/abel.hpp"
#include "grammalc/egf.hpp"
#include "grammalc/grammar.hpp"
#include "grammalc/integer.hpp"
#include "grammalc/laurent_poly.hpp"
#include "grammalc/qtable.hpp"
#include "grammalc/report.hpp"
#include "grammalc/tree_oracle.hpp"
#include "grammalc/uni_poly.hpp"

namespace grammalc {

namespace detail {

inline UniPoly ux() { return UniPoly::monomial(1); }

// Integer power with 0^0 = 1.
inline Integer zpow(long long base, long long exp) { return ipow(Integer(base), static_cast<unsigned>(exp)); }

inline const std::map<std::string, Integer>& unit_yw() {
  static const std::map<std::string, Integer> s{{"y", 1}, {"w", 1}};
  return s;
}

inline const std::map<std::string, Integer>& unit_ayw() {
  static const std::map<std::string, Integer> s{{"a", 1}, {"y", 1}, {"w", 1}};
  return s;
}

inline LaurentPoly rs(std::string_view text) { return parse_expr(text, alphabets::ramanujan_shor()); }

inline LaurentPoly rs_const(const Integer& c) { return LaurentPoly::constant(alphabets::ramanujan_shor(), c); }

}  // namespace detail

/// Recurrences for psi_k(r, x) and Q_{n,k}(x), all checked against q_table(nmax).
inline CheckReports verify_recurrences(int nmax) {
  if (nmax < 2) throw Error("verify_recurrences needs nmax >= 2");
  const QTable q = q_table(nmax);
  const UniPoly x = detail::ux();
  CheckReports out;

  out.push_back(compare("q_initial_value", {{"n", 1}, {"k", 0}}, q.at(1, 0), UniPoly::constant(1)));

  // Ramanujan: psi_k(r+1, x) = (x-1) psi_k(r, x-1) + psi_{k-1}(r+1, x) - psi_{k-1}(r+1, x-1).
  for (int r = 0; r + 2 <= nmax; ++r) {
    for (int k = 1; k <= r + 2; ++k) {
      const UniPoly rhs = (x - UniPoly::constant(1)) * psi(q, k, r).shifted(-1) + psi(q, k - 1, r + 1) -
                          psi(q, k - 1, r + 1).shifted(-1);
      out.push_back(compare("ramanujan_psi_recurrence", {{"r", r}, {"k", k}}, psi(q, k, r + 1), rhs));
    }
  }

  // Berndt-Evans-Wilson: psi_k(r, x) = (x-r-k+1) psi_k(r-1, x) + (r+k-2) psi_{k-1}(r-1, x).
  for (int r = 1; r + 1 <= nmax; ++r) {
    for (int k = 1; k <= r + 1; ++k) {
      const UniPoly rhs = UniPoly::linear(-r - k + 1) * psi(q, k, r - 1) +
                          Integer(r + k - 2) * psi(q, k - 1, r - 1);
      out.push_back(compare("bew_psi_recurrence", {{"r", r}, {"k", k}}, psi(q, k, r), rhs));
    }
  }

  for (int n = 2; n <= nmax; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const CheckParams p{{"n", n}, {"k", k}};
      // Q form: Q_{n,k}(x) = (x-k+1) Q_{n-1,k}(x+1) + (n+k-2) Q_{n-1,k-1}(x+1).
      out.push_back(compare("bew_q_recurrence", p, q.at(n, k),
                            UniPoly::linear(-k + 1) * q.at(n - 1, k).shifted(1) +
                                Integer(n + k - 2) * q.at(n - 1, k - 1).shifted(1)));
      // Shor: Q_{n,k}(x) = (x+n-1) Q_{n-1,k}(x) + (n+k-2) Q_{n-1,k-1}(x).
      out.push_back(compare("shor_recurrence", p, q.at(n, k),
                            UniPoly::linear(n - 1) * q.at(n - 1, k) + Integer(n + k - 2) * q.at(n - 1, k - 1)));
    }
  }

  // Shor's integer table Q(i,j,k) with the same recurrence, read at x = k for k = 1..3.
  for (int kk = 1; kk <= 3; ++kk) {
    std::map<std::pair<int, int>, Integer> table;
    auto at = [&](int i, int j) -> Integer {
      auto it = table.find({i, j});
      return it == table.end() ? Integer(0) : it->second;
    };
    table[{1, 0}] = 1;
    for (int i = 2; i <= nmax; ++i) {
      for (int j = 0; j <= i - 1; ++j) table[{i, j}] = (kk + i - 1) * at(i - 1, j) + (i + j - 2) * at(i - 1, j - 1);
    }
    for (int i = 1; i <= nmax; ++i) {
      for (int j = 0; j <= i - 1; ++j) {
        out.push_back(compare("shor_integer_table", {{"i", i}, {"j", j}, {"k", kk}}, at(i, j),
                              q.at(i, j).evaluate(Integer(kk))));
      }
    }
  }

  // Shifted form: Q_{n,k}(1+x) = Q_{n,k}(x) + (n+k-1) Q_{n-1,k}(1+x).
  for (int n = 1; n <= nmax; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      out.push_back(compare("bews_shift_recurrence", {{"n", n}, {"k", k}}, q.at(n, k).shifted(1),
                            q.at(n, k) + Integer(n + k - 1) * q.at(n - 1, k).shifted(1)));
    }
  }

  // Grammatical form: y D^n(ax) = yw(1 + x w^-1) D^n(a) + y^3 w d/dy D^{n-1}(ax).
  // The one-rule grammar y -> y^3 w induces exactly the operator y^3 w d/dy.
  const Grammar& h = builtin("H");
  const Grammar dy(alphabets::ramanujan_shor(), {{"y", detail::rs("y^3*w")}}, "y^3 w d/dy");
  const auto dax = derive_sequence(h, detail::rs("a*x"), static_cast<unsigned>(nmax));
  const auto da = derive_sequence(h, detail::rs("a"), static_cast<unsigned>(nmax));
  for (int n = 1; n <= nmax; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const LaurentPoly lhs = detail::rs("y") * dax[un];
    const LaurentPoly rhs = detail::rs("y*w + x*y") * da[un] + derive(dy, dax[un - 1]);
    out.push_back(compare("grammar_bews_relation", {{"n", n}}, lhs, rhs));
  }
  return out;
}

/// Row sums: sum_k Q_{n,k}(x) = (x+n)^(n-1), sum_j psi_j(r,x) = x^r, and the Cayley count.
inline CheckReports verify_row_sums(int nmax) {
  if (nmax < 1) throw Error("verify_row_sums needs nmax >= 1");
  const QTable q = q_table(nmax);
  CheckReports out;
  for (int n = 1; n <= nmax; ++n) {
    UniPoly sum;
    for (int k = 0; k <= n - 1; ++k) sum += q.at(n, k);
    out.push_back(compare("q_row_sum", {{"n", n}}, sum, pow(UniPoly::linear(n), static_cast<unsigned>(n - 1))));
    // At x = 0 this counts rooted trees on [n] by improper edges.
    out.push_back(compare("cayley_count", {{"n", n}}, sum.evaluate(Integer(0)), detail::zpow(n, n - 1)));
  }
  for (int r = 0; r + 1 <= nmax; ++r) {
    UniPoly sum;
    for (int j = 1; j <= r + 1; ++j) sum += psi(q, j, r);
    out.push_back(compare("psi_row_sum", {{"r", r}}, sum, UniPoly::monomial(r)));
  }
  return out;
}

/// Grammar derivatives against tree weight sums and against Q-closed forms.
/// `nmax_g` bounds the Dumont grammar checks, `nmax_h` and `rmax` the H checks.
inline CheckReports verify_grammar_tree_equivalence(int nmax_g, int nmax_h, int rmax) {
  CheckReports out;
  const int qmax = std::max({nmax_g, nmax_h, 1});
  const QTable q = q_table(qmax);
  const Grammar& g = builtin("G");
  const Grammar& h = builtin("H");
  const AlphabetPtr& du = alphabets::dumont();

  const auto das = derive_sequence(g, parse_expr("A*S", du), static_cast<unsigned>(std::max(nmax_g, 1)));
  const auto dyw = derive_sequence(h, detail::rs("y*w"), static_cast<unsigned>(std::max(nmax_g, 1)));
  for (int n = 1; n <= nmax_g; ++n) {
    const LaurentPoly& lhs = das[static_cast<std::size_t>(n - 1)];
    out.push_back(compare("dumont_tree_weights", {{"n", n}}, lhs, weight_sum_dumont(n)));
    // A^n S^n sum_k b(n,k) A^k with b(n,k) = Q_{n,k}(0).
    LaurentPoly closed(du);
    for (int k = 0; k <= n - 1; ++k) {
      closed.add_term(Monomial(std::vector<int>{n + k, n}), q.at(n, k).evaluate(Integer(0)));
    }
    out.push_back(compare("dumont_closed_form", {{"n", n}}, lhs, closed));
    // H restricted to {y, w} is G with A = y, S = w.
    out.push_back(compare("dumont_specialization", {{"n", n}},
                          rename(dyw[static_cast<std::size_t>(n - 1)], du, {{"y", "A"}, {"w", "S"}, {"a", "A"}, {"x", "S"}}),
                          lhs));
  }

  const LaurentPoly xw = detail::rs("x*w^-1");
  const LaurentPoly y = detail::rs("y");
  for (int n = 1; n <= nmax_h; ++n) {
    const auto un = static_cast<unsigned>(n);
    const LaurentPoly dna = derive_n(h, detail::rs("a"), un);
    out.push_back(compare("h_tree_weights", {{"n", n}}, dna, weight_sum_h(n + 1)));
    out.push_back(compare("h_closed_form", {{"n", n}}, dna,
                          detail::rs("a*x") * pow(y, un) * pow(detail::rs("w"), un - 1) * assemble_qn(q, n, xw, y)));
    for (int r = 0; r <= rmax; ++r) {
      const CheckParams p{{"n", n}, {"r", r}};
      const LaurentPoly axr = detail::rs("a") * pow(detail::rs("x"), static_cast<unsigned>(r));
      const LaurentPoly dn_axr = derive_n(h, axr, un);
      const LaurentPoly z = detail::rs_const(r) + xw;
      out.push_back(compare("colored_tree_weights", p, dn_axr, weight_sum_colored(n + 1, r, WeightScheme::Fr)));
      const LaurentPoly closed_fr = axr * pow(y, un) * pow(detail::rs("w"), un) * z * assemble_qn(q, n, z, y);
      out.push_back(compare("colored_closed_form", p, dn_axr, closed_fr));
      out.push_back(compare("colored_weight_sum", p, closed_fr, weight_sum_colored(n + 1, r, WeightScheme::Fr)));

      const LaurentPoly dn_axry = derive_n(h, axr * y, un - 1);
      out.push_back(compare("rooted_colored_tree_weights", p, dn_axry,
                            weight_sum_colored(n, r, WeightScheme::Rr)));
      const LaurentPoly z1 = z - detail::rs_const(1);
      out.push_back(compare("rooted_colored_closed_form", p, dn_axry,
                            axr * pow(y, un) * pow(detail::rs("w"), un - 1) * assemble_qn(q, n, z1, y)));
    }
  }
  return out;
}

/// Tree-oracle consistency: Q from the grammar vs both tree interpretations,
/// forest sums, the leaf-1 count and the cardinality behind the shifted recurrence.
inline CheckReports verify_tree_oracle(int nmax) {
  CheckReports out;
  const QTable q = q_table(nmax + 1);
  for (int n = 1; n <= nmax; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const CheckParams p{{"n", n}, {"k", k}};
      const UniPoly f = q_poly_oracle(n, k, OracleMode::F);
      const UniPoly r = q_poly_oracle(n, k, OracleMode::R);
      out.push_back(compare("q_vs_rooted_at_one_trees", p, q.at(n, k), f));
      out.push_back(compare("q_vs_rooted_trees", p, q.at(n, k), r));
    }
  }
  for (int n = 1; n <= std::min(nmax, 5); ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      for (int r = 1; r <= 3; ++r) {
        out.push_back(compare("forest_power_sum", {{"n", n}, {"k", k}, {"r", r}},
                              forest_power_sum(n, k, r), Integer(Integer(r) * q.at(n, k).evaluate(Integer(r)))));
      }
    }
  }
  // Q_{n,k}(-1) counts rooted trees on [n] in which 1 is a leaf.
  for (int n = 1; n <= nmax; ++n) {
    const auto leaf = leaf1_histogram(n);
    for (int k = 0; k <= n - 1; ++k) {
      out.push_back(compare("leaf_one_count", {{"n", n}, {"k", k}}, q.at(n, k).evaluate(Integer(-1)),
                            leaf[static_cast<std::size_t>(k)]));
    }
  }
  // Trees on [n+1] rooted at 1: vertex 2 internal with k improper edges
  // matches vertex n+1 internal with k+1, and both equal Q_{n,k}(1) - Q_{n,k}(0).
  for (int n = 2; n <= nmax - 1; ++n) {
    const InternalVertexCounts c = internal_vertex_counts(n);
    for (int k = 0; k <= n - 1; ++k) {
      const CheckParams p{{"n", n}, {"k", k}};
      const auto uk = static_cast<std::size_t>(k);
      out.push_back(compare("internal_vertex_cardinality", p, c.second_internal[uk], c.last_internal[uk + 1]));
      out.push_back(compare("internal_vertex_count", p, c.second_internal[uk],
                            Integer(q.at(n, k).evaluate(Integer(1)) - q.at(n, k).evaluate(Integer(0)))));
    }
  }
  return out;
}

/// Closed forms obtained by setting letters to 1, and the Q-expressions of D^n(y), D^n(w).
inline CheckReports verify_evaluations(int nmax, int rmax) {
  if (nmax < 1) throw Error("verify_evaluations needs nmax >= 1");
  const Grammar& h = builtin("H");
  const QTable q = q_table(nmax + 1);
  const UniPoly x = detail::ux();
  CheckReports out;
  const auto un = static_cast<unsigned>(nmax);
  const auto dy = derive_sequence(h, detail::rs("y"), un);
  const auto dyw = derive_sequence(h, detail::rs("y*w"), un);
  const auto dw = derive_sequence(h, detail::rs("w"), un);
  const auto day1 = derive_sequence(h, detail::rs("a*y^-1"), un);
  const auto day2 = derive_sequence(h, detail::rs("a*y^-2"), un);
  const LaurentPoly y = detail::rs("y");
  const LaurentPoly w = detail::rs("w");

  auto yw_value = [](const LaurentPoly& p) {
    const LaurentPoly v = substitute(p, detail::unit_yw());
    return to_uni(v, "x");
  };
  auto ayw_value = [](const LaurentPoly& p) { return to_uni(substitute(p, detail::unit_ayw()), "x"); };

  for (int n = 1; n <= nmax; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const auto uN = static_cast<unsigned>(n);
    const CheckParams p{{"n", n}};
    out.push_back(compare("dny_at_one", p, yw_value(dy[i]), UniPoly::constant(detail::zpow(n, n))));
    out.push_back(compare("dnyw_at_one", p, yw_value(dyw[i]), UniPoly::constant(detail::zpow(n + 1, n))));
    out.push_back(compare("dnyw_closed_form", p, dyw[i - 1], pow(y, uN) * pow(w, uN) * assemble_qn(q, n, detail::rs_const(0), y)));
    out.push_back(compare("dnw_closed_form", p, dw[i], pow(y, uN) * pow(w, uN + 1) * assemble_qn(q, n, detail::rs_const(1), y)));
    out.push_back(compare("dny_closed_form", p, dy[i],
                          pow(y, uN + 1) * pow(w, uN) * assemble_qn(q, n + 1, detail::rs_const(-1), y)));
    if (n >= 2) {
      const UniPoly rhs = x * UniPoly::linear(1) * pow(UniPoly::linear(n), uN - 2) - pow(UniPoly::linear(n), uN - 1);
      out.push_back(compare("day_inverse_at_one", p, ayw_value(day1[i]), rhs));
    }
    if (n >= 3) {
      const UniPoly cubic = pow(x, 3) - Integer(3 * n) * x - UniPoly::constant(2 * n);
      out.push_back(compare("day_inverse_square_at_one", p, ayw_value(day2[i]), cubic * pow(UniPoly::linear(n), uN - 3)));
    }
  }
  for (int r = 0; r <= rmax; ++r) {
    const LaurentPoly axr = detail::rs("a") * pow(detail::rs("x"), static_cast<unsigned>(r));
    const auto dax = derive_sequence(h, axr, un);
    const auto daxy = derive_sequence(h, axr * y, un);
    const UniPoly xr = UniPoly::monomial(r);
    for (int n = 0; n <= nmax; ++n) {
      const auto i = static_cast<std::size_t>(n);
      const CheckParams p{{"n", n}, {"r", r}};
      if (n >= 1) {
        out.push_back(compare("daxr_at_one", p, ayw_value(dax[i]),
                              xr * UniPoly::linear(r) * pow(UniPoly::linear(r + n), static_cast<unsigned>(n - 1))));
      }
      out.push_back(compare("daxry_at_one", p, ayw_value(daxy[i]),
                            xr * pow(UniPoly::linear(r + n), static_cast<unsigned>(n))));
    }
  }
  return out;
}

/// Exponential generating function identities under H through order N.
inline CheckReports verify_egf_identities(int order) {
  if (order < 2) throw Error("verify_egf_identities needs N >= 2");
  const Grammar& h = builtin("H");
  const auto N = static_cast<unsigned>(order);
  const CheckParams p{{"N", order}};
  CheckReports out;

  const LaurentPoly s = detail::rs("y^-1*w^-1 - w^-1");
  out.push_back(compare("shift_element_derivative", {}, derive(h, s), detail::rs_const(-1)));
  const EgfTruncation gen_s = egf_truncate(h, s, N);
  EgfTruncation expected = EgfTruncation::constant(s, N) - times_t(EgfTruncation::constant(detail::rs_const(1), N));
  {
    std::string lhs, rhs;
    for (unsigned n = 0; n <= N; ++n) {
      lhs += (n ? "; " : "") + canonical_text(gen_s.part(n));
      rhs += (n ? "; " : "") + canonical_text(expected.part(n));
    }
    out.push_back(make_report("shift_element_series", p, gen_s == expected, lhs, rhs));
  }

  // y - 1 + t y w + y w Gen(s, t) = 0
  const EgfTruncation c1 = EgfTruncation::constant(detail::rs("y - 1"), N) +
                           times_t(EgfTruncation::constant(detail::rs("y*w"), N));
  const EgfTruncation factor = c1 + detail::rs("y*w") * gen_s;
  out.push_back(make_report("shift_factor_vanishes", p, factor.is_zero(), canonical_text(factor.part(0)), "0",
                            factor.is_zero() ? "" : "nonzero truncation"));

  // A(t) = (y-1+tyw) Gen(axyw + ax^2y) + (xy+yw) Gen(ax) - (xy+yw) Gen(axy)
  const LaurentPoly c2 = detail::rs("x*y + y*w");
  const EgfTruncation a_t = egf_mul(c1, egf_truncate(h, detail::rs("a*x*y*w + a*x^2*y"), N)) +
                            c2 * egf_truncate(h, detail::rs("a*x"), N) - c2 * egf_truncate(h, detail::rs("a*x*y"), N);
  {
    unsigned bad = 0;
    while (bad <= N && a_t.part(bad).is_zero()) ++bad;
    out.push_back(make_report("a_series_vanishes", p, a_t.is_zero(),
                              bad <= N ? canonical_text(a_t.part(bad)) : "0", "0",
                              bad <= N ? "first nonzero part t^" + std::to_string(bad) + "/" + std::to_string(bad) + "!" : ""));
  }
  // A(t) = (1 + x w^-1) Gen(axyw) (y - 1 + tyw + yw Gen(s))
  const EgfTruncation factored = detail::rs("1 + x*w^-1") * egf_mul(egf_truncate(h, detail::rs("a*x*y*w"), N), factor);
  out.push_back(make_report("a_series_factorization", p, a_t == factored, "", ""));

  // Gen' = Gen(D), Gen(u v) = Gen(u) Gen(v)
  const LaurentPoly u = detail::rs("a*x");
  const LaurentPoly v = detail::rs("y*w^-1 + x");
  out.push_back(make_report("egf_derivative_rule", p,
                            derivative(egf_truncate(h, u, N)) == egf_truncate(h, derive(h, u), N - 1), "", ""));
  out.push_back(make_report("egf_product_rule", p,
                            egf_mul(egf_truncate(h, u, N), egf_truncate(h, v, N)) == egf_truncate(h, u * v, N), "", ""));
  return out;
}

/// The Lacasse identity, its reduced form, and the multinomial Leibniz expansion behind it.
inline CheckReports verify_lacasse(int nmax, int grammar_nmax = 6) {
  if (nmax < 1) throw Error("verify_lacasse needs nmax >= 1");
  using detail::zpow;
  CheckReports out;
  for (int n = 1; n <= nmax; ++n) {
    const CheckParams p{{"n", n}};
    Integer full = 0, reduced = 0, multi = 0;
    for (int j = 1; j <= n; ++j) {
      for (int k = 0; k <= n - j; ++k) {
        const Integer tail = zpow(k, k) * zpow(n - j - k, n - j - k);
        full += binomial(n, j) * binomial(n - j, k) * zpow(j, j) * tail;
        reduced += binomial(n - 1, j - 1) * binomial(n - j, k) * zpow(j, j - 1) * tail;
      }
    }
    for (int i = 0; i <= n - 1; ++i) {
      for (int j = 0; i + j <= n - 1; ++j) {
        const int k = n - 1 - i - j;
        multi += multinomial(i, j, k) * zpow(i, i) * zpow(j + 1, j) * zpow(k, k);
      }
    }
    out.push_back(compare("lacasse", p, full, zpow(n, n + 1)));
    out.push_back(compare("lacasse_reduced", p, reduced, zpow(n, n)));
    out.push_back(compare("lacasse_trinomial", p, multi, zpow(n, n)));
  }
  const Grammar& h = builtin("H");
  const int gmax = std::min(nmax, grammar_nmax);
  if (gmax >= 1) {
    const auto dy = derive_sequence(h, detail::rs("y"), static_cast<unsigned>(gmax));
    const auto dyw = derive_sequence(h, detail::rs("y*w"), static_cast<unsigned>(gmax));
    for (int n = 1; n <= gmax; ++n) {
      LaurentPoly sum(alphabets::ramanujan_shor());
      for (int i = 0; i <= n - 1; ++i) {
        for (int j = 0; i + j <= n - 1; ++j) {
          const int k = n - 1 - i - j;
          sum += multinomial(i, j, k) * (dy[static_cast<std::size_t>(i)] * dyw[static_cast<std::size_t>(j)] *
                                         dy[static_cast<std::size_t>(k)]);
        }
      }
      out.push_back(compare("dny_trinomial_leibniz", {{"n", n}}, dy[static_cast<std::size_t>(n)], sum));
    }
  }
  return out;
}

/// Ramanujan's defining series for psi_k(r, x), compared coefficientwise in u
/// after multiplying the u^m coefficient by m!, for 0 <= m <= M.
inline CheckReport ramanujan_series_check(int r, int M) {
  if (r < 0 || M < 0) throw Error("ramanujan_series_check needs r, M >= 0");
  const QTable q = q_table(r + 1);
  const CheckParams params{{"r", r}, {"M", M}};
  for (int m = 0; m <= M; ++m) {
    UniPoly lhs;
    for (int k = 0; k <= m; ++k) {
      const UniPoly xk = UniPoly::linear(k);
      UniPoly term = Integer(binomial(m, k)) * pow(xk, static_cast<unsigned>(r + k)) *
                     pow(Integer(-1) * xk, static_cast<unsigned>(m - k));
      lhs += term;
    }
    UniPoly rhs;
    for (int k = 1; k <= r + 1; ++k) rhs += binomial(r + k - 1 + m, m) * psi(q, k, r);
    rhs = factorial(static_cast<unsigned>(m)) * rhs;
    if (lhs != rhs) {
      return make_report("ramanujan_series", params, false, to_text(lhs), to_text(rhs),
                         "first mismatch at m=" + std::to_string(m));
    }
  }
  return make_report("ramanujan_series", params, true, "", "", std::to_string(M + 1) + " coefficients");
}

inline CheckReports verify_series(int rmax, int M) {
  CheckReports out;
  for (int r = 0; r <= rmax; ++r) out.push_back(ramanujan_series_check(r, M));
  return out;
}

}  // namespace grammalc
