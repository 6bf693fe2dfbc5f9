#pragma once

#include <map>
#include <string>
#include <utility>

#include "grammalc/error.hpp"
#include "grammalc/grammar.hpp"
#include "grammalc/laurent_poly.hpp"
#include "grammalc/uni_poly.hpp"

namespace grammalc {

/// Ramanujan-Shor polynomials Q_{n,k}(x) for 1 <= n <= nmax; zero outside 0 <= k <= n-1.
class QTable {
 public:
  QTable() = default;
  explicit QTable(int nmax) : nmax_(nmax) {}

  int nmax() const noexcept { return nmax_; }

  const UniPoly& at(int n, int k) const {
    static const UniPoly zero;
    if (n < 1 || k < 0 || k > n - 1) return zero;
    if (n > nmax_) throw Error("Q table holds n <= " + std::to_string(nmax_));
    auto it = entries_.find({n, k});
    return it == entries_.end() ? zero : it->second;
  }

  void accumulate(int n, int k, int exp, const Integer& c) { entries_[{n, k}].add(exp, c); }

  const std::map<std::pair<int, int>, UniPoly>& entries() const noexcept { return entries_; }

 private:
  int nmax_ = 0;
  std::map<std::pair<int, int>, UniPoly> entries_;
};

/// Reads Q_{n,k} off D^n(a) under H. Every monomial must be
/// a * x^(j+1) * y^(n+k) * w^(n-1-j) with 0 <= k <= n-1; its coefficient
/// contributes to the x^j coefficient of Q_{n,k}. Anything else is a ShapeError.
inline void extract_q_row(QTable& table, int n, const LaurentPoly& dn_a) {
  for (const auto& [m, c] : dn_a.terms()) {
    const int ea = m[0], ex = m[1], ey = m[2], ew = m[3];
    const int j = ex - 1;
    const int k = ey - n;
    if (ea != 1 || j < 0 || k < 0 || k > n - 1 || ew != n - 1 - j) {
      throw ShapeError("D^" + std::to_string(n) + "(a) has an unexpected term " +
                       canonical_text(LaurentPoly::term(dn_a.alphabet_ptr(), m, c)));
    }
    table.accumulate(n, k, j, c);
  }
}

inline QTable q_table(int nmax) {
  if (nmax < 1) throw Error("q_table needs nmax >= 1");
  const Grammar& h = builtin("H");
  QTable table(nmax);
  LaurentPoly current = h.parse("a");
  for (int n = 1; n <= nmax; ++n) {
    current = derive(h, current);
    extract_q_row(table, n, current);
  }
  return table;
}

/// psi_j(r, x) = Q_{r+1, j-1}(x - r - 1); zero unless 1 <= j <= r + 1.
inline UniPoly psi(const QTable& table, int j, int r) {
  if (r < 0 || j < 1 || j > r + 1) return {};
  return table.at(r + 1, j - 1).shifted(Integer(-r - 1));
}

/// Q_n(z, y) = sum_k Q_{n,k}(z) y^k evaluated inside a Laurent ring.
inline LaurentPoly assemble_qn(const QTable& table, int n, const LaurentPoly& z, const LaurentPoly& y) {
  z.require_same(y);
  LaurentPoly out(z.alphabet_ptr());
  LaurentPoly ypow = LaurentPoly::constant(z.alphabet_ptr(), 1);
  for (int k = 0; k <= n - 1; ++k) {
    out += compose(table.at(n, k), z) * ypow;
    ypow *= y;
  }
  return out;
}

}  // namespace grammalc
