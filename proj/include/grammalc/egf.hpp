#pragma once

#include <cstddef>
#include <vector>

#include "grammalc/error.hpp"
#include "grammalc/grammar.hpp"
#include "grammalc/integer.hpp"
#include "grammalc/laurent_poly.hpp"

namespace grammalc {

/// Truncated series sum_{n<=N} p_n t^n / n!. Parts are stored in the t^n/n!
/// basis, so products are binomial convolutions and stay integral.
class EgfTruncation {
 public:
  EgfTruncation(AlphabetPtr alphabet, unsigned order)
      : parts_(order + 1, LaurentPoly(alphabet)) {}

  explicit EgfTruncation(std::vector<LaurentPoly> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error("an EGF truncation needs at least one part");
    for (const auto& p : parts_) parts_.front().require_same(p);
  }

  /// A series that does not depend on the grammar: parts[0] = c.
  static EgfTruncation constant(const LaurentPoly& c, unsigned order) {
    EgfTruncation f(c.alphabet_ptr(), order);
    f.parts_[0] = c;
    return f;
  }

  unsigned order() const noexcept { return static_cast<unsigned>(parts_.size() - 1); }
  const AlphabetPtr& alphabet_ptr() const noexcept { return parts_.front().alphabet_ptr(); }
  const LaurentPoly& part(unsigned n) const { return parts_.at(n); }
  const std::vector<LaurentPoly>& parts() const noexcept { return parts_; }

  bool is_zero() const {
    for (const auto& p : parts_) {
      if (!p.is_zero()) return false;
    }
    return true;
  }

  EgfTruncation& operator+=(const EgfTruncation& o) {
    require_order(o);
    for (std::size_t n = 0; n < parts_.size(); ++n) parts_[n] += o.parts_[n];
    return *this;
  }
  EgfTruncation& operator-=(const EgfTruncation& o) {
    require_order(o);
    for (std::size_t n = 0; n < parts_.size(); ++n) parts_[n] -= o.parts_[n];
    return *this;
  }

  friend EgfTruncation operator+(EgfTruncation a, const EgfTruncation& b) { return a += b; }
  friend EgfTruncation operator-(EgfTruncation a, const EgfTruncation& b) { return a -= b; }

  /// Multiplication by a t-free coefficient.
  friend EgfTruncation operator*(const LaurentPoly& c, EgfTruncation f) {
    for (auto& p : f.parts_) p = c * p;
    return f;
  }

  friend bool operator==(const EgfTruncation&, const EgfTruncation&) = default;

  void require_order(const EgfTruncation& o) const {
    if (o.order() != order()) throw Error("EGF truncation orders differ");
  }

 private:
  std::vector<LaurentPoly> parts_;
};

/// parts[n] = D^n(p) for n <= order.
inline EgfTruncation egf_truncate(const Grammar& g, const LaurentPoly& p, unsigned order) {
  return EgfTruncation(derive_sequence(g, p, order));
}

/// Binomial convolution: (f*h)_n = sum_k C(n,k) f_k h_(n-k).
inline EgfTruncation egf_mul(const EgfTruncation& f, const EgfTruncation& h) {
  f.require_order(h);
  std::vector<LaurentPoly> parts;
  parts.reserve(f.order() + 1);
  for (unsigned n = 0; n <= f.order(); ++n) {
    LaurentPoly acc(f.alphabet_ptr());
    for (unsigned k = 0; k <= n; ++k) {
      if (f.part(k).is_zero() || h.part(n - k).is_zero()) continue;
      acc += binomial(n, k) * (f.part(k) * h.part(n - k));
    }
    parts.push_back(std::move(acc));
  }
  return EgfTruncation(std::move(parts));
}

/// t * f: in the t^n/n! basis the new part n is n * f_(n-1); the top part of f drops out.
inline EgfTruncation times_t(const EgfTruncation& f) {
  std::vector<LaurentPoly> parts(f.order() + 1, LaurentPoly(f.alphabet_ptr()));
  for (unsigned n = 1; n <= f.order(); ++n) parts[n] = Integer(n) * f.part(n - 1);
  return EgfTruncation(std::move(parts));
}

/// d/dt: a left shift, so the order drops by one.
inline EgfTruncation derivative(const EgfTruncation& f) {
  if (f.order() == 0) throw Error("cannot differentiate an order-0 truncation");
  std::vector<LaurentPoly> parts(f.parts().begin() + 1, f.parts().end());
  return EgfTruncation(std::move(parts));
}

/// Keeps parts 0..order.
inline EgfTruncation truncate(const EgfTruncation& f, unsigned order) {
  if (order > f.order()) throw Error("cannot extend a truncation");
  return EgfTruncation(std::vector<LaurentPoly>(f.parts().begin(), f.parts().begin() + order + 1));
}

}  // namespace grammalc
