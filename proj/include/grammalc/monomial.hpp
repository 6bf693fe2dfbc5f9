#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace grammalc {

/// Signed exponent vector, one slot per alphabet letter.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  bool is_one() const noexcept {
    for (int e : exps_) {
      if (e != 0) return false;
    }
    return true;
  }

  Monomial with(std::size_t i, int exp) const {
    Monomial m = *this;
    m.exps_[i] = exp;
    return m;
  }

  Monomial shifted(std::size_t i, int delta) const {
    Monomial m = *this;
    m.exps_[i] += delta;
    return m;
  }

  Monomial& operator*=(const Monomial& other) {
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
    return *this;
  }

  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  Monomial power(int n) const {
    Monomial m = *this;
    for (int& e : m.exps_) e *= n;
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int e : exps_) {
      h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::vector<int> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Print order: compare exponents starting from the last letter, ascending.
/// Under the alphabets a,x,y,w and A,S this reproduces the usual hand-written
/// order of the derivatives, e.g. a*x^2*y^2 + a*x*y^2*w + a*x*y^3*w.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace grammalc
