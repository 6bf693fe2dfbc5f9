#pragma once

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grammalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& value) { return value.str(); }

/// base^exp with the convention 0^0 = 1.
inline Integer ipow(const Integer& base, unsigned exp) {
  Integer result = 1;
  Integer b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return result;
}

namespace detail {

// Factorial table grown on demand; shared for the lifetime of the process.
class FactorialTable {
 public:
  static FactorialTable& instance() {
    static FactorialTable table;
    return table;
  }

  Integer get(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) {
      values_.push_back(values_.back() * Integer(values_.size()));
    }
    return values_[n];
  }

 private:
  FactorialTable() : values_{Integer(1)} {}

  std::mutex mutex_;
  std::vector<Integer> values_;
};

}  // namespace detail

inline Integer factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  return detail::FactorialTable::instance().get(static_cast<std::size_t>(n));
}

/// C(n, k), zero outside 0 <= k <= n.
inline Integer binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

/// (i + j + k)! / (i! j! k!)
inline Integer multinomial(long long i, long long j, long long k) {
  if (i < 0 || j < 0 || k < 0) return 0;
  return factorial(i + j + k) / (factorial(i) * factorial(j) * factorial(k));
}

}  // namespace grammalc
