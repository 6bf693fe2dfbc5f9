#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grammalc/error.hpp"

namespace grammalc {

/// Ordered set of letter names. The order fixes monomial comparison and never changes.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw Error("alphabet letters must be nonempty");
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[j] == names_[i]) throw Error("duplicate alphabet letter '" + names_[i] + "'");
      }
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view letter) const noexcept {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == letter) return i;
    }
    return std::nullopt;
  }

  std::size_t index_of(std::string_view letter) const {
    if (auto i = find(letter)) return *i;
    throw UnknownLetter("unknown letter '" + std::string(letter) + "'");
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

inline AlphabetPtr make_alphabet(std::initializer_list<const char*> names) {
  return make_alphabet(std::vector<std::string>(names.begin(), names.end()));
}

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace grammalc
