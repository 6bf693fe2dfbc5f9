#pragma once

#include <string_view>
#include <vector>

#include "grammalc/error.hpp"
#include "grammalc/grammar.hpp"
#include "grammalc/monomial.hpp"
#include "grammalc/tree.hpp"

namespace grammalc {

/// Grammatical labelings of trees.
///   G  : vertices S, edges of the tree with phantom root 0 carry A, improper edges A^2.
///   H  : root 1 labelled a, its children x, other vertices w, edges y (improper y^2).
///   Fr : H with root label a*x^r and only black children of 1 labelled x.
///   Rr : Fr without the root-1 restriction; the phantom edge above the root carries y.
enum class WeightScheme { G, H, Fr, Rr };

inline WeightScheme scheme_from_name(std::string_view name) {
  if (name == "G") return WeightScheme::G;
  if (name == "H") return WeightScheme::H;
  if (name == "Fr") return WeightScheme::Fr;
  if (name == "Rr") return WeightScheme::Rr;
  throw Error("unknown weight scheme '" + std::string(name) + "'");
}

/// Alphabet the scheme's monomials live over (shared with the builtin grammars).
inline const AlphabetPtr& scheme_alphabet(WeightScheme scheme) {
  return scheme == WeightScheme::G ? alphabets::dumont() : alphabets::ramanujan_shor();
}

/// Tree whose vertex-1 children carry colours 0..r (0 = black, i >= 1 = white w_i).
struct ColoredTree {
  RootedTree tree;
  std::vector<int> colors;  // indexed by vertex; -1 for vertices that are not children of 1

  int black() const {
    int count = 0;
    for (int c : colors) count += c == 0 ? 1 : 0;
    return count;
  }
};

/// Visits every colouring of the children of vertex 1 with colours 0..r.
template <class Visit>
void for_each_coloring(const RootedTree& t, int r, Visit&& visit) {
  std::vector<int> kids;
  for (int v = 1; v <= t.size(); ++v) {
    if (v != t.root() && t.parent(v) == 1) kids.push_back(v);
  }
  ColoredTree ct{t, std::vector<int>(static_cast<std::size_t>(t.size()) + 1, -1)};
  for (int v : kids) ct.colors[static_cast<std::size_t>(v)] = 0;
  for (;;) {
    visit(static_cast<const ColoredTree&>(ct));
    std::size_t i = 0;
    for (; i < kids.size(); ++i) {
      int& c = ct.colors[static_cast<std::size_t>(kids[i])];
      if (++c <= r) break;
      c = 0;
    }
    if (i == kids.size()) break;
  }
}

namespace detail {

struct LabelCounts {
  int a = 0, x = 0, y = 0, w = 0;

  Monomial monomial() const { return Monomial(std::vector<int>{a, x, y, w}); }
};

// Edge labels shared by the H-family schemes: y per edge, y^2 per improper edge.
inline int edge_y_count(const RootedTree& t, const TreeStats& s, bool phantom_edge) {
  return (t.size() - 1) + s.k + (phantom_edge ? 1 : 0);
}

}  // namespace detail

/// Weight monomial of an uncoloured tree under scheme G or H.
inline Monomial weight(const RootedTree& t, WeightScheme scheme) {
  const TreeStats s = stats(t);
  const int n = t.size();
  switch (scheme) {
    case WeightScheme::G:
      // n vertices labelled S; n edges of the tree with the phantom root, plus one per improper edge.
      return Monomial(std::vector<int>{n + s.k, n});
    case WeightScheme::H: {
      if (t.root() != 1) throw SchemeMismatch("scheme H needs a tree rooted at 1");
      detail::LabelCounts c;
      c.a = 1;
      c.x = s.deg1;
      c.w = n - 1 - s.deg1;
      c.y = detail::edge_y_count(t, s, false);
      return c.monomial();
    }
    default:
      throw SchemeMismatch("schemes Fr and Rr need a coloured tree");
  }
}

/// Weight monomial of a coloured tree under scheme Fr or Rr.
inline Monomial weight(const ColoredTree& ct, WeightScheme scheme, int r) {
  const RootedTree& t = ct.tree;
  const TreeStats s = stats(t);
  const int n = t.size();
  detail::LabelCounts c;
  c.a = 1;
  c.x = r + ct.black();
  c.w = n - 1 - ct.black();
  switch (scheme) {
    case WeightScheme::Fr:
      if (t.root() != 1) throw SchemeMismatch("scheme Fr needs a tree rooted at 1");
      c.y = detail::edge_y_count(t, s, false);
      return c.monomial();
    case WeightScheme::Rr:
      c.y = detail::edge_y_count(t, s, true);
      return c.monomial();
    default:
      throw SchemeMismatch("coloured trees carry weights only under Fr and Rr");
  }
}

}  // namespace grammalc
