#pragma once

#include <algorithm>
#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grammalc/error.hpp"

namespace grammalc {

/// Rooted tree on vertices 1..n, stored as a parent array (parent[root] = 0).
/// Edge (u, v) means v is a child of u.
class RootedTree {
 public:
  /// `parent` has n + 1 slots; slot 0 is ignored.
  explicit RootedTree(std::vector<int> parent) : parent_(std::move(parent)) {
    if (parent_.size() < 2) throw Error("a rooted tree needs at least one vertex");
    parent_[0] = 0;
    const int n = size();
    for (int v = 1; v <= n; ++v) {
      const int p = parent_[v];
      if (p < 0 || p > n || p == v) throw Error("invalid parent entry");
      if (p == 0) {
        if (root_ != 0) throw Error("a rooted tree has exactly one root");
        root_ = v;
      }
    }
    if (root_ == 0) throw Error("a rooted tree needs a root");
    for (int v = 1; v <= n; ++v) {
      int u = v;
      for (int steps = 0; u != root_; ++steps) {
        if (steps > n) throw Error("parent relation has a cycle");
        u = parent_[u];
      }
    }
  }

  static RootedTree single_vertex() { return RootedTree({0, 0}); }

  int size() const noexcept { return static_cast<int>(parent_.size()) - 1; }
  int root() const noexcept { return root_; }
  int parent(int v) const { return parent_.at(static_cast<std::size_t>(v)); }
  std::span<const int> parents() const noexcept { return {parent_.data() + 1, parent_.size() - 1}; }

  std::vector<std::vector<int>> children() const {
    std::vector<std::vector<int>> out(parent_.size());
    for (int v = 1; v <= size(); ++v) {
      if (v != root_) out[static_cast<std::size_t>(parent_[v])].push_back(v);
    }
    return out;
  }

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.parent_ == b.parent_; }
  friend auto operator<=>(const RootedTree& a, const RootedTree& b) { return a.parent_ <=> b.parent_; }

 private:
  std::vector<int> parent_;
  int root_ = 0;
};

/// Derived statistics. `children[u]` lists the children of u by increasing beta.
struct TreeStats {
  std::vector<int> beta;
  std::vector<std::vector<int>> children;
  std::vector<std::pair<int, int>> improper;
  int k = 0;
  int deg1 = 0;

  bool is_improper(int u, int v) const { return u > beta[static_cast<std::size_t>(v)]; }
};

inline TreeStats stats(const RootedTree& t) {
  const int n = t.size();
  TreeStats s;
  s.children = t.children();
  s.beta.assign(static_cast<std::size_t>(n) + 1, 0);

  // Post-order without recursion: parents before children in `order`.
  std::vector<int> order{t.root()};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : s.children[static_cast<std::size_t>(order[i])]) order.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int m = *it;
    for (int c : s.children[static_cast<std::size_t>(*it)]) m = std::min(m, s.beta[static_cast<std::size_t>(c)]);
    s.beta[static_cast<std::size_t>(*it)] = m;
  }
  for (auto& list : s.children) {
    std::sort(list.begin(), list.end(),
              [&](int a, int b) { return s.beta[static_cast<std::size_t>(a)] < s.beta[static_cast<std::size_t>(b)]; });
  }
  for (int v = 1; v <= n; ++v) {
    if (v == t.root()) continue;
    const int u = t.parent(v);
    if (s.is_improper(u, v)) s.improper.emplace_back(u, v);
  }
  s.k = static_cast<int>(s.improper.size());
  s.deg1 = static_cast<int>(s.children[1].size());
  return s;
}

/// All trees on [n] obtained by inserting vertex n into `t` (a tree on [n-1]):
/// (1) n as a leaf under any vertex; (2)/(3) n splitting any edge of the tree
/// with a phantom root 0 above the root; (4) for an improper edge (v, b_j),
/// with v's children b_1..b_t ordered by beta, n takes v's place, v becomes a
/// child of n, b_1..b_j move under n and b_(j+1)..b_t stay under v.
inline std::vector<RootedTree> shor_children(const RootedTree& t) {
  const int m = t.size();
  const int n = m + 1;
  const TreeStats s = stats(t);
  std::vector<int> base(t.parents().begin(), t.parents().end());
  base.insert(base.begin(), 0);
  base.push_back(0);

  std::vector<RootedTree> out;
  out.reserve(static_cast<std::size_t>(2 * m + s.k));

  for (int v = 1; v <= m; ++v) {
    std::vector<int> p = base;
    p[static_cast<std::size_t>(n)] = v;
    out.emplace_back(std::move(p));
  }

  for (int j = 1; j <= m; ++j) {
    std::vector<int> p = base;
    p[static_cast<std::size_t>(n)] = base[static_cast<std::size_t>(j)];
    p[static_cast<std::size_t>(j)] = n;
    out.emplace_back(std::move(p));
  }

  for (int v = 1; v <= m; ++v) {
    const auto& kids = s.children[static_cast<std::size_t>(v)];
    for (std::size_t j = 0; j < kids.size() && s.is_improper(v, kids[j]); ++j) {
      std::vector<int> p = base;
      p[static_cast<std::size_t>(n)] = base[static_cast<std::size_t>(v)];
      p[static_cast<std::size_t>(v)] = n;
      for (std::size_t i = 0; i <= j; ++i) p[static_cast<std::size_t>(kids[i])] = n;
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

/// Inverse of shor_children: delete n if it is a leaf, otherwise contract
/// (n, b_t) where b_t is n's child of largest beta, and let b_t take n's place.
inline RootedTree shor_delete(const RootedTree& t) {
  const int n = t.size();
  if (n < 2) throw Error("shor_delete needs at least two vertices");
  const TreeStats s = stats(t);
  std::vector<int> p(t.parents().begin(), t.parents().end());
  p.insert(p.begin(), 0);
  const auto& kids = s.children[static_cast<std::size_t>(n)];
  if (!kids.empty()) {
    const int last = kids.back();
    p[static_cast<std::size_t>(last)] = p[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) p[static_cast<std::size_t>(kids[i])] = last;
  }
  p.pop_back();
  return RootedTree(std::move(p));
}

/// Enumeration bound; GRAMMALC_DESK_LIMIT overrides the default of 8.
inline int desk_limit() {
  if (const char* env = std::getenv("GRAMMALC_DESK_LIMIT")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

inline void require_desk_limit(int n, int limit = desk_limit()) {
  if (n > limit) {
    throw LimitExceeded("tree size " + std::to_string(n) + " exceeds the enumeration limit " +
                        std::to_string(limit));
  }
}

namespace detail {

template <class Visit>
void shor_walk(const RootedTree& t, int n, bool rooted_at_1, Visit& visit) {
  if (t.size() == n) {
    if (!rooted_at_1 || t.root() == 1) visit(t);
    return;
  }
  for (const auto& child : shor_children(t)) shor_walk(child, n, rooted_at_1, visit);
}

}  // namespace detail

/// Streams every rooted tree on [n] exactly once (only those rooted at 1 when
/// `rooted_at_1`), generated by repeated Shor insertion from a single vertex.
template <class Visit>
void for_each_rooted(int n, bool rooted_at_1, Visit&& visit, int limit = desk_limit()) {
  if (n < 1) throw Error("trees need at least one vertex");
  require_desk_limit(n, limit);
  detail::shor_walk(RootedTree::single_vertex(), n, rooted_at_1, visit);
}

/// Independent enumerator: every parent assignment, kept if it is a tree.
template <class Visit>
void for_each_rooted_by_filter(int n, bool rooted_at_1, Visit&& visit) {
  if (n < 1) throw Error("trees need at least one vertex");
  require_desk_limit(n, 7);
  for (int root = 1; root <= n; ++root) {
    if (rooted_at_1 && root != 1) break;
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 1);
    p[0] = 0;
    p[static_cast<std::size_t>(root)] = 0;
    for (;;) {
      bool valid = true;
      for (int v = 1; v <= n && valid; ++v) {
        if (v != root && p[static_cast<std::size_t>(v)] == v) valid = false;
      }
      for (int v = 1; v <= n && valid; ++v) {
        int u = v;
        for (int steps = 0; u != root && valid; ++steps) {
          if (steps > n) valid = false;
          u = p[static_cast<std::size_t>(u)];
        }
      }
      if (valid) visit(RootedTree(p));

      // Odometer step over the non-root vertices.
      int v = 1;
      for (; v <= n; ++v) {
        if (v == root) continue;
        if (++p[static_cast<std::size_t>(v)] <= n) break;
        p[static_cast<std::size_t>(v)] = 1;
      }
      if (v > n) break;
    }
  }
}

/// CSV row: n,root,parents (semicolon-joined, 0 for the root),k,deg1
inline std::string csv_row(const RootedTree& t, const TreeStats& s) {
  std::string out = std::to_string(t.size()) + "," + std::to_string(t.root()) + ",";
  bool first = true;
  for (int p : t.parents()) {
    if (!first) out += ";";
    out += std::to_string(p);
    first = false;
  }
  out += "," + std::to_string(s.k) + "," + std::to_string(s.deg1);
  return out;
}

}  // namespace grammalc
