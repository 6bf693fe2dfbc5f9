#pragma once

#include <map>
#include <vector>

#include "grammalc/integer.hpp"
#include "grammalc/laurent_poly.hpp"
#include "grammalc/tree.hpp"
#include "grammalc/tree_weight.hpp"
#include "grammalc/uni_poly.hpp"

namespace grammalc {

/// Which tree family interprets Q_{n,k}:
///   F: trees on [n+1] rooted at 1, weight x^(deg 1 - 1);
///   R: rooted trees on [n], weight (x+1)^(deg 1).
enum class OracleMode { F, R };

/// Q_{n,k}(x) by brute-force enumeration. Out-of-range k gives 0.
inline UniPoly q_poly_oracle(int n, int k, OracleMode mode) {
  if (n < 1) throw Error("q_poly_oracle needs n >= 1");
  if (k < 0 || k > n - 1) return {};
  std::map<int, Integer> by_degree;
  if (mode == OracleMode::F) {
    for_each_rooted(n + 1, true, [&](const RootedTree& t) {
      const TreeStats s = stats(t);
      if (s.k == k) by_degree[s.deg1 - 1] += 1;
    });
  } else {
    for_each_rooted(n, false, [&](const RootedTree& t) {
      const TreeStats s = stats(t);
      if (s.k == k) by_degree[s.deg1] += 1;
    });
  }
  UniPoly out;
  for (const auto& [d, count] : by_degree) {
    if (mode == OracleMode::F) {
      out.add(d, count);
    } else {
      out += count * pow(UniPoly::linear(1), static_cast<unsigned>(d));
    }
  }
  return out;
}

/// sum over forests of rooted trees on [n] with k improper edges of r^(number of trees).
/// Forests are enumerated directly as parent maps into {0} u [n] without cycles.
inline Integer forest_power_sum(int n, int k, const Integer& r) {
  if (n < 1) throw Error("forest_power_sum needs n >= 1");
  require_desk_limit(n + 1);
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
  Integer total = 0;
  for (;;) {
    bool valid = true;
    for (int v = 1; v <= n && valid; ++v) valid = p[static_cast<std::size_t>(v)] != v;
    for (int v = 1; v <= n && valid; ++v) {
      int u = v;
      for (int steps = 0; u != 0 && valid; ++steps) {
        if (steps > n) valid = false;
        u = p[static_cast<std::size_t>(u)];
      }
    }
    if (valid) {
      // beta and improper edges inside the forest; roots are the vertices with parent 0.
      std::vector<int> beta(static_cast<std::size_t>(n) + 1);
      for (int v = 1; v <= n; ++v) beta[static_cast<std::size_t>(v)] = v;
      for (int v = 1; v <= n; ++v) {
        for (int u = p[static_cast<std::size_t>(v)]; u != 0; u = p[static_cast<std::size_t>(u)]) {
          beta[static_cast<std::size_t>(u)] = std::min(beta[static_cast<std::size_t>(u)], v);
        }
      }
      int improper = 0;
      int trees = 0;
      for (int v = 1; v <= n; ++v) {
        const int u = p[static_cast<std::size_t>(v)];
        if (u == 0) {
          ++trees;
        } else if (u > beta[static_cast<std::size_t>(v)]) {
          ++improper;
        }
      }
      if (improper == k) total += ipow(r, static_cast<unsigned>(trees));
    }
    int v = 1;
    for (; v <= n; ++v) {
      if (++p[static_cast<std::size_t>(v)] <= n) break;
      p[static_cast<std::size_t>(v)] = 0;
    }
    if (v > n) break;
  }
  return total;
}

/// sum over R_n of the scheme-G weights, over the alphabet {A, S}.
inline LaurentPoly weight_sum_dumont(int n) {
  LaurentPoly acc(alphabets::dumont());
  for_each_rooted(n, false, [&](const RootedTree& t) { acc.add_term(weight(t, WeightScheme::G), 1); });
  return acc;
}

/// sum over F_n (trees on [n] rooted at 1) of the scheme-H weights.
inline LaurentPoly weight_sum_h(int n) {
  LaurentPoly acc(alphabets::ramanujan_shor());
  for_each_rooted(n, true, [&](const RootedTree& t) { acc.add_term(weight(t, WeightScheme::H), 1); });
  return acc;
}

/// sum over coloured trees on [n] (rooted at 1 for Fr) of the Fr / Rr weights.
inline LaurentPoly weight_sum_colored(int n, int r, WeightScheme scheme) {
  LaurentPoly acc(alphabets::ramanujan_shor());
  for_each_rooted(n, scheme == WeightScheme::Fr, [&](const RootedTree& t) {
    for_each_coloring(t, r, [&](const ColoredTree& ct) { acc.add_term(weight(ct, scheme, r), 1); });
  });
  return acc;
}

/// b(n,k): number of rooted trees on [n] with k improper edges, k = 0..n-1.
inline std::vector<Integer> improper_histogram(int n) {
  std::vector<Integer> out(static_cast<std::size_t>(n));
  for_each_rooted(n, false, [&](const RootedTree& t) { out[static_cast<std::size_t>(stats(t).k)] += 1; });
  return out;
}

/// Number of rooted trees on [n] with k improper edges in which vertex 1 is a leaf.
inline std::vector<Integer> leaf1_histogram(int n) {
  std::vector<Integer> out(static_cast<std::size_t>(n));
  for_each_rooted(n, false, [&](const RootedTree& t) {
    const TreeStats s = stats(t);
    if (s.deg1 == 0) out[static_cast<std::size_t>(s.k)] += 1;
  });
  return out;
}

/// Counts over trees on [n+1] rooted at 1, by improper-edge count k:
/// `second_internal[k]` has vertex 2 with a child, `last_internal[k]` has n+1 with a child.
struct InternalVertexCounts {
  std::vector<Integer> second_internal;
  std::vector<Integer> last_internal;
};

inline InternalVertexCounts internal_vertex_counts(int n) {
  InternalVertexCounts out{std::vector<Integer>(static_cast<std::size_t>(n) + 1),
                           std::vector<Integer>(static_cast<std::size_t>(n) + 1)};
  for_each_rooted(n + 1, true, [&](const RootedTree& t) {
    const TreeStats s = stats(t);
    if (!s.children[2].empty()) out.second_internal[static_cast<std::size_t>(s.k)] += 1;
    if (!s.children[static_cast<std::size_t>(n) + 1].empty()) {
      out.last_internal[static_cast<std::size_t>(s.k)] += 1;
    }
  });
  return out;
}

}  // namespace grammalc
