// Copyright 2026 The Woodall Packer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference implementations used only by the tests. None of
// them call into the algorithms they are used to check.
#ifndef WOODALL_TESTS_ORACLES_HPP_
#define WOODALL_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <vector>

#include "woodall/digraph.hpp"

namespace woodall::testing {

// Every simple dicycle as a node list starting at its smallest node, found
// by plain DFS over simple paths (no blocking).
inline std::vector<std::vector<NodeId>> brute_dicycles(const Digraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<NodeId>> cycles;
  std::vector<NodeId> path;
  std::vector<char> on_path(n, 0);
  std::function<void(NodeId, NodeId)> extend = [&](NodeId start, NodeId v) {
    for (NodeId w = 0; w < n; ++w) {
      if (!g.has_arc(v, w)) continue;
      if (w == start) {
        cycles.push_back(path);
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        extend(start, w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (NodeId s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = 1;
    extend(s, s);
    on_path[s] = 0;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

inline std::vector<Arc> cycle_arcs(const std::vector<NodeId>& cycle) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    arcs.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
  }
  return arcs;
}

// Ditriangles from all vertex triples and both cyclic orders.
inline std::vector<std::array<NodeId, 3>> brute_ditriangles(const Digraph& g) {
  std::vector<std::array<NodeId, 3>> result;
  const NodeId n = static_cast<NodeId>(g.node_count());
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      for (NodeId c = b + 1; c < n; ++c) {
        if (g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, a)) {
          result.push_back({a, b, c});
        }
        if (g.has_arc(a, c) && g.has_arc(c, b) && g.has_arc(b, a)) {
          result.push_back({a, c, b});
        }
      }
    }
  }
  return result;
}

inline bool meets_every_cycle(const std::vector<std::vector<NodeId>>& cycles,
                              const std::vector<Arc>& t) {
  std::set<Arc> set(t.begin(), t.end());
  for (const auto& cycle : cycles) {
    const auto arcs = cycle_arcs(cycle);
    if (std::none_of(arcs.begin(), arcs.end(),
                     [&](const Arc& a) { return set.count(a) > 0; })) {
      return false;
    }
  }
  return true;
}

// Shortest cycle length from the brute-force list; 0 when acyclic.
inline std::size_t brute_girth(const Digraph& g) {
  std::size_t best = 0;
  for (const auto& c : brute_dicycles(g)) {
    if (best == 0 || c.size() < best) best = c.size();
  }
  return best;
}

// True if the arcs can be split into k classes each meeting every dicycle.
// Tries all k^m assignments; only for tiny digraphs.
inline bool brute_has_packing(const Digraph& g, std::size_t k) {
  const auto cycles = brute_dicycles(g);
  const auto& arcs = g.arcs();
  const std::size_t m = arcs.size();
  std::vector<std::size_t> digit(m, 0);
  while (true) {
    bool ok = true;
    for (const auto& cycle : cycles) {
      std::vector<char> seen(k, 0);
      for (const Arc& a : cycle_arcs(cycle)) {
        auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
        seen[digit[static_cast<std::size_t>(it - arcs.begin())]] = 1;
      }
      if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(k)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < m && digit[i] == k - 1) digit[i++] = 0;
    if (i == m) return false;
    ++digit[i];
  }
}

// Connectivity of the underlying graph with some vertices removed.
inline std::size_t brute_component_count(const Digraph& g,
                                         const std::vector<NodeId>& removed) {
  const std::size_t n = g.node_count();
  std::vector<int> label(n, -1);
  for (NodeId r : removed) label[r] = -2;
  int count = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    std::vector<NodeId> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w = 0; w < n; ++w) {
        if (label[w] == -1 && g.adjacent(v, w)) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return static_cast<std::size_t>(count);
}

}  // namespace woodall::testing

#endif  // WOODALL_TESTS_ORACLES_HPP_
