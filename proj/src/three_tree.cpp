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

#include "woodall/three_tree.hpp"

#include <algorithm>
#include <map>

#include "woodall/error.hpp"

namespace woodall {

namespace {

Triple sorted_triple(NodeId a, NodeId b, NodeId c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

UndirectedGraph::UndirectedGraph(
    std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges)
    : adjacency_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool UndirectedGraph::adjacent(NodeId u, NodeId v) const {
  if (u >= adjacency_.size()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> UndirectedGraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> result;
  result.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

UndirectedGraph underlying_graph(const Digraph& g) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.arc_count());
  for (const Arc& arc : g.arcs()) {
    edges.emplace_back(std::min(arc.tail, arc.head),
                       std::max(arc.tail, arc.head));
  }
  return UndirectedGraph(g.node_count(), edges);
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g,
                                 std::span<const NodeId> keep) {
  std::vector<NodeId> original(keep.begin(), keep.end());
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()),
                 original.end());
  std::vector<NodeId> local(g.node_count(), UINT32_MAX);
  for (NodeId i = 0; i < original.size(); ++i) local[original[i]] = i;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (auto [u, v] : g.edges()) {
    if (local[u] != UINT32_MAX && local[v] != UINT32_MAX) {
      edges.emplace_back(local[u], local[v]);
    }
  }
  return UndirectedGraph(original.size(), edges);
}

UndirectedGraph replay(const ConstructionSequence& seq) {
  const std::size_t n = seq.node_count();
  std::vector<char> introduced(n, 0);
  std::vector<std::pair<NodeId, NodeId>> edges;
  auto introduce = [&](NodeId v) {
    if (v >= n) {
      throw Error(ErrorCode::kInvalidSequence,
                  "vertex " + std::to_string(v) + " out of range");
    }
    if (introduced[v]) {
      throw Error(ErrorCode::kInvalidSequence,
                  "vertex " + std::to_string(v) + " introduced twice");
    }
    introduced[v] = 1;
  };
  const auto& [a, b, c] = seq.base;
  introduce(a);
  introduce(b);
  introduce(c);
  edges.insert(edges.end(), {{a, b}, {b, c}, {a, c}});
  // Hosts must be triangles of the graph so far: every pair of introduced
  // vertices adjacent at that point. Track adjacency incrementally.
  std::vector<std::vector<NodeId>> adjacency(n);
  auto link = [&](NodeId u, NodeId v) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  };
  link(a, b);
  link(b, c);
  link(a, c);
  auto linked = [&](NodeId u, NodeId v) {
    return std::find(adjacency[u].begin(), adjacency[u].end(), v) !=
           adjacency[u].end();
  };
  for (const ConstructionStep& step : seq.steps) {
    for (NodeId h : step.host) {
      if (h >= n || !introduced[h]) {
        throw Error(ErrorCode::kInvalidSequence,
                    "host vertex " + std::to_string(h) + " of step " +
                        std::to_string(step.vertex) + " not yet introduced");
      }
    }
    const auto& [x, y, z] = step.host;
    if (!linked(x, y) || !linked(y, z) || !linked(x, z)) {
      throw Error(ErrorCode::kInvalidSequence,
                  "host of step " + std::to_string(step.vertex) +
                      " is not a triangle");
    }
    introduce(step.vertex);
    for (NodeId h : step.host) {
      link(step.vertex, h);
      edges.emplace_back(h, step.vertex);
    }
  }
  return UndirectedGraph(n, edges);
}

std::optional<ConstructionSequence> peel_order(const UndirectedGraph& g) {
  const std::size_t n = g.node_count();
  if (n < 3) return std::nullopt;
  std::vector<char> removed(n, 0);
  std::vector<std::size_t> degree(n);
  for (NodeId v = 0; v < n; ++v) degree[v] = g.degree(v);

  auto live_neighbors = [&](NodeId v) {
    std::vector<NodeId> result;
    for (NodeId w : g.neighbors(v)) {
      if (!removed[w]) result.push_back(w);
    }
    return result;
  };

  std::vector<ConstructionStep> peeled;
  for (std::size_t remaining = n; remaining > 3; --remaining) {
    std::optional<ConstructionStep> pick;
    for (NodeId v = 0; v < n && !pick; ++v) {
      if (removed[v] || degree[v] != 3) continue;
      auto nb = live_neighbors(v);
      if (g.adjacent(nb[0], nb[1]) && g.adjacent(nb[1], nb[2]) &&
          g.adjacent(nb[0], nb[2])) {
        pick = ConstructionStep{v, {nb[0], nb[1], nb[2]}};
      }
    }
    if (!pick) return std::nullopt;
    removed[pick->vertex] = 1;
    for (NodeId h : pick->host) --degree[h];
    peeled.push_back(*pick);
  }

  std::vector<NodeId> rest;
  for (NodeId v = 0; v < n; ++v) {
    if (!removed[v]) rest.push_back(v);
  }
  if (!g.adjacent(rest[0], rest[1]) || !g.adjacent(rest[1], rest[2]) ||
      !g.adjacent(rest[0], rest[2]) || degree[rest[0]] != 2 ||
      degree[rest[1]] != 2 || degree[rest[2]] != 2) {
    return std::nullopt;
  }
  ConstructionSequence seq;
  seq.base = {rest[0], rest[1], rest[2]};
  seq.steps.assign(peeled.rbegin(), peeled.rend());
  return seq;
}

bool certify_apollonian(const ConstructionSequence& seq) {
  std::map<Triple, int> faces;
  faces[seq.base] = 2;
  for (const ConstructionStep& step : seq.steps) {
    auto it = faces.find(step.host);
    if (it == faces.end() || it->second == 0) return false;
    --it->second;
    const auto& [a, b, c] = step.host;
    const NodeId v = step.vertex;
    ++faces[sorted_triple(a, b, v)];
    ++faces[sorted_triple(b, c, v)];
    ++faces[sorted_triple(a, c, v)];
  }
  return true;
}

std::vector<NodeId> degree3_set(const UndirectedGraph& g) {
  const std::size_t n = g.node_count();
  if (n <= 4) {
    throw Error(ErrorCode::kTooSmall,
                "degree3_set needs at least 5 vertices, got " +
                    std::to_string(n));
  }
  std::vector<NodeId> v3;
  std::vector<NodeId> rest;
  for (NodeId v = 0; v < n; ++v) {
    (g.degree(v) == 3 ? v3 : rest).push_back(v);
  }
  for (NodeId u : v3) {
    for (NodeId w : g.neighbors(u)) {
      if (g.degree(w) == 3) {
        throw Error(ErrorCode::kNotIndependent,
                    "degree-3 vertices " + std::to_string(u) + " and " +
                        std::to_string(w) + " are adjacent");
      }
    }
  }
  if (!peel_order(induced_subgraph(g, rest))) {
    throw Error(ErrorCode::kNotThreeTree,
                "deleting the degree-3 vertices does not leave a 3-tree");
  }
  return v3;
}

std::vector<std::vector<NodeId>> components_without(
    const UndirectedGraph& g, std::span<const NodeId> removed) {
  const std::size_t n = g.node_count();
  std::vector<char> seen(n, 0);
  for (NodeId r : removed) seen[r] = 1;
  std::vector<std::vector<NodeId>> components;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> component{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (NodeId w : g.neighbors(component[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::optional<SeparatorSplit> find_separator_ditriangle(const Digraph& g) {
  if (g.node_count() <= 4) return std::nullopt;
  const UndirectedGraph und = underlying_graph(g);
  for (const Ditriangle& t : all_ditriangles(g)) {
    const std::array<NodeId, 3> separator{t.a, t.b, t.c};
    auto components = components_without(und, separator);
    if (components.size() < 2) continue;
    SeparatorSplit split{t, {}};
    for (auto& component : components) {
      component.insert(component.end(), separator.begin(), separator.end());
      std::sort(component.begin(), component.end());
      split.parts.push_back(std::move(component));
    }
    return split;
  }
  return std::nullopt;
}

std::vector<InducedSubdigraph> split_at_separator(const Digraph& g,
                                                  const SeparatorSplit& s) {
  std::vector<InducedSubdigraph> parts;
  parts.reserve(s.parts.size());
  for (const auto& part : s.parts) {
    parts.push_back(induced_subdigraph(g, part));
  }
  return parts;
}

}  // namespace woodall
