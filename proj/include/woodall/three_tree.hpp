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

#ifndef WOODALL_THREE_TREE_HPP_
#define WOODALL_THREE_TREE_HPP_

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "woodall/dicycles.hpp"
#include "woodall/digraph.hpp"

namespace woodall {

using Triple = std::array<NodeId, 3>;

// Simple undirected graph on [0, n) with sorted adjacency lists.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
  bool adjacent(NodeId u, NodeId v) const;

  // Each edge once, as (smaller, larger), sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend bool operator==(const UndirectedGraph&,
                         const UndirectedGraph&) = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Forgets orientation; an antiparallel pair becomes a single edge.
UndirectedGraph underlying_graph(const Digraph& g);

// Induced subgraph on `keep`, relabeled by increasing original index.
UndirectedGraph induced_subgraph(const UndirectedGraph& g,
                                 std::span<const NodeId> keep);

struct ConstructionStep {
  NodeId vertex = 0;
  Triple host{};  // sorted

  friend bool operator==(const ConstructionStep&,
                         const ConstructionStep&) = default;
};

// Base triangle plus vertex insertions; replaying it yields a 3-tree on
// [0, 3 + steps.size()).
struct ConstructionSequence {
  Triple base{};  // sorted
  std::vector<ConstructionStep> steps;

  std::size_t node_count() const { return 3 + steps.size(); }

  friend bool operator==(const ConstructionSequence&,
                         const ConstructionSequence&) = default;
};

// Throws Error{kInvalidSequence} if a vertex repeats, is out of range, or a
// host triangle is not a triangle of the graph built so far.
UndirectedGraph replay(const ConstructionSequence& seq);

// Reverse construction: repeatedly deletes the lowest-index degree-3 vertex
// whose neighbourhood is a triangle. nullopt if g is not a 3-tree.
std::optional<ConstructionSequence> peel_order(const UndirectedGraph& g);

// True if every insertion goes into a current face, with the base triangle
// counted as two faces.
bool certify_apollonian(const ConstructionSequence& seq);

// Degree-3 vertices of a 3-tree with at least five vertices. Throws
// kTooSmall for n <= 4, kNotIndependent if two of them are adjacent, and
// kNotThreeTree if deleting them does not leave a 3-tree.
std::vector<NodeId> degree3_set(const UndirectedGraph& g);

// A ditriangle whose vertex set disconnects the underlying graph, with one
// part per component (component plus the three triangle vertices, sorted).
struct SeparatorSplit {
  Ditriangle ditriangle;
  std::vector<std::vector<NodeId>> parts;
};

std::optional<SeparatorSplit> find_separator_ditriangle(const Digraph& g);

std::vector<InducedSubdigraph> split_at_separator(const Digraph& g,
                                                  const SeparatorSplit& s);

// Connected components of g with `removed` deleted, each sorted, ordered by
// their smallest vertex.
std::vector<std::vector<NodeId>> components_without(
    const UndirectedGraph& g, std::span<const NodeId> removed);

}  // namespace woodall

#endif  // WOODALL_THREE_TREE_HPP_
