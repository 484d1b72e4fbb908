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

#ifndef WOODALL_DIGRAPH_HPP_
#define WOODALL_DIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace woodall {

using NodeId = std::uint32_t;

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;

  Arc reversed() const { return Arc{head, tail}; }

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& arc);

// Sorted, duplicate-free list of arcs.
using ArcSet = std::vector<Arc>;

ArcSet make_arc_set(std::vector<Arc> arcs);
bool contains(const ArcSet& set, const Arc& arc);

// A closed directed walk v_0 -> v_1 -> ... -> v_{k-1} -> v_0 with distinct
// nodes. Stored with the smallest node first.
class DicycleWitness {
 public:
  DicycleWitness() = default;
  explicit DicycleWitness(std::vector<NodeId> nodes);

  const std::vector<NodeId>& nodes() const { return nodes_; }
  std::size_t length() const { return nodes_.size(); }
  std::vector<Arc> arcs() const;

  friend bool operator==(const DicycleWitness&,
                         const DicycleWitness&) = default;

 private:
  std::vector<NodeId> nodes_;
};

// Immutable digraph on nodes [0, n) with no self-loops and no parallel
// arcs. Antiparallel pairs (digons) are allowed.
class Digraph {
 public:
  Digraph() = default;

  std::size_t node_count() const { return out_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  const ArcSet& arcs() const { return arcs_; }

  std::span<const NodeId> out_neighbors(NodeId v) const { return out_[v]; }
  std::span<const NodeId> in_neighbors(NodeId v) const { return in_[v]; }

  bool has_arc(NodeId tail, NodeId head) const;
  bool has_arc(const Arc& arc) const { return has_arc(arc.tail, arc.head); }
  bool adjacent(NodeId u, NodeId v) const {
    return has_arc(u, v) || has_arc(v, u);
  }

  bool digon_free() const { return digon_free_; }

  // True if every consecutive pair of `cycle` is an arc and nodes are
  // distinct.
  bool contains_dicycle(const DicycleWitness& cycle) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.node_count() == b.node_count() && a.arcs_ == b.arcs_;
  }

 private:
  friend Digraph make_digraph(std::size_t n, std::span<const Arc> arcs);

  ArcSet arcs_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  bool digon_free_ = true;
};

// Throws Error{kSelfLoop} or Error{kNodeOutOfRange}. Duplicates collapse.
Digraph make_digraph(std::size_t n, std::span<const Arc> arcs);
inline Digraph make_digraph(std::size_t n, std::initializer_list<Arc> arcs) {
  return make_digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

// Result of an acyclicity test: a topological order or a dicycle.
class AcyclicityResult {
 public:
  explicit AcyclicityResult(std::vector<NodeId> order)
      : value_(std::move(order)) {}
  explicit AcyclicityResult(DicycleWitness witness)
      : value_(std::move(witness)) {}

  bool acyclic() const {
    return std::holds_alternative<std::vector<NodeId>>(value_);
  }
  const std::vector<NodeId>& order() const {
    return std::get<std::vector<NodeId>>(value_);
  }
  const DicycleWitness& witness() const {
    return std::get<DicycleWitness>(value_);
  }

 private:
  std::variant<std::vector<NodeId>, DicycleWitness> value_;
};

// Kahn's algorithm with a FIFO seeded in node order; deterministic.
AcyclicityResult is_acyclic(const Digraph& g);

struct InducedSubdigraph {
  Digraph graph;
  // original[local] is the node of the parent digraph.
  std::vector<NodeId> original;
};

// `keep` may be given in any order; nodes are relabeled by increasing
// original index.
InducedSubdigraph induced_subdigraph(const Digraph& g,
                                     std::span<const NodeId> keep);

// Throws Error{kArcNotPresent} if some arc of `t` is not in `g`.
Digraph remove_arcs(const Digraph& g, std::span<const Arc> t);

// Arcs of `g` with both ends mapped through `original`.
std::vector<Arc> lift_arcs(std::span<const Arc> arcs,
                           std::span<const NodeId> original);

}  // namespace woodall

#endif  // WOODALL_DIGRAPH_HPP_
