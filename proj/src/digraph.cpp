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

#include "woodall/digraph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <iterator>

#include "woodall/error.hpp"

namespace woodall {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kNodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::kArcNotPresent: return "ArcNotPresent";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNoChordFound: return "NoChordFound";
    case ErrorCode::kDigonEncountered: return "DigonEncountered";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kNotIndependent: return "NotIndependent";
    case ErrorCode::kNotThreeTree: return "NotThreeTree";
    case ErrorCode::kInvalidSequence: return "InvalidSequence";
    case ErrorCode::kAcyclicInput: return "AcyclicInput";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
    case ErrorCode::kCertificateViolation: return "CertificateViolation";
    case ErrorCode::kInnerCycle: return "InnerCycle";
    case ErrorCode::kHostMismatch: return "HostMismatch";
    case ErrorCode::kDigonCreated: return "DigonCreated";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kResampleExhausted: return "ResampleExhausted";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

std::string to_string(const Arc& arc) {
  return std::to_string(arc.tail) + "->" + std::to_string(arc.head);
}

ArcSet make_arc_set(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

bool contains(const ArcSet& set, const Arc& arc) {
  return std::binary_search(set.begin(), set.end(), arc);
}

DicycleWitness::DicycleWitness(std::vector<NodeId> nodes)
    : nodes_(std::move(nodes)) {
  if (!nodes_.empty()) {
    auto smallest = std::min_element(nodes_.begin(), nodes_.end());
    std::rotate(nodes_.begin(), smallest, nodes_.end());
  }
}

std::vector<Arc> DicycleWitness::arcs() const {
  std::vector<Arc> result;
  result.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    result.push_back({nodes_[i], nodes_[(i + 1) % nodes_.size()]});
  }
  return result;
}

bool Digraph::has_arc(NodeId tail, NodeId head) const {
  if (tail >= out_.size()) return false;
  const auto& out = out_[tail];
  return std::binary_search(out.begin(), out.end(), head);
}

bool Digraph::contains_dicycle(const DicycleWitness& cycle) const {
  const auto& nodes = cycle.nodes();
  if (nodes.size() < 2) return false;
  std::vector<NodeId> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (const Arc& arc : cycle.arcs()) {
    if (!has_arc(arc)) return false;
  }
  return true;
}

Digraph make_digraph(std::size_t n, std::span<const Arc> arcs) {
  Digraph g;
  for (const Arc& arc : arcs) {
    if (arc.tail >= n || arc.head >= n) {
      throw Error(ErrorCode::kNodeOutOfRange,
                  "arc " + to_string(arc) + " has an endpoint outside [0, " +
                      std::to_string(n) + ")");
    }
    if (arc.tail == arc.head) {
      throw Error(ErrorCode::kSelfLoop, "self-loop " + to_string(arc));
    }
  }
  g.arcs_ = make_arc_set({arcs.begin(), arcs.end()});
  g.out_.assign(n, {});
  g.in_.assign(n, {});
  for (const Arc& arc : g.arcs_) {
    g.out_[arc.tail].push_back(arc.head);
    g.in_[arc.head].push_back(arc.tail);
  }
  // out_ is sorted because arcs_ is; in_ needs sorting.
  for (auto& in : g.in_) std::sort(in.begin(), in.end());
  for (const Arc& arc : g.arcs_) {
    if (arc.tail < arc.head && g.has_arc(arc.head, arc.tail)) {
      g.digon_free_ = false;
      break;
    }
  }
  return g;
}

AcyclicityResult is_acyclic(const Digraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> indegree(n);
  for (NodeId v = 0; v < n; ++v) indegree[v] = g.in_neighbors(v).size();

  std::deque<NodeId> ready;
  for (NodeId v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<NodeId> order;
  order.reserve(n);
  while (!ready.empty()) {
    NodeId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (NodeId w : g.out_neighbors(v)) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() == n) return AcyclicityResult(std::move(order));

  // Every unprocessed node keeps an unprocessed in-neighbour, so walking
  // backwards from the smallest one must revisit a node.
  NodeId start = 0;
  while (indegree[start] == 0) ++start;
  std::vector<std::size_t> seen_at(n, SIZE_MAX);
  std::vector<NodeId> walk;
  NodeId v = start;
  while (seen_at[v] == SIZE_MAX) {
    seen_at[v] = walk.size();
    walk.push_back(v);
    for (NodeId u : g.in_neighbors(v)) {
      if (indegree[u] > 0) {
        v = u;
        break;
      }
    }
  }
  std::vector<NodeId> cycle(walk.begin() + seen_at[v], walk.end());
  // The walk follows arcs backwards.
  std::reverse(cycle.begin(), cycle.end());
  return AcyclicityResult(DicycleWitness(std::move(cycle)));
}

InducedSubdigraph induced_subdigraph(const Digraph& g,
                                     std::span<const NodeId> keep) {
  std::vector<NodeId> original(keep.begin(), keep.end());
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()),
                 original.end());
  std::vector<NodeId> local(g.node_count(), UINT32_MAX);
  for (NodeId i = 0; i < original.size(); ++i) {
    if (original[i] >= g.node_count()) {
      throw Error(ErrorCode::kNodeOutOfRange,
                  "node " + std::to_string(original[i]) + " not in digraph");
    }
    local[original[i]] = i;
  }
  std::vector<Arc> arcs;
  for (const Arc& arc : g.arcs()) {
    if (local[arc.tail] != UINT32_MAX && local[arc.head] != UINT32_MAX) {
      arcs.push_back({local[arc.tail], local[arc.head]});
    }
  }
  return {make_digraph(original.size(), arcs), std::move(original)};
}

Digraph remove_arcs(const Digraph& g, std::span<const Arc> t) {
  ArcSet removed = make_arc_set({t.begin(), t.end()});
  for (const Arc& arc : removed) {
    if (!g.has_arc(arc)) {
      throw Error(ErrorCode::kArcNotPresent,
                  "arc " + to_string(arc) + " not in digraph");
    }
  }
  std::vector<Arc> kept;
  std::set_difference(g.arcs().begin(), g.arcs().end(), removed.begin(),
                      removed.end(), std::back_inserter(kept));
  return make_digraph(g.node_count(), kept);
}

std::vector<Arc> lift_arcs(std::span<const Arc> arcs,
                           std::span<const NodeId> original) {
  std::vector<Arc> lifted;
  lifted.reserve(arcs.size());
  for (const Arc& arc : arcs) {
    lifted.push_back({original[arc.tail], original[arc.head]});
  }
  return lifted;
}

}  // namespace woodall
