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

#include "woodall/dicycles.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace woodall {

Ditriangle Ditriangle::canonical() const {
  if (a <= b && a <= c) return *this;
  if (b <= a && b <= c) return {b, c, a};
  return {c, a, b};
}

bool is_ditriangle_of(const Digraph& g, const Ditriangle& t) {
  if (t.a == t.b || t.b == t.c || t.a == t.c) return false;
  for (const Arc& arc : t.arcs()) {
    if (!g.has_arc(arc)) return false;
  }
  return true;
}

std::string to_string(const Girth& girth) {
  return girth.is_infinite() ? "inf" : std::to_string(girth.value());
}

GirthResult girth(const Digraph& g) {
  for (const Arc& arc : g.arcs()) {
    if (g.has_arc(arc.head, arc.tail)) {
      return {Girth::finite(2), DicycleWitness({arc.tail, arc.head})};
    }
  }
  const std::size_t n = g.node_count();
  std::size_t best = SIZE_MAX;
  std::vector<NodeId> best_cycle;
  std::vector<std::size_t> dist(n);
  std::vector<NodeId> parent(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[s] = 0;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      // Any cycle found later through v is no shorter than dist[v] + 1.
      if (dist[v] + 1 >= best) break;
      if (g.has_arc(v, s)) {
        best = dist[v] + 1;
        best_cycle.clear();
        for (NodeId x = v; x != s; x = parent[x]) best_cycle.push_back(x);
        best_cycle.push_back(s);
        std::reverse(best_cycle.begin(), best_cycle.end());
        break;
      }
      for (NodeId w : g.out_neighbors(v)) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
  }
  if (best == SIZE_MAX) return {};
  return {Girth::finite(best), DicycleWitness(std::move(best_cycle))};
}

std::optional<Ditriangle> find_ditriangle(const Digraph& g) {
  for (NodeId a = 0; a < g.node_count(); ++a) {
    for (NodeId b : g.out_neighbors(a)) {
      if (b < a) continue;
      for (NodeId c : g.out_neighbors(b)) {
        if (c > a && c != b && g.has_arc(c, a)) return Ditriangle{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::vector<Ditriangle> all_ditriangles(const Digraph& g) {
  std::vector<Ditriangle> result;
  for (NodeId a = 0; a < g.node_count(); ++a) {
    for (NodeId b : g.out_neighbors(a)) {
      if (b < a) continue;
      for (NodeId c : g.out_neighbors(b)) {
        if (c > a && c != b && g.has_arc(c, a)) result.push_back({a, b, c});
      }
    }
  }
  return result;
}

ShortenResult shorten_to_ditriangle(const Digraph& g,
                                    const DicycleWitness& c) {
  if (!g.digon_free()) {
    throw Error(ErrorCode::kDigonEncountered,
                "shorten_to_ditriangle requires a digon-free digraph");
  }
  if (c.length() < 3 || !g.contains_dicycle(c)) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected a dicycle of length >= 3 in the digraph");
  }
  std::vector<NodeId> cycle = c.nodes();
  std::size_t steps = 0;
  while (cycle.size() > 3) {
    const std::size_t k = cycle.size();
    bool split = false;
    for (std::size_t i = 0; i < k && !split; ++i) {
      for (std::size_t j = i + 2; j < k && !split; ++j) {
        if (i == 0 && j == k - 1) continue;  // consecutive around the cycle
        const NodeId a = cycle[i];
        const NodeId b = cycle[j];
        const bool forward = g.has_arc(a, b);
        const bool backward = g.has_arc(b, a);
        if (!forward && !backward) continue;
        std::vector<NodeId> next;
        if (forward) {
          // a -> b closes the part that runs from b around to a.
          next.assign(cycle.begin(), cycle.begin() + i + 1);
          next.insert(next.end(), cycle.begin() + j, cycle.end());
        } else {
          // b -> a closes the part that runs from a to b.
          next.assign(cycle.begin() + i, cycle.begin() + j + 1);
        }
        cycle = std::move(next);
        split = true;
      }
    }
    if (!split) {
      throw Error(ErrorCode::kNoChordFound,
                  "dicycle of length " + std::to_string(k) +
                      " has no chord; underlying graph is not chordal");
    }
    ++steps;
  }
  return {Ditriangle{cycle[0], cycle[1], cycle[2]}.canonical(), steps};
}

namespace {

class JohnsonEnumerator {
 public:
  JohnsonEnumerator(const Digraph& g,
                    const std::function<bool(const DicycleWitness&)>& visit)
      : g_(g),
        visit_(visit),
        in_component_(g.node_count()),
        blocked_(g.node_count()),
        blocked_by_(g.node_count()) {}

  bool run() {
    const std::size_t n = g_.node_count();
    for (NodeId s = 0; s < n && !stopped_; ++s) {
      mark_component(s);
      start_ = s;
      for (NodeId v = s; v < n; ++v) {
        blocked_[v] = false;
        blocked_by_[v].clear();
      }
      circuit(s);
    }
    return !stopped_;
  }

 private:
  // Strongly connected component of s within the nodes >= s.
  void mark_component(NodeId s) {
    const std::size_t n = g_.node_count();
    std::vector<char> forward(n, 0), backward(n, 0);
    auto sweep = [&](std::vector<char>& seen, bool use_out) {
      std::vector<NodeId> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        auto next = use_out ? g_.out_neighbors(v) : g_.in_neighbors(v);
        for (NodeId w : next) {
          if (w >= s && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
    };
    sweep(forward, true);
    sweep(backward, false);
    for (NodeId v = 0; v < n; ++v) in_component_[v] = forward[v] && backward[v];
  }

  void unblock(NodeId v) {
    blocked_[v] = false;
    std::set<NodeId> pending;
    pending.swap(blocked_by_[v]);
    for (NodeId w : pending) {
      if (blocked_[w]) unblock(w);
    }
  }

  bool circuit(NodeId v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (NodeId w : g_.out_neighbors(v)) {
      if (stopped_) break;
      if (!in_component_[w]) continue;
      if (w == start_) {
        found = true;
        if (!visit_(DicycleWitness(path_))) stopped_ = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (NodeId w : g_.out_neighbors(v)) {
        if (in_component_[w]) blocked_by_[w].insert(v);
      }
    }
    path_.pop_back();
    return found;
  }

  const Digraph& g_;
  const std::function<bool(const DicycleWitness&)>& visit_;
  std::vector<char> in_component_;
  std::vector<char> blocked_;
  std::vector<std::set<NodeId>> blocked_by_;
  std::vector<NodeId> path_;
  NodeId start_ = 0;
  bool stopped_ = false;
};

}  // namespace

bool for_each_dicycle(const Digraph& g,
                      const std::function<bool(const DicycleWitness&)>& visit) {
  return JohnsonEnumerator(g, visit).run();
}

std::vector<DicycleWitness> enumerate_dicycles(const Digraph& g,
                                               std::size_t max_count) {
  std::vector<DicycleWitness> cycles;
  bool overflow = false;
  for_each_dicycle(g, [&](const DicycleWitness& cycle) {
    if (cycles.size() == max_count) {
      overflow = true;
      return false;
    }
    cycles.push_back(cycle);
    return true;
  });
  if (overflow) throw EnumerationLimitExceeded(std::move(cycles));
  return cycles;
}

}  // namespace woodall
