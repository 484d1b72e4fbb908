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

#include "woodall/oracle.hpp"

#include <algorithm>

#include <json.hpp>

#include "woodall/error.hpp"

namespace woodall {

TransversalCheck is_transversal(const Digraph& g, std::span<const Arc> t) {
  AcyclicityResult rest = is_acyclic(remove_arcs(g, t));
  if (rest.acyclic()) return {true, std::nullopt};
  return {false, rest.witness()};
}

VerificationReport verify_packing(const Digraph& g, const Packing& p) {
  VerificationReport report;
  report.size = p.size();
  report.girth = girth(g).girth;

  std::vector<Arc> all;
  for (std::size_t i = 0; i < p.size(); ++i) {
    ArcSet t = make_arc_set(p.transversals[i]);
    VerificationReport::Entry entry{i + 1, false, std::nullopt};
    const bool present = std::all_of(t.begin(), t.end(), [&](const Arc& arc) {
      return g.has_arc(arc);
    });
    if (present) {
      TransversalCheck check = is_transversal(g, t);
      entry.is_transversal = check.is_transversal;
      entry.counterexample = std::move(check.counterexample);
    } else {
      report.arcs_present = false;
    }
    report.per_transversal.push_back(std::move(entry));
    all.insert(all.end(), t.begin(), t.end());
  }
  std::sort(all.begin(), all.end());
  report.disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();

  const bool all_transversals =
      std::all_of(report.per_transversal.begin(), report.per_transversal.end(),
                  [](const auto& e) { return e.is_transversal; });
  const bool within_girth =
      report.girth.is_infinite() || report.size <= report.girth.value();
  report.verdict = report.arcs_present && report.disjoint &&
                   all_transversals && within_girth;
  return report;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["verdict"] = report.verdict;
  out["disjoint"] = report.disjoint;
  out["arcs_present"] = report.arcs_present;
  out["size"] = report.size;
  if (report.girth.is_infinite()) {
    out["girth"] = nullptr;
  } else {
    out["girth"] = report.girth.value();
  }
  auto entries = nlohmann::ordered_json::array();
  for (const auto& entry : report.per_transversal) {
    nlohmann::ordered_json e;
    e["index"] = entry.index;
    e["is_transversal"] = entry.is_transversal;
    if (entry.counterexample) {
      e["counterexample"] = entry.counterexample->nodes();
    } else {
      e["counterexample"] = nullptr;
    }
    entries.push_back(std::move(e));
  }
  out["transversals"] = std::move(entries);
  return out.dump();
}

namespace {

// Backtracking over partitions of the arcs into k classes. complement_[c]
// holds the assigned arcs outside class c; it must stay acyclic.
class PartitionSearch {
 public:
  PartitionSearch(const Digraph& g, std::vector<Arc> arcs, std::size_t k,
                  std::uint64_t budget, std::uint64_t& nodes)
      : n_(g.node_count()),
        arcs_(std::move(arcs)),
        k_(k),
        budget_(budget),
        nodes_(nodes),
        complement_(k, std::vector<std::vector<NodeId>>(n_)),
        stamp_(n_, 0) {}

  bool run() { return assign(0, 0); }

 private:
  bool reaches(const std::vector<std::vector<NodeId>>& adj, NodeId from,
               NodeId to) {
    ++epoch_;
    std::vector<NodeId> stack{from};
    stamp_[from] = epoch_;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (NodeId w : adj[v]) {
        if (stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          stack.push_back(w);
        }
      }
    }
    return false;
  }

  bool assign(std::size_t i, std::size_t used) {
    if (i == arcs_.size()) return used == k_;
    const Arc& arc = arcs_[i];
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (nodes_ >= budget_) throw BudgetExhausted(2, nodes_);
      ++nodes_;
      bool ok = true;
      for (std::size_t other = 0; other < k_ && ok; ++other) {
        if (other != c && reaches(complement_[other], arc.head, arc.tail)) {
          ok = false;
        }
      }
      if (!ok) continue;
      for (std::size_t other = 0; other < k_; ++other) {
        if (other != c) complement_[other][arc.tail].push_back(arc.head);
      }
      if (assign(i + 1, std::max(used, c + 1))) return true;
      for (std::size_t other = 0; other < k_; ++other) {
        if (other != c) complement_[other][arc.tail].pop_back();
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<Arc> arcs_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<std::vector<std::vector<NodeId>>> complement_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

}  // namespace

std::size_t exact_nu(const Digraph& g, std::uint64_t budget) {
  const GirthResult gr = girth(g);
  if (gr.girth.is_infinite()) {
    throw Error(ErrorCode::kAcyclicInput,
                "digraph has no dicycle; packing number is undefined");
  }
  // Forward and backward arcs of any order give two disjoint transversals.
  if (gr.girth.value() == 2) return 2;

  // Arcs of a shortest dicycle first: symmetry breaking then pins them to
  // distinct classes as early as possible.
  std::vector<Arc> order = gr.witness->arcs();
  for (const Arc& arc : g.arcs()) {
    if (std::find(order.begin(), order.end(), arc) == order.end()) {
      order.push_back(arc);
    }
  }
  std::uint64_t nodes = 0;
  for (std::size_t k = gr.girth.value(); k >= 3; --k) {
    if (PartitionSearch(g, order, k, budget, nodes).run()) return k;
  }
  return 2;
}

SplitCheck check_split(const Digraph& g, const Packing& p) {
  if (p.size() != 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "check_split needs a packing of size 3");
  }
  std::array<ArcSet, 3> sets;
  for (std::size_t c = 0; c < 3; ++c) sets[c] = make_arc_set(p.transversals[c]);
  for (const Ditriangle& t : all_ditriangles(g)) {
    std::array<std::size_t, 3> classes{};
    const auto arcs = t.arcs();
    bool ok = true;
    for (std::size_t i = 0; i < 3 && ok; ++i) {
      classes[i] = SIZE_MAX;
      for (std::size_t c = 0; c < 3; ++c) {
        if (contains(sets[c], arcs[i])) classes[i] = c;
      }
      if (classes[i] == SIZE_MAX) ok = false;
    }
    ok = ok && classes[0] != classes[1] && classes[1] != classes[2] &&
         classes[0] != classes[2];
    if (!ok) return {false, t};
  }
  return {true, std::nullopt};
}

}  // namespace woodall
