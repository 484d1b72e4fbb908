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

#include "woodall/packing.hpp"

#include <algorithm>
#include <numeric>

#include "woodall/error.hpp"
#include "woodall/instance_io.hpp"
#include "woodall/oracle.hpp"

namespace woodall {

namespace {

constexpr std::size_t kNoClass = SIZE_MAX;

std::string dump(const Digraph& g) { return write_instance(Instance{g, {}, {}}); }

std::size_t class_of(const Packing& p, const Arc& arc) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (contains(p.transversals[i], arc)) return i;
  }
  return kNoClass;
}

Packing packing_from_classes(std::span<const Arc> arcs,
                             std::span<const std::size_t> classes,
                             std::size_t k) {
  Packing p;
  p.transversals.resize(k);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (classes[i] != kNoClass) p.transversals[classes[i]].push_back(arcs[i]);
  }
  for (auto& t : p.transversals) t = make_arc_set(std::move(t));
  return p;
}

// Rotates an entry so its ditriangle starts at the smallest node.
SplitCertificate::Entry canonical_entry(SplitCertificate::Entry entry) {
  while (!(entry.ditriangle.a <= entry.ditriangle.b &&
           entry.ditriangle.a <= entry.ditriangle.c)) {
    const Ditriangle& t = entry.ditriangle;
    entry.ditriangle = {t.b, t.c, t.a};
    entry.classes = {entry.classes[1], entry.classes[2], entry.classes[0]};
  }
  return entry;
}

bool entry_less(const SplitCertificate::Entry& x,
                const SplitCertificate::Entry& y) {
  const auto& s = x.ditriangle;
  const auto& t = y.ditriangle;
  return std::tie(s.a, s.b, s.c) < std::tie(t.a, t.b, t.c);
}

PackResult lift(const PackResult& local, std::span<const NodeId> original) {
  PackResult lifted;
  for (const ArcSet& t : local.packing.transversals) {
    lifted.packing.transversals.push_back(make_arc_set(lift_arcs(t, original)));
  }
  for (const auto& entry : local.certificate.entries) {
    const Ditriangle& t = entry.ditriangle;
    lifted.certificate.entries.push_back(canonical_entry(
        {Ditriangle{original[t.a], original[t.b], original[t.c]},
         entry.classes}));
  }
  std::sort(lifted.certificate.entries.begin(),
            lifted.certificate.entries.end(), entry_less);
  return lifted;
}

void verify_or_fail(const Digraph& g, const Packing& p, std::size_t expected,
                    const char* route) {
  VerificationReport report = verify_packing(g, p);
  if (!report.verdict || p.size() != expected) {
    throw ConstructionFailed(std::string(route) + " produced an invalid packing",
                             dump(g));
  }
}

}  // namespace

PackTrace& PackTrace::operator+=(const PackTrace& other) {
  base_cases += other.base_cases;
  separator_splits += other.separator_splits;
  case2_assignments += other.case2_assignments;
  order_extensions += other.order_extensions;
  acyclic_decompositions += other.acyclic_decompositions;
  return *this;
}

SplitCertificate make_split_certificate(const Digraph& g, const Packing& p) {
  SplitCertificate certificate;
  for (const Ditriangle& t : all_ditriangles(g)) {
    SplitCertificate::Entry entry{t, {}};
    const auto arcs = t.arcs();
    for (std::size_t i = 0; i < 3; ++i) {
      entry.classes[i] = class_of(p, arcs[i]);
      if (entry.classes[i] == kNoClass) {
        throw Error(ErrorCode::kCertificateViolation,
                    "arc " + to_string(arcs[i]) + " of a ditriangle is in no transversal");
      }
    }
    const auto& c = entry.classes;
    if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) {
      throw Error(ErrorCode::kCertificateViolation,
                  "ditriangle " + std::to_string(t.a) + "," +
                      std::to_string(t.b) + "," + std::to_string(t.c) +
                      " has two arcs in one transversal");
    }
    certificate.entries.push_back(entry);
  }
  return certificate;
}

Packing two_acyclic_decomposition(const Digraph& g,
                                  std::span<const NodeId> order) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> position(n, SIZE_MAX);
  if (order.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "order is not a permutation");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != SIZE_MAX) {
      throw Error(ErrorCode::kInvalidArgument, "order is not a permutation");
    }
    position[order[i]] = i;
  }
  Packing p;
  p.transversals.resize(2);
  for (const Arc& arc : g.arcs()) {
    const bool forward = position[arc.tail] < position[arc.head];
    p.transversals[forward ? 0 : 1].push_back(arc);
  }
  return p;
}

PackResult base_small(const Digraph& g) {
  const std::size_t n = g.node_count();
  if (n < 3 || n > 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "base_small handles 3 or 4 nodes, got " + std::to_string(n));
  }
  const ArcSet& arcs = g.arcs();
  const std::size_t m = arcs.size();
  // Digit 3 leaves the arc out of every transversal.
  std::vector<std::size_t> digits(m, 0);
  std::vector<std::size_t> classes(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) {
      classes[i] = digits[i] == 3 ? kNoClass : digits[i];
    }
    Packing p = packing_from_classes(arcs, classes, 3);
    if (verify_packing(g, p).verdict && check_split(g, p).ok) {
      return {p, make_split_certificate(g, p)};
    }
    // Odometer with the first arc as the most significant digit.
    std::size_t i = m;
    while (i > 0 && digits[i - 1] == 3) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  throw ConstructionFailed("no size-3 packing on a small instance", dump(g));
}

PackResult case1_merge(std::span<const PackResult> parts,
                       const Ditriangle& shared) {
  if (parts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "case1_merge needs parts");
  }
  const auto shared_arcs = shared.arcs();
  auto align = [&](const PackResult& part) {
    if (part.packing.size() != 3) {
      throw Error(ErrorCode::kCertificateViolation,
                  "part packing does not have three transversals");
    }
    std::array<std::size_t, 3> target{kNoClass, kNoClass, kNoClass};
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t c = class_of(part.packing, shared_arcs[i]);
      if (c == kNoClass || target[c] != kNoClass) {
        throw Error(ErrorCode::kCertificateViolation,
                    "shared ditriangle is not split by a part packing");
      }
      target[c] = i;
    }
    PackResult aligned;
    aligned.packing.transversals.resize(3);
    for (std::size_t c = 0; c < 3; ++c) {
      aligned.packing.transversals[target[c]] = part.packing.transversals[c];
    }
    for (auto entry : part.certificate.entries) {
      for (auto& c : entry.classes) c = target.at(c);
      aligned.certificate.entries.push_back(entry);
    }
    return aligned;
  };

  PackResult merged = align(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    PackResult next = align(parts[i]);
    for (std::size_t c = 0; c < 3; ++c) {
      ArcSet& t = merged.packing.transversals[c];
      t.insert(t.end(), next.packing.transversals[c].begin(),
               next.packing.transversals[c].end());
      t = make_arc_set(std::move(t));
    }
    auto& entries = merged.certificate.entries;
    entries.insert(entries.end(), next.certificate.entries.begin(),
                   next.certificate.entries.end());
    std::sort(entries.begin(), entries.end(), entry_less);
    std::vector<SplitCertificate::Entry> unique;
    for (const auto& entry : entries) {
      if (!unique.empty() && unique.back().ditriangle == entry.ditriangle) {
        if (unique.back().classes != entry.classes) {
          throw Error(ErrorCode::kCertificateViolation,
                      "parts disagree on a shared ditriangle");
        }
        continue;
      }
      unique.push_back(entry);
    }
    entries = std::move(unique);
  }
  // Parts meet only in the shared arcs, which now agree.
  const auto& ts = merged.packing.transversals;
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = x + 1; y < 3; ++y) {
      std::vector<Arc> common;
      std::set_intersection(ts[x].begin(), ts[x].end(), ts[y].begin(),
                            ts[y].end(), std::back_inserter(common));
      if (!common.empty()) {
        throw Error(ErrorCode::kCertificateViolation,
                    "merged transversals overlap at " + to_string(common[0]));
      }
    }
  }
  return merged;
}

PackResult case2_assign(const Digraph& g, std::span<const NodeId> v3) {
  const std::size_t n = g.node_count();
  if (n < 5) {
    throw Error(ErrorCode::kInvalidArgument, "case2_assign needs n >= 5");
  }
  if (!g.digon_free()) {
    throw Error(ErrorCode::kDigonEncountered, "case2_assign needs no digons");
  }
  std::vector<char> in_v3(n, 0);
  for (NodeId u : v3) in_v3.at(u) = 1;
  std::vector<NodeId> rest;
  for (NodeId v = 0; v < n; ++v) {
    if (!in_v3[v]) rest.push_back(v);
  }
  for (const Arc& arc : g.arcs()) {
    if (in_v3[arc.tail] && in_v3[arc.head]) {
      throw Error(ErrorCode::kNotIndependent,
                  "arc " + to_string(arc) + " joins two removed vertices");
    }
  }
  if (!is_acyclic(induced_subdigraph(g, rest).graph).acyclic()) {
    throw Error(ErrorCode::kInnerCycle,
                "digraph minus the degree-3 vertices has a dicycle");
  }

  std::vector<std::size_t> classes;
  classes.reserve(g.arc_count());
  for (const Arc& arc : g.arcs()) {
    std::size_t c = 0;
    if (in_v3[arc.head]) {
      // x -> u is on a ditriangle iff u -> y and y -> x for some y.
      const NodeId u = arc.head;
      for (NodeId y : g.out_neighbors(u)) {
        if (g.has_arc(y, arc.tail)) c = 1;
      }
    } else if (in_v3[arc.tail]) {
      const NodeId u = arc.tail;
      for (NodeId x : g.in_neighbors(u)) {
        if (g.has_arc(arc.head, x)) c = 2;
      }
    }
    classes.push_back(c);
  }
  Packing p = packing_from_classes(g.arcs(), classes, 3);
  return {p, make_split_certificate(g, p)};
}

PackResult order_extension(const Digraph& g, const ConstructionSequence& seq) {
  if (!g.digon_free()) {
    throw Error(ErrorCode::kDigonEncountered,
                "order_extension needs a digon-free digraph");
  }
  if (seq.node_count() != g.node_count() ||
      !(replay(seq) == underlying_graph(g))) {
    throw Error(ErrorCode::kHostMismatch,
                "construction sequence does not build the underlying graph");
  }
  auto arc_between = [&](NodeId x, NodeId y) {
    return g.has_arc(x, y) ? Arc{x, y} : Arc{y, x};
  };

  std::vector<Arc> arcs;
  std::vector<std::size_t> classes;
  std::array<std::vector<NodeId>, 3> orders;

  {
    const auto& [a, b, c] = seq.base;
    const std::array<Arc, 3> base_arcs{arc_between(a, b), arc_between(b, c),
                                       arc_between(a, c)};
    std::array<NodeId, 3> perm{a, b, c};
    std::vector<std::array<NodeId, 3>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    auto backward = [](const std::array<NodeId, 3>& order, const Arc& arc) {
      auto pos = [&](NodeId v) {
        return std::find(order.begin(), order.end(), v) - order.begin();
      };
      return pos(arc.tail) > pos(arc.head);
    };
    bool found = false;
    for (std::size_t i = 0; i < 216 && !found; ++i) {
      const std::array<std::size_t, 3> pick{i / 36, (i / 6) % 6, i % 6};
      std::array<std::size_t, 3> owner{kNoClass, kNoClass, kNoClass};
      bool ok = true;
      for (std::size_t e = 0; e < 3 && ok; ++e) {
        for (std::size_t k = 0; k < 3 && ok; ++k) {
          if (!backward(perms[pick[k]], base_arcs[e])) continue;
          if (owner[e] != kNoClass) ok = false;
          owner[e] = k;
        }
        if (owner[e] == kNoClass) ok = false;
      }
      if (!ok) continue;
      found = true;
      for (std::size_t k = 0; k < 3; ++k) {
        orders[k].assign(perms[pick[k]].begin(), perms[pick[k]].end());
      }
      for (std::size_t e = 0; e < 3; ++e) {
        arcs.push_back(base_arcs[e]);
        classes.push_back(owner[e]);
      }
    }
    if (!found) {
      throw ConstructionFailed("no order triple for the base triangle", dump(g));
    }
  }

  for (const ConstructionStep& step : seq.steps) {
    const NodeId u = step.vertex;
    std::array<Arc, 3> u_arcs{};
    for (std::size_t i = 0; i < 3; ++i) u_arcs[i] = arc_between(u, step.host[i]);

    // rank[k][i]: rank of host[i] among the hosts in order k; slot s puts u
    // after exactly the hosts of rank < s.
    std::array<std::array<std::size_t, 3>, 3> rank{};
    std::array<std::array<std::size_t, 3>, 3> where{};
    for (std::size_t k = 0; k < 3; ++k) {
      for (std::size_t i = 0; i < 3; ++i) {
        where[k][i] = static_cast<std::size_t>(
            std::find(orders[k].begin(), orders[k].end(), step.host[i]) -
            orders[k].begin());
      }
      for (std::size_t i = 0; i < 3; ++i) {
        rank[k][i] = 0;
        for (std::size_t j = 0; j < 3; ++j) {
          if (where[k][j] < where[k][i]) ++rank[k][i];
        }
      }
    }
    auto backward_at = [&](std::size_t k, std::size_t slot, std::size_t i) {
      const bool u_after = rank[k][i] < slot;
      return u_arcs[i].tail == u ? u_after : !u_after;
    };

    bool placed = false;
    for (std::size_t code = 0; code < 64 && !placed; ++code) {
      const std::array<std::size_t, 3> slots{code / 16, (code / 4) % 4,
                                             code % 4};
      std::array<std::size_t, 3> owner{kNoClass, kNoClass, kNoClass};
      bool ok = true;
      for (std::size_t i = 0; i < 3 && ok; ++i) {
        for (std::size_t k = 0; k < 3 && ok; ++k) {
          if (!backward_at(k, slots[k], i)) continue;
          if (owner[i] != kNoClass) ok = false;
          owner[i] = k;
        }
        if (owner[i] == kNoClass) ok = false;
      }
      if (!ok) continue;
      placed = true;
      for (std::size_t k = 0; k < 3; ++k) {
        std::array<std::size_t, 3> sorted = where[k];
        std::sort(sorted.begin(), sorted.end());
        const std::size_t at =
            slots[k] < 3 ? sorted[slots[k]] : sorted[2] + 1;
        orders[k].insert(orders[k].begin() + static_cast<std::ptrdiff_t>(at), u);
      }
      for (std::size_t i = 0; i < 3; ++i) {
        arcs.push_back(u_arcs[i]);
        classes.push_back(owner[i]);
      }
    }
    if (!placed) {
      throw ConstructionFailed(
          "no order placement for vertex " + std::to_string(u), dump(g));
    }
  }

  Packing p = packing_from_classes(arcs, classes, 3);
  return {p, make_split_certificate(g, p)};
}

PackResult pack3(const Digraph& g, const PackOptions& options,
                 PackTrace* trace) {
  if (!g.digon_free()) {
    throw Error(ErrorCode::kDigonEncountered, "pack3 needs girth 3");
  }
  PackTrace local;
  PackResult result;
  const char* route = nullptr;
  if (g.node_count() <= 4) {
    result = base_small(g);
    ++local.base_cases;
    route = "base case";
  } else if (auto split = find_separator_ditriangle(g)) {
    std::vector<PackResult> parts;
    for (const InducedSubdigraph& part : split_at_separator(g, *split)) {
      PackResult sub = pack3(part.graph, options, &local);
      parts.push_back(lift(sub, part.original));
    }
    result = case1_merge(parts, split->ditriangle);
    ++local.separator_splits;
    route = "separator merge";
  } else {
    const UndirectedGraph und = underlying_graph(g);
    const std::vector<NodeId> v3 = degree3_set(und);
    std::vector<NodeId> rest;
    std::vector<char> in_v3(g.node_count(), 0);
    for (NodeId u : v3) in_v3[u] = 1;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (!in_v3[v]) rest.push_back(v);
    }
    if (is_acyclic(induced_subdigraph(g, rest).graph).acyclic()) {
      result = case2_assign(g, v3);
      ++local.case2_assignments;
      route = "degree-3 assignment";
    } else {
      auto seq = peel_order(und);
      if (!seq) {
        throw Error(ErrorCode::kNotThreeTree,
                    "underlying graph is not a 3-tree");
      }
      result = order_extension(g, *seq);
      ++local.order_extensions;
      route = "order extension";
    }
  }
  if (options.verify_each_level) verify_or_fail(g, result.packing, 3, route);
  if (trace) *trace += local;
  return result;
}

Packing pack(const Digraph& g, const PackOptions& options, PackTrace* trace) {
  const GirthResult gr = girth(g);
  if (gr.girth.is_infinite()) {
    throw Error(ErrorCode::kAcyclicInput,
                "digraph has no dicycle; packing number is undefined");
  }
  if (!peel_order(underlying_graph(g))) {
    throw Error(ErrorCode::kNotThreeTree, "underlying graph is not a 3-tree");
  }
  PackTrace local;
  Packing p;
  const std::size_t target = gr.girth.value();
  if (target == 2) {
    std::vector<NodeId> identity(g.node_count());
    std::iota(identity.begin(), identity.end(), NodeId{0});
    p = two_acyclic_decomposition(g, identity);
    ++local.acyclic_decompositions;
  } else if (target == 3) {
    try {
      p = pack3(g, options, &local).packing;
    } catch (const ConstructionFailed&) {
      throw;
    } catch (const Error& e) {
      throw ConstructionFailed(e.what(), dump(g));
    }
  } else {
    throw ConstructionFailed(
        "girth " + std::to_string(target) + " on a 3-tree digraph", dump(g));
  }
  verify_or_fail(g, p, target, "pack");
  if (trace) *trace += local;
  return p;
}

Digraph complete_partial(const Digraph& g, const ConstructionSequence& host) {
  const UndirectedGraph h = replay(host);
  if (h.node_count() != g.node_count()) {
    throw Error(ErrorCode::kHostMismatch,
                "host has " + std::to_string(h.node_count()) +
                    " vertices, digraph has " +
                    std::to_string(g.node_count()));
  }
  if (!g.digon_free()) {
    throw Error(ErrorCode::kDigonEncountered,
                "complete_partial needs a digon-free digraph");
  }
  for (const Arc& arc : g.arcs()) {
    if (!h.adjacent(arc.tail, arc.head)) {
      throw Error(ErrorCode::kHostMismatch,
                  "arc " + to_string(arc) + " is not a host edge");
    }
  }
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  for (auto [u, v] : h.edges()) {
    if (!g.adjacent(u, v)) arcs.push_back({u, v});
  }
  Digraph completed = make_digraph(g.node_count(), arcs);
  if (!completed.digon_free()) {
    throw Error(ErrorCode::kDigonCreated, "completion created a digon");
  }
  const Girth before = girth(g).girth;
  if (!before.is_infinite() && before.value() == 3) {
    const Girth after = girth(completed).girth;
    if (after.is_infinite() || after.value() != 3) {
      throw ConstructionFailed("completion changed girth 3", dump(g));
    }
  }
  return completed;
}

Packing restrict_packing(const Packing& p, const Digraph& g) {
  Packing restricted;
  for (const ArcSet& t : p.transversals) {
    ArcSet kept;
    std::set_intersection(t.begin(), t.end(), g.arcs().begin(),
                          g.arcs().end(), std::back_inserter(kept));
    restricted.transversals.push_back(std::move(kept));
  }
  return restricted;
}

Packing pack_partial(const Digraph& g, const ConstructionSequence& host,
                     const PackOptions& options, PackTrace* trace) {
  const Digraph completed = complete_partial(g, host);
  Packing p = restrict_packing(pack(completed, options, trace), g);
  if (!verify_packing(g, p).verdict) {
    throw ConstructionFailed("restricted packing does not verify", dump(g));
  }
  return p;
}

}  // namespace woodall
