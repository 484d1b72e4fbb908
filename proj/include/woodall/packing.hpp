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

#ifndef WOODALL_PACKING_HPP_
#define WOODALL_PACKING_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "woodall/dicycles.hpp"
#include "woodall/digraph.hpp"
#include "woodall/three_tree.hpp"

namespace woodall {

// Ordered list of arc sets T_1, ..., T_k. Index 0 in code is T_1.
struct Packing {
  std::vector<ArcSet> transversals;

  std::size_t size() const { return transversals.size(); }

  friend bool operator==(const Packing&, const Packing&) = default;
};

// For each ditriangle (a, b, c) of the host, the transversal indices of
// a->b, b->c and c->a. The three indices are pairwise distinct.
struct SplitCertificate {
  struct Entry {
    Ditriangle ditriangle;
    std::array<std::size_t, 3> classes{};

    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;  // sorted by canonical ditriangle

  friend bool operator==(const SplitCertificate&,
                         const SplitCertificate&) = default;
};

struct PackResult {
  Packing packing;
  SplitCertificate certificate;
};

// Counts of the construction routes taken, summed over the recursion.
struct PackTrace {
  std::size_t base_cases = 0;
  std::size_t separator_splits = 0;
  std::size_t case2_assignments = 0;
  std::size_t order_extensions = 0;
  std::size_t acyclic_decompositions = 0;

  PackTrace& operator+=(const PackTrace& other);
};

struct PackOptions {
  // Verify the packing at every recursion level, not only at the root.
  bool verify_each_level = false;
};

// Packing of size girth(g) for a digraph whose underlying graph is a
// 3-tree and which has a dicycle. Throws kAcyclicInput, kNotThreeTree, or
// ConstructionFailed. The result is always verified before it is returned.
Packing pack(const Digraph& g, const PackOptions& options = {},
             PackTrace* trace = nullptr);

// Forward arcs (tail earlier in `order`) and backward arcs. Both classes
// are acyclic, so each is a transversal of the other's complement.
Packing two_acyclic_decomposition(const Digraph& g,
                                  std::span<const NodeId> order);

// Size-3 packing of a digon-free 3-tree digraph of girth 3.
PackResult pack3(const Digraph& g, const PackOptions& options = {},
                 PackTrace* trace = nullptr);

// Exhaustive search for 3 <= n <= 4. Arcs are tried in T_1, T_2, T_3, then
// left unassigned, in sorted arc order.
PackResult base_small(const Digraph& g);

// Each part's packing is given in the parent's node ids. Transversals are
// relabelled so that a->b lies in T_1, b->c in T_2, c->a in T_3, then
// unioned index-wise, folding left to right. Throws kCertificateViolation.
PackResult case1_merge(std::span<const PackResult> parts,
                       const Ditriangle& shared);

// T_1 takes every arc of g - v3. For u in v3, an in-arc on a ditriangle
// through u goes to T_2, an out-arc on one goes to T_3, everything else to
// T_1. Throws kInnerCycle if g - v3 has a dicycle.
PackResult case2_assign(const Digraph& g, std::span<const NodeId> v3);

// Extends three vertex orders along `seq` so every arc is backward in
// exactly one order; T_k is the set of backward arcs of order k. Works for
// any digon-free digraph whose underlying graph is the 3-tree built by
// `seq`.
PackResult order_extension(const Digraph& g, const ConstructionSequence& seq);

// Checks that every ditriangle of g has its arcs in three distinct
// transversals of p and records them. Throws kCertificateViolation.
SplitCertificate make_split_certificate(const Digraph& g, const Packing& p);

// Adds each host edge missing from g as a single arc from the lower to the
// higher index. Throws kHostMismatch, kDigonEncountered, kDigonCreated.
Digraph complete_partial(const Digraph& g, const ConstructionSequence& host);

// Keeps only the arcs of each transversal that belong to g.
Packing restrict_packing(const Packing& p, const Digraph& g);

// complete_partial, pack, restrict_packing. The result is verified on g.
Packing pack_partial(const Digraph& g, const ConstructionSequence& host,
                     const PackOptions& options = {},
                     PackTrace* trace = nullptr);

}  // namespace woodall

#endif  // WOODALL_PACKING_HPP_
