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

#ifndef WOODALL_ORACLE_HPP_
#define WOODALL_ORACLE_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "woodall/dicycles.hpp"
#include "woodall/digraph.hpp"
#include "woodall/packing.hpp"

namespace woodall {

struct TransversalCheck {
  bool is_transversal = false;
  std::optional<DicycleWitness> counterexample;
};

// t meets every dicycle of g iff g - t is acyclic. Throws kArcNotPresent.
TransversalCheck is_transversal(const Digraph& g, std::span<const Arc> t);

struct VerificationReport {
  struct Entry {
    std::size_t index = 0;
    bool is_transversal = false;
    std::optional<DicycleWitness> counterexample;
  };

  bool arcs_present = true;
  bool disjoint = true;
  std::vector<Entry> per_transversal;
  std::size_t size = 0;
  Girth girth = Girth::infinite();
  bool verdict = false;
};

VerificationReport verify_packing(const Digraph& g, const Packing& p);

// Machine-readable form of the report (one JSON object).
std::string to_json(const VerificationReport& report);

inline constexpr std::uint64_t kUnlimitedBudget =
    std::numeric_limits<std::uint64_t>::max();

// Maximum number of pairwise-disjoint transversals, by exhaustive search
// from girth(g) downward. Throws kAcyclicInput when g has no dicycle and
// BudgetExhausted when more than `budget` search nodes would be needed.
std::size_t exact_nu(const Digraph& g, std::uint64_t budget = kUnlimitedBudget);

struct SplitCheck {
  bool ok = false;
  std::optional<Ditriangle> violation;
};

// True iff every ditriangle of g has its arcs in three distinct
// transversals of p. Requires |p| = 3.
SplitCheck check_split(const Digraph& g, const Packing& p);

}  // namespace woodall

#endif  // WOODALL_ORACLE_HPP_
