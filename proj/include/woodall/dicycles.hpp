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

#ifndef WOODALL_DICYCLES_HPP_
#define WOODALL_DICYCLES_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "woodall/digraph.hpp"
#include "woodall/error.hpp"

namespace woodall {

// A directed 3-cycle a -> b -> c -> a.
struct Ditriangle {
  NodeId a = 0;
  NodeId b = 0;
  NodeId c = 0;

  std::array<Arc, 3> arcs() const { return {Arc{a, b}, Arc{b, c}, Arc{c, a}}; }
  // Rotation with the smallest node first.
  Ditriangle canonical() const;

  friend bool operator==(const Ditriangle&, const Ditriangle&) = default;
};

bool is_ditriangle_of(const Digraph& g, const Ditriangle& t);

// Length of a shortest dicycle; nullopt value means infinite.
class Girth {
 public:
  static Girth infinite() { return Girth(); }
  static Girth finite(std::size_t value) { return Girth(value); }

  bool is_infinite() const { return !value_.has_value(); }
  std::size_t value() const { return *value_; }

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  Girth() = default;
  explicit Girth(std::size_t value) : value_(value) {}
  std::optional<std::size_t> value_;
};

std::string to_string(const Girth& girth);

struct GirthResult {
  Girth girth = Girth::infinite();
  std::optional<DicycleWitness> witness;
};

// Digons are found by an antiparallel scan; otherwise one BFS per start
// node. O(n * m).
GirthResult girth(const Digraph& g);

// First ditriangle in canonical order (smallest node first, then
// lexicographic), or nullopt.
std::optional<Ditriangle> find_ditriangle(const Digraph& g);

// All ditriangles, canonical rotation, sorted.
std::vector<Ditriangle> all_ditriangles(const Digraph& g);

struct ShortenResult {
  Ditriangle ditriangle;
  std::size_t steps = 0;
};

// Repeatedly splits the working dicycle at its first chord until three
// nodes remain. Requires a digon-free digraph with a chordal underlying
// graph. Throws kNoChordFound or kDigonEncountered.
ShortenResult shorten_to_ditriangle(const Digraph& g, const DicycleWitness& c);

class EnumerationLimitExceeded : public Error {
 public:
  explicit EnumerationLimitExceeded(std::vector<DicycleWitness> partial)
      : Error(ErrorCode::kLimitExceeded,
              "dicycle enumeration stopped after " +
                  std::to_string(partial.size()) + " cycles"),
        partial_(std::move(partial)) {}

  const std::vector<DicycleWitness>& partial() const { return partial_; }

 private:
  std::vector<DicycleWitness> partial_;
};

// Johnson's simple-cycle enumeration. Each cycle appears once, smallest
// node first. If more than `max_count` cycles exist, throws
// EnumerationLimitExceeded carrying the first `max_count`.
std::vector<DicycleWitness> enumerate_dicycles(const Digraph& g,
                                               std::size_t max_count);

// Callback form; return false from `visit` to stop early. Returns true when
// the enumeration ran to completion.
bool for_each_dicycle(const Digraph& g,
                      const std::function<bool(const DicycleWitness&)>& visit);

}  // namespace woodall

#endif  // WOODALL_DICYCLES_HPP_
