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

#ifndef WOODALL_GENERATOR_HPP_
#define WOODALL_GENERATOR_HPP_

#include <cstdint>
#include <random>
#include <utility>

#include "woodall/digraph.hpp"
#include "woodall/three_tree.hpp"

namespace woodall {

struct GenConfig {
  std::size_t n = 3;
  std::uint64_t seed = 0;
  double digon_probability = 0.0;
  bool require_dicycle = true;
  std::size_t max_resamples = 64;
};

// Throws kInvalidArgument on n < 3 or a probability outside [0, 1].
void validate(const GenConfig& cfg);

// Seeded 64-bit source shared by the generator and the test drivers.
// std::mt19937_64 is fully specified by the standard, so streams agree
// across platforms; bounded and Bernoulli draws avoid the
// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }
  bool bernoulli(double p);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct ApollonianNetwork {
  ConstructionSequence sequence;
  UndirectedGraph graph;
};

// Base K_3, then each vertex goes into a uniformly random current face.
ApollonianNetwork random_apollonian(const GenConfig& cfg);

// One random direction per edge; with digon_probability the reverse arc is
// added too. With require_dicycle, orientations are redrawn until the
// digraph has a dicycle (kResampleExhausted after max_resamples draws).
Digraph orient(const UndirectedGraph& graph, const GenConfig& cfg);

struct GeneratedInstance {
  ConstructionSequence sequence;
  Digraph digraph;
};

GeneratedInstance generate(const GenConfig& cfg);

}  // namespace woodall

#endif  // WOODALL_GENERATOR_HPP_
