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

#include "woodall/generator.hpp"

#include <algorithm>
#include <array>

#include "woodall/dicycles.hpp"
#include "woodall/error.hpp"

namespace woodall {

namespace {

constexpr std::uint64_t kOrientationStream = 0x9e3779b97f4a7c15ULL;

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the low values that would bias the modulo.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

bool Rng::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

void validate(const GenConfig& cfg) {
  if (cfg.n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "n must be at least 3, got " + std::to_string(cfg.n));
  }
  if (!(cfg.digon_probability >= 0.0 && cfg.digon_probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "digon probability must lie in [0, 1]");
  }
}

ApollonianNetwork random_apollonian(const GenConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  ConstructionSequence seq;
  seq.base = {0, 1, 2};
  // The base triangle bounds two faces.
  std::vector<Triple> faces{{0, 1, 2}, {0, 1, 2}};
  for (NodeId v = 3; v < cfg.n; ++v) {
    const std::size_t pick = rng.below(faces.size());
    const Triple host = faces[pick];
    faces[pick] = faces.back();
    faces.pop_back();
    const auto& [a, b, c] = host;
    faces.push_back({a, b, v});
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
    seq.steps.push_back({v, host});
  }
  UndirectedGraph graph = replay(seq);
  return {std::move(seq), std::move(graph)};
}

Digraph orient(const UndirectedGraph& graph, const GenConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed ^ kOrientationStream);
  const auto edges = graph.edges();
  const std::size_t attempts = std::max<std::size_t>(cfg.max_resamples, 1);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * edges.size());
    for (auto [u, v] : edges) {
      const Arc arc = rng.coin() ? Arc{u, v} : Arc{v, u};
      arcs.push_back(arc);
      if (rng.bernoulli(cfg.digon_probability)) arcs.push_back(arc.reversed());
    }
    Digraph g = make_digraph(graph.node_count(), arcs);
    if (!cfg.require_dicycle || !is_acyclic(g).acyclic()) return g;
  }
  throw Error(ErrorCode::kResampleExhausted,
              "no orientation with a dicycle after " +
                  std::to_string(attempts) + " draws");
}

GeneratedInstance generate(const GenConfig& cfg) {
  ApollonianNetwork net = random_apollonian(cfg);
  Digraph g = orient(net.graph, cfg);
  return {std::move(net.sequence), std::move(g)};
}

}  // namespace woodall
