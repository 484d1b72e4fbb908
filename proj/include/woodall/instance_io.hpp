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

#ifndef WOODALL_INSTANCE_IO_HPP_
#define WOODALL_INSTANCE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "woodall/digraph.hpp"
#include "woodall/packing.hpp"
#include "woodall/three_tree.hpp"

namespace woodall {

// Line-oriented text format:
//
//   woodall-packer v1
//   n <int>
//   m <int>
//   arc <tail> <head>            (m lines)
//   base <a> <b> <c>             (optional, then zero or more step lines)
//   step <v> <a> <b> <c>
//   packing <k>                  (optional, then transversal lines)
//   transversal <idx> <tail> <head>
//
// Transversal indices are 1-based. Output is canonical: arcs sorted,
// transversal lines grouped by index with arcs sorted.
struct Instance {
  Digraph graph;
  std::optional<ConstructionSequence> sequence;
  std::optional<Packing> packing;
};

inline constexpr std::string_view kFormatHeader = "woodall-packer v1";

std::string write_instance(const Instance& instance);

// Throws Error{kParse} with the offending line number.
Instance read_instance(std::string_view text);

Instance load_instance(const std::string& path);  // throws kIo, kParse
void save_instance(const Instance& instance, const std::string& path);

}  // namespace woodall

#endif  // WOODALL_INSTANCE_IO_HPP_
