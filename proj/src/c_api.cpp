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

#include <cstring>
#include <string>

#include "woodall/error.hpp"
#include "woodall/generator.hpp"
#include "woodall/instance_io.hpp"
#include "woodall/oracle.hpp"
#include "woodall/packing.hpp"
#include "woodall/woodall.h"

struct wp_instance {
  woodall::Instance value;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_dump;

int status_for(woodall::ErrorCode code) {
  using woodall::ErrorCode;
  switch (code) {
    case ErrorCode::kIo: return WP_ERROR_IO;
    case ErrorCode::kParse:
    case ErrorCode::kInvalidSequence: return WP_ERROR_PARSE;
    case ErrorCode::kAcyclicInput: return WP_ERROR_ACYCLIC_INPUT;
    case ErrorCode::kNotThreeTree: return WP_ERROR_NOT_THREE_TREE;
    case ErrorCode::kConstructionFailed:
    case ErrorCode::kCertificateViolation:
    case ErrorCode::kInnerCycle: return WP_ERROR_CONSTRUCTION_FAILED;
    case ErrorCode::kBudgetExhausted: return WP_ERROR_BUDGET_EXHAUSTED;
    case ErrorCode::kResampleExhausted: return WP_ERROR_RESAMPLE_EXHAUSTED;
    case ErrorCode::kHostMismatch:
    case ErrorCode::kDigonCreated: return WP_ERROR_HOST_MISMATCH;
    default: return WP_ERROR_INVALID_ARGUMENT;
  }
}

template <typename F>
int guarded(F&& body) {
  last_error.clear();
  last_dump.clear();
  try {
    return body();
  } catch (const woodall::ConstructionFailed& e) {
    last_error = e.what();
    last_dump = e.instance_dump();
    return WP_ERROR_CONSTRUCTION_FAILED;
  } catch (const woodall::Error& e) {
    last_error = std::string(woodall::to_string(e.code())) + ": " + e.what();
    return status_for(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return WP_ERROR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return WP_ERROR_INTERNAL;
  }
}

int null_argument(const char* name) {
  last_error = std::string("null argument: ") + name;
  return WP_ERROR_NULL_POINTER;
}

#define WP_REQUIRE(p) \
  do {                \
    if (!(p)) return null_argument(#p); \
  } while (0)

int write_string(const std::string& text, char* buf, std::size_t* length) {
  const std::size_t needed = text.size() + 1;
  const std::size_t capacity = *length;
  *length = needed;
  if (buf == nullptr || capacity < needed) {
    last_error = "buffer needs " + std::to_string(needed) + " bytes";
    return WP_ERROR_INSUFFICIENT_BUFFER;
  }
  std::memcpy(buf, text.c_str(), needed);
  return WP_OK;
}

int hand_out(woodall::Instance instance, wp_instance** out) {
  *out = new wp_instance{std::move(instance)};
  return WP_OK;
}

}  // namespace

extern "C" {

const char* wp_status_string(int status) {
  switch (status) {
    case WP_OK: return "ok";
    case WP_ERROR_NULL_POINTER: return "null pointer";
    case WP_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case WP_ERROR_IO: return "i/o error";
    case WP_ERROR_PARSE: return "parse error";
    case WP_ERROR_INSUFFICIENT_BUFFER: return "insufficient buffer";
    case WP_ERROR_ACYCLIC_INPUT: return "acyclic input";
    case WP_ERROR_NOT_THREE_TREE: return "not a 3-tree";
    case WP_ERROR_CONSTRUCTION_FAILED: return "construction failed";
    case WP_ERROR_BUDGET_EXHAUSTED: return "budget exhausted";
    case WP_ERROR_RESAMPLE_EXHAUSTED: return "resample exhausted";
    case WP_ERROR_NO_PACKING: return "no packing";
    case WP_ERROR_HOST_MISMATCH: return "host mismatch";
    case WP_ERROR_INTERNAL: return "internal error";
    default: return "unknown status";
  }
}

const char* wp_last_error(void) { return last_error.c_str(); }

const char* wp_last_failure_dump(void) { return last_dump.c_str(); }

int wp_instance_create(uint32_t n, const uint32_t* tails,
                       const uint32_t* heads, size_t m, wp_instance** out) {
  WP_REQUIRE(out);
  if (m > 0) {
    WP_REQUIRE(tails);
    WP_REQUIRE(heads);
  }
  return guarded([&] {
    std::vector<woodall::Arc> arcs(m);
    for (size_t i = 0; i < m; ++i) arcs[i] = {tails[i], heads[i]};
    return hand_out({woodall::make_digraph(n, arcs), {}, {}}, out);
  });
}

void wp_instance_destroy(wp_instance* instance) { delete instance; }

int wp_instance_load(const char* path, wp_instance** out) {
  WP_REQUIRE(path);
  WP_REQUIRE(out);
  return guarded([&] { return hand_out(woodall::load_instance(path), out); });
}

int wp_instance_parse(const char* text, size_t length, wp_instance** out) {
  WP_REQUIRE(text);
  WP_REQUIRE(out);
  return guarded([&] {
    return hand_out(woodall::read_instance({text, length}), out);
  });
}

int wp_instance_save(const wp_instance* instance, const char* path) {
  WP_REQUIRE(instance);
  WP_REQUIRE(path);
  return guarded([&] {
    woodall::save_instance(instance->value, path);
    return WP_OK;
  });
}

int wp_instance_serialize(const wp_instance* instance, char* buf,
                          size_t* length) {
  WP_REQUIRE(instance);
  WP_REQUIRE(length);
  return guarded([&] {
    return write_string(woodall::write_instance(instance->value), buf, length);
  });
}

int wp_instance_node_count(const wp_instance* instance, uint32_t* n) {
  WP_REQUIRE(instance);
  WP_REQUIRE(n);
  *n = static_cast<uint32_t>(instance->value.graph.node_count());
  return WP_OK;
}

int wp_instance_arc_count(const wp_instance* instance, size_t* m) {
  WP_REQUIRE(instance);
  WP_REQUIRE(m);
  *m = instance->value.graph.arc_count();
  return WP_OK;
}

int wp_instance_arc(const wp_instance* instance, size_t index,
                    uint32_t* tail, uint32_t* head) {
  WP_REQUIRE(instance);
  WP_REQUIRE(tail);
  WP_REQUIRE(head);
  const auto& arcs = instance->value.graph.arcs();
  if (index >= arcs.size()) {
    last_error = "arc index out of range";
    return WP_ERROR_INVALID_ARGUMENT;
  }
  *tail = arcs[index].tail;
  *head = arcs[index].head;
  return WP_OK;
}

int wp_instance_has_sequence(const wp_instance* instance, int* yes) {
  WP_REQUIRE(instance);
  WP_REQUIRE(yes);
  *yes = instance->value.sequence.has_value() ? 1 : 0;
  return WP_OK;
}

int wp_girth(const wp_instance* instance, uint32_t* girth) {
  WP_REQUIRE(instance);
  WP_REQUIRE(girth);
  return guarded([&] {
    const woodall::Girth g = woodall::girth(instance->value.graph).girth;
    *girth = g.is_infinite() ? 0 : static_cast<uint32_t>(g.value());
    return WP_OK;
  });
}

int wp_generate(uint32_t n, uint64_t seed, double digon_probability,
                int require_dicycle, uint32_t max_resamples,
                wp_instance** out) {
  WP_REQUIRE(out);
  return guarded([&] {
    woodall::GenConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    cfg.digon_probability = digon_probability;
    cfg.require_dicycle = require_dicycle != 0;
    cfg.max_resamples = max_resamples;
    woodall::GeneratedInstance generated = woodall::generate(cfg);
    return hand_out(
        {std::move(generated.digraph), std::move(generated.sequence), {}},
        out);
  });
}

int wp_pack(wp_instance* instance, wp_pack_stats* stats) {
  WP_REQUIRE(instance);
  return guarded([&] {
    woodall::Instance& inst = instance->value;
    woodall::PackTrace trace;
    const bool partial =
        inst.sequence && !(woodall::replay(*inst.sequence) ==
                           woodall::underlying_graph(inst.graph));
    inst.packing = partial
                       ? woodall::pack_partial(inst.graph, *inst.sequence, {},
                                               &trace)
                       : woodall::pack(inst.graph, {}, &trace);
    if (stats) {
      stats->base_cases = static_cast<uint32_t>(trace.base_cases);
      stats->separator_splits = static_cast<uint32_t>(trace.separator_splits);
      stats->case2_assignments = static_cast<uint32_t>(trace.case2_assignments);
      stats->order_extensions = static_cast<uint32_t>(trace.order_extensions);
      stats->acyclic_decompositions =
          static_cast<uint32_t>(trace.acyclic_decompositions);
    }
    return WP_OK;
  });
}

int wp_packing_size(const wp_instance* instance, size_t* k) {
  WP_REQUIRE(instance);
  WP_REQUIRE(k);
  if (!instance->value.packing) {
    last_error = "instance has no packing";
    return WP_ERROR_NO_PACKING;
  }
  *k = instance->value.packing->size();
  return WP_OK;
}

int wp_packing_transversal_size(const wp_instance* instance, size_t index,
                                size_t* count) {
  WP_REQUIRE(instance);
  WP_REQUIRE(count);
  const auto& packing = instance->value.packing;
  if (!packing) {
    last_error = "instance has no packing";
    return WP_ERROR_NO_PACKING;
  }
  if (index >= packing->size()) {
    last_error = "transversal index out of range";
    return WP_ERROR_INVALID_ARGUMENT;
  }
  *count = packing->transversals[index].size();
  return WP_OK;
}

int wp_packing_transversal_arc(const wp_instance* instance, size_t index,
                               size_t position, uint32_t* tail,
                               uint32_t* head) {
  WP_REQUIRE(instance);
  WP_REQUIRE(tail);
  WP_REQUIRE(head);
  size_t count = 0;
  if (int status = wp_packing_transversal_size(instance, index, &count)) {
    return status;
  }
  if (position >= count) {
    last_error = "arc position out of range";
    return WP_ERROR_INVALID_ARGUMENT;
  }
  const woodall::Arc& arc = instance->value.packing->transversals[index][position];
  *tail = arc.tail;
  *head = arc.head;
  return WP_OK;
}

int wp_packing_set(wp_instance* instance, size_t k, const uint32_t* classes,
                   const uint32_t* tails, const uint32_t* heads,
                   size_t count) {
  WP_REQUIRE(instance);
  if (count > 0) {
    WP_REQUIRE(classes);
    WP_REQUIRE(tails);
    WP_REQUIRE(heads);
  }
  return guarded([&] {
    woodall::Packing packing;
    packing.transversals.resize(k);
    const std::size_t n = instance->value.graph.node_count();
    for (size_t i = 0; i < count; ++i) {
      if (classes[i] >= k || tails[i] >= n || heads[i] >= n ||
          tails[i] == heads[i]) {
        last_error = "bad packing entry " + std::to_string(i);
        return static_cast<int>(WP_ERROR_INVALID_ARGUMENT);
      }
      packing.transversals[classes[i]].push_back({tails[i], heads[i]});
    }
    for (auto& t : packing.transversals) t = woodall::make_arc_set(std::move(t));
    instance->value.packing = std::move(packing);
    return static_cast<int>(WP_OK);
  });
}

int wp_packing_clear(wp_instance* instance) {
  WP_REQUIRE(instance);
  instance->value.packing.reset();
  return WP_OK;
}

int wp_verify(const wp_instance* instance, int* verdict, char* report,
              size_t* length) {
  WP_REQUIRE(instance);
  WP_REQUIRE(verdict);
  if (!instance->value.packing) {
    last_error = "instance has no packing";
    return WP_ERROR_NO_PACKING;
  }
  return guarded([&] {
    const woodall::VerificationReport r =
        woodall::verify_packing(instance->value.graph, *instance->value.packing);
    *verdict = r.verdict ? 1 : 0;
    if (length == nullptr) return static_cast<int>(WP_OK);
    return write_string(woodall::to_json(r), report, length);
  });
}

int wp_exact_nu(const wp_instance* instance, uint64_t budget, uint32_t* nu) {
  WP_REQUIRE(instance);
  WP_REQUIRE(nu);
  return guarded([&] {
    try {
      *nu = static_cast<uint32_t>(
          woodall::exact_nu(instance->value.graph, budget));
      return static_cast<int>(WP_OK);
    } catch (const woodall::BudgetExhausted& e) {
      *nu = static_cast<uint32_t>(e.lower_bound());
      last_error = e.what();
      return static_cast<int>(WP_ERROR_BUDGET_EXHAUSTED);
    }
  });
}

}  // extern "C"
