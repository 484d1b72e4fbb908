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

// Command-line front end. Links only the C API in woodall/woodall.h.
//
// Exit codes: 0 ok, 2 I/O, 3 acyclic input, 4 construction failure,
// 5 verification failure, 6 search budget exhausted, 64 usage.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "woodall/woodall.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitAcyclic = 3;
constexpr int kExitConstruction = 4;
constexpr int kExitVerification = 5;
constexpr int kExitBudget = 6;
constexpr int kExitUsage = 64;

struct InstanceDeleter {
  void operator()(wp_instance* p) const { wp_instance_destroy(p); }
};
using InstancePtr = std::unique_ptr<wp_instance, InstanceDeleter>;

void report(const char* what, int status) {
  std::cerr << "woodall-packer: " << what << ": " << wp_status_string(status);
  const std::string detail = wp_last_error();
  if (!detail.empty()) std::cerr << " (" << detail << ")";
  std::cerr << '\n';
}

std::string serialize(const wp_instance* instance) {
  std::size_t length = 0;
  wp_instance_serialize(instance, nullptr, &length);
  std::string text(length, '\0');
  if (wp_instance_serialize(instance, text.data(), &length) != WP_OK) return {};
  text.resize(length - 1);
  return text;
}

int write_output(const wp_instance* instance, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << serialize(instance);
    return std::cout ? kExitOk : kExitIo;
  }
  if (int status = wp_instance_save(instance, path.c_str())) {
    report("cannot write output", status);
    return kExitIo;
  }
  return kExitOk;
}

int load(const std::string& path, InstancePtr& out) {
  wp_instance* raw = nullptr;
  int status = wp_instance_load(path.c_str(), &raw);
  if (status != WP_OK) {
    report(("cannot load " + path).c_str(), status);
    return status == WP_ERROR_IO ? kExitIo : kExitUsage;
  }
  out.reset(raw);
  return kExitOk;
}

bool save_text(const std::string& path, const std::string& text) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return false;
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  return std::fclose(f) == 0 && ok;
}

// Exit code for a failed wp_pack; the failing instance goes to dump_path.
int pack_failure(int status, const std::string& dump_path) {
  report("pack failed", status);
  switch (status) {
    case WP_ERROR_ACYCLIC_INPUT: return kExitAcyclic;
    case WP_ERROR_CONSTRUCTION_FAILED:
      if (save_text(dump_path, wp_last_failure_dump())) {
        std::cerr << "woodall-packer: instance saved to " << dump_path << '\n';
      }
      return kExitConstruction;
    case WP_ERROR_NOT_THREE_TREE:
    case WP_ERROR_HOST_MISMATCH: return kExitUsage;
    default: return kExitIo;
  }
}

int cmd_gen(std::uint32_t n, std::uint64_t seed, double digons,
            const std::string& out) {
  if (n < 3) {
    std::cerr << "woodall-packer: --n must be at least 3\n";
    return kExitUsage;
  }
  wp_instance* raw = nullptr;
  int status = wp_generate(n, seed, digons, 1, 64, &raw);
  if (status == WP_ERROR_INVALID_ARGUMENT) {
    report("bad generator settings", status);
    return kExitUsage;
  }
  if (status != WP_OK) {
    report("generation failed", status);
    return kExitIo;
  }
  InstancePtr instance(raw);
  return write_output(instance.get(), out);
}

int cmd_pack(const std::string& in, const std::string& out) {
  InstancePtr instance;
  if (int code = load(in, instance)) return code;
  wp_pack_stats stats{};
  if (int status = wp_pack(instance.get(), &stats)) {
    return pack_failure(status, (out.empty() || out == "-" ? in : out) +
                                    ".failed.txt");
  }
  std::size_t k = 0;
  wp_packing_size(instance.get(), &k);
  std::cerr << "packing of size " << k << " (splits " << stats.separator_splits
            << ", degree-3 assignments " << stats.case2_assignments
            << ", order extensions " << stats.order_extensions
            << ", base cases " << stats.base_cases << ")\n";
  return write_output(instance.get(), out);
}

int cmd_verify(const std::string& in) {
  InstancePtr instance;
  if (int code = load(in, instance)) return code;
  int verdict = 0;
  std::size_t length = 0;
  int status = wp_verify(instance.get(), &verdict, nullptr, &length);
  if (status == WP_ERROR_NO_PACKING) {
    std::cerr << "woodall-packer: " << in << " has no packing section\n";
    return kExitUsage;
  }
  std::string text(length, '\0');
  status = wp_verify(instance.get(), &verdict, text.data(), &length);
  if (status != WP_OK) {
    report("verify failed", status);
    return kExitIo;
  }
  text.resize(length - 1);
  std::cout << text << '\n';
  return verdict ? kExitOk : kExitVerification;
}

int cmd_nu(const std::string& in, std::uint64_t budget) {
  InstancePtr instance;
  if (int code = load(in, instance)) return code;
  std::uint32_t nu = 0;
  int status = wp_exact_nu(instance.get(), budget, &nu);
  if (status == WP_ERROR_BUDGET_EXHAUSTED) {
    std::cout << nu << '\n';
    std::cerr << "woodall-packer: warning: budget exhausted; " << nu
              << " is only a lower bound\n";
    return kExitBudget;
  }
  if (status == WP_ERROR_ACYCLIC_INPUT) {
    report("nu undefined", status);
    return kExitAcyclic;
  }
  if (status != WP_OK) {
    report("nu failed", status);
    return kExitIo;
  }
  std::cout << nu << '\n';
  return kExitOk;
}

struct FuzzOptions {
  std::uint64_t count = 100;
  std::uint32_t min_n = 3;
  std::uint32_t max_n = 40;
  std::uint64_t seed = 1;
  double digons = 0.0;
  std::string dump_dir = ".";
  bool corrupt = false;
};

// Moves a shared arc into a second transversal so verification must fail.
void corrupt_packing(wp_instance* instance) {
  std::size_t k = 0;
  wp_packing_size(instance, &k);
  std::vector<std::uint32_t> classes, tails, heads;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t count = 0;
    wp_packing_transversal_size(instance, c, &count);
    for (std::size_t i = 0; i < count; ++i) {
      std::uint32_t t = 0, h = 0;
      wp_packing_transversal_arc(instance, c, i, &t, &h);
      classes.push_back(static_cast<std::uint32_t>(c));
      tails.push_back(t);
      heads.push_back(h);
    }
  }
  if (k >= 2 && !tails.empty()) {
    classes.push_back(classes[0] == 0 ? 1 : 0);
    tails.push_back(tails[0]);
    heads.push_back(heads[0]);
  }
  wp_packing_set(instance, k, classes.data(), tails.data(), heads.data(),
                 tails.size());
}

int cmd_fuzz(const FuzzOptions& opt) {
  if (opt.min_n < 3 || opt.max_n < opt.min_n) {
    std::cerr << "woodall-packer: need 3 <= --min-n <= --max-n\n";
    return kExitUsage;
  }
  std::mt19937_64 sizes(opt.seed);
  std::uint64_t passed = 0, failed = 0;
  int exit_code = kExitOk;
  wp_pack_stats total{};
  std::map<std::uint32_t, std::uint64_t> by_girth;
  for (std::uint64_t i = 0; i < opt.count; ++i) {
    const std::uint32_t n = opt.min_n + static_cast<std::uint32_t>(
                                            sizes() % (opt.max_n - opt.min_n + 1));
    const std::uint64_t seed = opt.seed * 1000003ULL + i;
    const std::string dump_path = opt.dump_dir + "/fuzz-failure-" +
                                  std::to_string(i) + ".txt";
    wp_instance* raw = nullptr;
    if (int status = wp_generate(n, seed, opt.digons, 1, 64, &raw)) {
      report("generation failed", status);
      return kExitIo;
    }
    InstancePtr instance(raw);
    std::uint32_t g = 0;
    wp_girth(instance.get(), &g);
    ++by_girth[g];

    wp_pack_stats stats{};
    int code = kExitOk;
    if (int status = wp_pack(instance.get(), &stats)) {
      code = pack_failure(status, dump_path);
    } else {
      total.base_cases += stats.base_cases;
      total.separator_splits += stats.separator_splits;
      total.case2_assignments += stats.case2_assignments;
      total.order_extensions += stats.order_extensions;
      total.acyclic_decompositions += stats.acyclic_decompositions;
      if (opt.corrupt) corrupt_packing(instance.get());
      int verdict = 0;
      std::size_t k = 0;
      wp_packing_size(instance.get(), &k);
      if (wp_verify(instance.get(), &verdict, nullptr, nullptr) != WP_OK ||
          !verdict || k != g) {
        code = kExitVerification;
        if (wp_instance_save(instance.get(), dump_path.c_str()) == WP_OK) {
          std::cerr << "woodall-packer: instance " << i
                    << " failed verification; saved to " << dump_path << '\n';
        }
      }
    }
    if (code == kExitOk) {
      ++passed;
    } else {
      ++failed;
      if (exit_code == kExitOk) exit_code = code;
    }
  }
  std::cout << "instances " << opt.count << "\n"
            << "passed " << passed << "\n"
            << "failed " << failed << "\n";
  for (auto [g, count] : by_girth) {
    std::cout << "girth " << g << " " << count << "\n";
  }
  std::cout << "separator_splits " << total.separator_splits << "\n"
            << "case2_assignments " << total.case2_assignments << "\n"
            << "order_extensions " << total.order_extensions << "\n"
            << "base_cases " << total.base_cases << "\n"
            << "acyclic_decompositions " << total.acyclic_decompositions
            << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packs disjoint dicycle transversals in 3-tree digraphs"};
  app.require_subcommand(1);

  std::uint32_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  double gen_digons = 0.0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random Apollonian digraph");
  gen->add_option("--n", gen_n, "Number of nodes (>= 3)")->required();
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--digons", gen_digons, "Probability of adding the reverse arc")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", gen_out, "Output file (default: stdout)");

  std::string pack_in, pack_out;
  auto* pack = app.add_subcommand("pack", "Append a maximum packing");
  pack->add_option("input", pack_in, "Instance file")->required();
  pack->add_option("--out", pack_out, "Output file (default: stdout)");

  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "Verify the stored packing");
  verify->add_option("input", verify_in, "Instance file")->required();

  std::string nu_in;
  std::uint64_t nu_budget = 10'000'000;
  auto* nu = app.add_subcommand("nu", "Exact packing number by search");
  nu->add_option("input", nu_in, "Instance file")->required();
  nu->add_option("--budget", nu_budget, "Search node limit");

  FuzzOptions fuzz_opt;
  auto* fuzz = app.add_subcommand("fuzz", "Run generate/pack/verify loops");
  fuzz->add_option("--count", fuzz_opt.count, "Number of instances");
  fuzz->add_option("--min-n", fuzz_opt.min_n, "Smallest instance size");
  fuzz->add_option("--max-n", fuzz_opt.max_n, "Largest instance size");
  fuzz->add_option("--seed", fuzz_opt.seed, "Random seed");
  fuzz->add_option("--digons", fuzz_opt.digons, "Digon probability")
      ->check(CLI::Range(0.0, 1.0));
  fuzz->add_option("--dump-dir", fuzz_opt.dump_dir,
                   "Directory for failing instances");
  fuzz->add_flag("--corrupt", fuzz_opt.corrupt,
                 "Corrupt each packing before verifying (failure injection)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*gen) return cmd_gen(gen_n, gen_seed, gen_digons, gen_out);
  if (*pack) return cmd_pack(pack_in, pack_out);
  if (*verify) return cmd_verify(verify_in);
  if (*nu) return cmd_nu(nu_in, nu_budget);
  if (*fuzz) return cmd_fuzz(fuzz_opt);
  return kExitUsage;
}
