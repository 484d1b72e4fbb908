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

#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "woodall/error.hpp"
#include "woodall/generator.hpp"
#include "woodall/instance_io.hpp"
#include "woodall/packing.hpp"

using namespace woodall;

namespace {

void expect_parse_error(const std::string& text) {
  try {
    read_instance(text);
    FAIL("expected a parse error for:\n" << text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
}

}  // namespace

TEST_CASE("write_instance is canonical") {
  Instance inst{make_digraph(3, {{2, 0}, {0, 1}, {1, 2}}), std::nullopt,
                Packing{{{{0, 1}}, {{1, 2}}, {{2, 0}}}}};
  CHECK(write_instance(inst) ==
        "woodall-packer v1\n"
        "n 3\n"
        "m 3\n"
        "arc 0 1\n"
        "arc 1 2\n"
        "arc 2 0\n"
        "packing 3\n"
        "transversal 1 0 1\n"
        "transversal 2 1 2\n"
        "transversal 3 2 0\n");
}

TEST_CASE("read_instance with a sequence") {
  const std::string text =
      "woodall-packer v1\n"
      "n 4\n"
      "m 6\n"
      "arc 0 1\n"
      "arc 1 2\n"
      "arc 2 0\n"
      "arc 3 0\n"
      "arc 3 1\n"
      "arc 3 2\n"
      "base 0 1 2\n"
      "step 3 0 1 2\n";
  Instance inst = read_instance(text);
  CHECK(inst.graph.node_count() == 4);
  CHECK(inst.graph.arc_count() == 6);
  REQUIRE(inst.sequence);
  CHECK(inst.sequence->steps.size() == 1);
  CHECK_FALSE(inst.packing);
  CHECK(write_instance(inst) == text);
}

TEST_CASE("write, read, write is byte-identical") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenConfig cfg;
    cfg.n = 3 + seed % 40;
    cfg.seed = seed;
    cfg.digon_probability = seed % 4 == 0 ? 0.25 : 0.0;
    auto gen = generate(cfg);
    Instance inst{gen.digraph, gen.sequence, std::nullopt};
    if (seed % 2 == 0) inst.packing = pack(gen.digraph);
    const std::string once = write_instance(inst);
    const Instance back = read_instance(once);
    CHECK(back.graph == inst.graph);
    CHECK(back.sequence == inst.sequence);
    CHECK(back.packing == inst.packing);
    CHECK(write_instance(back) == once);
  }
}

TEST_CASE("an empty transversal survives the round trip") {
  Instance inst{make_digraph(2, {{0, 1}}), std::nullopt, Packing{{{}, {{0, 1}}}}};
  Instance back = read_instance(write_instance(inst));
  CHECK(back.packing == inst.packing);
}

TEST_CASE("read_instance rejects malformed input") {
  const std::string head = "woodall-packer v1\nn 3\nm 3\narc 0 1\narc 1 2\narc 2 0\n";
  expect_parse_error("");
  expect_parse_error("woodall-packer v2\nn 1\nm 0\n");
  expect_parse_error("woodall-packer v1\nn 3\nm 1\narc 0 0\n");
  expect_parse_error("woodall-packer v1\nn 3\nm 1\narc 0 3\n");
  expect_parse_error("woodall-packer v1\nn 3\nm 2\narc 0 1\n");
  expect_parse_error("woodall-packer v1\nn 3\nm 2\narc 0 1\narc 0 1\n");
  expect_parse_error("woodall-packer v1\nn 03\nm 0\n");
  expect_parse_error("woodall-packer v1\nn 3 \nm 0\n");
  expect_parse_error("woodall-packer v1\nn -3\nm 0\n");
  expect_parse_error(head + "bogus\n");
  expect_parse_error(head + "packing 1\ntransversal 2 0 1\n");
  expect_parse_error(head + "base 0 1 2\nstep 3 0 1 2\n");
  expect_parse_error("woodall-packer v1\nn 4\nm 0\nbase 0 1 2\n");
  CHECK_NOTHROW(read_instance(head + "base 0 1 2\n"));
  // Foreign and shared arcs are reported by verification, not the parser.
  CHECK_NOTHROW(read_instance(head + "packing 1\ntransversal 1 1 0\n"));
  CHECK_NOTHROW(read_instance(head + "packing 2\ntransversal 1 0 1\ntransversal 2 0 1\n"));
}

TEST_CASE("parse errors carry the line number") {
  try {
    read_instance("woodall-packer v1\nn 3\nm 1\narc 0 9\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("save and load") {
  const auto path =
      (std::filesystem::temp_directory_path() / "woodall_io_test.txt").string();
  Instance inst{make_digraph(3, {{0, 1}, {1, 2}, {2, 0}}), std::nullopt, std::nullopt};
  save_instance(inst, path);
  CHECK(load_instance(path).graph == inst.graph);
  std::remove(path.c_str());
  try {
    load_instance(path);
    FAIL("expected an I/O error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
}
