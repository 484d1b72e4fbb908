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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command =
      std::string(WOODALL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("woodall_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const {
    return (path / name).string();
  }
};

const char* kDitriangle =
    "woodall-packer v1\nn 3\nm 3\narc 0 1\narc 1 2\narc 2 0\n";
const char* kDigon = "woodall-packer v1\nn 2\nm 2\narc 0 1\narc 1 0\n";
const char* kPath = "woodall-packer v1\nn 3\nm 2\narc 0 1\narc 1 2\n";

}  // namespace

TEST_CASE("gen") {
  TempDir dir;
  CHECK(run("gen --n 3 --seed 1 --out " + dir / "k3.txt").exit_code == 0);
  CHECK(slurp(dir / "k3.txt").find("n 3\nm 3\n") != std::string::npos);

  CHECK(run("gen --n 20 --seed 7 --out " + dir / "a.txt").exit_code == 0);
  CHECK(run("gen --n 20 --seed 7 --out " + dir / "b.txt").exit_code == 0);
  CHECK(slurp(dir / "a.txt") == slurp(dir / "b.txt"));

  CHECK(run("gen --n 2 --seed 1").exit_code == 64);
  CHECK(run("gen --seed 1").exit_code == 64);
  CHECK(run("gen --n 5 --digons 2").exit_code == 64);
  CHECK(run("gen --n 5 --out /nonexistent/dir/x.txt").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 64);
}

TEST_CASE("pack and verify") {
  TempDir dir;
  write(dir / "tri.txt", kDitriangle);
  REQUIRE(run("pack " + dir / "tri.txt" + " --out " + dir / "tri.packed").exit_code == 0);
  const std::string packed = slurp(dir / "tri.packed");
  CHECK(packed.find("packing 3\ntransversal 1 0 1\ntransversal 2 1 2\n"
                    "transversal 3 2 0\n") != std::string::npos);
  Run verify = run("verify " + dir / "tri.packed");
  CHECK(verify.exit_code == 0);
  CHECK(verify.out.find("\"verdict\":true") != std::string::npos);

  write(dir / "dag.txt", kPath);
  CHECK(run("pack " + dir / "dag.txt").exit_code == 3);
  CHECK(run("verify " + dir / "tri.txt").exit_code == 64);
  CHECK(run("pack " + dir / "missing.txt").exit_code == 2);

  write(dir / "overlap.txt", std::string(kDitriangle) +
                                 "packing 2\ntransversal 1 0 1\ntransversal 2 0 1\n");
  Run bad = run("verify " + dir / "overlap.txt");
  CHECK(bad.exit_code == 5);
  CHECK(bad.out.find("\"disjoint\":false") != std::string::npos);

  REQUIRE(run("gen --n 40 --seed 3 --out " + dir / "big.txt").exit_code == 0);
  CHECK(run("pack " + dir / "big.txt" + " --out " + dir / "big.packed").exit_code == 0);
  CHECK(run("verify " + dir / "big.packed").exit_code == 0);
}

TEST_CASE("nu") {
  TempDir dir;
  write(dir / "tri.txt", kDitriangle);
  write(dir / "digon.txt", kDigon);
  Run tri = run("nu " + dir / "tri.txt");
  CHECK(tri.exit_code == 0);
  CHECK(tri.out == "3\n");
  Run digon = run("nu " + dir / "digon.txt");
  CHECK(digon.exit_code == 0);
  CHECK(digon.out == "2\n");
  Run budget = run("nu " + dir / "tri.txt" + " --budget 0");
  CHECK(budget.exit_code == 6);
  CHECK(budget.out == "2\n");
  write(dir / "dag.txt", kPath);
  CHECK(run("nu " + dir / "dag.txt").exit_code == 3);
}

TEST_CASE("fuzz") {
  TempDir dir;
  Run ok = run("fuzz --count 50 --seed 1 --max-n 25");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("failed 0") != std::string::npos);
  Run empty = run("fuzz --count 0");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.find("instances 0") != std::string::npos);
  Run corrupt = run("fuzz --count 3 --seed 1 --corrupt --dump-dir " + dir.path.string());
  CHECK(corrupt.exit_code == 5);
  CHECK(fs::exists(dir / "fuzz-failure-0.txt"));
}
