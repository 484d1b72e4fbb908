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

#include "woodall/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "woodall/error.hpp"

namespace woodall {

std::string write_instance(const Instance& instance) {
  std::ostringstream out;
  const Digraph& g = instance.graph;
  out << kFormatHeader << '\n';
  out << "n " << g.node_count() << '\n';
  out << "m " << g.arc_count() << '\n';
  for (const Arc& arc : g.arcs()) {
    out << "arc " << arc.tail << ' ' << arc.head << '\n';
  }
  if (instance.sequence) {
    const auto& [a, b, c] = instance.sequence->base;
    out << "base " << a << ' ' << b << ' ' << c << '\n';
    for (const ConstructionStep& step : instance.sequence->steps) {
      out << "step " << step.vertex << ' ' << step.host[0] << ' '
          << step.host[1] << ' ' << step.host[2] << '\n';
    }
  }
  if (instance.packing) {
    out << "packing " << instance.packing->size() << '\n';
    for (std::size_t i = 0; i < instance.packing->size(); ++i) {
      for (const Arc& arc : make_arc_set(instance.packing->transversals[i])) {
        out << "transversal " << i + 1 << ' ' << arc.tail << ' ' << arc.head
            << '\n';
      }
    }
  }
  return out.str();
}

namespace {

class LineParser {
 public:
  explicit LineParser(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines_.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  bool done() const { return index_ == lines_.size(); }
  std::size_t line_number() const { return index_ + 1; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(line_number()) + ": " + what);
  }

  // Reports a problem in the line consumed last.
  [[noreturn]] void fail_previous(const std::string& what) const {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(index_) + ": " + what);
  }

  std::string_view keyword() const {
    if (done()) return {};
    std::string_view line = lines_[index_];
    return line.substr(0, line.find(' '));
  }

  // Consumes the current line, which must be `word` followed by exactly
  // `count` unsigned integers separated by single spaces.
  std::vector<std::uint64_t> take(std::string_view word, std::size_t count) {
    if (done()) fail("expected '" + std::string(word) + "', got end of input");
    std::string_view line = lines_[index_];
    if (keyword() != word) {
      fail("expected '" + std::string(word) + "', got '" + std::string(line) + "'");
    }
    std::vector<std::uint64_t> values;
    std::size_t pos = word.size();
    for (std::size_t i = 0; i < count; ++i) {
      if (pos >= line.size() || line[pos] != ' ') fail("missing field");
      ++pos;
      std::uint64_t value = 0;
      const char* first = line.data() + pos;
      const char* last = line.data() + line.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr == first) fail("bad integer");
      if (*first == '0' && ptr - first > 1) fail("leading zero");
      pos += static_cast<std::size_t>(ptr - first);
      values.push_back(value);
    }
    if (pos != line.size()) fail("trailing characters");
    ++index_;
    return values;
  }

  void take_exact(std::string_view expected) {
    if (done() || lines_[index_] != expected) {
      fail("expected '" + std::string(expected) + "'");
    }
    ++index_;
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t index_ = 0;
};

NodeId node(const LineParser& parser, std::uint64_t value, std::uint64_t n) {
  if (value >= n) parser.fail_previous("node " + std::to_string(value) + " out of range");
  return static_cast<NodeId>(value);
}

}  // namespace

Instance read_instance(std::string_view text) {
  LineParser parser(text);
  parser.take_exact(kFormatHeader);
  const std::uint64_t n = parser.take("n", 1)[0];
  if (n > UINT32_MAX) parser.fail("n too large");
  const std::uint64_t m = parser.take("m", 1)[0];
  std::vector<Arc> arcs;
  for (std::uint64_t i = 0; i < m; ++i) {
    auto v = parser.take("arc", 2);
    Arc arc{node(parser, v[0], n), node(parser, v[1], n)};
    if (arc.tail == arc.head) parser.fail_previous("self-loop");
    arcs.push_back(arc);
  }
  Instance instance;
  instance.graph = make_digraph(n, arcs);
  if (instance.graph.arc_count() != m) parser.fail("duplicate arcs");

  if (parser.keyword() == "base") {
    auto v = parser.take("base", 3);
    ConstructionSequence seq;
    seq.base = {node(parser, v[0], n), node(parser, v[1], n),
                node(parser, v[2], n)};
    std::sort(seq.base.begin(), seq.base.end());
    while (parser.keyword() == "step") {
      auto s = parser.take("step", 4);
      ConstructionStep step{node(parser, s[0], n),
                            {node(parser, s[1], n), node(parser, s[2], n),
                             node(parser, s[3], n)}};
      std::sort(step.host.begin(), step.host.end());
      seq.steps.push_back(step);
    }
    if (seq.node_count() != n) parser.fail("sequence does not cover n nodes");
    try {
      replay(seq);
    } catch (const Error& e) {
      parser.fail(e.what());
    }
    instance.sequence = std::move(seq);
  }

  if (parser.keyword() == "packing") {
    const std::uint64_t k = parser.take("packing", 1)[0];
    if (k > m + 1) parser.fail("too many transversals");
    Packing packing;
    packing.transversals.resize(k);
    while (parser.keyword() == "transversal") {
      auto v = parser.take("transversal", 3);
      if (v[0] < 1 || v[0] > k) parser.fail_previous("transversal index out of range");
      Arc arc{node(parser, v[1], n), node(parser, v[2], n)};
      if (arc.tail == arc.head) parser.fail_previous("self-loop");
      packing.transversals[v[0] - 1].push_back(arc);
    }
    for (auto& t : packing.transversals) {
      const std::size_t before = t.size();
      t = make_arc_set(std::move(t));
      if (t.size() != before) parser.fail("repeated arc in a transversal");
    }
    instance.packing = std::move(packing);
  }
  if (!parser.done()) parser.fail("unexpected line");
  return instance;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path);
  return read_instance(buffer.str());
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  out << write_instance(instance);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
}

}  // namespace woodall
