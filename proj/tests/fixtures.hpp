// Copyright 2026 The medenum Authors.
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

#ifndef MEDENUM_TESTS_FIXTURES_HPP_
#define MEDENUM_TESTS_FIXTURES_HPP_

// Named graphs shared by the test binaries. Edge lists are written the way a
// user would write an input file, so edge ids follow line order and vertex
// ids follow first appearance.

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "medenum/io.hpp"

namespace medenum::testing {

struct Fixture {
  io::NamedGraph ng;

  const Graph& g() const { return ng.graph; }

  VertexId v(const std::string& name) const {
    auto it = std::find(ng.names.begin(), ng.names.end(), name);
    if (it == ng.names.end()) throw std::invalid_argument("no vertex " + name);
    return static_cast<VertexId>(it - ng.names.begin());
  }

  EdgeId e(const std::string& token) const {
    const auto dash = token.find('-');
    auto id = ng.graph.find_edge(v(token.substr(0, dash)), v(token.substr(dash + 1)));
    if (!id) throw std::invalid_argument("no edge " + token);
    return *id;
  }

  EdgeSubset set(std::initializer_list<const char*> tokens) const {
    EdgeSubset s = ng.graph.empty_subset();
    for (const char* t : tokens) s.insert(e(t));
    return s;
  }

  std::string show(const EdgeSubset& s) const {
    return "{" + io::format_solution(ng.graph, ng.names, s) + "}";
  }
};

inline Fixture from_text(const std::string& text) {
  std::istringstream in(text);
  return {io::parse_graph(in)};
}

inline Fixture p4() { return from_text("a b\nb c\nc d\n"); }
inline Fixture k3() { return from_text("a b\nb c\nc a\n"); }
inline Fixture c4() { return from_text("a b\nb c\nc d\nd a\n"); }
inline Fixture k4() { return from_text("a b\na c\na d\nb c\nb d\nc d\n"); }
inline Fixture single_edge() { return from_text("a b\n"); }

// An H-pattern on level 4 (b_4 = x y). The base T = {vl-vj, u-q} lies in
// tr(E_3); vl-vj owns pl-vl and vj-pj, and the free vertices zl, zj hang off
// y with border edges zl-vl and zj-vj. zj has a second option u-zj.
inline Fixture fix_h() {
  return from_text(
      "pl vl\nvj pj\nu q\nx y\n"
      "vl vj\nzl vl\nzj vj\nu zj\nq r\n"
      "y zl\ny zj\nx w\n");
}

// Two copies of the FIX_H gadget under one b_k = x y.
inline Fixture fix_h2() {
  return from_text(
      "pl vl\nvj pj\nu q\npl2 vl2\nvj2 pj2\nu2 q2\nx y\n"
      "vl vj\nzl vl\nzj vj\nu zj\nq r\n"
      "vl2 vj2\nzl2 vl2\nzj2 vj2\nu2 zj2\nq2 r2\n"
      "y zl\ny zj\ny zl2\ny zj2\nx w\n");
}

// Level 3 with b_3 = x y, T = {x-w, v-p} in tr(E_2). The only free vertex z
// has the single border edge v-z; v-p keeps its private edge p-r.
inline Fixture fix_extra() { return from_text("s w\nv p\nx y\nx w\nv z\ny z\np r\n"); }

// Level 1 with b_1 = x y and anchor x-w: free vertices z1 (two border edges)
// and z2 (three), all towards vertices matched on later levels.
inline Fixture fix_sel() {
  return from_text(
      "x y\na1 c1\na2 c2\na3 c3\na4 c4\na5 c5\nx w\ny z1\ny z2\n"
      "z1 a1\nz1 a2\nz2 a3\nz2 a4\nz2 a5\n");
}

}  // namespace medenum::testing

#endif  // MEDENUM_TESTS_FIXTURES_HPP_
