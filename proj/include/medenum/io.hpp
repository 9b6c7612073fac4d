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

#ifndef MEDENUM_IO_HPP_
#define MEDENUM_IO_HPP_

// Text formats. Graphs come as an edge list ("u v" per line, arbitrary
// vertex tokens, '#' comments) or as DIMACS ("p edge n m" then "e u v").
// Formulas come as DIMACS CNF.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "medenum/edge_subset.hpp"
#include "medenum/graph.hpp"
#include "medenum/oracle.hpp"

namespace medenum::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedGraph {
  Graph graph;
  std::vector<std::string> names;
};

namespace detail {

inline std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

inline long parse_int(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty())
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     tok + "'");
  return v;
}

inline std::string at_line(std::size_t n) { return "line " + std::to_string(n) + ": "; }

}  // namespace detail

inline NamedGraph parse_graph(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Edge> edges;
  bool dimacs = false;
  long declared = 0;

  auto vertex = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<VertexId>(names.size()));
    if (fresh) names.push_back(name);
    return it->second;
  };

  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    lines.push_back(detail::split(line));
  }
  // A file is DIMACS when its first line that is neither blank nor a "c"
  // comment is "p edge n m". Otherwise "c" and "p" are ordinary vertex names.
  std::size_t header = lines.size();
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& tok = lines[k];
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p" && tok.size() == 4) header = k;
    break;
  }

  for (std::size_t line_no = 1; line_no <= lines.size(); ++line_no) {
    const auto& tok = lines[line_no - 1];
    if (tok.empty()) continue;
    if (line_no - 1 == header) {
      if (tok[1] != "edge" && tok[1] != "col")
        throw ParseError(detail::at_line(line_no) + "expected 'p edge <n> <m>'");
      declared = detail::parse_int(tok[2], line_no);
      detail::parse_int(tok[3], line_no);
      if (declared < 0) throw ParseError(detail::at_line(line_no) + "negative vertex count");
      dimacs = true;
      // DIMACS vertices are 1..n; naming them up front keeps ids in numeric order.
      for (long v = 1; v <= declared; ++v) vertex(std::to_string(v));
      continue;
    }
    if (header < lines.size() && line_no - 1 < header) continue;  // leading "c" comments
    if (dimacs) {
      if (tok[0] == "c") continue;
      if (tok[0] == "p") throw ParseError(detail::at_line(line_no) + "second problem line");
      if (tok[0] != "e" || tok.size() != 3)
        throw ParseError(detail::at_line(line_no) + "expected 'e <u> <v>'");
      for (int k = 1; k <= 2; ++k) {
        const long v = detail::parse_int(tok[k], line_no);
        if (v < 1 || v > declared)
          throw ParseError(detail::at_line(line_no) + "vertex " + tok[k] + " out of range");
      }
      edges.push_back({vertex(tok[1]), vertex(tok[2])});
    } else {
      if (tok.size() != 2)
        throw ParseError(detail::at_line(line_no) + "expected two vertex tokens, got " +
                         std::to_string(tok.size()));
      edges.push_back({vertex(tok[0]), vertex(tok[1])});
    }
    const Edge& e = edges.back();
    if (e.u == e.v) throw ParseError(detail::at_line(line_no) + "self-loop on " + names[e.u]);
  }
  try {
    return {Graph(names.size(), std::move(edges)), std::move(names)};
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

inline NamedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const ParseError& ex) {
    throw ParseError(path + ": " + ex.what());
  }
}

inline oracle::CnfFormula parse_cnf(std::istream& in) {
  oracle::CnfFormula f;
  long declared_clauses = -1;
  std::vector<int> clause;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = detail::split(line);
    if (tok.empty() || tok[0] == "c" || tok[0] == "%") continue;
    if (tok[0] == "p") {
      if (declared_clauses >= 0 || tok.size() != 4 || tok[1] != "cnf")
        throw ParseError(detail::at_line(line_no) + "expected one 'p cnf <vars> <clauses>'");
      f.num_vars = static_cast<int>(detail::parse_int(tok[2], line_no));
      declared_clauses = detail::parse_int(tok[3], line_no);
      continue;
    }
    if (declared_clauses < 0) throw ParseError(detail::at_line(line_no) + "clause before 'p cnf'");
    for (const auto& t : tok) {
      const long lit = detail::parse_int(t, line_no);
      if (lit == 0) {
        if (clause.size() != 3)
          throw ParseError(detail::at_line(line_no) + "clause has " +
                           std::to_string(clause.size()) + " literals, expected 3");
        f.clauses.push_back(std::move(clause));
        clause.clear();
        continue;
      }
      if (std::abs(lit) > f.num_vars)
        throw ParseError(detail::at_line(line_no) + "literal " + t + " exceeds variable count");
      clause.push_back(static_cast<int>(lit));
    }
  }
  if (declared_clauses < 0) throw ParseError("missing 'p cnf' header");
  if (!clause.empty()) throw ParseError("last clause is not terminated by 0");
  if (static_cast<long>(f.clauses.size()) != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  try {
    f.validate();
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
  return f;
}

inline oracle::CnfFormula read_cnf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return parse_cnf(in);
  } catch (const ParseError& ex) {
    throw ParseError(path + ": " + ex.what());
  }
}

/// "u-v" with u the endpoint of smaller vertex id.
inline std::string edge_token(const Graph& g, const std::vector<std::string>& names, EdgeId e) {
  const Edge& ed = g.edge(e);
  return names.at(ed.u) + "-" + names.at(ed.v);
}

/// One line per solution: edge tokens ordered by (u, v) vertex ids.
inline std::string format_solution(const Graph& g, const std::vector<std::string>& names,
                                   const EdgeSubset& s) {
  std::vector<EdgeId> es = s.to_vector();
  std::sort(es.begin(), es.end(), [&](EdgeId a, EdgeId b) {
    const Edge& x = g.edge(a);
    const Edge& y = g.edge(b);
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  std::string out;
  for (EdgeId e : es) {
    if (!out.empty()) out += ' ';
    out += edge_token(g, names, e);
  }
  return out;
}

inline void write_edge_list(std::ostream& os, const Graph& g,
                            const std::vector<std::string>& names) {
  for (const Edge& e : g.edges()) os << names.at(e.u) << ' ' << names.at(e.v) << '\n';
}

/// Order-independent digest of a set of solution lines: the wrapping sum of
/// a mixed 64-bit hash per line. Equal sets give equal checksums whatever
/// order they were produced in.
class Checksum {
 public:
  void add(const std::string& line) { sum_ += mix(fnv1a(line)); }
  std::uint64_t value() const { return sum_; }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int k = 15, shift = 0; k >= 0; --k, shift += 4) s[k] = digits[(sum_ >> shift) & 0xf];
    return s;
  }

 private:
  static std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return h;
  }
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t sum_ = 0;
};

}  // namespace medenum::io

#endif  // MEDENUM_IO_HPP_
