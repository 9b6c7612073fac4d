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

#ifndef MEDENUM_CLI_HPP_
#define MEDENUM_CLI_HPP_

// The medenum command line. Commands write to the streams they are given so
// tests can drive them in-process; tools/medenum.cpp only forwards argv.
//
// Exit codes: 0 ok, 1 bad input or usage, 2 verification mismatch, 3 the
// brute-force oracle refused the instance.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "medenum/checks.hpp"
#include "medenum/enumerator.hpp"
#include "medenum/io.hpp"
#include "medenum/oracle.hpp"

namespace medenum::cli {

enum ExitCode : int { kOk = 0, kBadInput = 1, kMismatch = 2, kRefused = 3 };

struct RunReport {
  std::uint64_t solution_count = 0;
  std::uint64_t max_delay_steps = 0;
  double mean_delay_steps = 0;
  std::uint64_t peak_live_sets = 0;
  double wall_time_ms = 0;
  std::string checksum;
};

inline nlohmann::json to_json(const RunReport& r) {
  return {{"solution_count", r.solution_count},     {"max_delay_steps", r.max_delay_steps},
          {"mean_delay_steps", r.mean_delay_steps}, {"peak_live_sets", r.peak_live_sets},
          {"wall_time_ms", r.wall_time_ms},         {"checksum", r.checksum}};
}

enum class Algo { reverse, brute };

/// Runs one engine on g and hands every solution line to `emit`. Stops after
/// `limit` solutions when given.
template <class Emit>
RunReport run_engine(const io::NamedGraph& in, Algo algo, std::optional<std::uint64_t> limit,
                     Emit&& emit) {
  RunReport rep;
  io::Checksum sum;
  std::uint64_t delay_total = 0;
  const auto t0 = std::chrono::steady_clock::now();
  auto take = [&](const EdgeSubset& s) {
    const std::string line = io::format_solution(in.graph, in.names, s);
    sum.add(line);
    emit(line);
    ++rep.solution_count;
  };
  if (algo == Algo::reverse) {
    Enumerator en(in.graph);
    while (!limit || rep.solution_count < *limit) {
      auto ev = en.next();
      if (!ev) break;
      delay_total += ev->delay_steps;
      take(ev->solution);
    }
    rep.max_delay_steps = en.stats().max_delay_steps;
    rep.peak_live_sets = en.stats().peak_live_sets;
  } else {
    const std::int64_t before = live_sets.live;
    live_sets.reset_peak();
    const auto all = oracle::brute_force_min_eds(in.graph);
    rep.peak_live_sets = static_cast<std::uint64_t>(live_sets.peak - before);
    for (const auto& s : all) {
      if (limit && rep.solution_count >= *limit) break;
      take(s);
    }
  }
  rep.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rep.mean_delay_steps =
      rep.solution_count ? static_cast<double>(delay_total) / rep.solution_count : 0.0;
  rep.checksum = sum.hex();
  return rep;
}

struct EnumerateArgs {
  std::string input;
  Algo algo = Algo::reverse;
  std::optional<std::uint64_t> limit;
  std::string stats_path;
};

inline int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const io::NamedGraph in = io::read_graph_file(a.input);
    const RunReport rep =
        run_engine(in, a.algo, a.limit, [&](const std::string& line) { out << line << '\n'; });
    out.flush();
    if (!a.stats_path.empty()) {
      std::ofstream js(a.stats_path);
      if (!js) {
        err << "error: cannot write '" << a.stats_path << "'\n";
        return kBadInput;
      }
      js << to_json(rep).dump(2) << '\n';
    }
    return kOk;
  } catch (const io::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kBadInput;
  } catch (const oracle::OracleRefusal& ex) {
    err << "refused: " << ex.what() << '\n';
    return kRefused;
  }
}

struct VerifyArgs {
  std::string input;
  std::string batch_dir;
  unsigned threads = 0;
  bool level_check = false;
  std::optional<std::uint64_t> drop_child;
};

// Verifies one file; the report goes to `out` as a few lines.
inline int verify_one(const std::string& path, const VerifyArgs& a, std::ostream& out) {
  io::NamedGraph in;
  try {
    in = io::read_graph_file(path);
  } catch (const io::ParseError& ex) {
    out << "error: " << ex.what() << '\n';
    return kBadInput;
  }
  const Graph& g = in.graph;
  auto show = [&](const EdgeSubset& s) {
    const std::string line = io::format_solution(g, in.names, s);
    return "{" + line + "}";
  };
  try {
    const auto want = oracle::brute_force_min_eds(g);
    EnumOptions opt;
    opt.drop_child = a.drop_child;
    opt.check_children_nonempty = a.level_check;
    Enumerator en(g, opt);
    std::vector<EdgeSubset> got;
    while (auto ev = en.next()) got.push_back(std::move(ev->solution));
    const std::size_t produced = got.size();
    int rc = kOk;
    if (auto diff = checks::compare_families(std::move(got), want)) {
      out << path << ": MISMATCH " << checks::to_string(diff->kind) << " solution "
          << show(diff->set) << " (reverse " << produced << ", brute " << want.size() << ")\n";
      rc = kMismatch;
    }
    if (a.level_check) {
      for (const ChildlessNode& c : en.childless()) {
        out << path << ": CHILDLESS level " << c.level << " parent " << show(c.parent) << '\n';
        rc = kMismatch;
      }
      const checks::LevelReport lr = checks::level_check(g);
      for (const auto& issue : lr.issues) {
        out << path << ": LEVEL " << issue.level << ' ' << issue.what << ' '
            << show(issue.witness) << '\n';
        rc = kMismatch;
      }
      if (rc == kOk)
        out << path << ": levels ok (" << lr.parents << " parents, " << lr.children
            << " children, " << lr.h_children << " H-children)\n";
    }
    if (rc == kOk) out << path << ": ok, " << want.size() << " solutions\n";
    return rc;
  } catch (const oracle::OracleRefusal& ex) {
    out << path << ": refused: " << ex.what() << '\n';
    return kRefused;
  }
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.batch_dir.empty()) return verify_one(a.input, a, out);

  namespace fs = std::filesystem;
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(a.batch_dir, ec))
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  if (ec) {
    err << "error: cannot list '" << a.batch_dir << "': " << ec.message() << '\n';
    return kBadInput;
  }
  std::sort(files.begin(), files.end());

  // Workers pull file indices; reports are printed in file order afterwards.
  std::vector<std::string> reports(files.size());
  std::vector<int> codes(files.size(), kOk);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t k; (k = cursor++) < files.size();) {
      std::ostringstream os;
      codes[k] = verify_one(files[k], a, os);
      reports[k] = os.str();
    }
  };
  unsigned n = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int rc = kOk;
  for (std::size_t k = 0; k < files.size(); ++k) {
    out << reports[k];
    rc = std::max(rc, codes[k]);
  }
  return rc;
}

struct BenchArgs {
  std::string family;
  std::string sizes;
  std::uint64_t seed = 42;
};

inline std::optional<std::pair<int, int>> parse_range(const std::string& s) {
  static const std::regex re(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  return std::pair{std::stoi(m[1]), std::stoi(m[2])};
}

/// The benchmark graph of the given family and size parameter.
inline Graph bench_graph(const std::string& family, int size, std::uint64_t seed) {
  if (family == "triangles") return oracle::disjoint_triangles(size);
  if (family == "crown") return oracle::crown(size);
  if (family == "random") {
    // size is the edge count; a sparse vertex budget keeps levels deep.
    const std::size_t n = static_cast<std::size_t>(size) * 2 / 3 + 2;
    return oracle::random_graph(n, size, seed);
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

inline int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const auto range = parse_range(a.sizes);
  if (!range) {
    err << "error: --sizes expects A..B\n";
    return kBadInput;
  }
  if (range->first > range->second) {
    err << "error: empty size range " << a.sizes << '\n';
    return kBadInput;
  }
  out << "m,solutions,max_delay,peak_live\n";
  for (int s = range->first; s <= range->second; ++s) {
    Graph g;
    try {
      g = bench_graph(a.family, s, a.seed);
    } catch (const std::invalid_argument& ex) {
      err << "error: " << ex.what() << '\n';
      return kBadInput;
    }
    Enumerator en(g);
    while (en.next()) {
    }
    const EnumStats& st = en.stats();
    out << g.edge_count() << ',' << st.solutions << ',' << st.max_delay_steps << ','
        << st.peak_live_sets << '\n';
    out.flush();
  }
  return kOk;
}

struct GenArgs {
  std::string sat_path;
  std::vector<std::uint64_t> random;
  std::string out_path;
};

inline int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  try {
    if (!a.sat_path.empty()) {
      if (a.out_path.empty()) {
        err << "error: --sat needs --out for the edge list and its metadata\n";
        return kBadInput;
      }
      const oracle::CnfFormula f = io::read_cnf_file(a.sat_path);
      const oracle::ImtInstance inst = oracle::sat_to_imt(f);
      std::ofstream edges(a.out_path);
      std::ofstream meta(a.out_path + ".meta.json");
      if (!edges || !meta) {
        err << "error: cannot write '" << a.out_path << "'\n";
        return kBadInput;
      }
      io::write_edge_list(edges, inst.graph, inst.vertex_names);
      nlohmann::json base = nlohmann::json::array();
      for (EdgeId e : inst.base_transversal)
        base.push_back(io::edge_token(inst.graph, inst.vertex_names, e));
      const nlohmann::json m = {
          {"level", inst.level},
          {"b", io::edge_token(inst.graph, inst.vertex_names, inst.b_edge)},
          {"x", inst.vertex_names.at(inst.x)},
          {"y", inst.vertex_names.at(inst.y)},
          {"base_transversal", base},
          {"anchor", io::edge_token(inst.graph, inst.vertex_names, inst.anchor)},
          {"vertices", inst.graph.vertex_count()},
          {"edges", inst.graph.edge_count()}};
      meta << m.dump(2) << '\n';
      return kOk;
    }
    if (a.random.size() == 3) {
      const Graph g = oracle::random_graph(a.random[0], a.random[1], a.random[2]);
      std::vector<std::string> names;
      for (std::size_t v = 0; v < g.vertex_count(); ++v) names.push_back(std::to_string(v));
      if (a.out_path.empty()) {
        io::write_edge_list(out, g, names);
        return kOk;
      }
      std::ofstream os(a.out_path);
      if (!os) {
        err << "error: cannot write '" << a.out_path << "'\n";
        return kBadInput;
      }
      io::write_edge_list(os, g, names);
      return kOk;
    }
    err << "error: gen needs --sat FILE or --random N M SEED\n";
    return kBadInput;
  } catch (const io::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kBadInput;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate the minimal edge dominating sets of a graph"};
  app.require_subcommand(1);

  EnumerateArgs ea;
  std::string algo = "reverse";
  std::uint64_t limit = 0;
  auto* en = app.add_subcommand("enumerate", "print every minimal edge dominating set");
  en->add_option("input", ea.input, "edge list or DIMACS graph")->required();
  en->add_option("--algo", algo, "engine")
      ->check(CLI::IsMember({"reverse", "brute"}))
      ->capture_default_str();
  auto* lim = en->add_option("--limit", limit, "stop after N solutions");
  en->add_option("--stats", ea.stats_path, "write a JSON run report to FILE");

  VerifyArgs va;
  std::uint64_t drop = 0;
  auto* ve = app.add_subcommand("verify", "compare the enumerator with brute force");
  auto* vin = ve->add_option("input", va.input, "graph file");
  auto* vb = ve->add_option("--batch", va.batch_dir, "verify every file in DIR");
  vin->excludes(vb);
  ve->add_option("--threads", va.threads, "worker threads for --batch (0 = all cores)");
  ve->add_flag("--level-check", va.level_check, "also check every level against the oracle");
  auto* dr = ve->add_option("--drop-child", drop)->group("");

  BenchArgs ba;
  auto* be = app.add_subcommand("bench", "delay and space on built-in graph families");
  be->add_option("--family", ba.family, "triangles, crown or random")
      ->required()
      ->check(CLI::IsMember({"triangles", "crown", "random"}));
  be->add_option("--sizes", ba.sizes, "size range A..B")->required();
  be->add_option("--seed", ba.seed, "seed for the random family")->capture_default_str();

  GenArgs ga;
  auto* ge = app.add_subcommand("gen", "write fixture graphs");
  auto* gs = ge->add_option("--sat", ga.sat_path, "DIMACS 3-CNF to reduce");
  auto* gr = ge->add_option("--random", ga.random, "N M SEED")->expected(3);
  gs->excludes(gr);
  ge->add_option("--out", ga.out_path, "output edge list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kBadInput;
  }

  if (*en) {
    ea.algo = algo == "brute" ? Algo::brute : Algo::reverse;
    if (*lim) ea.limit = limit;
    return cmd_enumerate(ea, out, err);
  }
  if (*ve) {
    if (va.input.empty() && va.batch_dir.empty()) {
      err << "error: verify needs a graph file or --batch DIR\n";
      return kBadInput;
    }
    if (*dr) va.drop_child = drop;
    return cmd_verify(va, out, err);
  }
  if (*be) return cmd_bench(ba, out, err);
  return cmd_gen(ga, out, err);
}

}  // namespace medenum::cli

#endif  // MEDENUM_CLI_HPP_
