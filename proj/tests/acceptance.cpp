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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "medenum/checks.hpp"
#include "medenum/cli.hpp"
#include "medenum/enumerator.hpp"
#include "medenum/oracle.hpp"

namespace {

using namespace medenum;

struct Verdict {
  bool pass;
  std::string detail;
};

std::vector<Graph> k5_corpus() {
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) out.push_back(oracle::subgraph_of_complete(5, mask));
  return out;
}

Verdict oracle_equality() {
  std::size_t graphs = 0, solutions = 0, bad = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    const auto got = enumerate_all(g);
    solutions += got.size();
    if (checks::compare_families(got, oracle::brute_force_min_eds(g))) ++bad;
  };
  for (const Graph& g : k5_corpus()) check(g);
  std::mt19937_64 rng(20260101);
  for (int s = 0; s < 500; ++s) {
    const std::size_t n = 6 + rng() % 5;
    const std::size_t m = 1 + rng() % std::min<std::size_t>(n * (n - 1) / 2, 20);
    check(oracle::random_graph(n, m, rng()));
  }
  return {bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(solutions) +
                        " solutions, " + std::to_string(bad) + " mismatches"};
}

Verdict named_counts() {
  struct Case {
    const char* name;
    Graph g;
    std::uint64_t want;
  };
  std::vector<Case> cases = {
      {"P4", Graph(4, {{0, 1}, {1, 2}, {2, 3}}), 2},
      {"K3", Graph(3, {{0, 1}, {1, 2}, {0, 2}}), 3},
      {"C4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 6},
      {"K4", oracle::subgraph_of_complete(4, 0x3f), 15},
  };
  std::uint64_t p = 1;
  for (int t = 1; t <= 10; ++t) {
    p *= 3;
    cases.push_back({"triangles", oracle::disjoint_triangles(t), p});
  }
  std::string detail;
  bool ok = true;
  for (const auto& c : cases) {
    Enumerator en(c.g);
    std::uint64_t n = 0;
    while (en.next()) ++n;
    bool good = n == c.want;
    if (c.g.edge_count() <= 9) good = good && oracle::brute_force_min_eds(c.g).size() == c.want;
    if (!good) detail += std::string(c.name) + " gave " + std::to_string(n) + "; ";
    ok = ok && good;
  }
  if (ok) detail = "P4=2 K3=3 C4=6 K4=15 triangles t=1..10 = 3^t";
  return {ok, detail};
}

Verdict level_invariants() {
  std::size_t parents = 0, children = 0, h = 0, anchored = 0, childless = 0, partition = 0,
              slide = 0, mismatched = 0;
  for (const Graph& g : k5_corpus()) {
    const auto rep = checks::level_check(g);
    parents += rep.parents;
    children += rep.children;
    h += rep.h_children;
    for (const auto& issue : rep.issues) {
      if (issue.what.rfind("childless", 0) == 0) ++childless;
      else if (issue.what.rfind("partition", 0) == 0) ++partition;
      else ++slide;
    }
    const auto an = checks::anchored_selection_check(g);
    anchored += an.instances;
    mismatched += an.issues.size();
  }
  std::ostringstream d;
  d << "(a) childless " << childless << " of " << parents << " parents; (b) partition failures "
    << partition << " over " << children << " children; (c) anchored product mismatches " << mismatched
    << " of " << anchored << " instances; (d) slide drops != 1: " << slide << " of " << h
    << " H-children";
  return {childless + partition + mismatched + slide == 0, d.str()};
}

Verdict polynomial_delay() {
  std::uint64_t base = 0, worst = 0;
  std::ostringstream d;
  const auto t0 = std::chrono::steady_clock::now();
  for (int t = 6; t <= 12; ++t) {
    const Graph g = oracle::disjoint_triangles(t);
    Enumerator en(g);
    std::uint64_t n = 0;
    while (en.next()) ++n;
    const std::uint64_t delay = en.stats().max_delay_steps;
    if (t == 6) base = delay;
    worst = std::max(worst, delay);
    d << "t=" << t << ":" << n << "/" << delay << " ";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double ratio = static_cast<double>(worst) / static_cast<double>(base);
  d << "(solutions/max delay) ratio " << ratio << ", " << secs << " s";
  return {ratio <= 2.0 && secs < 300, d.str()};
}

Verdict polynomial_space() {
  std::size_t runs = 0, over = 0;
  std::string worst;
  double worst_ratio = 0;
  auto run = [&](const std::string& name, const Graph& g) {
    Enumerator en(g);
    while (en.next()) {
    }
    ++runs;
    const double r = static_cast<double>(en.stats().peak_live_sets) / g.edge_count();
    if (r > worst_ratio) {
      worst_ratio = r;
      worst = name + " m=" + std::to_string(g.edge_count()) + " peak=" +
              std::to_string(en.stats().peak_live_sets);
    }
    if (en.stats().peak_live_sets > 4 * g.edge_count()) ++over;
  };
  for (int t = 6; t <= 12; ++t) run("triangles", cli::bench_graph("triangles", t, 42));
  for (int n = 2; n <= 6; ++n) run("crown", cli::bench_graph("crown", n, 42));
  for (int m = 10; m <= 30; m += 2) run("random", cli::bench_graph("random", m, 42));
  return {over == 0, std::to_string(runs) + " benchmark runs, " + std::to_string(over) +
                         " above 4|E|; worst " + worst};
}

Verdict imt_fixtures() {
  std::mt19937_64 rng(6);
  int sat = 0, bad = 0, x_nonempty = 0;
  for (int trial = 0; trial < 50; ++trial) {
    oracle::CnfFormula f;
    f.num_vars = 1 + static_cast<int>(rng() % 10);
    const int m = 1 + static_cast<int>(rng() % 10);
    for (int h = 0; h < m; ++h) {
      std::vector<int> c;
      for (int l = 0; l < 3; ++l) {
        const int v = 1 + static_cast<int>(rng() % f.num_vars);
        c.push_back(rng() % 2 ? v : -v);
      }
      f.clauses.push_back(c);
    }
    const bool s = oracle::satisfiable(f);
    const auto out = checks::imt_outcome(oracle::sat_to_imt(f));
    sat += s;
    bad += out.selection_exists != s;
    x_nonempty += !out.x_set_empty;
  }
  return {bad == 0 && x_nonempty == 0,
          "50 formulas (" + std::to_string(sat) + " satisfiable), " + std::to_string(bad) +
              " disagreements, X_T nonempty on " + std::to_string(x_nonempty)};
}

Verdict determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "medenum_acceptance";
  fs::create_directories(dir);
  auto call = [](std::vector<std::string> args, std::string* out) {
    args.insert(args.begin(), "medenum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    const int rc = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
    *out = o.str();
    return rc;
  };
  int files = 0, bad = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const fs::path g = dir / ("g" + std::to_string(seed) + ".txt");
    std::string ignored;
    call({"gen", "--random", "9", std::to_string(10 + seed), std::to_string(seed), "--out",
          g.string()},
         &ignored);
    std::string a, b, c;
    const std::string sa = (dir / "a.json").string(), sb = (dir / "b.json").string();
    const int r1 = call({"enumerate", g.string(), "--stats", sa}, &a);
    const int r2 = call({"enumerate", g.string()}, &b);
    const int r3 = call({"enumerate", g.string(), "--algo", "brute", "--stats", sb}, &c);
    const auto ja = nlohmann::json::parse(std::ifstream(sa));
    const auto jb = nlohmann::json::parse(std::ifstream(sb));
    ++files;
    if (r1 || r2 || r3 || a != b || ja.at("checksum") != jb.at("checksum") ||
        ja.at("solution_count") != jb.at("solution_count"))
      ++bad;
  }
  fs::remove_all(dir);
  return {bad == 0, std::to_string(files) + " inputs, " + std::to_string(bad) +
                        " with differing output or checksum"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"oracle equality on the K5 corpus and 500 random graphs", oracle_equality},
      {"named solution counts", named_counts},
      {"level invariants on the K5 corpus", level_invariants},
      {"delay on triangles t=6..12 within 2x of t=6", polynomial_delay},
      {"peak live sets within 4|E| on benchmark runs", polynomial_space},
      {"reduction fixtures: selection exists iff satisfiable, X_T empty", imt_fixtures},
      {"deterministic output and engine-independent checksum", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v{false, ""};
    try {
      v = criteria[k].second();
    } catch (const std::exception& ex) {
      v = {false, std::string("exception: ") + ex.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first
              << " -- " << v.detail << std::endl;
  }
  return failed ? 1 : 0;
}
