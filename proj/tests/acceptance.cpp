// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stpec/commands.hpp"
#include "stpec/dp.hpp"
#include "stpec/generate.hpp"
#include "stpec/io.hpp"
#include "stpec/oracle.hpp"

using namespace stpec;

namespace {

constexpr int kCorpusSize = 220;
constexpr int kMaxK = 3;

struct Instance {
  Digraph g;
  std::uint64_t seed;
  std::optional<int> oracle;         // minimum with at most kMaxK edges
  std::vector<SolveResult> results;  // indexed by k
};

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << detail << std::endl;
  if (!ok) ++failures;
}

std::string temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "stpec_acceptance";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

int count_sources(const Digraph& g) {
  int c = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) c += g.in_degree(v) == 0 ? 1 : 0;
  return c;
}

int count_sinks(const Digraph& g) {
  int c = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) c += g.out_degree(v) == 0 ? 1 : 0;
  return c;
}

std::vector<Instance> build_corpus(double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Instance> corpus;
  for (int i = 0; i < kCorpusSize; ++i) {
    Instance inst{random_planar(4 + i % 5, static_cast<std::uint64_t>(i)), static_cast<std::uint64_t>(i), {}, {}};
    inst.oracle = brute_force_min_completion(inst.g, kMaxK).minimum;
    for (int k = 0; k <= kMaxK; ++k) inst.results.push_back(solve(inst.g, k));
    corpus.push_back(std::move(inst));
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return corpus;
}

void criterion_1_2(const std::vector<Instance>& corpus, double seconds) {
  int decision = 0;
  int optimum = 0;
  int both_yes = 0;
  std::string first;
  for (const auto& inst : corpus) {
    for (int k = 0; k <= kMaxK; ++k) {
      const SolveResult& r = inst.results[static_cast<size_t>(k)];
      const bool truth = inst.oracle && *inst.oracle <= k;
      if (r.yes != truth) {
        ++decision;
        if (first.empty()) first = "seed " + std::to_string(inst.seed) + " k=" + std::to_string(k);
      }
      if (r.yes && truth) {
        ++both_yes;
        if (r.min_edges != inst.oracle) ++optimum;
      }
    }
  }
  std::ostringstream d1;
  d1 << corpus.size() << " graphs x k=0.." << kMaxK << ", " << decision << " disagreements, "
     << static_cast<int>(seconds) << "s";
  if (!first.empty()) d1 << ", first at " << first;
  report(1, decision == 0 && seconds < 600, d1.str());
  report(2, optimum == 0,
         std::to_string(both_yes) + " joint YES answers, " + std::to_string(optimum) + " minimum mismatches");
}

void criterion_3(const std::vector<Instance>& corpus) {
  int checked = 0;
  int bad = 0;
  const std::string input = temp_path("instance.txt");
  const std::string edges = temp_path("witness.txt");
  for (const auto& inst : corpus) {
    write_file(input, emit_instance(inst.g));
    for (int k = 0; k <= kMaxK; ++k) {
      const SolveResult& r = inst.results[static_cast<size_t>(k)];
      if (!r.yes) continue;
      ++checked;
      write_file(edges, emit_edges(*r.witness));
      std::ostringstream out;
      std::ostringstream err;
      const bool ok = r.witness && static_cast<int>(r.witness->size()) == *r.min_edges &&
                      *r.min_edges <= k && cmd_verify(input, edges, out, err) == 0;
      if (!ok) ++bad;
    }
  }
  report(3, bad == 0 && checked > 0,
         std::to_string(checked) + " witnesses verified, " + std::to_string(bad) + " failures");
}

void criterion_4() {
  bool ok = true;
  std::ostringstream d;
  for (int m : {2, 3}) {
    const Digraph g = alt_cycle(m);
    const SolveResult at = solve(g, m - 1);
    const SolveResult below = solve(g, m - 2);
    const auto truth = brute_force_min_completion(g, m + 1).minimum;
    const bool yes_ok = at.yes && at.min_edges == m - 1;
    const bool no_ok = !below.yes;
    ok = ok && yes_ok && no_ok;
    d << "m=" << m << ": k=" << m - 1 << " -> " << render_result(at) << ", k=" << m - 2 << " -> "
      << render_result(below) << ", oracle minimum " << show(truth) << "; ";
  }
  d << "required YES at k=m-1";
  report(4, ok, d.str());
}

void criterion_5(const std::vector<Instance>& corpus) {
  int strict = 0;
  int fixed_only_no = 0;
  std::string example;
  for (const auto& inst : corpus) {
    const SolveResult& free_r = inst.results[kMaxK];
    if (!free_r.yes) continue;
    auto emb = test_planarity(inst.g);
    SolveOptions options;
    options.fixed_embedding = &*emb;
    const SolveResult fixed_r = solve(inst.g, kMaxK, options);
    if (!fixed_r.yes) {
      ++fixed_only_no;
    } else if (*fixed_r.min_edges > *free_r.min_edges) {
      ++strict;
      if (example.empty()) {
        example = "seed " + std::to_string(inst.seed) + " fixed " + std::to_string(*fixed_r.min_edges) +
                  " vs free " + std::to_string(*free_r.min_edges);
      }
    }
  }
  std::string detail = std::to_string(strict) + " instances with a larger fixed minimum, " +
                       std::to_string(fixed_only_no) + " where only free mode succeeds";
  if (!example.empty()) detail += ", e.g. " + example;
  report(5, strict > 0, detail);
}

void criterion_6(const std::vector<Instance>& corpus) {
  long long stored = 0;
  long long discarded = 0;
  long long entries = 0;
  for (const auto& inst : corpus) {
    for (const auto& r : inst.results) {
      stored += r.stats.stored_long_signatures;
      discarded += r.stats.long_signatures_discarded;
      entries += r.stats.entries_stored;
    }
  }
  report(6, stored == 0,
         std::to_string(entries) + " entries stored, " + std::to_string(stored) + " with long signatures, " +
             std::to_string(discarded) + " long candidates discarded");
}

void criterion_7(const std::vector<Instance>& corpus) {
  int yes = 0;
  int bad = 0;
  for (const auto& inst : corpus) {
    const int bound = std::max(count_sources(inst.g) - 1, count_sinks(inst.g) - 1);
    for (const auto& r : inst.results) {
      if (!r.yes) continue;
      ++yes;
      if (*r.min_edges < bound) ++bad;
    }
  }
  report(7, bad == 0, std::to_string(yes) + " YES answers, " + std::to_string(bad) + " below the bound");
}

// Every simple oriented graph on n vertices: each pair is absent, forward or
// backward.
void for_each_digraph(int n, const std::function<void(const Digraph&)>& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  long long total = 1;
  for (size_t i = 0; i < pairs.size(); ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    std::vector<Edge> edges;
    long long c = code;
    for (auto [a, b] : pairs) {
      const int s = static_cast<int>(c % 3);
      c /= 3;
      if (s == 1) edges.push_back({a, b});
      if (s == 2) edges.push_back({b, a});
    }
    fn(Digraph(n, edges));
  }
}

void criterion_8() {
  long long checked = 0;
  long long positive = 0;
  long long bad = 0;
  auto check = [&](const Digraph& g) {
    ++checked;
    const bool a = exhaustive_st_check(g);
    const bool b = is_st_planar(g).has_value();
    positive += a ? 1 : 0;
    bad += a != b ? 1 : 0;
  };
  for (int n = 2; n <= 5; ++n) for_each_digraph(n, check);
  // Six vertices: acyclic orientations of random planar graphs and random
  // sparse digraphs, seeded.
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 0; seed < 300; ++seed) check(random_planar(6, seed));
  for (int i = 0; i < 3000; ++i) {
    std::vector<Edge> edges;
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        const auto r = rng() % 10;
        if (r < 4) edges.push_back({a, b});
        if (r == 4) edges.push_back({b, a});
      }
    }
    check(Digraph(6, edges));
  }
  report(8, bad == 0,
         std::to_string(checked) + " digraphs (" + std::to_string(positive) + " st-planar), " +
             std::to_string(bad) + " disagreements");
}

void criterion_9(const std::vector<Instance>& corpus) {
  int violations = 0;
  for (const auto& inst : corpus) {
    for (int k = 0; k < kMaxK; ++k) {
      const SolveResult& a = inst.results[static_cast<size_t>(k)];
      const SolveResult& b = inst.results[static_cast<size_t>(k + 1)];
      if (a.yes && (!b.yes || *b.min_edges > *a.min_edges)) ++violations;
    }
  }
  int nondeterministic = 0;
  int runs = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenerateCommand gen;
    gen.family = "random-planar";
    gen.n = 5 + static_cast<int>(seed % 4);
    gen.seed = seed;
    std::ostringstream g1;
    std::ostringstream g2;
    std::ostringstream err;
    cmd_generate(gen, g1, err);
    cmd_generate(gen, g2, err);
    if (g1.str() != g2.str()) ++nondeterministic;

    const std::string path = temp_path("det.txt");
    write_file(path, g1.str());
    SolveCommand cmd;
    cmd.input = path;
    cmd.k = 3;
    cmd.witness = true;
    cmd.trace = seed % 2 == 0;
    cmd.jobs = seed % 3 == 0 ? 3 : 1;
    std::string reports[2];
    for (auto& rep : reports) {
      std::ostringstream out;
      cmd_solve(cmd, out, err);
      rep = out.str();
    }
    ++runs;
    if (reports[0] != reports[1]) ++nondeterministic;
  }
  report(9, violations == 0 && nondeterministic == 0,
         std::to_string(violations) + " monotonicity violations, " + std::to_string(nondeterministic) +
             " differing outputs over " + std::to_string(runs) + " repeated generate/solve pairs");
}

// Flips an edge u -> v that has another directed u-v path; the result has a
// directed cycle.
std::optional<Digraph> make_cyclic(const Digraph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge edge = g.edge(e);
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    std::vector<Vertex> stack{edge.tail};
    seen[static_cast<size_t>(edge.tail)] = true;
    bool reached = false;
    while (!stack.empty() && !reached) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId f : g.incident(x)) {
        const Edge& o = g.edge(f);
        if (f == e || o.tail != x || seen[static_cast<size_t>(o.head)]) continue;
        if (o.head == edge.head) reached = true;
        seen[static_cast<size_t>(o.head)] = true;
        stack.push_back(o.head);
      }
    }
    if (!reached) continue;
    std::vector<Edge> edges = g.edges();
    edges[static_cast<size_t>(e)] = Edge{edge.head, edge.tail};
    return Digraph(g.vertex_count(), edges);
  }
  return std::nullopt;
}

void criterion_10() {
  int instances = 0;
  int bad = 0;
  for (std::uint64_t seed = 0; instances < 50 && seed < 1000; ++seed) {
    auto cyclic = make_cyclic(random_planar(4 + static_cast<int>(seed % 6), 5000 + seed));
    if (!cyclic) continue;
    ++instances;
    for (int k = 0; k <= 5; ++k) {
      const SolveResult r = solve(*cyclic, k);
      if (r.yes || r.rejected != RejectReason::DirectedCycle) ++bad;
    }
  }
  report(10, instances == 50 && bad == 0,
         std::to_string(instances) + " cyclic instances, " + std::to_string(bad) + " answers other than Reject(DirectedCycle)");
}

}  // namespace

int main() {
  double seconds = 0;
  const std::vector<Instance> corpus = build_corpus(seconds);
  criterion_1_2(corpus, seconds);
  criterion_3(corpus);
  criterion_4();
  criterion_5(corpus);
  criterion_6(corpus);
  criterion_7(corpus);
  criterion_8();
  criterion_9(corpus);
  criterion_10();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
