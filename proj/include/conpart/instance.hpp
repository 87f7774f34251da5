#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "conpart/graph.hpp"

namespace conpart {

// Partition instance: graph plus component count k and minimum size alpha.
struct Instance {
  Graph graph;
  int k = 2;
  int alpha = 2;

  Instance(Graph g, int k_, int alpha_) : graph(std::move(g)), k(k_), alpha(alpha_) {
    if (k < 2) throw std::invalid_argument("instance: k must be >= 2");
    if (alpha < 2) throw std::invalid_argument("instance: alpha must be >= 2");
  }

  int n() const { return graph.n(); }
  // Largest possible component size: n - (k-1)*alpha.
  int beta() const { return graph.n() - (k - 1) * alpha; }
};

enum class FeasStatus { FeasibleUnknown, Infeasible };
enum class InfeasReason { None, SizeBound, TooManyComponents, DistanceCertificate };

struct FeasibilityReport {
  FeasStatus status = FeasStatus::FeasibleUnknown;
  InfeasReason reason = InfeasReason::None;
  NodeSet witness;       // far set or offending component
  int witness_count = 0; // component count for TooManyComponents

  bool infeasible() const { return status == FeasStatus::Infeasible; }
};

// Necessary-condition filter; never flags an instance the exhaustive search
// can solve. FeasibleUnknown only means no certificate was found here.
inline FeasibilityReport precheck(const Instance& inst) {
  FeasibilityReport rep;
  const int n = inst.n();
  if (static_cast<long>(inst.k) * inst.alpha > n) {
    rep.status = FeasStatus::Infeasible;
    rep.reason = InfeasReason::SizeBound;
    rep.witness_count = inst.k * inst.alpha;
    return rep;
  }
  auto [comp, count] = connected_components(inst.graph);
  if (count > inst.k) {
    rep.status = FeasStatus::Infeasible;
    rep.reason = InfeasReason::TooManyComponents;
    rep.witness_count = count;
    return rep;
  }
  std::vector<int> sizes(count, 0);
  for (int v = 0; v < n; ++v) ++sizes[comp[v]];
  for (int c = 0; c < count; ++c) {
    if (sizes[c] < inst.alpha) {
      rep.status = FeasStatus::Infeasible;
      rep.reason = InfeasReason::TooManyComponents;
      rep.witness_count = count;
      for (int v = 0; v < n; ++v)
        if (comp[v] == c) rep.witness.push_back(v);
      return rep;
    }
  }
  NodeSet far = greedy_far_set(inst.graph, inst.beta());
  if (static_cast<int>(far.size()) > inst.k) {
    rep.status = FeasStatus::Infeasible;
    rep.reason = InfeasReason::DistanceCertificate;
    rep.witness = far;
    rep.witness_count = static_cast<int>(far.size());
    return rep;
  }
  return rep;
}

// splitmix64; the fixed PRNG behind deterministic instance generation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound); plain modulo, documented as part of the format.
  std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Connected random graph: random recursive spanning tree, then distinct extra
// edges; integer costs uniform in [cost_low, cost_high]. Deterministic in seed.
inline Graph generate_graph(int n, long m, std::int64_t cost_low, std::int64_t cost_high,
                            std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate: n must be positive");
  const long max_m = static_cast<long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m) throw std::invalid_argument("generate: m out of range");
  if (cost_low < 0 || cost_low > cost_high) throw std::invalid_argument("generate: bad cost range");
  SplitMix64 rng(seed);
  auto draw_cost = [&]() {
    return cost_low + static_cast<std::int64_t>(
                          rng.bounded(static_cast<std::uint64_t>(cost_high - cost_low + 1)));
  };
  std::vector<std::tuple<int, int, std::int64_t>> edges;
  std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
  auto mark = [&](int i, int j) { present[static_cast<std::size_t>(i) * n + j] = 1; };
  auto marked = [&](int i, int j) { return present[static_cast<std::size_t>(i) * n + j] != 0; };
  for (int v = 1; v < n; ++v) {
    int p = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(v)));
    edges.emplace_back(p, v, draw_cost());
    mark(p, v);
    mark(v, p);
  }
  long extra = m - (n - 1);
  while (extra > 0) {
    int i = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
    if (i == j || marked(i, j)) continue;
    edges.emplace_back(std::min(i, j), std::max(i, j), draw_cost());
    mark(i, j);
    mark(j, i);
    --extra;
  }
  return Graph(n, edges);
}

inline Instance generate_instance(int n, long m, int k, int alpha, std::int64_t cost_low,
                                  std::int64_t cost_high, std::uint64_t seed) {
  return Instance(generate_graph(n, m, cost_low, cost_high, seed), k, alpha);
}

// Line-oriented text format. Line 1: "n m k alpha"; then m lines "i j d_ij"
// with 0-based ids and integer costs; '#' starts a comment.
inline std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.n() << ' ' << inst.graph.m() << ' ' << inst.k << ' ' << inst.alpha << '\n';
  for (const Edge& e : inst.graph.edges()) out << e.a << ' ' << e.b << ' ' << e.cost << '\n';
  return out.str();
}

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

inline Instance read_instance(std::istream& in) {
  std::string raw;
  int line_no = 0;
  auto next_line = [&](std::string& out) -> bool {
    while (std::getline(in, raw)) {
      ++line_no;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      bool blank = raw.find_first_not_of(" \t\r\n") == std::string::npos;
      if (!blank) {
        out = raw;
        return true;
      }
    }
    return false;
  };
  std::string line;
  if (!next_line(line)) throw ParseError(line_no, "missing header");
  long long n, m, k, alpha;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m >> k >> alpha)) throw ParseError(line_no, "bad header, want: n m k alpha");
    std::string rest;
    if (hs >> rest) throw ParseError(line_no, "trailing tokens in header");
  }
  if (n < 1) throw ParseError(line_no, "n must be positive");
  if (k < 2) throw ParseError(line_no, "k must be >= 2");
  if (alpha < 2) throw ParseError(line_no, "alpha must be >= 2");
  std::vector<std::tuple<int, int, std::int64_t>> edges;
  for (long long e = 0; e < m; ++e) {
    if (!next_line(line)) throw ParseError(line_no, "unexpected end of file in edge list");
    std::istringstream es(line);
    long long i, j, d;
    if (!(es >> i >> j >> d)) throw ParseError(line_no, "bad edge line, want: i j d");
    std::string rest;
    if (es >> rest) throw ParseError(line_no, "trailing tokens in edge line");
    if (i < 0 || i >= n || j < 0 || j >= n) throw ParseError(line_no, "edge endpoint out of range");
    if (i == j) throw ParseError(line_no, "self-loop");
    if (d < 0) throw ParseError(line_no, "negative cost");
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j), d);
  }
  try {
    return Instance(Graph(static_cast<int>(n), edges), static_cast<int>(k),
                    static_cast<int>(alpha));
  } catch (const std::invalid_argument& err) {
    throw ParseError(line_no, err.what());
  }
}

inline Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return read_instance(in);
}

inline void write_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << write_instance(inst);
}

}  // namespace conpart
