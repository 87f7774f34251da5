#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conpart/graph.hpp"
#include "conpart/instance.hpp"

namespace conpart {

using Partition = std::vector<NodeSet>;  // blocks in lexicographic order

inline Partition blocks_from_labels(const std::vector<int>& label, int k) {
  Partition blocks(k);
  for (int v = 0; v < static_cast<int>(label.size()); ++v) blocks[label[v]].push_back(v);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

inline std::int64_t partition_cost(const Graph& g, const Partition& blocks) {
  std::int64_t total = 0;
  for (const NodeSet& b : blocks) total += induced_edge_cost(g, b);
  return total;
}

struct OracleResult {
  enum class Status { Optimal, Infeasible } status = Status::Infeasible;
  Partition best;
  std::int64_t objective = 0;
  std::uint64_t partitions_examined = 0;

  bool optimal() const { return status == Status::Optimal; }
};

// Exhaustive minimum over all partitions of V into exactly k unlabeled blocks,
// each connected with size >= alpha. Restricted-growth-string enumeration;
// ties resolved toward the lexicographically smallest block list.
inline OracleResult brute_force_partition(const Instance& inst, int node_cap = 12) {
  const int n = inst.n();
  const int k = inst.k;
  if (n > node_cap) throw std::invalid_argument("brute_force_partition: n exceeds node cap");
  OracleResult res;
  if (k > n) return res;

  std::vector<int> label(n, 0);
  std::vector<int> block_size(k, 0);

  std::function<void(int, int)> walk = [&](int v, int used) {
    if (used + (n - v) < k) return;  // cannot open k blocks anymore
    // Each block still needs alpha nodes in total.
    int deficit = (k - used) * inst.alpha;
    for (int b = 0; b < used; ++b) deficit += std::max(0, inst.alpha - block_size[b]);
    if (deficit > n - v) return;
    if (v == n) {
      if (used != k) return;
      ++res.partitions_examined;
      Partition blocks = blocks_from_labels(label, k);
      for (const NodeSet& b : blocks)
        if (!is_connected(inst.graph, b)) return;
      std::int64_t cost = partition_cost(inst.graph, blocks);
      if (!res.optimal() || cost < res.objective ||
          (cost == res.objective && blocks < res.best)) {
        res.status = OracleResult::Status::Optimal;
        res.objective = cost;
        res.best = blocks;
      }
      return;
    }
    int top = std::min(used, k - 1);  // label == used opens a new block
    for (int c = 0; c <= top; ++c) {
      label[v] = c;
      ++block_size[c];
      walk(v + 1, c == used ? used + 1 : used);
      --block_size[c];
    }
  };
  label[0] = 0;
  block_size[0] = 1;
  walk(1, 1);
  return res;
}

struct PricedColumn {
  NodeSet nodes;
  std::int64_t cost = 0;
  double reduced_cost = 0.0;
};

// Reduced cost of a candidate component under master duals. sigma_cum is the
// cumulative size-cut correction: sigma_cum[s] = sum of duals of active rows
// covering columns of size >= their threshold, for a column of size s. Empty
// means no such rows.
inline double column_reduced_cost(const Graph& g, const NodeSet& nodes, double gamma,
                                  const std::vector<double>& pi,
                                  const std::vector<double>& sigma_cum) {
  double r = static_cast<double>(induced_edge_cost(g, nodes)) - gamma;
  for (int v : nodes) r -= pi[v];
  std::size_t s = nodes.size();
  if (!sigma_cum.empty() && s < sigma_cum.size()) r -= sigma_cum[s];
  else if (!sigma_cum.empty()) r -= sigma_cum.back();
  return r;
}

// Exhaustive pricing over all connected subsets with size in [alpha, beta],
// via bitmask scan (independent of the canonical-extension enumerator).
// Returns the minimum reduced-cost column when it is < -tol, else nothing.
// Ties go to the lexicographically smallest node set.
inline std::optional<PricedColumn> brute_force_pricing(const Instance& inst,
                                                       const std::vector<double>& pi, double gamma,
                                                       const std::vector<double>& sigma_cum = {},
                                                       double tol = 1e-9, int node_cap = 20) {
  const int n = inst.n();
  if (n > node_cap) throw std::invalid_argument("brute_force_pricing: n exceeds node cap");
  if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("brute_force_pricing: pi size");
  const int beta = inst.beta();
  std::optional<PricedColumn> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size < inst.alpha || size > beta) continue;
    // connectivity by BFS over the mask
    int start = __builtin_ctz(mask);
    std::uint32_t seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, e] : inst.graph.adj(v)) {
        (void)e;
        std::uint32_t bit = 1u << u;
        if ((mask & bit) && !(seen & bit)) {
          seen |= bit;
          stack.push_back(u);
        }
      }
    }
    if (seen != mask) continue;
    NodeSet nodes;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) nodes.push_back(v);
    double r = column_reduced_cost(inst.graph, nodes, gamma, pi, sigma_cum);
    if (r < -tol) {
      if (!best || r < best->reduced_cost - 1e-12 ||
          (std::abs(r - best->reduced_cost) <= 1e-12 && nodes < best->nodes)) {
        best = PricedColumn{nodes, induced_edge_cost(inst.graph, nodes), r};
      }
    }
  }
  return best;
}

}  // namespace conpart
