#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "conpart/instance.hpp"
#include "conpart/milp.hpp"
#include "conpart/models.hpp"
#include "conpart/oracle.hpp"

namespace conpart {

// Labeled partition: block index == cluster index, exactly k blocks.
using LabeledPartition = std::vector<NodeSet>;

inline LabeledPartition label_in_order(const Partition& blocks) { return blocks; }

// BFS parent pointers inside `block` from `root`; -2 marks "outside block".
inline std::vector<int> block_bfs_parents(const Graph& g, const NodeSet& block, int root) {
  std::vector<int> parent(g.n(), -2);
  for (int v : block) parent[v] = -1;
  std::vector<int> queue{root};
  std::vector<char> seen(g.n(), 0);
  seen[root] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (auto [u, e] : g.adj(v)) {
      (void)e;
      if (parent[u] == -2 || seen[u]) continue;
      seen[u] = 1;
      parent[u] = v;
      queue.push_back(u);
    }
  }
  return parent;
}

// Feasible M1 assignment for a labeled partition: every commodity (l,c)
// routes one unit to each same-cluster non-neighbor of l along the BFS tree
// of the block rooted at l.
inline std::vector<double> encode_m1(const Instance& inst, const BuiltModel& built,
                                     const LabeledPartition& parts) {
  const Graph& g = inst.graph;
  const VarIndex& ix = built.index;
  std::vector<double> a(built.model.num_vars(), 0.0);
  for (int c = 0; c < ix.k; ++c) {
    const NodeSet& block = parts[c];
    for (int v : block) a[ix.y(v, c)] = 1.0;
  }
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    for (int c = 0; c < ix.k; ++c)
      if (a[ix.y(ed.a, c)] > 0.5 && a[ix.y(ed.b, c)] > 0.5) a[ix.x_edge(e, c)] = 1.0;
  }
  for (int q = 0; q < ix.p; ++q) {
    auto [i, j] = ix.non_edges[q];
    for (int c = 0; c < ix.k; ++c)
      if (a[ix.y(i, c)] > 0.5 && a[ix.y(j, c)] > 0.5) a[ix.xbar(q, c)] = 1.0;
  }
  for (int c = 0; c < ix.k; ++c) {
    const NodeSet& block = parts[c];
    for (int l : block) {
      auto parent = block_bfs_parents(g, block, l);
      for (int t : block) {
        if (t == l || g.has_edge(l, t)) continue;
        for (int v = t; v != l; v = parent[v]) {
          int u = parent[v];
          int e = g.edge_index(u, v);
          int dir = g.edge(e).a == u ? 0 : 1;
          a[ix.flow_m1(l, c, e, dir)] += 1.0;
        }
      }
    }
  }
  return a;
}

// Root for an M2 block: lowest node that is not a leaf of G, else lowest node.
inline int pick_block_root(const Graph& g, const NodeSet& block) {
  for (int v : block)
    if (g.degree(v) >= 2) return v;
  return block.front();
}

// Feasible M2 assignment: artificial root a_c enters the block of cluster c at
// a non-leaf node; tree arcs carry subtree sizes.
inline std::vector<double> encode_m2(const Instance& inst, const BuiltModel& built,
                                     const LabeledPartition& parts) {
  const Graph& g = inst.graph;
  const VarIndex& ix = built.index;
  std::vector<double> a(built.model.num_vars(), 0.0);
  for (int c = 0; c < ix.k; ++c)
    for (int v : parts[c]) a[ix.y(v, c)] = 1.0;
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    for (int c = 0; c < ix.k; ++c)
      if (a[ix.y(ed.a, c)] > 0.5 && a[ix.y(ed.b, c)] > 0.5) a[ix.x_edge(e)] = 1.0;
  }
  for (int c = 0; c < ix.k; ++c) {
    const NodeSet& block = parts[c];
    int root = pick_block_root(g, block);
    a[ix.x_art(c, root)] = 1.0;
    a[ix.flow_art(c, root)] = static_cast<double>(block.size());
    auto parent = block_bfs_parents(g, block, root);
    // subtree sizes by processing BFS order backwards
    std::vector<int> order{root};
    std::vector<char> seen(g.n(), 0);
    seen[root] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
      int v = order[h];
      for (auto [u, e] : g.adj(v)) {
        (void)e;
        if (parent[u] != v || seen[u]) continue;
        seen[u] = 1;
        order.push_back(u);
      }
    }
    std::vector<int> sub(g.n(), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      if (v == root) continue;
      int u = parent[v];
      sub[u] += sub[v];
      int e = g.edge_index(u, v);
      int dir = g.edge(e).a == u ? 0 : 1;
      a[ix.flow_real(e, dir)] = static_cast<double>(sub[v]);
    }
  }
  return a;
}

inline std::vector<double> encode_partition(const Instance& inst, const BuiltModel& built,
                                            const LabeledPartition& parts) {
  return built.index.kind == ModelKind::M1 ? encode_m1(inst, built, parts)
                                           : encode_m2(inst, built, parts);
}

// Cluster blocks read back from integral y values; empty optional when some
// node has no cluster or a block is empty.
inline std::optional<LabeledPartition> partition_from_y(const VarIndex& ix,
                                                        const std::vector<double>& a) {
  LabeledPartition parts(ix.k);
  for (int i = 0; i < ix.n; ++i) {
    int where = -1;
    for (int c = 0; c < ix.k; ++c) {
      if (a[ix.y(i, c)] > 0.5) {
        if (where >= 0) return std::nullopt;
        where = c;
      }
    }
    if (where < 0) return std::nullopt;
    parts[where].push_back(i);
  }
  for (const NodeSet& b : parts)
    if (b.empty()) return std::nullopt;
  return parts;
}

inline bool partition_is_feasible(const Instance& inst, const LabeledPartition& parts) {
  if (static_cast<int>(parts.size()) != inst.k) return false;
  std::vector<char> seen(inst.n(), 0);
  for (const NodeSet& b : parts) {
    if (static_cast<int>(b.size()) < inst.alpha || static_cast<int>(b.size()) > inst.beta())
      return false;
    for (int v : b) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    if (!is_connected(inst.graph, b)) return false;
  }
  for (int v = 0; v < inst.n(); ++v)
    if (!seen[v]) return false;
  return true;
}

// Relabel an unlabeled partition so the block containing far_set[i] gets
// cluster index i; leftover blocks take the remaining indices in order.
inline std::optional<LabeledPartition> relabel_for_far_set(const Partition& blocks,
                                                           const NodeSet& far_set, int k) {
  LabeledPartition out(k);
  std::vector<char> used(blocks.size(), 0);
  for (int i = 0; i < static_cast<int>(far_set.size()); ++i) {
    int found = -1;
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
      if (used[b]) continue;
      if (std::binary_search(blocks[b].begin(), blocks[b].end(), far_set[i])) {
        found = b;
        break;
      }
    }
    if (found < 0) return std::nullopt;  // two far nodes share a block
    used[found] = 1;
    out[i] = blocks[found];
  }
  int next = static_cast<int>(far_set.size());
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    if (!used[b]) out[next++] = blocks[b];
  return out;
}

// Deterministic stand-alone incumbent: strip subtrees of size within
// [alpha, beta] from a BFS spanning tree, deepest candidates first.
inline std::optional<LabeledPartition> tree_strip_partition(const Instance& inst) {
  const Graph& g = inst.graph;
  const int n = g.n();
  NodeSet all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  if (!is_connected(g, all)) return std::nullopt;
  auto parent = block_bfs_parents(g, all, 0);
  std::vector<int> depth(n, 0);
  std::vector<int> order{0};
  {
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
      int v = order[h];
      for (auto [u, e] : g.adj(v)) {
        (void)e;
        if (parent[u] != v || seen[u]) continue;
        seen[u] = 1;
        depth[u] = depth[v] + 1;
        order.push_back(u);
      }
    }
  }
  std::vector<char> cut(n, 0);  // already assigned to a finished block
  LabeledPartition parts;
  int remaining = n;
  for (int left = inst.k; left >= 2; --left) {
    // subtree sizes over the not-yet-cut forest
    std::vector<int> sub(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      if (cut[v]) continue;
      sub[v] += 1;
      if (v != 0 && parent[v] >= 0 && !cut[parent[v]]) sub[parent[v]] += sub[v];
    }
    int pick = -1;
    for (int v : order) {
      if (cut[v] || v == 0) continue;
      if (sub[v] < inst.alpha || sub[v] > inst.beta()) continue;
      if (remaining - sub[v] < (left - 1) * inst.alpha) continue;
      if (pick < 0 || depth[v] > depth[pick]) pick = v;
    }
    if (pick < 0) return std::nullopt;
    NodeSet block;
    std::vector<int> stack{pick};
    cut[pick] = 1;
    block.push_back(pick);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, e] : g.adj(v)) {
        (void)e;
        if (parent[u] == v && !cut[u]) {
          cut[u] = 1;
          block.push_back(u);
          stack.push_back(u);
        }
      }
    }
    std::sort(block.begin(), block.end());
    parts.push_back(block);
    remaining -= static_cast<int>(block.size());
  }
  NodeSet rest;
  for (int v = 0; v < n; ++v)
    if (!cut[v]) rest.push_back(v);
  if (static_cast<int>(rest.size()) < inst.alpha || static_cast<int>(rest.size()) > inst.beta())
    return std::nullopt;
  parts.push_back(rest);
  if (!partition_is_feasible(inst, parts)) return std::nullopt;
  return parts;
}

// Round fractional y to a partition and repair connectivity and sizes.
// Returns nothing when repair stalls.
inline std::optional<LabeledPartition> round_and_repair(const Instance& inst, const VarIndex& ix,
                                                        const std::vector<double>& a) {
  const Graph& g = inst.graph;
  const int n = ix.n, k = ix.k;
  std::vector<int> label(n, -1);
  for (int i = 0; i < n; ++i) {
    double best = -1.0;
    for (int c = 0; c < k; ++c) {
      double v = a[ix.y(i, c)];
      if (v > best + 1e-12) {
        best = v;
        label[i] = c;
      }
    }
  }
  // keep only the largest connected piece of each cluster
  std::vector<NodeSet> blocks(k);
  for (int i = 0; i < n; ++i) blocks[label[i]].push_back(i);
  std::vector<int> unassigned;
  for (int c = 0; c < k; ++c) {
    if (blocks[c].empty()) continue;
    std::vector<char> in_b(n, 0), seen(n, 0);
    for (int v : blocks[c]) in_b[v] = 1;
    NodeSet best_piece;
    for (int v : blocks[c]) {
      if (seen[v]) continue;
      NodeSet piece;
      std::vector<int> stack{v};
      seen[v] = 1;
      while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        piece.push_back(w);
        for (auto [u, e] : g.adj(w)) {
          (void)e;
          if (in_b[u] && !seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
        }
      }
      std::sort(piece.begin(), piece.end());
      if (piece.size() > best_piece.size() ||
          (piece.size() == best_piece.size() && piece < best_piece))
        best_piece = piece;
    }
    for (int v : blocks[c])
      if (!std::binary_search(best_piece.begin(), best_piece.end(), v)) unassigned.push_back(v);
    blocks[c] = best_piece;
  }
  // empty clusters must be reseeded from the pool; give up instead
  for (int c = 0; c < k; ++c)
    if (blocks[c].empty()) return std::nullopt;
  std::sort(unassigned.begin(), unassigned.end());
  std::vector<int> owner(n, -1);
  for (int c = 0; c < k; ++c)
    for (int v : blocks[c]) owner[v] = c;
  // attach pool nodes to adjacent blocks, smallest block first
  bool progress = true;
  while (!unassigned.empty() && progress) {
    progress = false;
    for (std::size_t idx = 0; idx < unassigned.size(); ++idx) {
      int v = unassigned[idx];
      int target = -1;
      for (auto [u, e] : g.adj(v)) {
        (void)e;
        if (owner[u] < 0) continue;
        if (target < 0 || blocks[owner[u]].size() < blocks[target].size()) target = owner[u];
      }
      if (target >= 0) {
        owner[v] = target;
        blocks[target].insert(
            std::lower_bound(blocks[target].begin(), blocks[target].end(), v), v);
        unassigned.erase(unassigned.begin() + idx);
        progress = true;
        break;
      }
    }
  }
  if (!unassigned.empty()) return std::nullopt;
  // move boundary nodes from large blocks into small ones
  for (int guard = 0; guard < 4 * n; ++guard) {
    int small = -1;
    for (int c = 0; c < k; ++c)
      if (static_cast<int>(blocks[c].size()) < inst.alpha &&
          (small < 0 || blocks[c].size() < blocks[small].size()))
        small = c;
    if (small < 0) break;
    bool moved = false;
    for (int v : blocks[small]) {
      for (auto [u, e] : g.adj(v)) {
        (void)e;
        int from = owner[u];
        if (from == small) continue;
        if (static_cast<int>(blocks[from].size()) <= inst.alpha) continue;
        NodeSet donor_without = blocks[from];
        donor_without.erase(std::find(donor_without.begin(), donor_without.end(), u));
        if (!is_connected(g, donor_without)) continue;
        blocks[from] = donor_without;
        blocks[small].insert(std::lower_bound(blocks[small].begin(), blocks[small].end(), u), u);
        owner[u] = small;
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (!moved) return std::nullopt;
  }
  if (!partition_is_feasible(inst, blocks)) return std::nullopt;
  return blocks;
}

}  // namespace conpart
