#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conpart {

// Canonical node subset: sorted, unique, 0-based ids.
using NodeSet = std::vector<int>;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

inline bool is_canonical(const NodeSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

inline NodeSet make_node_set(std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

struct Edge {
  int a = 0;  // a < b
  int b = 0;
  std::int64_t cost = 0;
};

// Immutable undirected graph with nonnegative integer edge costs.
class Graph {
 public:
  Graph(int node_count, const std::vector<std::tuple<int, int, std::int64_t>>& edge_list)
      : n_(node_count), adj_(static_cast<std::size_t>(std::max(node_count, 0))) {
    if (node_count <= 0) throw std::invalid_argument("graph: node count must be positive");
    edges_.reserve(edge_list.size());
    for (const auto& [i, j, d] : edge_list) {
      if (i == j) throw std::invalid_argument("graph: self-loop at node " + std::to_string(i));
      if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("graph: endpoint out of range in edge {" + std::to_string(i) +
                                    "," + std::to_string(j) + "}");
      if (d < 0) throw std::invalid_argument("graph: negative cost on edge {" + std::to_string(i) +
                                             "," + std::to_string(j) + "}");
      Edge e{std::min(i, j), std::max(i, j), d};
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    for (std::size_t e = 1; e < edges_.size(); ++e)
      if (edges_[e - 1].a == edges_[e].a && edges_[e - 1].b == edges_[e].b)
        throw std::invalid_argument("graph: duplicate edge {" + std::to_string(edges_[e].a) + "," +
                                    std::to_string(edges_[e].b) + "}");
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      adj_[edges_[e].a].push_back({edges_[e].b, e});
      adj_[edges_[e].b].push_back({edges_[e].a, e});
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }
  std::int64_t cost(int e) const { return edges_.at(e).cost; }
  std::int64_t total_cost() const {
    std::int64_t t = 0;
    for (const Edge& e : edges_) t += e.cost;
    return t;
  }

  // (neighbor, edge id) pairs, ascending by neighbor.
  const std::vector<std::pair<int, int>>& adj(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  int edge_index(int i, int j) const {
    if (i == j) return -1;
    if (i > j) std::swap(i, j);
    const auto& nbrs = adj_[i];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), std::make_pair(j, -1));
    if (it != nbrs.end() && it->first == j) return it->second;
    return -1;
  }
  bool has_edge(int i, int j) const { return edge_index(i, j) >= 0; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Unweighted BFS hop counts from source; kUnreachable where no path exists.
inline std::vector<int> hop_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.n()) throw std::invalid_argument("hop_distances: bad source");
  std::vector<int> dist(g.n(), kUnreachable);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [u, e] : g.adj(v)) {
      (void)e;
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g, const NodeSet& s) {
  if (s.empty()) throw std::invalid_argument("is_connected: empty node set");
  std::vector<char> in_s(g.n(), 0), seen(g.n(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("is_connected: node out of range");
    in_s[v] = 1;
  }
  std::vector<int> stack{s.front()};
  seen[s.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, e] : g.adj(v)) {
      (void)e;
      if (in_s[u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == s.size();
}

// Component id per node plus component count (whole graph).
inline std::pair<std::vector<int>, int> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  int count = 0;
  for (int start = 0; start < g.n(); ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = count;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, e] : g.adj(v)) {
        (void)e;
        if (comp[u] < 0) {
          comp[u] = count;
          stack.push_back(u);
        }
      }
    }
    ++count;
  }
  return {comp, count};
}

// Cut vertices, computed per component (Tarjan lowlink).
inline NodeSet articulation_nodes(const Graph& g) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_art(n, 0);
  int timer = 0;
  // Iterative DFS; each frame tracks progress through the adjacency list.
  std::vector<std::pair<int, std::size_t>> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    int root_children = 0;
    stack.push_back({root, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < g.adj(v).size()) {
        int u = g.adj(v)[idx].first;
        ++idx;
        if (disc[u] < 0) {
          parent[u] = v;
          if (v == root) ++root_children;
          disc[u] = low[u] = timer++;
          stack.push_back({u, 0});
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().first;
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) is_art[p] = 1;
        }
      }
    }
    if (root_children > 1) is_art[root] = 1;
  }
  NodeSet out;
  for (int v = 0; v < n; ++v)
    if (is_art[v]) out.push_back(v);
  return out;
}

// True iff deleting s disconnects i from j. Preconditions are reported distinctly.
inline bool is_separator(const Graph& g, int i, int j, const NodeSet& s) {
  if (i < 0 || i >= g.n() || j < 0 || j >= g.n())
    throw std::invalid_argument("is_separator: node out of range");
  if (i == j) throw std::invalid_argument("is_separator: i == j");
  if (g.has_edge(i, j)) throw std::invalid_argument("is_separator: {i,j} is an edge");
  std::vector<char> blocked(g.n(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("is_separator: separator node out of range");
    if (v == i || v == j) throw std::invalid_argument("is_separator: separator contains i or j");
    blocked[v] = 1;
  }
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{i};
  seen[i] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, e] : g.adj(v)) {
      (void)e;
      if (blocked[u] || seen[u]) continue;
      if (u == j) return false;
      seen[u] = 1;
      stack.push_back(u);
    }
  }
  return true;
}

// Total cost of edges with both ends in s.
inline std::int64_t induced_edge_cost(const Graph& g, const NodeSet& s) {
  std::vector<char> in_s(g.n(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_edge_cost: node out of range");
    in_s[v] = 1;
  }
  std::int64_t total = 0;
  for (const Edge& e : g.edges())
    if (in_s[e.a] && in_s[e.b]) total += e.cost;
  return total;
}

struct EnumStats {
  std::uint64_t emitted = 0;
  bool complete = true;  // false when the emission limit cut the stream short
};

// Streams every connected subset with size in [min_size, max_size] exactly once
// (ESU-style extension: per root v, only nodes > v, candidates never re-enter).
// The callback may return false to stop early; that also clears `complete`.
inline EnumStats enumerate_connected_subsets(const Graph& g, int min_size, int max_size,
                                             std::uint64_t limit,
                                             const std::function<bool(const NodeSet&)>& emit) {
  if (min_size < 1 || min_size > max_size || max_size > g.n())
    throw std::invalid_argument("enumerate_connected_subsets: bad size range");
  EnumStats stats;
  const int n = g.n();
  std::vector<int> subset;
  std::vector<int> adj_count(n, 0);  // neighbors inside the current subset
  subset.reserve(max_size);

  int root = 0;
  std::function<bool(std::vector<int>&)> extend = [&](std::vector<int>& ext) -> bool {
    if (static_cast<int>(subset.size()) >= min_size) {
      if (stats.emitted >= limit) {
        stats.complete = false;
        return false;
      }
      ++stats.emitted;
      if (!emit(subset)) {
        stats.complete = false;
        return false;
      }
    }
    if (static_cast<int>(subset.size()) == max_size) return true;
    std::vector<int> local = ext;
    while (!local.empty()) {
      int w = local.front();
      local.erase(local.begin());
      std::vector<int> next = local;
      for (auto [u, e] : g.adj(w)) {
        (void)e;
        if (u > root && adj_count[u] == 0) next.push_back(u);
      }
      subset.push_back(w);
      for (auto [u, e] : g.adj(w)) {
        (void)e;
        ++adj_count[u];
      }
      bool keep_going = extend(next);
      for (auto [u, e] : g.adj(w)) {
        (void)e;
        --adj_count[u];
      }
      subset.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };

  for (root = 0; root < n; ++root) {
    subset.assign(1, root);
    for (auto [u, e] : g.adj(root)) {
      (void)e;
      ++adj_count[u];
    }
    std::vector<int> ext;
    for (auto [u, e] : g.adj(root)) {
      (void)e;
      if (u > root) ext.push_back(u);
    }
    bool keep_going = extend(ext);
    for (auto [u, e] : g.adj(root)) {
      (void)e;
      --adj_count[u];
    }
    subset.clear();
    if (!keep_going) return stats;
  }
  return stats;
}

// Convenience collector; sets `complete` false when limit was hit.
inline std::vector<NodeSet> collect_connected_subsets(const Graph& g, int min_size, int max_size,
                                                      std::uint64_t limit, bool* complete = nullptr) {
  std::vector<NodeSet> out;
  EnumStats st = enumerate_connected_subsets(g, min_size, max_size, limit,
                                             [&](const NodeSet& s) {
                                               out.push_back(s);
                                               return true;
                                             });
  if (complete) *complete = st.complete;
  std::sort(out.begin(), out.end());
  return out;
}

// Greedy farthest-point set with pairwise hop distance >= threshold.
// Seed: endpoint of a BFS-diameter pair; ties toward the lowest id.
// Unreachable pairs count as far. Used for symmetry fixings and the
// distance-based infeasibility certificate.
inline NodeSet greedy_far_set(const Graph& g, int threshold) {
  const int n = g.n();
  if (n == 0) return {};
  auto d0 = hop_distances(g, 0);
  int a = 0;
  for (int v = 1; v < n; ++v) {
    int da = d0[a] == kUnreachable ? -1 : d0[a];
    int dv = d0[v] == kUnreachable ? -1 : d0[v];
    if (d0[v] == kUnreachable) dv = n;  // other components are maximally far
    if (d0[a] == kUnreachable) da = n;
    if (dv > da) a = v;
  }
  auto da = hop_distances(g, a);
  int b = a == 0 ? (n > 1 ? 1 : 0) : 0;
  for (int v = 0; v < n; ++v) {
    if (v == a) continue;
    long dv = da[v] == kUnreachable ? n : da[v];
    long db = da[b] == kUnreachable ? n : da[b];
    if (dv > db) b = v;
  }
  const int seed = std::min(a, b);

  NodeSet chosen{seed};
  std::vector<std::vector<int>> dists{hop_distances(g, seed)};
  auto min_dist_to_chosen = [&](int v) -> long {
    long best = std::numeric_limits<long>::max();
    for (const auto& dv : dists) {
      long d = dv[v] == kUnreachable ? std::numeric_limits<long>::max() : dv[v];
      best = std::min(best, d);
    }
    return best;
  };
  while (true) {
    int pick = -1;
    long pick_d = -1;
    for (int v = 0; v < n; ++v) {
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      long d = min_dist_to_chosen(v);
      if (d > pick_d) {
        pick_d = d;
        pick = v;
      }
    }
    if (pick < 0 || pick_d < threshold) break;
    chosen.push_back(pick);
    dists.push_back(hop_distances(g, pick));
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace conpart
