#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conpart/instance.hpp"
#include "conpart/milp.hpp"

namespace conpart {

inline std::string tag2(const char* head, int a, int b) {
  return std::string(head) + "_" + std::to_string(a) + "_" + std::to_string(b);
}
inline std::string tag3(const char* head, int a, int b, int c) {
  return tag2(head, a, b) + "_" + std::to_string(c);
}

// Aggregate capacity for the shared flow rows of M1. All commodities of a
// cluster cross an edge at once; routing every pair demand over a spanning
// tree of a block with s nodes loads one edge with at most
// 2*(floor(s/2)*ceil(s/2) - 1) units, which exceeds beta once beta >= 4
// (e.g. a path-shaped block of size 4 needs 6 units over its middle edge).
inline double m1_flow_capacity(int beta) {
  double paired = 2.0 * ((beta / 2) * ((beta + 1) / 2) - 1);
  return std::max<double>(beta, paired);
}

struct BuiltModel {
  MilpModel model;
  VarIndex index;
};

// Formulation with per-cluster edge variables and one flow commodity per
// (source node, cluster): y assignment, x/xbar linking, shared capacities,
// per-commodity conservation, cluster size floors.
inline BuiltModel build_m1(const Instance& inst) {
  if (precheck(inst).infeasible())
    throw std::invalid_argument("build_m1: instance fails feasibility precheck");
  const Graph& g = inst.graph;
  const int n = g.n(), k = inst.k, m = g.m();
  const int beta = inst.beta();
  BuiltModel out;
  MilpModel& mdl = out.model;
  VarIndex& ix = out.index;
  ix.kind = ModelKind::M1;
  ix.n = n;
  ix.k = k;
  ix.m = m;

  ix.y_base = 0;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < k; ++c) mdl.add_var(0, 1, true, 0.0, tag2("y", i, c));
  ix.x_base = mdl.num_vars();
  for (int e = 0; e < m; ++e)
    for (int c = 0; c < k; ++c)
      mdl.add_var(0, 1, true, static_cast<double>(g.cost(e)), tag2("x", e, c));
  ix.xbar_base = mdl.num_vars();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) ix.non_edges.push_back({i, j});
  ix.finish_non_edges();
  for (int q = 0; q < ix.p; ++q)
    for (int c = 0; c < k; ++c)
      mdl.add_var(0, 1, true, 0.0,
                  tag3("xb", ix.non_edges[q].first, ix.non_edges[q].second, c));
  ix.flow_base = mdl.num_vars();
  for (int l = 0; l < n; ++l)
    for (int c = 0; c < k; ++c)
      for (int e = 0; e < m; ++e)
        for (int dir = 0; dir < 2; ++dir)
          mdl.add_var(0, beta, false, 0.0,
                      "f_" + std::to_string(l) + "_" + std::to_string(c) + "_" +
                          std::to_string(e) + "_" + std::to_string(dir));

  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, double>> row;
    for (int c = 0; c < k; ++c) row.push_back({ix.y(i, c), 1.0});
    mdl.add_row(std::move(row), RowSense::EQ, 1.0, "asg_" + std::to_string(i));
  }
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    for (int c = 0; c < k; ++c) {
      mdl.add_row({{ix.y(ed.a, c), 1.0}, {ix.y(ed.b, c), 1.0}, {ix.x_edge(e, c), -1.0}},
                  RowSense::LE, 1.0, tag2("lnkx1", e, c));
      mdl.add_row({{ix.y(ed.a, c), 1.0}, {ix.y(ed.b, c), 1.0}, {ix.x_edge(e, c), -2.0}},
                  RowSense::GE, 0.0, tag2("lnkx2", e, c));
    }
  }
  for (int q = 0; q < ix.p; ++q) {
    auto [i, j] = ix.non_edges[q];
    for (int c = 0; c < k; ++c) {
      mdl.add_row({{ix.y(i, c), 1.0}, {ix.y(j, c), 1.0}, {ix.xbar(q, c), -1.0}}, RowSense::LE,
                  1.0, tag2("lnkb1", q, c));
      mdl.add_row({{ix.y(i, c), 1.0}, {ix.y(j, c), 1.0}, {ix.xbar(q, c), -2.0}}, RowSense::GE,
                  0.0, tag2("lnkb2", q, c));
    }
  }
  const double cap = m1_flow_capacity(beta);
  for (int e = 0; e < m; ++e) {
    for (int c = 0; c < k; ++c) {
      std::vector<std::pair<int, double>> row;
      for (int l = 0; l < n; ++l) {
        row.push_back({ix.flow_m1(l, c, e, 0), 1.0});
        row.push_back({ix.flow_m1(l, c, e, 1), 1.0});
      }
      row.push_back({ix.x_edge(e, c), -cap});
      mdl.add_row(std::move(row), RowSense::LE, 0.0, tag2("cap", e, c));
    }
  }
  // Conservation of commodity (l,c) at node j. Arc dir 0 runs a->b.
  for (int l = 0; l < n; ++l) {
    for (int c = 0; c < k; ++c) {
      for (int j = 0; j < n; ++j) {
        std::vector<std::pair<int, double>> row;
        for (auto [u, e] : g.adj(j)) {
          (void)u;
          int dir_in = g.edge(e).b == j ? 0 : 1;
          row.push_back({ix.flow_m1(l, c, e, dir_in), 1.0});
          row.push_back({ix.flow_m1(l, c, e, 1 - dir_in), -1.0});
        }
        if (j == l) {
          for (int i = 0; i < n; ++i) {
            if (i == l || g.has_edge(l, i)) continue;
            row.push_back({ix.xbar(ix.non_edge_index(l, i), c), 1.0});
          }
          mdl.add_row(std::move(row), RowSense::EQ, 0.0, tag3("flw", l, c, j));
        } else if (g.has_edge(l, j)) {
          mdl.add_row(std::move(row), RowSense::EQ, 0.0, tag3("flw", l, c, j));
        } else {
          row.push_back({ix.xbar(ix.non_edge_index(l, j), c), -1.0});
          mdl.add_row(std::move(row), RowSense::EQ, 0.0, tag3("flw", l, c, j));
        }
      }
    }
  }
  for (int c = 0; c < k; ++c) {
    std::vector<std::pair<int, double>> row;
    for (int i = 0; i < n; ++i) row.push_back({ix.y(i, c), 1.0});
    mdl.add_row(std::move(row), RowSense::GE, inst.alpha, "size_" + std::to_string(c));
  }
  return out;
}

// Formulation on the k-augmented graph: one artificial root per cluster,
// a single shared flow, cross-cluster exclusion per ordered cluster pair.
// Arcs into artificial nodes are omitted (nothing consumes them).
inline BuiltModel build_m2(const Instance& inst) {
  if (precheck(inst).infeasible())
    throw std::invalid_argument("build_m2: instance fails feasibility precheck");
  const Graph& g = inst.graph;
  const int n = g.n(), k = inst.k, m = g.m();
  const int beta = inst.beta();
  BuiltModel out;
  MilpModel& mdl = out.model;
  VarIndex& ix = out.index;
  ix.kind = ModelKind::M2;
  ix.n = n;
  ix.k = k;
  ix.m = m;

  ix.y_base = 0;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < k; ++c) mdl.add_var(0, 1, true, 0.0, tag2("y", i, c));
  ix.x_base = mdl.num_vars();
  for (int e = 0; e < m; ++e)
    mdl.add_var(0, 1, true, static_cast<double>(g.cost(e)), "x_" + std::to_string(e));
  for (int a = 0; a < k; ++a)
    for (int j = 0; j < n; ++j) mdl.add_var(0, 1, true, 0.0, tag2("xa", a, j));
  ix.flow_base = mdl.num_vars();
  for (int e = 0; e < m; ++e)
    for (int dir = 0; dir < 2; ++dir) mdl.add_var(0, beta, false, 0.0, tag2("f", e, dir));
  for (int a = 0; a < k; ++a)
    for (int j = 0; j < n; ++j) mdl.add_var(0, beta, false, 0.0, tag2("fa", a, j));

  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, double>> row;
    for (int c = 0; c < k; ++c) row.push_back({ix.y(i, c), 1.0});
    mdl.add_row(std::move(row), RowSense::EQ, 1.0, "asg_" + std::to_string(i));
  }
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    for (int c = 0; c < k; ++c)
      mdl.add_row({{ix.y(ed.a, c), 1.0}, {ix.y(ed.b, c), 1.0}, {ix.x_edge(e), -1.0}},
                  RowSense::LE, 1.0, tag2("lnk", e, c));
    for (int c = 0; c < k; ++c) {
      for (int l = 0; l < k; ++l) {
        if (c == l) continue;
        mdl.add_row({{ix.y(ed.a, c), 1.0}, {ix.y(ed.b, l), 1.0}, {ix.x_edge(e), 1.0}},
                    RowSense::LE, 2.0, "xcl_" + std::to_string(e) + "_" + std::to_string(c) +
                                           "_" + std::to_string(l));
      }
    }
  }
  for (int a = 0; a < k; ++a) {
    std::vector<std::pair<int, double>> row;
    for (int j = 0; j < n; ++j) row.push_back({ix.x_art(a, j), 1.0});
    mdl.add_row(std::move(row), RowSense::EQ, 1.0, "root_" + std::to_string(a));
  }
  for (int a = 0; a < k; ++a) {
    std::vector<std::pair<int, double>> row;
    for (int j = 0; j < n; ++j) row.push_back({ix.flow_art(a, j), 1.0});
    for (int j = 0; j < n; ++j) row.push_back({ix.y(j, a), -1.0});
    mdl.add_row(std::move(row), RowSense::EQ, 0.0, "supply_" + std::to_string(a));
  }
  for (int j = 0; j < n; ++j) {
    std::vector<std::pair<int, double>> row;
    for (auto [u, e] : g.adj(j)) {
      (void)u;
      int dir_in = g.edge(e).b == j ? 0 : 1;
      row.push_back({ix.flow_real(e, dir_in), 1.0});
      row.push_back({ix.flow_real(e, 1 - dir_in), -1.0});
    }
    for (int a = 0; a < k; ++a) row.push_back({ix.flow_art(a, j), 1.0});
    mdl.add_row(std::move(row), RowSense::EQ, 1.0, "cons_" + std::to_string(j));
  }
  for (int e = 0; e < m; ++e)
    mdl.add_row({{ix.flow_real(e, 0), 1.0}, {ix.flow_real(e, 1), 1.0},
                 {ix.x_edge(e), -static_cast<double>(beta)}},
                RowSense::LE, 0.0, "cap_" + std::to_string(e));
  for (int a = 0; a < k; ++a) {
    for (int j = 0; j < n; ++j) {
      mdl.add_row({{ix.flow_art(a, j), 1.0}, {ix.x_art(a, j), -static_cast<double>(inst.alpha)}},
                  RowSense::GE, 0.0, tag2("alo", a, j));
      mdl.add_row({{ix.flow_art(a, j), 1.0}, {ix.x_art(a, j), -static_cast<double>(beta)}},
                  RowSense::LE, 0.0, tag2("ahi", a, j));
    }
  }
  return out;
}

inline BuiltModel build_model(const Instance& inst, ModelKind kind) {
  return kind == ModelKind::M1 ? build_m1(inst) : build_m2(inst);
}

}  // namespace conpart
