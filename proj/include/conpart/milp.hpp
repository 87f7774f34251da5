#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace conpart {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense : char { LE = 'L', EQ = 'E', GE = 'G' };

struct MilpVar {
  double lb = 0.0;
  double ub = kInf;
  bool integral = false;
  double obj = 0.0;
  std::string name;
};

struct MilpRow {
  std::vector<std::pair<int, double>> coeffs;  // (var id, coefficient)
  RowSense sense = RowSense::LE;
  double rhs = 0.0;
  std::string name;
};

// Sparse minimization MILP. Rows reference variables by id; bounds are kept
// on the variables, integrality as a flag.
struct MilpModel {
  std::vector<MilpVar> vars;
  std::vector<MilpRow> rows;

  int add_var(double lb, double ub, bool integral, double obj, std::string name) {
    if (lb > ub) throw std::invalid_argument("milp: lb > ub for " + name);
    vars.push_back({lb, ub, integral, obj, std::move(name)});
    return static_cast<int>(vars.size()) - 1;
  }

  int add_row(std::vector<std::pair<int, double>> coeffs, RowSense sense, double rhs,
              std::string name) {
    for (auto& [v, c] : coeffs) {
      (void)c;
      if (v < 0 || v >= static_cast<int>(vars.size()))
        throw std::invalid_argument("milp: row references unknown variable in " + name);
    }
    rows.push_back({std::move(coeffs), sense, rhs, std::move(name)});
    return static_cast<int>(rows.size()) - 1;
  }

  int num_vars() const { return static_cast<int>(vars.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  // Tighten a variable to a single value. Returns false when the value is
  // outside the current bounds (the fixing proves infeasibility).
  bool fix_var(int v, double value) {
    MilpVar& var = vars.at(v);
    if (value < var.lb - 1e-9 || value > var.ub + 1e-9) return false;
    var.lb = var.ub = value;
    return true;
  }
};

struct Violation {
  int row;
  double amount;
};

struct EvalResult {
  double objective = 0.0;
  std::vector<Violation> violated;  // rows broken by more than tol
  std::vector<int> bound_violations;

  bool feasible() const { return violated.empty() && bound_violations.empty(); }
};

// Row-by-row check of a full assignment (one value per variable).
inline EvalResult evaluate(const MilpModel& model, const std::vector<double>& assignment,
                           double tol = 1e-6) {
  if (assignment.size() != model.vars.size())
    throw std::invalid_argument("evaluate: assignment must cover all variables");
  EvalResult res;
  for (int v = 0; v < model.num_vars(); ++v) {
    const MilpVar& var = model.vars[v];
    double x = assignment[v];
    if (std::isnan(x)) throw std::invalid_argument("evaluate: missing value for " + var.name);
    res.objective += var.obj * x;
    if (x < var.lb - tol || x > var.ub + tol) res.bound_violations.push_back(v);
  }
  for (int r = 0; r < model.num_rows(); ++r) {
    const MilpRow& row = model.rows[r];
    double lhs = 0.0;
    for (auto [v, c] : row.coeffs) lhs += c * assignment[v];
    double slack = lhs - row.rhs;
    bool bad = (row.sense == RowSense::LE && slack > tol) ||
               (row.sense == RowSense::GE && slack < -tol) ||
               (row.sense == RowSense::EQ && std::abs(slack) > tol);
    if (bad) res.violated.push_back({r, slack});
  }
  return res;
}

// Bidirectional map between semantic variable names and model ids, built by
// the M1/M2 constructors via plain offset arithmetic.
enum class ModelKind { M1, M2 };

class VarIndex {
 public:
  ModelKind kind = ModelKind::M1;
  int n = 0, k = 0, m = 0, p = 0;  // nodes, clusters, edges, non-edge pairs

  // Block offsets into the variable array.
  int y_base = 0, x_base = 0, xbar_base = 0, flow_base = 0;

  // Non-edge pair list (i<j), shared by M1's xbar block and the cut code.
  std::vector<std::pair<int, int>> non_edges;

  int y(int i, int c) const { return y_base + i * k + c; }

  // M1: per-cluster edge variable. M2: per-edge variable (c ignored).
  int x_edge(int e, int c = 0) const {
    return kind == ModelKind::M1 ? x_base + e * k + c : x_base + e;
  }

  // M2 only: artificial edge {root a, real node j}; a in [0,k).
  int x_art(int a, int j) const { return x_base + m + a * n + j; }

  // M1 only: same-cluster indicator for non-edge pair p.
  int xbar(int pair, int c) const { return xbar_base + pair * k + c; }

  // M1: flow on arc (dir 0: a->b, dir 1: b->a) of edge e, commodity (l, c).
  int flow_m1(int l, int c, int e, int dir) const {
    return flow_base + ((l * k + c) * m + e) * 2 + dir;
  }

  // M2: flow on real arc (dir 0: a->b, 1: b->a).
  int flow_real(int e, int dir) const { return flow_base + e * 2 + dir; }
  // M2: flow on artificial arc a->j (arcs into artificial nodes are omitted).
  int flow_art(int a, int j) const { return flow_base + 2 * m + a * n + j; }

  int non_edge_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = non_edge_lookup_.find(static_cast<std::int64_t>(i) * n + j);
    return it == non_edge_lookup_.end() ? -1 : it->second;
  }

  void finish_non_edges() {
    for (int q = 0; q < static_cast<int>(non_edges.size()); ++q)
      non_edge_lookup_[static_cast<std::int64_t>(non_edges[q].first) * n + non_edges[q].second] = q;
    p = static_cast<int>(non_edges.size());
  }

 private:
  std::unordered_map<std::int64_t, int> non_edge_lookup_;
};

}  // namespace conpart
