#include "tourforge/tourops.hpp"

#include <algorithm>

#include "tourforge/errors.hpp"
#include "tourforge/linalg.hpp"

namespace tourforge {

namespace {

void check_row(const TourPair& p, int i) {
  if (i < 0 || i >= p.matrix.rows())
    throw LookupError("row index " + std::to_string(i) + " out of range");
}

void check_col(const TourPair& p, int j) {
  if (j < 0 || j >= p.matrix.cols())
    throw LookupError("column index " + std::to_string(j) + " out of range");
}

void flip_edge_labels(BidirectedGraph& g, int edge_id) {
  for (auto& end : g.edge_mut(edge_id).ends) end.label = -end.label;
}

int smallest_node(const BidirectedGraph& g) {
  int best = -1;
  for (int v : g.nodes())
    if (best < 0 || v < best) best = v;
  return best;
}

}  // namespace

TourPair negate_row(const TourPair& p, int i) {
  check_row(p, i);
  TourPair out = p;
  flip_edge_labels(out.rep.graph, out.rep.prime[i]);
  for (int j = 0; j < out.matrix.cols(); ++j)
    out.matrix.at(i, j) = -out.matrix.at(i, j);
  return out;
}

TourPair negate_col(const TourPair& p, int j) {
  check_col(p, j);
  TourPair out = p;
  flip_edge_labels(out.rep.graph, out.rep.nonprime[j]);
  for (int i = 0; i < out.matrix.rows(); ++i)
    out.matrix.at(i, j) = -out.matrix.at(i, j);
  return out;
}

TourPair duplicate_col(const TourPair& p, int j) {
  check_col(p, j);
  TourPair out = p;
  Edge copy = out.rep.graph.edge(out.rep.nonprime[j]);
  copy.id = out.rep.graph.fresh_edge_id();
  out.rep.graph.add_edge(copy);
  out.rep.nonprime.push_back(copy.id);
  out.matrix = out.matrix.with_col_appended(p.matrix.col(j));
  return out;
}

TourPair duplicate_row(const TourPair& p, int i) {
  check_row(p, i);
  TourPair out = p;
  BidirectedGraph& g = out.rep.graph;
  int f_id = out.rep.prime[i];
  Edge f = g.edge(f_id);
  int fresh_edge = g.fresh_edge_id();

  switch (f.kind()) {
    case EdgeKind::Loop: {
      int s = f.ends[0].node;
      int q = f.ends[0].label;
      if (f.is_positive()) {
        // Positive loop: another zero column, no new node needed.
        g.add_edge(Edge{fresh_edge, {{s, 1}, {s, -1}}});
        break;
      }
      // Negative loop at s: stretch the loop into a negative link to a
      // fresh node and add a positive link alongside it.
      int t = g.fresh_node_id();
      g.add_node(t);
      g.edge_mut(f_id).ends = {{s, q}, {t, q}};
      g.add_edge(Edge{fresh_edge, {{s, q}, {t, -q}}});
      break;
    }
    case EdgeKind::Link: {
      int s = std::min(f.ends[0].node, f.ends[1].node);
      int q = f.ends[0].node == s ? f.ends[0].label : f.ends[1].label;
      int t = g.fresh_node_id();
      g.add_node(t);
      // Every end at s except the one on f migrates to the fresh node.
      for (auto& e : g.edges_mut()) {
        if (e.id == f_id) continue;
        for (auto& end : e.ends)
          if (end.node == s) end.node = t;
      }
      g.add_edge(Edge{fresh_edge, {{s, -q}, {t, q}}});
      break;
    }
    case EdgeKind::HalfEdge: {
      int s = f.ends[0].node;
      int q = f.ends[0].label;
      int t = g.fresh_node_id();
      g.add_node(t);
      // The half-edge relocates to the fresh node; a positive link ties
      // the two nodes together.
      g.edge_mut(f_id).ends = {{t, q}};
      g.add_edge(Edge{fresh_edge, {{s, q}, {t, -q}}});
      break;
    }
    case EdgeKind::LooseEdge:
      throw OperandError("cannot duplicate the row of a loose prime edge");
  }

  out.rep.prime.push_back(fresh_edge);
  out.matrix = out.matrix.with_row_appended(p.matrix.row(i));
  return out;
}

TourPair delete_col(const TourPair& p, int j) {
  check_col(p, j);
  TourPair out = p;
  out.rep.graph.remove_edge(out.rep.nonprime[j]);
  out.rep.nonprime.erase(out.rep.nonprime.begin() + j);
  out.matrix = out.matrix.with_col_removed(j);
  return out;
}

TourPair delete_row(const TourPair& p, int i) {
  check_row(p, i);
  TourPair out = p;
  int f_id = out.rep.prime[i];
  Edge f = out.rep.graph.edge(f_id);

  switch (f.kind()) {
    case EdgeKind::LooseEdge:
      out.rep.graph.remove_edge(f_id);
      break;
    case EdgeKind::Loop:
      if (f.is_positive()) {
        out.rep.graph.remove_edge(f_id);
        break;
      } else {
        // Negative loop: its node disappears. Links at the node keep their
        // other end as half-edges; loops and half-edges there turn into
        // zero columns, kept as positive loops at the smallest surviving
        // node.
        int v = f.ends[0].node;
        BidirectedGraph g = delete_edge(out.rep.graph, f_id);
        std::vector<int> zeroed;
        for (const auto& e : g.edges()) {
          if (e.is_link()) continue;
          if (!e.ends.empty() && e.ends[0].node == v) zeroed.push_back(e.id);
        }
        g = delete_node(g, v);
        int home = smallest_node(g);
        for (int id : zeroed) {
          if (home >= 0)
            g.edge_mut(id).ends = {{home, 1}, {home, -1}};
          else
            g.edge_mut(id).ends = {};
        }
        out.rep.graph = g;
        break;
      }
    case EdgeKind::HalfEdge: {
      int s = f.ends[0].node;
      out.rep.graph = delete_node(delete_edge(out.rep.graph, f_id), s);
      break;
    }
    case EdgeKind::Link:
      out.rep.graph = contract_edge(out.rep.graph, f_id);
      break;
  }

  out.rep.prime.erase(out.rep.prime.begin() + i);
  out.matrix = out.matrix.with_row_removed(i);
  return out;
}

TourPair pivot_rep(const TourPair& p, int i, int j) {
  check_row(p, i);
  check_col(p, j);
  const Rational& v = p.matrix.at(i, j);
  if (v != 1 && v != -1)
    throw PivotError("pivot entry (" + std::to_string(i) + "," +
                     std::to_string(j) + ") is " + rat_to_string(v) +
                     ", not +-1");
  if (v == -1) return negate_row(pivot_rep(negate_row(p, i), i, j), i);

  TourPair out = p;
  int f_id = out.rep.prime[i];
  int e_id = out.rep.nonprime[j];
  flip_edge_labels(out.rep.graph, f_id);
  out.rep.prime[i] = e_id;
  out.rep.nonprime[j] = f_id;
  out.matrix = pivot_real(p.matrix, i, j);
  return out;
}

namespace {

void check_perm(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n)
    throw ShapeError("permutation length " + std::to_string(perm.size()) +
                     " does not match dimension " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw StructureError("invalid permutation");
    seen[v] = true;
  }
}

}  // namespace

TourPair permute_rows(const TourPair& p, const std::vector<int>& perm) {
  check_perm(perm, p.matrix.rows());
  TourPair out = p;
  for (std::size_t k = 0; k < perm.size(); ++k)
    out.rep.prime[k] = p.rep.prime[perm[k]];
  out.matrix = p.matrix.permuted_rows(perm);
  return out;
}

TourPair permute_cols(const TourPair& p, const std::vector<int>& perm) {
  check_perm(perm, p.matrix.cols());
  TourPair out = p;
  for (std::size_t k = 0; k < perm.size(); ++k)
    out.rep.nonprime[k] = p.rep.nonprime[perm[k]];
  out.matrix = p.matrix.permuted_cols(perm);
  return out;
}

}  // namespace tourforge
