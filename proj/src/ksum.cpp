#include "tourforge/ksum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tourforge/errors.hpp"
#include "tourforge/linalg.hpp"

namespace tourforge {

RatMatrix matrix_1sum(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

RatMatrix matrix_2sum(const RatMatrix& left, const RatMatrix& right) {
  if (left.cols() < 1)
    throw OperandError("left 2-sum operand needs a connector column");
  if (right.rows() < 1)
    throw OperandError("right 2-sum operand needs a connector row");
  int ma = left.rows(), na = left.cols() - 1;
  int mb = right.rows() - 1, nb = right.cols();
  RatMatrix out(ma + mb, na + nb);
  for (int i = 0; i < ma; ++i) {
    for (int j = 0; j < na; ++j) out.at(i, j) = left.at(i, j);
    for (int j = 0; j < nb; ++j)
      out.at(i, na + j) = left.at(i, na) * right.at(0, j);
  }
  for (int i = 0; i < mb; ++i)
    for (int j = 0; j < nb; ++j) out.at(ma + i, na + j) = right.at(1 + i, j);
  return out;
}

RatMatrix matrix_3sum(const RatMatrix& left, const RatMatrix& right) {
  int ml = left.rows(), nl = left.cols();
  int mr = right.rows(), nr = right.cols();
  if (ml < 2 || nl < 2)
    throw OperandError(
        "left 3-sum operand needs at least 2 rows and 2 columns");
  if (mr < 2 || nr < 2)
    throw OperandError(
        "right 3-sum operand needs at least 2 rows and 2 columns");
  for (int i = 0; i + 1 < ml; ++i)
    if (left.at(i, nl - 2) != left.at(i, nl - 1))
      throw OperandError("left connector columns differ in row " +
                         std::to_string(i));
  if (left.at(ml - 1, nl - 2) != 0 || left.at(ml - 1, nl - 1) != 1)
    throw OperandError(
        "left connector row must end in 0, 1 under the connector columns");
  if (right.at(0, 0) != 1 || right.at(0, 1) != 0)
    throw OperandError(
        "right connector row must start with 1, 0 over the connector "
        "columns");
  for (int i = 1; i < mr; ++i)
    if (right.at(i, 0) != right.at(i, 1))
      throw OperandError("right connector columns differ in row " +
                         std::to_string(i));

  int ma = ml - 1, na = nl - 2, mb = mr - 1, nb = nr - 2;
  RatMatrix out(ma + mb, na + nb);
  for (int i = 0; i < ma; ++i) {
    for (int j = 0; j < na; ++j) out.at(i, j) = left.at(i, j);
    for (int j = 0; j < nb; ++j)
      out.at(i, na + j) = left.at(i, nl - 2) * right.at(0, 2 + j);
  }
  for (int i = 0; i < mb; ++i) {
    for (int j = 0; j < na; ++j)
      out.at(ma + i, j) = right.at(1 + i, 0) * left.at(ml - 1, j);
    for (int j = 0; j < nb; ++j)
      out.at(ma + i, na + j) = right.at(1 + i, 2 + j);
  }
  return out;
}

namespace {

RatMatrix alt_connector_block(const RatMatrix& left, const RatMatrix& right,
                              const RatMatrix& dbar) {
  if (dbar.rows() != 2 || dbar.cols() != 2)
    throw OperandError("connector matrix dbar must be 2x2");
  if (det(dbar) == 0)
    throw OperandError("connector matrix dbar is singular");
  int ma = left.rows() - 2, na = left.cols() - 1;
  int mb = right.rows() - 1;
  RatMatrix ad(mb, 2);
  for (int i = 0; i < mb; ++i) {
    ad.at(i, 0) = right.at(1 + i, 0);
    ad.at(i, 1) = right.at(1 + i, 1);
  }
  RatMatrix bc(2, na);
  for (int j = 0; j < na; ++j) {
    bc.at(0, j) = left.at(ma, j);
    bc.at(1, j) = left.at(ma + 1, j);
  }
  return ad * inverse(dbar) * bc;
}

}  // namespace

RatMatrix matrix_3sum_alt(const RatMatrix& left, const RatMatrix& right,
                          const RatMatrix& dbar) {
  int ml = left.rows(), nl = left.cols();
  int mr = right.rows(), nr = right.cols();
  if (ml < 3 || nl < 2)
    throw OperandError(
        "left rank-two 3-sum operand needs at least 3 rows and 2 columns");
  if (mr < 2 || nr < 3)
    throw OperandError(
        "right rank-two 3-sum operand needs at least 2 rows and 3 columns");
  for (int i = 0; i + 2 < ml; ++i)
    if (left.at(i, nl - 1) != 0)
      throw OperandError("left connector column must vanish above row " +
                         std::to_string(ml - 2));
  if (left.at(ml - 2, nl - 1) != 1 || left.at(ml - 1, nl - 1) != 1)
    throw OperandError("left connector column must end in 1, 1");
  if (right.at(0, 0) != 1 || right.at(0, 1) != 1)
    throw OperandError("right connector row must start with 1, 1");
  for (int j = 2; j < nr; ++j)
    if (right.at(0, j) != 0)
      throw OperandError("right connector row must vanish past column 1");

  RatMatrix d = alt_connector_block(left, right, dbar);
  int ma = ml - 2, na = nl - 1, mb = mr - 1, nb = nr - 2;
  RatMatrix out(ma + mb, na + nb);
  for (int i = 0; i < ma; ++i)
    for (int j = 0; j < na; ++j) out.at(i, j) = left.at(i, j);
  for (int i = 0; i < mb; ++i) {
    for (int j = 0; j < na; ++j) out.at(ma + i, j) = d.at(i, j);
    for (int j = 0; j < nb; ++j)
      out.at(ma + i, na + j) = right.at(1 + i, 2 + j);
  }
  return out;
}

namespace {

std::map<int, Rational> edge_column(const BidirectedGraph& g, int edge_id) {
  std::map<int, Rational> col;
  for (const auto& end : g.edge(edge_id).ends) col[end.node] += end.label;
  for (auto it = col.begin(); it != col.end();)
    it = it->second == 0 ? col.erase(it) : std::next(it);
  return col;
}

Rational col_value(const std::map<int, Rational>& col, int node) {
  auto it = col.find(node);
  return it == col.end() ? Rational(0) : it->second;
}

struct LeftConnectors {
  int e1, e2, e3;  // (a;0) column, (a;1) column, (c,0,1) row
};

struct RightConnectors {
  int f1, f2, f3;  // (1;d) column, (0;d) column, (1,0,b) row
};

LeftConnectors left_connectors(const TourPair& p) {
  std::size_t n = p.rep.nonprime.size(), m = p.rep.prime.size();
  if (n < 2 || m < 1)
    throw OperandError("left operand lacks connector edges");
  return {p.rep.nonprime[n - 2], p.rep.nonprime[n - 1], p.rep.prime[m - 1]};
}

RightConnectors right_connectors(const TourPair& p) {
  if (p.rep.nonprime.size() < 2 || p.rep.prime.empty())
    throw OperandError("right operand lacks connector edges");
  return {p.rep.nonprime[0], p.rep.nonprime[1], p.rep.prime[0]};
}

void check_pair_shape(const TourPair& p, const char* side) {
  if (static_cast<int>(p.rep.prime.size()) != p.matrix.rows() ||
      static_cast<int>(p.rep.nonprime.size()) != p.matrix.cols())
    throw ShapeError(std::string(side) +
                     " representation does not match its matrix dimensions");
}

// Searches for a node identification and switchings under which the left
// connector columns (e3, e1) equal the right connector columns (f2, f3);
// the third pair then matches automatically. On success the graphs are
// glued: connector edges drop out, matched nodes merge keeping left ids,
// and the remaining right ids are remapped to fresh values.
std::optional<TourPair> try_glue_3sum(const TourPair& left,
                                      const TourPair& right) {
  auto lc = left_connectors(left);
  auto rc = right_connectors(right);
  const BidirectedGraph& gl = left.rep.graph;
  const BidirectedGraph& gr = right.rep.graph;

  auto col_l1 = edge_column(gl, lc.e1), col_l3 = edge_column(gl, lc.e3);
  auto col_r2 = edge_column(gr, rc.f2), col_r3 = edge_column(gr, rc.f3);

  std::set<int> ls_set, rs_set;
  for (auto& [v, _] : col_l1) ls_set.insert(v);
  for (auto& [v, _] : col_l3) ls_set.insert(v);
  for (auto& [v, _] : col_r2) rs_set.insert(v);
  for (auto& [v, _] : col_r3) rs_set.insert(v);
  if (ls_set.size() != rs_set.size() || ls_set.size() > 3)
    return std::nullopt;

  std::vector<int> ls(ls_set.begin(), ls_set.end());
  std::vector<int> rs(rs_set.begin(), rs_set.end());
  int n = static_cast<int>(ls.size());

  std::vector<int> perm = rs;
  std::sort(perm.begin(), perm.end());
  do {
    for (int wl = 0; wl < (1 << n); ++wl) {
      for (int wr = 0; wr < (1 << n); ++wr) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          int sl = (wl >> i) & 1 ? -1 : 1;
          int sr = (wr >> i) & 1 ? -1 : 1;
          if (sl * col_value(col_l3, ls[i]) !=
                  sr * col_value(col_r2, perm[i]) ||
              sl * col_value(col_l1, ls[i]) !=
                  sr * col_value(col_r3, perm[i]))
            ok = false;
        }
        if (!ok) continue;

        BidirectedGraph wgl = gl, wgr = gr;
        for (int i = 0; i < n; ++i) {
          if ((wl >> i) & 1) wgl = switch_node(wgl, ls[i]);
          if ((wr >> i) & 1) wgr = switch_node(wgr, perm[i]);
        }
        wgl.remove_edge(lc.e1);
        wgl.remove_edge(lc.e2);
        wgl.remove_edge(lc.e3);
        wgr.remove_edge(rc.f1);
        wgr.remove_edge(rc.f2);
        wgr.remove_edge(rc.f3);

        std::map<int, int> nmap;
        for (int i = 0; i < n; ++i) nmap[perm[i]] = ls[i];
        int next_node = gl.fresh_node_id();
        for (int v : wgr.nodes())
          if (!nmap.count(v)) nmap[v] = next_node++;
        std::map<int, int> emap;
        int next_edge = gl.fresh_edge_id();
        for (const auto& e : wgr.edges()) emap[e.id] = next_edge++;

        BidirectedGraph g = wgl;
        for (int v : wgr.nodes())
          if (!g.has_node(nmap[v])) g.add_node(nmap[v]);
        for (const auto& e : wgr.edges()) {
          Edge copy = e;
          copy.id = emap[e.id];
          for (auto& end : copy.ends) end.node = nmap[end.node];
          g.add_edge(std::move(copy));
        }

        TourRepresentation rep;
        rep.graph = std::move(g);
        rep.prime.assign(left.rep.prime.begin(), left.rep.prime.end() - 1);
        for (std::size_t i = 1; i < right.rep.prime.size(); ++i)
          rep.prime.push_back(emap.at(right.rep.prime[i]));
        rep.nonprime.assign(left.rep.nonprime.begin(),
                            left.rep.nonprime.end() - 2);
        for (std::size_t i = 2; i < right.rep.nonprime.size(); ++i)
          rep.nonprime.push_back(emap.at(right.rep.nonprime[i]));

        return TourPair{std::move(rep),
                        matrix_3sum(left.matrix, right.matrix)};
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

void link_to_loop(BidirectedGraph& g, int edge_id) {
  Edge e = g.edge(edge_id);
  if (!e.is_positive()) {
    // A switching makes the link positive without changing the matrix.
    g = switch_node(g, e.ends[0].node);
    e = g.edge(edge_id);
  }
  int keep = std::min(e.ends[0].node, e.ends[1].node);
  int gone = std::max(e.ends[0].node, e.ends[1].node);
  g = merge_nodes(switch_node(g, keep), keep, gone);
}

// When one side is made of links where the other side has loops or
// half-edges, transfer the kinds: a positive link paired with a negative
// loop is merged into a loop, and the shared node of two links paired with
// half-edges is deleted. The represented matrices are unchanged.
bool align_connector_kinds(TourPair& l, TourPair& r) {
  auto lc = left_connectors(l);
  auto rc = right_connectors(r);
  const std::pair<int, int> slots[3] = {
      {lc.e3, rc.f2}, {lc.e1, rc.f3}, {lc.e2, rc.f1}};
  bool changed = false;

  for (auto [lid, rid] : slots) {
    Edge le = l.rep.graph.edge(lid);
    Edge re = r.rep.graph.edge(rid);
    if (re.is_loop() && !re.is_positive() && le.is_link()) {
      link_to_loop(l.rep.graph, lid);
      changed = true;
    } else if (le.is_loop() && !le.is_positive() && re.is_link()) {
      link_to_loop(r.rep.graph, rid);
      changed = true;
    }
  }

  std::vector<int> left_links, right_links;
  for (auto [lid, rid] : slots) {
    Edge le = l.rep.graph.edge(lid);
    Edge re = r.rep.graph.edge(rid);
    if (re.is_half_edge() && le.is_link()) left_links.push_back(lid);
    if (le.is_half_edge() && re.is_link()) right_links.push_back(rid);
  }
  auto drop_shared_node = [&](TourPair& side, const std::vector<int>& ids) {
    if (ids.size() != 2) return false;
    Edge a = side.rep.graph.edge(ids[0]);
    Edge b = side.rep.graph.edge(ids[1]);
    std::vector<int> shared;
    for (const auto& ea : a.ends)
      for (const auto& eb : b.ends)
        if (ea.node == eb.node) shared.push_back(ea.node);
    std::sort(shared.begin(), shared.end());
    shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
    if (shared.empty()) return false;
    side.rep.graph = delete_node(side.rep.graph, shared.back());
    return true;
  };
  if (drop_shared_node(l, left_links)) changed = true;
  if (drop_shared_node(r, right_links)) changed = true;
  return changed;
}

}  // namespace

TourPair normalize_connecting(const TourPair& p, int x1, int x2, int x3) {
  const BidirectedGraph& g = p.rep.graph;
  auto c1 = edge_column(g, x1), c2 = edge_column(g, x2), c3 = edge_column(g, x3);
  {
    std::map<int, Rational> sum = c2;
    for (auto& [v, val] : c3) sum[v] += val;
    for (auto it = sum.begin(); it != sum.end();)
      it = it->second == 0 ? sum.erase(it) : std::next(it);
    if (sum != c1)
      throw StructureError(
          "connector identity col(x1) = col(x2) + col(x3) does not hold");
  }
  auto pos_in = [](const std::vector<int>& ids, int id) {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end())
      throw LookupError("edge " + std::to_string(id) +
                        " missing from representation list");
    return static_cast<int>(it - ids.begin());
  };
  int p1 = pos_in(p.rep.nonprime, x1);
  int p2 = pos_in(p.rep.nonprime, x2);
  int i3 = pos_in(p.rep.prime, x3);
  // The half-edge and double-loop rewrites reuse the row of x3 for their
  // helper primes, which is only sound when that row reads 1 under x1 and
  // 0 under x2 the way a k-sum connector row does.
  auto require_connector_row = [&]() {
    if (p.matrix.at(i3, p1) != Rational(1) ||
        p.matrix.at(i3, p2) != Rational(0))
      throw StructureError(
          "connector row must read 1 under x1 and 0 under x2");
  };

  Edge e1 = g.edge(x1), e2 = g.edge(x2), e3 = g.edge(x3);
  if (e1.is_link() && e2.is_link() && e3.is_link()) return p;

  // Sign variants reduce to the three canonical configurations by a
  // switching, which leaves the represented matrix alone.
  if (e1.is_loop() && !e1.is_positive() && e2.is_link() && e3.is_link() &&
      e2.is_positive()) {
    int v = e1.ends[0].node;
    int u = e3.ends[0].node == v ? e3.ends[1].node : e3.ends[0].node;
    TourPair sw = p;
    sw.rep.graph = switch_node(sw.rep.graph, u);
    return normalize_connecting(sw, x1, x2, x3);
  }
  if (e1.is_half_edge() && e3.is_half_edge() && e2.is_link() &&
      !e2.is_positive()) {
    TourPair sw = p;
    sw.rep.graph = switch_node(sw.rep.graph, e3.ends[0].node);
    return normalize_connecting(sw, x1, x2, x3);
  }

  TourPair out = p;
  BidirectedGraph& h = out.rep.graph;

  if (e1.is_loop() && !e1.is_positive() && e2.is_link() &&
      !e2.is_positive() && e3.is_link() && e3.is_positive()) {
    // Loop connector: split the loop's node. The negative loop becomes a
    // link to a fresh node, the negative link follows it there, and a new
    // prime link ties the halves together.
    int v = e1.ends[0].node;
    int lambda = e1.ends[0].label;
    if (!e2.touches(v) || !e3.touches(v))
      throw ClassifyError("connector links do not meet the loop's node");
    int v2 = h.fresh_node_id();
    h.add_node(v2);
    for (auto& end : h.edge_mut(x2).ends)
      if (end.node == v) end.node = v2;
    h.edge_mut(x1).ends[1].node = v2;
    int f = h.fresh_edge_id();
    h.add_edge(Edge{f, {{v, -lambda}, {v2, lambda}}});
    h = switch_node(h, v2);
    out.rep.prime.push_back(f);
    std::vector<Rational> row(p.matrix.cols(), Rational(0));
    row[p1] = 1;
    row[p2] = 1;
    out.matrix = out.matrix.with_row_appended(row);
    return out;
  }

  if (e1.is_half_edge() && e3.is_half_edge() && e2.is_link() &&
      e2.is_positive()) {
    // Half-edge connectors: both gain a second end at a fresh node, and a
    // new prime half-edge there balances the extra row.
    require_connector_row();
    int u = e1.ends[0].node;
    int v = e3.ends[0].node;
    int c3 = e3.ends[0].label;
    if (!(e2.touches(u) && e2.touches(v)))
      throw ClassifyError("connector link does not join the half-edge nodes");
    int w = h.fresh_node_id();
    h.add_node(w);
    h.edge_mut(x1).ends.push_back({w, c3});
    h.edge_mut(x3).ends.push_back({w, c3});
    int f = h.fresh_edge_id();
    h.add_edge(Edge{f, {{w, -c3}}});
    out.rep.prime.push_back(f);
    std::vector<Rational> row = p.matrix.row(i3);
    row[p1] = 0;
    row[p2] = 0;
    out.matrix = out.matrix.with_row_appended(row);
    return out;
  }

  if (e1.is_loop() && !e1.is_positive() && e2.is_loop() &&
      !e2.is_positive() && e3.is_loop() && e3.is_positive() &&
      e1.ends[0].node == e2.ends[0].node) {
    // Two negative loops at one node with a positive-loop prime: stretch
    // everything over two fresh nodes; two helper primes keep the balance.
    require_connector_row();
    int v = e1.ends[0].node;
    int lambda = e1.ends[0].label;
    int t1 = h.fresh_node_id();
    h.add_node(t1);
    int t2 = h.fresh_node_id();
    h.add_node(t2);
    h.edge_mut(x2).ends = {{v, lambda}, {t1, -lambda}};
    h.edge_mut(x1).ends = {{v, lambda}, {t2, -lambda}};
    h.edge_mut(x3).ends = {{t1, lambda}, {t2, -lambda}};
    int f1 = h.fresh_edge_id();
    h.add_edge(Edge{f1, {{t1, -lambda}, {t2, lambda}}});
    int f2 = h.fresh_edge_id();
    h.add_edge(Edge{f2, {{v, -lambda}, {t1, -lambda}}});
    out.rep.prime.push_back(f1);
    out.rep.prime.push_back(f2);
    std::vector<Rational> row1 = p.matrix.row(i3);
    row1[p1] = 0;
    row1[p2] = 0;
    std::vector<Rational> row2(p.matrix.cols(), Rational(0));
    row2[p1] = 1;
    row2[p2] = 1;
    out.matrix = out.matrix.with_row_appended(row1).with_row_appended(row2);
    return out;
  }

  throw ClassifyError("unsupported connector configuration (" +
                      edge_kind_name(e1.kind()) + ", " +
                      edge_kind_name(e2.kind()) + ", " +
                      edge_kind_name(e3.kind()) + ")");
}

TourPair compose_3sum_graphs(const TourPair& left, const TourPair& right) {
  check_pair_shape(left, "left");
  check_pair_shape(right, "right");
  RatMatrix composed = matrix_3sum(left.matrix, right.matrix);

  if (auto out = try_glue_3sum(left, right)) return *out;

  {
    TourPair l2 = left, r2 = right;
    if (align_connector_kinds(l2, r2))
      if (auto out = try_glue_3sum(l2, r2)) return *out;
  }

  auto lc = left_connectors(left);
  auto rc = right_connectors(right);
  TourPair l3 = normalize_connecting(left, lc.e2, lc.e1, lc.e3);
  int kl = l3.matrix.rows() - left.matrix.rows();
  if (kl > 0) {
    // Move the connector row back to the bottom, below the helper rows.
    std::vector<int> perm;
    for (int i = 0; i + 1 < left.matrix.rows(); ++i) perm.push_back(i);
    for (int t = 0; t < kl; ++t) perm.push_back(left.matrix.rows() + t);
    perm.push_back(left.matrix.rows() - 1);
    l3 = permute_rows(l3, perm);
  }
  TourPair r3 = normalize_connecting(right, rc.f1, rc.f2, rc.f3);
  int kr = r3.matrix.rows() - right.matrix.rows();

  auto out = try_glue_3sum(l3, r3);
  if (!out)
    throw OperandError(
        "connector patterns cannot be identified, even after rewriting "
        "them as links");

  std::vector<int> doomed;
  int ml = left.matrix.rows(), mr = right.matrix.rows();
  for (int t = 0; t < kl; ++t) doomed.push_back(ml - 1 + t);
  int base = (ml + kl - 1) + (mr - 1);
  for (int t = 0; t < kr; ++t) doomed.push_back(base + t);
  std::sort(doomed.rbegin(), doomed.rend());
  TourPair res = *out;
  for (int row : doomed) res = delete_row(res, row);
  if (!(res.matrix == composed))
    throw Error("internal: helper-row cleanup did not recover the 3-sum");
  return res;
}

TourPair compose_2sum_graphs(const TourPair& left, const TourPair& right) {
  check_pair_shape(left, "left");
  check_pair_shape(right, "right");
  RatMatrix composed = matrix_2sum(left.matrix, right.matrix);

  TourPair lp = duplicate_col(left, left.matrix.cols() - 1);
  {
    BidirectedGraph& g = lp.rep.graph;
    if (g.nodes().empty())
      throw OperandError("left graph has no node to host the padding loop");
    int s = *std::min_element(g.nodes().begin(), g.nodes().end());
    int id = g.fresh_edge_id();
    g.add_edge(Edge{id, {{s, 1}, {s, -1}}});
    lp.rep.prime.push_back(id);
    std::vector<Rational> row(lp.matrix.cols(), Rational(0));
    row.back() = 1;
    lp.matrix = lp.matrix.with_row_appended(row);
  }

  TourPair rp = right;
  {
    if (rp.rep.prime.empty())
      throw OperandError("right operand has no connector row");
    BidirectedGraph& g = rp.rep.graph;
    Edge f1 = g.edge(rp.rep.prime[0]);
    f1.id = g.fresh_edge_id();
    g.add_edge(f1);
    Edge f2;
    f2.id = g.fresh_edge_id();
    g.add_edge(f2);
    std::vector<int> nonprime{f1.id, f2.id};
    nonprime.insert(nonprime.end(), rp.rep.nonprime.begin(),
                    rp.rep.nonprime.end());
    rp.rep.nonprime = std::move(nonprime);
    RatMatrix m(rp.matrix.rows(), rp.matrix.cols() + 2);
    m.at(0, 0) = 1;
    for (int i = 0; i < rp.matrix.rows(); ++i)
      for (int j = 0; j < rp.matrix.cols(); ++j)
        m.at(i, 2 + j) = rp.matrix.at(i, j);
    rp.matrix = std::move(m);
  }

  TourPair res = compose_3sum_graphs(lp, rp);
  if (!(res.matrix == composed))
    throw Error("internal: padded composition did not recover the 2-sum");
  return res;
}

TourPair compose_1sum_graphs(const TourPair& left, const TourPair& right) {
  check_pair_shape(left, "left");
  check_pair_shape(right, "right");
  BidirectedGraph g = left.rep.graph;
  std::map<int, int> nmap, emap;
  int next_node = g.fresh_node_id();
  for (int v : right.rep.graph.nodes()) {
    nmap[v] = next_node++;
    g.add_node(nmap[v]);
  }
  int next_edge = g.fresh_edge_id();
  for (const auto& e : right.rep.graph.edges()) {
    Edge copy = e;
    copy.id = next_edge++;
    emap[e.id] = copy.id;
    for (auto& end : copy.ends) end.node = nmap.at(end.node);
    g.add_edge(std::move(copy));
  }
  TourRepresentation rep;
  rep.graph = std::move(g);
  rep.prime = left.rep.prime;
  for (int id : right.rep.prime) rep.prime.push_back(emap.at(id));
  rep.nonprime = left.rep.nonprime;
  for (int id : right.rep.nonprime) rep.nonprime.push_back(emap.at(id));
  return {std::move(rep), matrix_1sum(left.matrix, right.matrix)};
}

void validate_ksum_node(const std::string& op, const RatMatrix& left,
                        const RatMatrix& right,
                        const std::optional<RatMatrix>& dbar,
                        const std::string& where) {
  auto fail = [&](const std::string& msg) {
    throw OperandError(where + ": " + msg);
  };
  auto gf2_rank = [&](const RatMatrix& m) {
    if (!m.is_integral()) fail("connector block is not integral");
    return rank_gf2(m);
  };
  if (op == "1sum") {
    if (left.rows() < 2 || left.cols() < 2 || right.rows() < 2 ||
        right.cols() < 2)
      fail("1-sum operands must both be larger than 1x1");
    return;
  }
  if (op == "2sum") {
    if (left.rows() <= 2 || left.cols() - 1 <= 2 || right.rows() - 1 <= 2 ||
        right.cols() <= 2)
      fail("2-sum core blocks must have both dimensions greater than 2");
    RatMatrix d2 = outer_product(left.col(left.cols() - 1), right.row(0));
    if (gf2_rank(d2) != 1)
      fail("2-sum connector block must have binary rank 1");
    return;
  }
  if (op == "3sum") {
    if (left.rows() - 1 <= 3 || left.cols() - 2 <= 3 ||
        right.rows() - 1 <= 3 || right.cols() - 2 <= 3)
      fail("3-sum core blocks must have both dimensions greater than 3");
    std::vector<Rational> a(left.rows() - 1), c(left.cols() - 2);
    for (int i = 0; i + 1 < left.rows(); ++i)
      a[i] = left.at(i, left.cols() - 2);
    for (int j = 0; j + 2 < left.cols(); ++j)
      c[j] = left.at(left.rows() - 1, j);
    std::vector<Rational> b(right.cols() - 2), d(right.rows() - 1);
    for (int j = 0; j + 2 < right.cols(); ++j) b[j] = right.at(0, 2 + j);
    for (int i = 0; i + 1 < right.rows(); ++i) d[i] = right.at(1 + i, 0);
    int r = gf2_rank(outer_product(a, b)) + gf2_rank(outer_product(d, c));
    if (r != 2)
      fail("3-sum connector blocks must have binary ranks summing to 2");
    return;
  }
  if (op == "3sum-alt") {
    if (left.rows() - 2 <= 3 || left.cols() - 1 <= 3 ||
        right.rows() - 1 <= 3 || right.cols() - 2 <= 3)
      fail("rank-two 3-sum core blocks must have both dimensions greater "
           "than 3");
    if (!dbar) fail("rank-two 3-sum node requires the connector matrix dbar");
    RatMatrix d = alt_connector_block(left, right, *dbar);
    if (gf2_rank(d) != 2)
      fail("rank-two 3-sum connector block must have binary rank 2");
    return;
  }
  fail("unknown operation '" + op + "'");
}

namespace {

TourPair compose_node(const DecompositionNode& node, const std::string& where) {
  if (node.is_leaf()) {
    if (!node.certificate)
      throw StructureError(where + ": leaf carries no certificate");
    const RatMatrix& m = *node.matrix;
    const TourRepresentation& cert = *node.certificate;
    const std::string& kind = node.certificate_kind;
    if (kind == "network" || kind == "binet") {
      RepKind k = classify_rep(cert);
      if (kind == "network" && k != RepKind::Network)
        throw OperandError(where +
                           ": certificate is not a network representation");
      if (kind == "binet" && k != RepKind::Binet)
        throw OperandError(where + ": certificate is not a loop-basis "
                                   "(binet) representation");
      if (!(compute_matrix(cert) == m))
        throw OperandError(where +
                           ": certificate represents a different matrix");
      return {cert, m};
    }
    if (kind == "tour") {
      auto report = verify_tour(cert, m);
      if (!report.pass())
        throw OperandError(where + ": certificate fails verification\n" +
                           report.summary());
      return {cert, m};
    }
    if (kind == "transpose-network") {
      if (classify_rep(cert) != RepKind::Network)
        throw OperandError(where +
                           ": certificate is not a network representation");
      if (!(compute_matrix(cert) == m.transpose()))
        throw OperandError(where +
                           ": certificate does not represent the transpose");
      auto report = is_tu_det(m);
      if (!report.pass())
        throw OperandError(where + ": matrix is not totally unimodular\n" +
                           report.summary());
      return {trivial_tour_from_tu(m), m};
    }
    throw StructureError(where + ": unknown certificate kind '" + kind + "'");
  }

  if (!node.left || !node.right)
    throw StructureError(where + ": internal node is missing a child");
  TourPair l = compose_node(*node.left, where + ".left");
  TourPair r = compose_node(*node.right, where + ".right");
  validate_ksum_node(node.op, l.matrix, r.matrix, node.dbar, where);
  if (node.op == "1sum") {
    RepKind kl = classify_rep(l.rep), kr = classify_rep(r.rep);
    if (kl == RepKind::Network && kr != RepKind::Network)
      l.rep = network_to_binet_all(l.rep);
    else if (kr == RepKind::Network && kl != RepKind::Network)
      r.rep = network_to_binet_all(r.rep);
    return compose_1sum_graphs(l, r);
  }
  if (node.op == "2sum") return compose_2sum_graphs(l, r);
  if (node.op == "3sum") return compose_3sum_graphs(l, r);
  // "3sum-alt": composition works on the matrix; the representation is
  // rebuilt from scratch on the composed matrix.
  RatMatrix m = matrix_3sum_alt(l.matrix, r.matrix, *node.dbar);
  return {trivial_tour_from_tu(m), m};
}

}  // namespace

TourPair compose_tree(const DecompositionNode& root) {
  TourPair p = compose_node(root, "root");
  if (classify_rep(p.rep) == RepKind::Network)
    p.rep = network_to_binet_all(p.rep);
  auto report = verify_tour(p.rep, p.matrix);
  if (!report.pass())
    throw Error("internal: composed representation fails verification\n" +
                report.summary());
  return p;
}

}  // namespace tourforge
