#include "tourforge/bigraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tourforge/errors.hpp"
#include "tourforge/linalg.hpp"

namespace tourforge {

EdgeKind Edge::kind() const {
  switch (ends.size()) {
    case 0:
      return EdgeKind::LooseEdge;
    case 1:
      return EdgeKind::HalfEdge;
    case 2:
      return ends[0].node == ends[1].node ? EdgeKind::Loop : EdgeKind::Link;
    default:
      throw StructureError("edge " + std::to_string(id) +
                           " has more than two ends");
  }
}

bool Edge::is_positive() const {
  switch (kind()) {
    case EdgeKind::LooseEdge:
      return true;
    case EdgeKind::HalfEdge:
      return false;
    default:
      return ends[0].label * ends[1].label == -1;
  }
}

bool Edge::touches(int node) const {
  for (const auto& e : ends)
    if (e.node == node) return true;
  return false;
}

std::string edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Link:
      return "link";
    case EdgeKind::Loop:
      return "loop";
    case EdgeKind::HalfEdge:
      return "half-edge";
    case EdgeKind::LooseEdge:
      return "loose edge";
  }
  return "?";
}

bool BidirectedGraph::has_node(int v) const {
  return std::find(nodes_.begin(), nodes_.end(), v) != nodes_.end();
}

bool BidirectedGraph::has_edge(int id) const {
  for (const auto& e : edges_)
    if (e.id == id) return true;
  return false;
}

const Edge& BidirectedGraph::edge(int id) const {
  for (const auto& e : edges_)
    if (e.id == id) return e;
  throw LookupError("unknown edge id " + std::to_string(id));
}

Edge& BidirectedGraph::edge_mut(int id) {
  for (auto& e : edges_)
    if (e.id == id) return e;
  throw LookupError("unknown edge id " + std::to_string(id));
}

int BidirectedGraph::node_position(int v) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i] == v) return static_cast<int>(i);
  throw LookupError("unknown node id " + std::to_string(v));
}

int BidirectedGraph::edge_position(int id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return static_cast<int>(i);
  throw LookupError("unknown edge id " + std::to_string(id));
}

void BidirectedGraph::add_node(int v) {
  if (v < 0) throw StructureError("negative node id");
  if (has_node(v)) throw StructureError("duplicate node id " + std::to_string(v));
  nodes_.push_back(v);
}

void BidirectedGraph::add_edge(Edge e) {
  if (e.id < 0) throw StructureError("negative edge id");
  if (has_edge(e.id))
    throw StructureError("duplicate edge id " + std::to_string(e.id));
  if (e.ends.size() > 2)
    throw StructureError("edge with more than two ends");
  for (const auto& end : e.ends) {
    if (end.label != 1 && end.label != -1)
      throw StructureError("end label must be +-1");
    if (!has_node(end.node))
      throw LookupError("edge end references unknown node " +
                        std::to_string(end.node));
  }
  edges_.push_back(std::move(e));
}

void BidirectedGraph::remove_edge(int id) {
  edges_.erase(edges_.begin() + edge_position(id));
}

int BidirectedGraph::fresh_node_id() const {
  int m = -1;
  for (int v : nodes_) m = std::max(m, v);
  return m + 1;
}

int BidirectedGraph::fresh_edge_id() const {
  int m = -1;
  for (const auto& e : edges_) m = std::max(m, e.id);
  return m + 1;
}

std::vector<Rational> BidirectedGraph::incidence_column(int edge_id) const {
  std::vector<Rational> col(nodes_.size(), Rational(0));
  for (const auto& end : edge(edge_id).ends)
    col[node_position(end.node)] += end.label;
  return col;
}

RatMatrix incidence_matrix(const BidirectedGraph& g) {
  RatMatrix m(static_cast<int>(g.nodes().size()),
              static_cast<int>(g.edges().size()));
  for (std::size_t j = 0; j < g.edges().size(); ++j) {
    auto col = g.incidence_column(g.edges()[j].id);
    for (std::size_t i = 0; i < col.size(); ++i)
      m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
  }
  return m;
}

Edge column_to_edge(const std::vector<Rational>& col,
                    const std::vector<int>& node_ids, int edge_id) {
  if (col.size() != node_ids.size())
    throw ShapeError("incidence column length mismatch");
  Edge e;
  e.id = edge_id;
  std::vector<std::pair<int, long>> nz;
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i] == 0) continue;
    if (!is_integral(col[i]))
      throw ParseError("incidence entry " + rat_to_string(col[i]) +
                       " is not an integer");
    nz.emplace_back(node_ids[i], rat_to_long(col[i]));
  }
  if (nz.empty()) return e;  // loose edge
  if (nz.size() == 1) {
    auto [node, v] = nz[0];
    if (v == 1 || v == -1) {
      e.ends.push_back({node, static_cast<int>(v)});
      return e;
    }
    if (v == 2 || v == -2) {
      int l = v > 0 ? 1 : -1;
      e.ends.push_back({node, l});
      e.ends.push_back({node, l});
      return e;
    }
    throw ParseError("incidence entry " + std::to_string(v) +
                     " outside {0,+1,-1,+2,-2}");
  }
  if (nz.size() == 2) {
    auto [n1, v1] = nz[0];
    auto [n2, v2] = nz[1];
    if ((v1 == 1 || v1 == -1) && (v2 == 1 || v2 == -1)) {
      e.ends.push_back({n1, static_cast<int>(v1)});
      e.ends.push_back({n2, static_cast<int>(v2)});
      return e;
    }
    throw ParseError("two-entry incidence column with an entry outside {+1,-1}");
  }
  throw ParseError("incidence column with more than two nonzero entries");
}

BidirectedGraph switch_node(const BidirectedGraph& g, int v) {
  if (!g.has_node(v)) throw LookupError("switch at unknown node " + std::to_string(v));
  BidirectedGraph out = g;
  for (const auto& e : g.edges()) {
    Edge& copy = out.edge_mut(e.id);
    for (auto& end : copy.ends)
      if (end.node == v) end.label = -end.label;
  }
  return out;
}

BidirectedGraph delete_edge(const BidirectedGraph& g, int edge_id) {
  BidirectedGraph out = g;
  out.remove_edge(edge_id);
  return out;
}

BidirectedGraph delete_node(const BidirectedGraph& g, int v) {
  int pos = g.node_position(v);  // throws for unknown node
  BidirectedGraph out;
  for (std::size_t i = 0; i < g.nodes().size(); ++i)
    if (static_cast<int>(i) != pos) out.add_node(g.nodes()[i]);
  for (const auto& e : g.edges()) {
    Edge copy = e;
    copy.ends.erase(std::remove_if(copy.ends.begin(), copy.ends.end(),
                                   [&](const EndAttachment& end) {
                                     return end.node == v;
                                   }),
                    copy.ends.end());
    out.add_edge(std::move(copy));
  }
  return out;
}

BidirectedGraph merge_nodes(const BidirectedGraph& g, int keep, int gone) {
  if (keep == gone) throw StructureError("merge of a node with itself");
  g.node_position(keep);
  int gone_pos = g.node_position(gone);
  BidirectedGraph out;
  for (std::size_t i = 0; i < g.nodes().size(); ++i)
    if (static_cast<int>(i) != gone_pos) out.add_node(g.nodes()[i]);
  for (const auto& e : g.edges()) {
    Edge copy = e;
    for (auto& end : copy.ends)
      if (end.node == gone) end.node = keep;
    out.add_edge(std::move(copy));
  }
  return out;
}

BidirectedGraph contract_edge(const BidirectedGraph& g, int edge_id) {
  const Edge& e = g.edge(edge_id);
  switch (e.kind()) {
    case EdgeKind::LooseEdge:
      throw StructureError("cannot contract a loose edge");
    case EdgeKind::Loop:
      if (e.is_positive()) return delete_edge(g, edge_id);
      return delete_node(delete_edge(g, edge_id), e.ends[0].node);
    case EdgeKind::HalfEdge:
      return delete_node(delete_edge(g, edge_id), e.ends[0].node);
    case EdgeKind::Link: {
      int a = std::min(e.ends[0].node, e.ends[1].node);
      int b = std::max(e.ends[0].node, e.ends[1].node);
      BidirectedGraph work = g;
      if (!e.is_positive()) work = switch_node(work, a);
      work.remove_edge(edge_id);
      return merge_nodes(work, a, b);
    }
  }
  throw StructureError("unreachable edge kind");
}

namespace {

struct SubgraphView {
  std::vector<Edge> edges;
  std::vector<int> touched;                    // node ids, stable order
  std::map<int, std::vector<int>> link_at;     // node -> indices into edges of links
  std::map<int, int> degree;                   // end count per node

  bool link_connected() const {
    if (touched.empty()) return true;
    std::set<int> seen{touched.front()};
    std::vector<int> stack{touched.front()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      auto it = link_at.find(v);
      if (it == link_at.end()) continue;
      for (int idx : it->second) {
        for (const auto& end : edges[idx].ends) {
          if (!seen.count(end.node)) {
            seen.insert(end.node);
            stack.push_back(end.node);
          }
        }
      }
    }
    return seen.size() == touched.size();
  }
};

SubgraphView make_view(const BidirectedGraph& g,
                       const std::vector<int>& edge_ids) {
  SubgraphView view;
  std::set<int> seen_edges;
  for (int id : edge_ids) {
    if (!seen_edges.insert(id).second)
      throw LookupError("duplicate edge id " + std::to_string(id) +
                        " in subgraph");
    view.edges.push_back(g.edge(id));
  }
  std::set<int> touched;
  for (std::size_t i = 0; i < view.edges.size(); ++i) {
    const Edge& e = view.edges[i];
    for (const auto& end : e.ends) {
      if (touched.insert(end.node).second) view.touched.push_back(end.node);
      view.degree[end.node] += 1;
    }
    if (e.is_link()) {
      view.link_at[e.ends[0].node].push_back(static_cast<int>(i));
      view.link_at[e.ends[1].node].push_back(static_cast<int>(i));
    }
  }
  return view;
}

int link_degree(const SubgraphView& view, int node) {
  auto it = view.link_at.find(node);
  return it == view.link_at.end() ? 0 : static_cast<int>(it->second.size());
}

// Walks from `start` along links through degree-2 nodes until the walk
// returns to `start`. Returns the traversed link indices, or nullopt when
// the walk leaves the edge set or revisits an edge inconsistently.
std::optional<std::vector<int>> closed_link_walk(const SubgraphView& view,
                                                 int start, int first_idx,
                                                 std::vector<bool>& used) {
  std::vector<int> walk;
  int idx = first_idx;
  int at = start;
  while (true) {
    if (used[idx]) return std::nullopt;
    used[idx] = true;
    walk.push_back(idx);
    const Edge& e = view.edges[idx];
    int next = e.ends[0].node == at ? e.ends[1].node : e.ends[0].node;
    if (next == start) return walk;
    // continue through `next`: it must have exactly two incident links
    auto it = view.link_at.find(next);
    if (it == view.link_at.end() || it->second.size() != 2)
      return std::nullopt;
    idx = it->second[0] == idx ? it->second[1] : it->second[0];
    at = next;
  }
}

bool cycle_sign_negative(const SubgraphView& view,
                         const std::vector<int>& walk) {
  int negatives = 0;
  for (int idx : walk)
    if (!view.edges[idx].is_positive()) ++negatives;
  return negatives % 2 == 1;
}

// Removing which links disconnects the touched node set?
std::vector<int> bridge_links(const SubgraphView& view) {
  std::vector<int> bridges;
  for (std::size_t i = 0; i < view.edges.size(); ++i) {
    if (!view.edges[i].is_link()) continue;
    SubgraphView reduced = view;
    // drop link i from adjacency
    for (auto& [node, idxs] : reduced.link_at)
      idxs.erase(std::remove(idxs.begin(), idxs.end(), static_cast<int>(i)),
                 idxs.end());
    if (!reduced.link_connected()) bridges.push_back(static_cast<int>(i));
  }
  return bridges;
}

}  // namespace

std::string subgraph_class_name(SubgraphClass c) {
  switch (c) {
    case SubgraphClass::PositiveCycle:
      return "positive-cycle";
    case SubgraphClass::HandcuffI:
      return "handcuff-I";
    case SubgraphClass::HandcuffII:
      return "handcuff-II";
    case SubgraphClass::Other:
      return "other";
  }
  return "?";
}

SubgraphClass classify_subgraph(const BidirectedGraph& g,
                                const std::vector<int>& edge_ids) {
  if (edge_ids.empty()) return SubgraphClass::Other;
  auto view = make_view(g, edge_ids);

  if (view.edges.size() == 1) {
    const Edge& e = view.edges[0];
    // Degenerate positive cycles: a positive loop, or the zero column of a
    // loose edge.
    if (e.is_loose() || (e.is_loop() && e.is_positive()))
      return SubgraphClass::PositiveCycle;
    return SubgraphClass::Other;
  }

  for (const auto& e : view.edges)
    if (e.is_loose() || (e.is_loop() && e.is_positive()))
      return SubgraphClass::Other;  // contains a smaller dependent set

  if (!view.link_connected()) return SubgraphClass::Other;

  int E = static_cast<int>(view.edges.size());
  int V = static_cast<int>(view.touched.size());
  std::vector<int> units;  // indices of negative loops / half-edges
  int link_count = 0;
  for (std::size_t i = 0; i < view.edges.size(); ++i) {
    const Edge& e = view.edges[i];
    if (e.is_link())
      ++link_count;
    else
      units.push_back(static_cast<int>(i));  // negative loop or half-edge
  }

  if (E == V) {
    // Candidate single cycle of links, which must be positive.
    if (!units.empty()) return SubgraphClass::Other;
    for (int v : view.touched)
      if (view.degree.at(v) != 2) return SubgraphClass::Other;
    std::vector<bool> used(view.edges.size(), false);
    int start = view.touched.front();
    auto walk = closed_link_walk(view, start, view.link_at.at(start)[0], used);
    if (!walk || static_cast<int>(walk->size()) != E)
      return SubgraphClass::Other;
    return cycle_sign_negative(view, *walk) ? SubgraphClass::Other
                                            : SubgraphClass::PositiveCycle;
  }

  if (E != V + 1) return SubgraphClass::Other;

  if (units.size() == 0) {
    // Two link cycles: figure-8 (handcuff I), dumbbell (handcuff II), or
    // theta (not minimal).
    std::vector<int> deg3, deg4;
    for (int v : view.touched) {
      int d = view.degree.at(v);
      if (d == 2) continue;
      if (d == 3)
        deg3.push_back(v);
      else if (d == 4)
        deg4.push_back(v);
      else
        return SubgraphClass::Other;
    }
    if (deg4.size() == 1 && deg3.empty()) {
      int v = deg4[0];
      std::vector<bool> used(view.edges.size(), false);
      auto c1 = closed_link_walk(view, v, view.link_at.at(v)[0], used);
      if (!c1) return SubgraphClass::Other;
      // remaining links must close the second cycle through v
      int next_idx = -1;
      for (int idx : view.link_at.at(v))
        if (!used[idx]) {
          next_idx = idx;
          break;
        }
      if (next_idx < 0) return SubgraphClass::Other;
      auto c2 = closed_link_walk(view, v, next_idx, used);
      if (!c2 || c1->size() + c2->size() != view.edges.size())
        return SubgraphClass::Other;
      return cycle_sign_negative(view, *c1) && cycle_sign_negative(view, *c2)
                 ? SubgraphClass::HandcuffI
                 : SubgraphClass::Other;
    }
    if (deg3.size() == 2 && deg4.empty()) {
      auto bridges = bridge_links(view);
      if (bridges.empty()) return SubgraphClass::Other;  // theta
      // Non-bridge links must decompose into two negative cycles, one at
      // each degree-3 node.
      std::vector<bool> used(view.edges.size(), false);
      for (int b : bridges) used[b] = true;
      int cycles = 0;
      bool all_negative = true;
      for (int v : deg3) {
        int start_idx = -1;
        for (int idx : view.link_at.at(v))
          if (!used[idx]) {
            start_idx = idx;
            break;
          }
        if (start_idx < 0) return SubgraphClass::Other;
        auto c = closed_link_walk(view, v, start_idx, used);
        if (!c) return SubgraphClass::Other;
        ++cycles;
        if (!cycle_sign_negative(view, *c)) all_negative = false;
      }
      std::size_t covered = 0;
      for (bool u : used)
        if (u) ++covered;
      if (cycles != 2 || covered != view.edges.size())
        return SubgraphClass::Other;
      return all_negative ? SubgraphClass::HandcuffII : SubgraphClass::Other;
    }
    return SubgraphClass::Other;
  }

  if (units.size() == 1) {
    int x = view.edges[units[0]].ends[0].node;
    // All remaining edges are links; either one cycle through x covering
    // everything (handcuff I) or a path from x to a cycle avoiding x
    // (handcuff II).
    bool all_two = true;
    for (int v : view.touched)
      if (link_degree(view, v) != 2) all_two = false;
    if (all_two) {
      std::vector<bool> used(view.edges.size(), false);
      used[units[0]] = true;
      auto walk = closed_link_walk(view, x, view.link_at.at(x)[0], used);
      if (!walk || static_cast<int>(walk->size()) != link_count)
        return SubgraphClass::Other;
      return cycle_sign_negative(view, *walk) ? SubgraphClass::HandcuffI
                                              : SubgraphClass::Other;
    }
    // Handcuff II shape: x has link-degree 1, one node has link-degree 3,
    // the rest 2.
    if (link_degree(view, x) != 1) return SubgraphClass::Other;
    int w = -1;
    for (int v : view.touched) {
      int d = link_degree(view, v);
      if (v == x) continue;
      if (d == 3) {
        if (w >= 0) return SubgraphClass::Other;
        w = v;
      } else if (d != 2) {
        return SubgraphClass::Other;
      }
    }
    if (w < 0) return SubgraphClass::Other;
    // Walk the path from x; it must reach w without touching the cycle.
    std::vector<bool> used(view.edges.size(), false);
    used[units[0]] = true;
    int at = x;
    int idx = view.link_at.at(x)[0];
    while (true) {
      if (used[idx]) return SubgraphClass::Other;
      used[idx] = true;
      const Edge& e = view.edges[idx];
      int next = e.ends[0].node == at ? e.ends[1].node : e.ends[0].node;
      if (next == w) break;
      if (link_degree(view, next) != 2) return SubgraphClass::Other;
      auto& idxs = view.link_at.at(next);
      idx = idxs[0] == idx ? idxs[1] : idxs[0];
      at = next;
    }
    int start_idx = -1;
    for (int i2 : view.link_at.at(w))
      if (!used[i2]) {
        start_idx = i2;
        break;
      }
    if (start_idx < 0) return SubgraphClass::Other;
    auto c = closed_link_walk(view, w, start_idx, used);
    if (!c) return SubgraphClass::Other;
    std::size_t covered = 0;
    for (bool u : used)
      if (u) ++covered;
    if (covered != view.edges.size()) return SubgraphClass::Other;
    for (int i2 : *c) {
      const Edge& e = view.edges[i2];
      if (e.touches(x)) return SubgraphClass::Other;  // cycle must avoid x
    }
    return cycle_sign_negative(view, *c) ? SubgraphClass::HandcuffII
                                         : SubgraphClass::Other;
  }

  if (units.size() == 2) {
    int x = view.edges[units[0]].ends[0].node;
    int y = view.edges[units[1]].ends[0].node;
    if (x == y) {
      // Two unit negative cycles sharing their node, nothing else.
      return link_count == 0 ? SubgraphClass::HandcuffI : SubgraphClass::Other;
    }
    // Links must form a simple x-y path covering all touched nodes.
    if (link_degree(view, x) != 1 || link_degree(view, y) != 1)
      return SubgraphClass::Other;
    for (int v : view.touched)
      if (v != x && v != y && link_degree(view, v) != 2)
        return SubgraphClass::Other;
    std::vector<bool> used(view.edges.size(), false);
    used[units[0]] = true;
    used[units[1]] = true;
    int at = x;
    int idx = view.link_at.at(x)[0];
    while (true) {
      if (used[idx]) return SubgraphClass::Other;
      used[idx] = true;
      const Edge& e = view.edges[idx];
      int next = e.ends[0].node == at ? e.ends[1].node : e.ends[0].node;
      if (next == y) break;
      auto& idxs = view.link_at.at(next);
      idx = idxs[0] == idx ? idxs[1] : idxs[0];
      at = next;
    }
    std::size_t covered = 0;
    for (bool u : used)
      if (u) ++covered;
    return covered == view.edges.size() ? SubgraphClass::HandcuffII
                                        : SubgraphClass::Other;
  }

  return SubgraphClass::Other;
}

bool is_valid_basis(const BidirectedGraph& g,
                    const std::vector<int>& edge_ids) {
  auto view = make_view(g, edge_ids);
  int E = static_cast<int>(view.edges.size());
  int V = static_cast<int>(view.touched.size());

  // Algebraic route: the incidence columns must be independent and the set
  // must cover its touched nodes exactly.
  RatMatrix cols(static_cast<int>(g.nodes().size()), E);
  for (int j = 0; j < E; ++j) {
    auto c = g.incidence_column(view.edges[j].id);
    for (std::size_t i = 0; i < c.size(); ++i)
      cols.at(static_cast<int>(i), j) = c[i];
  }
  bool algebraic = (E == V) && rank_q(cols) == E;

  // Structural route: per link-connected component, |edges| = |nodes| with
  // the unique cycle negative; no loose edges or positive loops anywhere.
  bool structural = (E == V);
  for (const auto& e : view.edges)
    if (e.is_loose() || (e.is_loop() && e.is_positive())) structural = false;
  if (structural) {
    std::set<int> visited;
    for (int root : view.touched) {
      if (visited.count(root)) continue;
      // collect the component of `root`
      std::set<int> comp{root};
      std::vector<int> stack{root};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        auto it = view.link_at.find(v);
        if (it == view.link_at.end()) continue;
        for (int idx : it->second)
          for (const auto& end : view.edges[idx].ends)
            if (comp.insert(end.node).second) stack.push_back(end.node);
      }
      visited.insert(comp.begin(), comp.end());
      int comp_links = 0, comp_units = 0;
      std::vector<int> comp_link_idx;
      for (std::size_t i = 0; i < view.edges.size(); ++i) {
        const Edge& e = view.edges[i];
        if (e.ends.empty() || !comp.count(e.ends[0].node)) continue;
        if (e.is_link()) {
          ++comp_links;
          comp_link_idx.push_back(static_cast<int>(i));
        } else {
          ++comp_units;  // negative loop or half-edge (positives excluded)
        }
      }
      int comp_nodes = static_cast<int>(comp.size());
      if (comp_links + comp_units != comp_nodes) {
        structural = false;
        break;
      }
      if (comp_units == 1) continue;  // links form a spanning tree
      if (comp_units != 0) {
        structural = false;
        break;
      }
      // Unique link cycle: prune link-degree-1 nodes, the 2-core is the
      // cycle; its sign must be negative.
      std::map<int, std::vector<int>> adj;
      for (int idx : comp_link_idx) {
        adj[view.edges[idx].ends[0].node].push_back(idx);
        adj[view.edges[idx].ends[1].node].push_back(idx);
      }
      std::vector<bool> removed(view.edges.size(), false);
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto& [v, idxs] : adj) {
          int live = 0, live_idx = -1;
          for (int idx : idxs)
            if (!removed[idx]) {
              ++live;
              live_idx = idx;
            }
          if (live == 1) {
            removed[live_idx] = true;
            changed = true;
          }
        }
      }
      int negatives = 0, cycle_edges = 0;
      for (int idx : comp_link_idx)
        if (!removed[idx]) {
          ++cycle_edges;
          if (!view.edges[idx].is_positive()) ++negatives;
        }
      if (cycle_edges == 0 || negatives % 2 == 0) {
        structural = false;
        break;
      }
    }
  }

  if (structural != algebraic)
    throw Error("internal: structural and algebraic basis checks disagree");
  return algebraic;
}

std::vector<std::vector<int>> connected_components(const BidirectedGraph& g) {
  std::map<int, std::vector<int>> adj;
  for (const auto& e : g.edges())
    if (e.is_link()) {
      adj[e.ends[0].node].push_back(e.ends[1].node);
      adj[e.ends[1].node].push_back(e.ends[0].node);
    }
  std::set<int> seen;
  std::vector<std::vector<int>> comps;
  for (int v : g.nodes()) {
    if (seen.count(v)) continue;
    std::vector<int> comp;
    std::vector<int> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : adj[u])
        if (seen.insert(w).second) stack.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace tourforge
