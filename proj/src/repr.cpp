#include "tourforge/repr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tourforge/errors.hpp"
#include "tourforge/linalg.hpp"

namespace tourforge {

namespace {

std::string id_list(const std::vector<int>& ids) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) os << ", ";
    os << ids[i];
  }
  os << "}";
  return os.str();
}

bool is_directed_graph(const BidirectedGraph& g) {
  for (const auto& e : g.edges()) {
    if (!e.is_link()) return false;
    if (e.ends[0].label + e.ends[1].label != 0) return false;
  }
  return true;
}

RatMatrix columns_of(const TourRepresentation& rep,
                     const std::vector<int>& ids) {
  RatMatrix m(static_cast<int>(rep.graph.nodes().size()),
              static_cast<int>(ids.size()));
  for (std::size_t j = 0; j < ids.size(); ++j) {
    auto col = rep.graph.incidence_column(ids[j]);
    for (std::size_t i = 0; i < col.size(); ++i)
      m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
  }
  return m;
}

std::vector<int> dependent_prime_subset(const RatMatrix& q,
                                        const std::vector<int>& prime_ids) {
  auto x = null_vector(q);
  std::vector<int> ids;
  if (!x) return ids;
  for (std::size_t j = 0; j < x->size(); ++j)
    if ((*x)[j] != 0) ids.push_back(prime_ids[j]);
  return ids;
}

// Row indices to drop for the spanning-forest route: the largest node id
// of every connected component.
std::vector<int> dropped_rows(const BidirectedGraph& g) {
  std::vector<int> rows;
  for (const auto& comp : connected_components(g))
    rows.push_back(g.node_position(comp.back()));  // comp is sorted
  std::sort(rows.begin(), rows.end());
  return rows;
}

RatMatrix without_rows(const RatMatrix& m, const std::vector<int>& drop) {
  std::vector<int> keep;
  for (int i = 0; i < m.rows(); ++i)
    if (!std::binary_search(drop.begin(), drop.end(), i)) keep.push_back(i);
  std::vector<int> cols(m.cols());
  for (int j = 0; j < m.cols(); ++j) cols[j] = j;
  return m.submatrix(keep, cols);
}

}  // namespace

void validate_rep(const TourRepresentation& rep) {
  std::set<int> seen;
  for (int id : rep.prime) {
    if (!rep.graph.has_edge(id))
      throw LookupError("prime edge id " + std::to_string(id) +
                        " not in graph");
    if (!seen.insert(id).second)
      throw StructureError("edge id " + std::to_string(id) +
                           " listed twice in representation");
  }
  for (int id : rep.nonprime) {
    if (!rep.graph.has_edge(id))
      throw LookupError("nonprime edge id " + std::to_string(id) +
                        " not in graph");
    if (!seen.insert(id).second)
      throw StructureError("edge id " + std::to_string(id) +
                           " listed twice in representation");
  }
  if (seen.size() != rep.graph.edges().size())
    throw StructureError(
        "representation does not cover every edge of the graph");
}

RatMatrix q_matrix(const TourRepresentation& rep) {
  return columns_of(rep, rep.prime);
}

RatMatrix s_matrix(const TourRepresentation& rep) {
  return columns_of(rep, rep.nonprime);
}

std::string rep_kind_name(RepKind k) {
  switch (k) {
    case RepKind::Network:
      return "network";
    case RepKind::Binet:
      return "binet";
    case RepKind::Tour:
      return "tour";
    case RepKind::None:
      return "none";
  }
  return "?";
}

RepKind classify_rep(const TourRepresentation& rep) {
  validate_rep(rep);
  int n_nodes = static_cast<int>(rep.graph.nodes().size());
  int n_prime = static_cast<int>(rep.prime.size());
  RatMatrix q = q_matrix(rep);
  if (is_directed_graph(rep.graph)) {
    auto comps = connected_components(rep.graph);
    if (n_prime == n_nodes - static_cast<int>(comps.size()) &&
        rank_q(q) == n_prime)
      return RepKind::Network;
  }
  if (n_prime == n_nodes) {
    if (det(q) != 0) return RepKind::Binet;
    return RepKind::None;
  }
  if (rank_q(q) == n_nodes) return RepKind::Tour;
  return RepKind::None;
}

RatMatrix compute_matrix(const TourRepresentation& rep) {
  validate_rep(rep);
  int n_nodes = static_cast<int>(rep.graph.nodes().size());
  int n_prime = static_cast<int>(rep.prime.size());
  RatMatrix q = q_matrix(rep);
  RatMatrix s = s_matrix(rep);
  if (n_prime == n_nodes) {
    if (n_prime == 0) return RatMatrix(0, static_cast<int>(rep.nonprime.size()));
    if (det(q) == 0)
      throw RepresentationError(
          "prime incidence basis is singular; dependent prime edges " +
          id_list(dependent_prime_subset(q, rep.prime)));
    return solve(q, s);
  }
  if (is_directed_graph(rep.graph)) {
    auto comps = connected_components(rep.graph);
    if (n_prime == n_nodes - static_cast<int>(comps.size())) {
      auto drop = dropped_rows(rep.graph);
      RatMatrix r = without_rows(q, drop);
      RatMatrix s2 = without_rows(s, drop);
      if (r.rows() != r.cols())
        throw RepresentationError("prime count does not match a spanning forest");
      if (r.rows() == 0) return RatMatrix(0, s2.cols());
      if (det(r) == 0)
        throw RepresentationError(
            "prime edges do not form a spanning forest; dependent prime "
            "edges " +
            id_list(dependent_prime_subset(r, rep.prime)));
      return solve(r, s2);
    }
    throw RepresentationError(
        "directed graph has " + std::to_string(n_prime) + " prime edges, " +
        std::to_string(n_nodes) + " nodes and " +
        std::to_string(comps.size()) +
        " components; expected nodes minus components");
  }
  throw RepresentationError(
      "cannot solve for the represented matrix: need one prime per node or "
      "a directed graph with a spanning forest of primes");
}

VerificationReport verify_tour(const TourRepresentation& rep,
                               const RatMatrix& b) {
  validate_rep(rep);
  if (b.rows() != static_cast<int>(rep.prime.size()) ||
      b.cols() != static_cast<int>(rep.nonprime.size()))
    throw ShapeError("matrix is " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + " but representation has " +
                     std::to_string(rep.prime.size()) + " prime and " +
                     std::to_string(rep.nonprime.size()) +
                     " nonprime edges");
  VerificationReport report;

  bool entries_ok = true;
  std::string entry_detail = "all entries lie in {0,+1,-1}";
  for (int i = 0; i < b.rows() && entries_ok; ++i)
    for (int j = 0; j < b.cols(); ++j) {
      const Rational& v = b.at(i, j);
      if (v != 0 && v != 1 && v != -1) {
        entries_ok = false;
        entry_detail = "entry (" + std::to_string(i) + "," +
                       std::to_string(j) + ") = " + rat_to_string(v);
        break;
      }
    }
  report.add("entries", entries_ok, entry_detail);

  RatMatrix q = q_matrix(rep);
  RatMatrix s = s_matrix(rep);
  RatMatrix qb = q * b;
  bool equation_ok = true;
  std::string equation_detail = "Q B = S";
  for (int j = 0; j < s.cols() && equation_ok; ++j)
    for (int i = 0; i < s.rows(); ++i) {
      if (qb.at(i, j) != s.at(i, j)) {
        equation_ok = false;
        std::ostringstream os;
        os << "column " << j << " differs: (Q B - S)(" << i << "," << j
           << ") = " << rat_to_string(qb.at(i, j) - s.at(i, j));
        equation_detail = os.str();
        break;
      }
    }
  report.add("equation", equation_ok, equation_detail);

  int rank = rank_q(q);
  report.add("rank", rank == q.rows(),
             "prime incidence rank " + std::to_string(rank) + " of " +
                 std::to_string(q.rows()) + " rows");
  return report;
}

FundamentalCircuit fundamental_circuit(const TourRepresentation& rep,
                                       int nonprime_id) {
  auto it = std::find(rep.nonprime.begin(), rep.nonprime.end(), nonprime_id);
  if (it == rep.nonprime.end())
    throw LookupError("edge " + std::to_string(nonprime_id) +
                      " is not a nonprime edge");
  int j = static_cast<int>(it - rep.nonprime.begin());
  RatMatrix b = compute_matrix(rep);
  FundamentalCircuit fc;
  fc.column = b.col(j);
  for (std::size_t i = 0; i < rep.prime.size(); ++i)
    if (fc.column[i] != 0) fc.support.push_back(rep.prime[i]);
  std::vector<int> subgraph = fc.support;
  subgraph.push_back(nonprime_id);
  fc.cls = classify_subgraph(rep.graph, subgraph);
  return fc;
}

TourRepresentation network_to_binet_loop(const TourRepresentation& rep,
                                         int nonprime_link_id) {
  if (std::find(rep.nonprime.begin(), rep.nonprime.end(), nonprime_link_id) ==
      rep.nonprime.end())
    throw OperandError("edge " + std::to_string(nonprime_link_id) +
                       " is not a nonprime edge");
  const Edge& e = rep.graph.edge(nonprime_link_id);
  if (!e.is_link())
    throw OperandError("edge " + std::to_string(nonprime_link_id) +
                       " is not a link");
  int keep = std::min(e.ends[0].node, e.ends[1].node);
  int gone = std::max(e.ends[0].node, e.ends[1].node);
  // Inserting a negative parallel link and contracting it amounts to a
  // switching at the kept endpoint followed by merging the two endpoints.
  TourRepresentation out = rep;
  out.graph = merge_nodes(switch_node(rep.graph, keep), keep, gone);
  return out;
}

TourRepresentation network_to_binet_all(const TourRepresentation& rep) {
  auto comps = connected_components(rep.graph);
  TourRepresentation out = rep;
  for (const auto& comp : comps) {
    int chosen = -1;
    for (int id : rep.nonprime) {
      const Edge& e = rep.graph.edge(id);
      if (!e.is_link()) continue;
      if (std::binary_search(comp.begin(), comp.end(), e.ends[0].node)) {
        chosen = id;
        break;
      }
    }
    if (chosen < 0)
      throw RepresentationError("component with nodes " + id_list(comp) +
                                " has no nonprime link");
    out = network_to_binet_loop(out, chosen);
  }
  return out;
}

TourRepresentation trivial_tour_from_tu(const RatMatrix& b, int cap) {
  if (!b.is_sign_matrix())
    throw OperandError("matrix has an entry outside {0,+1,-1}");
  int n = b.rows();
  TourRepresentation rep;
  if (n == 0) {
    for (int j = 0; j < b.cols(); ++j) {
      rep.graph.add_edge(Edge{j, {}});
      rep.nonprime.push_back(j);
    }
    return rep;
  }
  std::vector<int> all_rows(n);
  for (int i = 0; i < n; ++i) all_rows[i] = i;
  auto signing = equitable_signing(b, all_rows, cap);
  if (!signing)
    throw OperandError(
        "matrix admits no equitable signing of its full row set, so it is "
        "not totally unimodular");
  const std::vector<int>& x = *signing;

  if (n == 1) {
    rep.graph.add_node(0);
    rep.graph.add_edge(Edge{0, {{0, x[0]}, {0, x[0]}}});
    rep.prime.push_back(0);
    for (int j = 0; j < b.cols(); ++j) {
      Rational v = Rational(2 * x[0]) * b.at(0, j);
      Edge e = column_to_edge({v}, rep.graph.nodes(), 1 + j);
      rep.graph.add_edge(e);
      rep.nonprime.push_back(1 + j);
    }
    return rep;
  }

  rep.graph.add_node(0);
  rep.graph.add_node(1);
  // Prime for row 0: a negative loop at node 0. Primes for the other rows:
  // links between the two nodes carrying the signing values.
  rep.graph.add_edge(Edge{0, {{0, x[0]}, {0, x[0]}}});
  rep.prime.push_back(0);
  for (int i = 1; i < n; ++i) {
    rep.graph.add_edge(Edge{i, {{0, x[i]}, {1, x[i]}}});
    rep.prime.push_back(i);
  }
  for (int j = 0; j < b.cols(); ++j) {
    Rational t(0);
    for (int i = 0; i < n; ++i) t += Rational(x[i]) * b.at(i, j);
    Rational u = Rational(x[0]) * b.at(0, j);
    Edge e = column_to_edge({t + u, t - u}, rep.graph.nodes(), n + j);
    rep.graph.add_edge(e);
    rep.nonprime.push_back(n + j);
  }
  return rep;
}

}  // namespace tourforge
