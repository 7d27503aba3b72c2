#include "tourforge/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tourforge/errors.hpp"

namespace tourforge {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

namespace {

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json rational_to_json(const Rational& v) {
  if (is_integral(v) && v.get_num().fits_slong_p())
    return json(static_cast<long long>(v.get_num().get_si()));
  return json(rat_to_string(v));
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw ParseError("matrix entry must be an integer or a fraction string");
}

json matrix_to_json_obj(const RatMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RatMatrix matrix_from_json_obj(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw ParseError("matrix object needs rows, cols and entries");
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  if (rows < 0 || cols < 0) throw ParseError("negative matrix dimension");
  const json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows)
    throw ParseError("entry row count does not match rows");
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries.at(i);
    if (static_cast<int>(row.size()) != cols)
      throw ParseError("entry count in row " + std::to_string(i) +
                       " does not match cols");
    for (int c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(row.at(c));
  }
  return m;
}

json graph_to_json_obj(const BidirectedGraph& g) {
  json nodes = json::array();
  for (int v : g.nodes()) nodes.push_back(v);
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json ends = json::array();
    for (const auto& end : e.ends)
      ends.push_back(json{{"node", end.node}, {"label", end.label}});
    edges.push_back(json{{"id", e.id}, {"ends", ends}});
  }
  return json{{"nodes", nodes}, {"edges", edges}};
}

BidirectedGraph graph_from_json_obj(const json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
    throw ParseError("graph object needs nodes and edges");
  BidirectedGraph g;
  for (const auto& v : j.at("nodes")) g.add_node(v.get<int>());
  for (const auto& je : j.at("edges")) {
    Edge e;
    e.id = je.at("id").get<int>();
    for (const auto& jend : je.at("ends"))
      e.ends.push_back(
          {jend.at("node").get<int>(), jend.at("label").get<int>()});
    g.add_edge(std::move(e));
  }
  return g;
}

json parse_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + what);
  return j;
}

std::string resolve_ref(const std::string& base_file, const std::string& ref) {
  return (fs::path(base_file).parent_path() / ref).lexically_normal().string();
}

TourRepresentation rep_from_json_obj(const json& j,
                                     const std::string& base_file) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("prime") ||
      !j.contains("nonprime"))
    throw ParseError("representation object needs graph, prime and nonprime");
  TourRepresentation rep;
  rep.graph = load_graph(resolve_ref(base_file, j.at("graph").get<std::string>()));
  for (const auto& id : j.at("prime")) rep.prime.push_back(id.get<int>());
  for (const auto& id : j.at("nonprime"))
    rep.nonprime.push_back(id.get<int>());
  validate_rep(rep);
  return rep;
}

DecompositionNodePtr tree_node_from_json(const json& j,
                                         const std::string& base_file) {
  auto node = std::make_shared<DecompositionNode>();
  if (j.contains("matrix")) {
    node->matrix = load_matrix(
        resolve_ref(base_file, j.at("matrix").get<std::string>()));
    if (!j.contains("certificate"))
      throw ParseError("leaf node needs a certificate");
    const json& c = j.at("certificate");
    node->certificate_kind = c.at("kind").get<std::string>();
    node->certificate = rep_from_json_obj(c, base_file);
    return node;
  }
  if (!j.contains("op") || !j.contains("left") || !j.contains("right"))
    throw ParseError("internal tree node needs op, left and right");
  node->op = j.at("op").get<std::string>();
  if (j.contains("connecting")) {
    const json& c = j.at("connecting");
    if (c.contains("dbar")) {
      const json& d = c.at("dbar");
      node->dbar = d.is_string()
                       ? load_matrix(resolve_ref(base_file, d.get<std::string>()))
                       : matrix_from_json_obj(d);
    }
  }
  node->left = tree_node_from_json(j.at("left"), base_file);
  node->right = tree_node_from_json(j.at("right"), base_file);
  return node;
}

}  // namespace

std::string matrix_to_json(const RatMatrix& m) {
  return dump_canonical(matrix_to_json_obj(m));
}

RatMatrix matrix_from_json(const std::string& text) {
  return matrix_from_json_obj(parse_text(text, "matrix"));
}

RatMatrix load_matrix(const std::string& path) {
  try {
    return matrix_from_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_matrix(const RatMatrix& m, const std::string& path) {
  write_file(path, matrix_to_json(m));
}

std::string graph_to_json(const BidirectedGraph& g) {
  return dump_canonical(graph_to_json_obj(g));
}

BidirectedGraph graph_from_json(const std::string& text) {
  return graph_from_json_obj(parse_text(text, "graph"));
}

BidirectedGraph load_graph(const std::string& path) {
  try {
    return graph_from_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_graph(const BidirectedGraph& g, const std::string& path) {
  write_file(path, graph_to_json(g));
}

TourRepresentation load_rep(const std::string& path) {
  return rep_from_json_obj(parse_text(read_file(path), path), path);
}

void save_rep(const TourRepresentation& rep, const std::string& rep_path,
              const std::string& graph_filename) {
  save_graph(rep.graph, resolve_ref(rep_path, graph_filename));
  json j{{"graph", graph_filename},
         {"prime", rep.prime},
         {"nonprime", rep.nonprime}};
  write_file(rep_path, dump_canonical(j));
}

DecompositionNodePtr load_tree(const std::string& path) {
  return tree_node_from_json(parse_text(read_file(path), path), path);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void render_dot(std::ostream& os, const BidirectedGraph& g,
                const std::vector<int>* prime) {
  auto is_prime = [&](int id) {
    return prime && std::find(prime->begin(), prime->end(), id) != prime->end();
  };
  os << "digraph tour {\n";
  os << "  node [shape=circle];\n";
  for (int v : g.nodes()) os << "  n" << v << ";\n";
  for (const auto& e : g.edges()) {
    std::string style = prime ? (is_prime(e.id) ? ", style=bold" : ", style=dashed")
                              : "";
    std::string label = "e" + std::to_string(e.id);
    switch (e.kind()) {
      case EdgeKind::Link:
      case EdgeKind::Loop: {
        if (e.is_loop() && !e.is_positive())
          label += e.ends[0].label > 0 ? " (+2)" : " (-2)";
        const char* tail = e.ends[0].label > 0 ? "normal" : "none";
        const char* head = e.ends[1].label > 0 ? "normal" : "none";
        os << "  n" << e.ends[0].node << " -> n" << e.ends[1].node
           << " [dir=both, arrowtail=" << tail << ", arrowhead=" << head
           << ", label=\"" << dot_escape(label) << "\"" << style << "];\n";
        break;
      }
      case EdgeKind::HalfEdge: {
        os << "  h" << e.id << " [shape=point, style=invis];\n";
        const char* tail = e.ends[0].label > 0 ? "normal" : "none";
        os << "  n" << e.ends[0].node << " -> h" << e.id
           << " [dir=both, arrowtail=" << tail << ", arrowhead=none"
           << ", label=\"" << dot_escape(label) << "\"" << style << "];\n";
        break;
      }
      case EdgeKind::LooseEdge: {
        os << "  h" << e.id << "a [shape=point, style=invis];\n";
        os << "  h" << e.id << "b [shape=point, style=invis];\n";
        os << "  h" << e.id << "a -> h" << e.id
           << "b [dir=none, label=\"" << dot_escape(label) << "\"" << style
           << "];\n";
        break;
      }
    }
  }
  os << "}\n";
}

}  // namespace

std::string to_dot(const BidirectedGraph& g) {
  std::ostringstream os;
  render_dot(os, g, nullptr);
  return os.str();
}

std::string to_dot(const TourRepresentation& rep) {
  std::ostringstream os;
  render_dot(os, rep.graph, &rep.prime);
  return os.str();
}

}  // namespace tourforge
