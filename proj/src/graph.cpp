#include "cyclebound/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

#include "cyclebound/errors.hpp"

namespace cyclebound {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw ValidationError("vertex count must be at least 1");

  for (auto& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw ValidationError("vertex index out of range on edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v));
    if (e.u == e.v) throw ValidationError("loop at vertex " + std::to_string(e.u));
    if (!e.weight.is_positive())
      throw ValidationError("non-positive weight on edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw ValidationError("duplicate edge " + std::to_string(edges_[i].u) + "-" +
                            std::to_string(edges_[i].v));
  }

  adj_.resize(n_);
  for (int i = 0; i < edge_count(); ++i) {
    adj_[edges_[i].u].push_back({edges_[i].v, i});
    adj_[edges_[i].v].push_back({edges_[i].u, i});
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end(),
              [](const AdjEntry& a, const AdjEntry& b) { return a.to < b.to; });
  }

  // Component count by BFS.
  std::vector<char> seen(n_, 0);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    ++component_count_;
    queue.assign(1, s);
    seen[s] = 1;
    while (!queue.empty()) {
      VertexId v = queue.back();
      queue.pop_back();
      for (const auto& a : adj_[v]) {
        if (!seen[a.to]) {
          seen[a.to] = 1;
          queue.push_back(a.to);
        }
      }
    }
  }
  connected_ = component_count_ == 1;
}

int WeightedGraph::edge_between(VertexId u, VertexId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
  const auto& list = adj_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const AdjEntry& a, VertexId x) { return a.to < x; });
  if (it != list.end() && it->to == v) return it->edge;
  return -1;
}

bool WeightedGraph::is_complete() const {
  return edge_count() == n_ * (n_ - 1) / 2;
}

Rational WeightedGraph::total_weight() const {
  Rational sum;
  for (const auto& e : edges_) sum += e.weight;
  return sum;
}

namespace {

int parse_vertex_token(const std::string& tok, int line) {
  if (tok.empty()) throw ParseError(line, "missing vertex index");
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line, "malformed vertex index '" + tok + "'");
  }
  if (tok.size() > 9) throw ParseError(line, "vertex index '" + tok + "' too large");
  return std::stoi(tok);
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen_pairs;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;  // blank or comment-only

    if (kind == "n") {
      if (n != -1) throw ParseError(line_no, "duplicate 'n' header");
      std::string tok;
      if (!(ls >> tok)) throw ParseError(line_no, "missing vertex count");
      n = parse_vertex_token(tok, line_no);
      if (n < 1) throw ParseError(line_no, "vertex count must be at least 1");
    } else if (kind == "e") {
      if (n == -1) throw ParseError(line_no, "edge before 'n' header");
      std::string ut, vt, wt;
      if (!(ls >> ut >> vt >> wt)) throw ParseError(line_no, "malformed edge record");
      int u = parse_vertex_token(ut, line_no);
      int v = parse_vertex_token(vt, line_no);
      if (u >= n || v >= n)
        throw ParseError(line_no, "vertex index out of range (n = " + std::to_string(n) + ")");
      if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
      Rational w;
      try {
        w = Rational::parse(wt);
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      }
      if (!w.is_positive()) throw ParseError(line_no, "edge weight must be positive");
      auto key = std::minmax(u, v);
      std::pair<VertexId, VertexId> pair{key.first, key.second};
      if (!seen_pairs.insert(pair).second)
        throw ParseError(line_no, "duplicate edge " + std::to_string(pair.first) + "-" +
                                      std::to_string(pair.second));
      edges.push_back({pair.first, pair.second, std::move(w)});
    } else {
      throw ParseError(line_no, "unknown record '" + kind + "'");
    }

    std::string extra;
    if (ls >> extra) throw ParseError(line_no, "trailing content '" + extra + "'");
  }
  if (n == -1) throw ParseError(line_no, "missing 'n' header");
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) out << "e " << e.u << " " << e.v << " " << e.weight.str() << "\n";
  return out.str();
}

WeightedGraph reweight(const WeightedGraph& g, const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != g.edge_count())
    throw ValidationError("reweight: expected one weight per edge");
  std::vector<Edge> edges = g.edges();
  for (size_t i = 0; i < edges.size(); ++i) edges[i].weight = weights[i];
  return WeightedGraph(g.vertex_count(), std::move(edges));
}

WeightedGraph uniform_weights(const WeightedGraph& g) {
  return reweight(g, std::vector<Rational>(g.edge_count(), Rational(1)));
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw ValidationError("induced_subgraph: duplicate vertex");
  if (vertices.empty()) throw ValidationError("induced_subgraph: empty vertex set");
  if (vertices.front() < 0 || vertices.back() >= g.vertex_count())
    throw ValidationError("induced_subgraph: vertex out of range");

  std::vector<int> new_id(g.vertex_count(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) new_id[vertices[i]] = static_cast<int>(i);

  std::vector<Edge> edges;
  std::vector<int> edge_to_original;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) {
      edges.push_back({new_id[e.u], new_id[e.v], e.weight});
      edge_to_original.push_back(i);
    }
  }
  // Both lists are (u, v)-sorted and the relabeling is monotone, so edge
  // order is preserved and edge_to_original lines up with graph.edges().
  return {WeightedGraph(static_cast<int>(vertices.size()), std::move(edges)),
          std::move(vertices), std::move(edge_to_original)};
}

}  // namespace cyclebound
