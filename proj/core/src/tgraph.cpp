#include "cayleylab/tgraph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "cayleylab/error.hpp"

namespace cayleylab {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<Edge> edges,
                         std::vector<std::string> labels)
    : vertex_count_(vertex_count),
      labels_(std::move(labels)),
      adj_(static_cast<size_t>(vertex_count) * vertex_count, false),
      degrees_(vertex_count, 0) {
  if (vertex_count < 0) throw InvalidArgument("negative vertex count");
  if (labels_.empty()) {
    for (int v = 0; v < vertex_count; ++v) labels_.push_back(std::to_string(v + 1));
  }
  if (static_cast<int>(labels_.size()) != vertex_count) {
    throw InvalidArgument("label count differs from vertex count");
  }
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (u == v) throw InvalidArgument("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (adj_[u * vertex_count + v]) throw InvalidArgument("repeated edge");
    adj_[u * vertex_count + v] = adj_[v * vertex_count + u] = true;
    ++degrees_[u];
    ++degrees_[v];
    edges_.emplace_back(u, v);
  }
}

SimpleGraph transposition_graph(int n, const std::vector<Permutation>& transpositions) {
  std::vector<SimpleGraph::Edge> edges;
  for (const auto& t : transpositions) {
    if (t.degree() != n) throw InvalidArgument("generator has wrong degree");
    if (!t.is_transposition()) {
      throw InvalidArgument(t.to_string() + " is not a transposition");
    }
    auto moved = support(t);
    edges.emplace_back(moved[0] - 1, moved[1] - 1);
  }
  return SimpleGraph(n, std::move(edges));
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v) && !seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return static_cast<int>(queue.size()) == g.vertex_count();
}

SimpleGraph line_graph(const SimpleGraph& g) {
  const auto& es = g.edges();
  std::vector<std::string> labels;
  for (auto [u, v] : es) labels.push_back("(" + g.label(u) + "," + g.label(v) + ")");
  std::vector<SimpleGraph::Edge> ledges;
  for (size_t a = 0; a < es.size(); ++a) {
    for (size_t b = a + 1; b < es.size(); ++b) {
      auto [p, q] = es[a];
      auto [r, s] = es[b];
      if (p == r || p == s || q == r || q == s) {
        ledges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return SimpleGraph(static_cast<int>(es.size()), std::move(ledges), std::move(labels));
}

PermGroup small_graph_automorphisms(const SimpleGraph& g, std::uint64_t cap) {
  const int nv = g.vertex_count();
  if (nv > kSmallGraphVertexCap) {
    throw CapExceeded("small-graph automorphism search is limited to " +
                      std::to_string(kSmallGraphVertexCap) + " vertices");
  }
  std::vector<VertexMap> found;
  std::vector<int> image(nv, -1);
  std::vector<bool> used(nv, false);

  std::function<void(int)> extend = [&](int v) {
    if (v == nv) {
      if (found.size() >= cap) {
        throw CapExceeded("automorphism count exceeds element cap");
      }
      std::vector<VertexMap::Index> imgs(image.begin(), image.end());
      found.emplace_back(std::move(imgs));
      return;
    }
    for (int c = 0; c < nv; ++c) {
      if (used[c] || g.degree(c) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = g.adjacent(u, v) == g.adjacent(image[u], c);
      }
      if (!ok) continue;
      image[v] = c;
      used[c] = true;
      extend(v + 1);
      used[c] = false;
    }
    image[v] = -1;
  };
  extend(0);

  PermGroup group = closure(found, static_cast<size_t>(nv), cap);
  if (group.order() != found.size()) {
    throw ConsistencyError("automorphism enumeration is not closed");
  }
  return group;
}

VertexMap induced_edge_map(const SimpleGraph& g, const VertexMap& vertex_map) {
  const auto& es = g.edges();
  std::vector<VertexMap::Index> images(es.size());
  for (size_t k = 0; k < es.size(); ++k) {
    int u = vertex_map[es[k].first];
    int v = vertex_map[es[k].second];
    if (u > v) std::swap(u, v);
    auto it = std::find(es.begin(), es.end(), SimpleGraph::Edge{u, v});
    if (it == es.end()) {
      throw InvalidArgument("vertex map does not preserve the edge set");
    }
    images[k] = static_cast<VertexMap::Index>(it - es.begin());
  }
  return VertexMap(std::move(images));
}

WhitneyReport whitney_check(const SimpleGraph& g) {
  if (g.vertex_count() < 5) {
    throw PreconditionError("line-graph correspondence needs at least 5 vertices");
  }
  if (!is_connected(g)) {
    throw PreconditionError("line-graph correspondence needs a connected graph");
  }
  const PermGroup aut = small_graph_automorphisms(g);
  const SimpleGraph lg = line_graph(g);
  const PermGroup laut = small_graph_automorphisms(lg);

  std::set<VertexMap> induced;
  bool all_inside = true;
  for (const auto& a : aut.elements()) {
    VertexMap m = induced_edge_map(g, a);
    all_inside = all_inside && laut.contains(m);
    induced.insert(std::move(m));
  }
  WhitneyReport r;
  r.graph_aut_order = aut.order();
  r.line_aut_order = laut.order();
  r.injective = induced.size() == aut.order();
  r.surjective = all_inside && induced.size() == laut.order();
  r.holds = r.injective && r.surjective && r.graph_aut_order == r.line_aut_order;
  return r;
}

std::string to_dimacs(const SimpleGraph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

nlohmann::json to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", g.vertex_count()}, {"edges", edges}, {"labels", g.labels()}};
}

}  // namespace cayleylab
