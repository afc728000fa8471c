#include "cayleylab/aut.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "cayleylab/error.hpp"
#include "cayleylab/structured.hpp"

namespace cayleylab {
namespace {

// Vertices are assigned in BFS order from e; every vertex after e has an
// earlier BFS parent, so its image must be a neighbor of the parent's image.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const CayleyGraph& graph, const AdjacencyCache& adj,
                     const std::vector<std::pair<VertexId, VertexId>>& pinned)
      : adj_(adj), n_(adj.vertex_count()), pin_(n_, -1) {
    const auto& layers = graph.layers();
    for (const auto& layer : layers.layers) {
      for (VertexId v : layer) order_.push_back(v);
    }
    layer_ = layers.layer_of;
    parent_.assign(n_, 0);
    std::vector<bool> has_parent(n_, false);
    for (VertexId v : order_) {
      for (VertexId w : adj_.neighbors(v)) {
        if (layer_[w] == layer_[v] + 1 && !has_parent[w]) {
          parent_[w] = v;
          has_parent[w] = true;
        }
      }
    }
    dist2_.resize(n_);
    {
      std::vector<int> mark(n_, -1);
      for (VertexId v = 0; v < n_; ++v) {
        mark[v] = static_cast<int>(v);
        for (VertexId w : adj_.neighbors(v)) mark[w] = static_cast<int>(v);
        for (VertexId w : adj_.neighbors(v)) {
          for (VertexId x : adj_.neighbors(w)) {
            if (mark[x] != static_cast<int>(v)) {
              mark[x] = static_cast<int>(v);
              dist2_[v].push_back(x);
            }
          }
        }
      }
    }
    codegree_e_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) {
      codegree_e_[v] = adj_.common_neighbor_count(v, graph.identity_vertex());
    }
    for (auto [v, w] : pinned) {
      if (v >= n_ || w >= n_) throw InvalidArgument("pinned vertex out of range");
      pin_[v] = static_cast<int>(w);
    }
  }

  struct State {
    std::vector<int> image;
    std::vector<bool> used;
    std::vector<int> dist_root;  // distances from the image of e
    size_t mapped = 0;
  };

  State initial() const {
    return State{std::vector<int>(n_, -1), std::vector<bool>(n_, false), {}, 0};
  }

  std::vector<VertexId> candidates(const State& s, size_t pos) const {
    const VertexId v = order_[pos];
    std::vector<VertexId> pool;
    if (pin_[v] >= 0) {
      pool.push_back(static_cast<VertexId>(pin_[v]));
    } else if (pos == 0) {
      for (VertexId c = 0; c < n_; ++c) pool.push_back(c);
    } else {
      auto nb = adj_.neighbors(static_cast<VertexId>(s.image[parent_[v]]));
      pool.assign(nb.begin(), nb.end());
    }
    std::vector<VertexId> out;
    for (VertexId c : pool) {
      if (s.used[c]) continue;
      if (pos > 0 && !consistent(s, v, c)) continue;
      out.push_back(c);
    }
    return out;
  }

  void assign(State& s, size_t pos, VertexId c) const {
    s.image[order_[pos]] = static_cast<int>(c);
    s.used[c] = true;
    ++s.mapped;
    if (pos == 0) s.dist_root = bfs(c);
  }

  void unassign(State& s, size_t pos) const {
    s.used[s.image[order_[pos]]] = false;
    s.image[order_[pos]] = -1;
    --s.mapped;
  }

  // Depth-first enumeration from `pos`. Returns false once `limit` results
  // have been collected.
  bool dfs(State& s, size_t pos, std::vector<VertexMap>& out, size_t limit) const {
    if (pos == n_) {
      std::vector<VertexMap::Index> imgs(s.image.begin(), s.image.end());
      out.emplace_back(std::move(imgs));
      return limit == 0 || out.size() < limit;
    }
    for (VertexId c : candidates(s, pos)) {
      assign(s, pos, c);
      bool more = dfs(s, pos + 1, out, limit);
      unassign(s, pos);
      if (!more) return false;
    }
    return true;
  }

  std::vector<VertexMap> run(size_t limit, int jobs) const {
    State s = initial();
    size_t pos = 0;
    std::vector<VertexId> branch;
    // Walk forced assignments up to the first real choice.
    for (; pos < n_; ++pos) {
      branch = candidates(s, pos);
      if (branch.size() != 1) break;
      assign(s, pos, branch.front());
    }
    std::vector<VertexMap> out;
    if (pos == n_) {
      dfs(s, pos, out, limit);
      return out;
    }
    if (branch.empty()) return out;

    std::vector<std::vector<VertexMap>> results(branch.size());
    auto work = [&](size_t i) {
      State local = s;
      assign(local, pos, branch[i]);
      dfs(local, pos + 1, results[i], limit);
    };
    const size_t workers =
        std::min<size_t>(branch.size(), static_cast<size_t>(std::max(1, jobs)));
    if (workers <= 1) {
      for (size_t i = 0; i < branch.size(); ++i) {
        work(i);
        if (limit && !results[i].empty() && results[i].size() >= limit) break;
      }
    } else {
      std::atomic<size_t> next{0};
      std::vector<std::jthread> pool;
      for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (size_t i; (i = next.fetch_add(1)) < branch.size();) work(i);
        });
      }
    }
    for (auto& r : results) {
      for (auto& m : r) {
        if (limit && out.size() >= limit) break;
        out.push_back(std::move(m));
      }
    }
    return out;
  }

 private:
  bool consistent(const State& s, VertexId v, VertexId c) const {
    const VertexId root = static_cast<VertexId>(s.image[0]);
    if (s.dist_root[c] != layer_[v]) return false;
    if (adj_.common_neighbor_count(c, root) != codegree_e_[v]) return false;
    int mapped_v = 0;
    for (VertexId u : adj_.neighbors(v)) {
      if (s.image[u] < 0) continue;
      if (!adj_.adjacent(static_cast<VertexId>(s.image[u]), c)) return false;
      ++mapped_v;
    }
    int mapped_c = 0;
    for (VertexId w : adj_.neighbors(c)) mapped_c += s.used[w];
    if (mapped_v != mapped_c) return false;
    // Common-neighbor counts (4-cycles through the pair) with mapped
    // vertices at distance two must match on both sides.
    int far_v = 0;
    for (VertexId u : dist2_[v]) {
      if (s.image[u] < 0) continue;
      const auto iu = static_cast<VertexId>(s.image[u]);
      if (adj_.common_neighbor_count(v, u) != adj_.common_neighbor_count(c, iu)) {
        return false;
      }
      ++far_v;
    }
    int far_c = 0;
    for (VertexId w : dist2_[c]) far_c += s.used[w];
    return far_v == far_c;
  }

  std::vector<int> bfs(VertexId root) const {
    std::vector<int> dist(n_, -1);
    std::vector<VertexId> queue{root};
    dist[root] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      for (VertexId w : adj_.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  const AdjacencyCache& adj_;
  size_t n_;
  std::vector<int> pin_;
  std::vector<VertexId> order_;
  std::vector<int> layer_;
  std::vector<VertexId> parent_;
  std::vector<int> codegree_e_;
  std::vector<std::vector<VertexId>> dist2_;  // vertices at distance exactly 2
};

void check_search_size(const CayleyGraph& graph) {
  if (graph.vertex_count() > 65535) {
    throw CapExceeded("vertex count exceeds the automorphism search limit");
  }
}

}  // namespace

std::vector<VertexMap> extend_automorphisms(
    const CayleyGraph& graph, const AdjacencyCache& adjacency,
    const std::vector<std::pair<VertexId, VertexId>>& pinned, size_t limit,
    int jobs) {
  check_search_size(graph);
  AutomorphismSearch search(graph, adjacency, pinned);
  return search.run(limit, jobs);
}

bool preserves_edges(const CayleyGraph& graph, const VertexMap& g) {
  if (g.domain_size() != graph.vertex_count()) return false;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for (VertexId w : graph.neighbors(v)) {
      if (!graph.adjacent(g[v], g[w])) return false;
    }
  }
  return true;
}

PermGroup automorphism_group(const CayleyGraph& graph, const SearchOptions& options) {
  check_search_size(graph);
  const AdjacencyCache adj(graph);
  const VertexId e = graph.identity_vertex();
  const size_t nv = graph.vertex_count();

  std::vector<VertexMap> stab =
      extend_automorphisms(graph, adj, {{e, e}}, 0, options.jobs);
  if (stab.size() > options.cap) {
    throw CapExceeded("vertex stabilizer exceeds element cap");
  }
  PermGroup stab_group = closure(stab, nv, options.cap);
  if (stab_group.order() != stab.size()) {
    throw ConsistencyError("stabilizer enumeration is not a group");
  }

  // Schreier tree for the orbit of e, grown as new generators are found.
  std::vector<VertexMap> gens = stab_group.generators();
  std::vector<VertexMap> transversal_gens;
  std::vector<std::optional<VertexMap>> transversal(nv);
  transversal[e] = VertexMap::identity(nv);
  std::vector<VertexId> orbit_points{e};
  auto grow_orbit = [&] {
    for (size_t head = 0; head < orbit_points.size(); ++head) {
      VertexId w = orbit_points[head];
      for (const auto& g : gens) {
        VertexId x = g[w];
        if (!transversal[x]) {
          transversal[x] = compose(*transversal[w], g);
          orbit_points.push_back(x);
        }
      }
    }
  };
  grow_orbit();
  for (VertexId v = 0; v < nv; ++v) {
    if (transversal[v]) continue;
    auto found = extend_automorphisms(graph, adj, {{e, v}}, 1, options.jobs);
    if (found.empty()) continue;
    transversal_gens.push_back(found.front());
    gens.push_back(found.front());
    // Re-run from the start so old points see the new generator.
    std::fill(transversal.begin(), transversal.end(), std::nullopt);
    transversal[e] = VertexMap::identity(nv);
    orbit_points.assign(1, e);
    grow_orbit();
  }

  for (const auto& g : gens) {
    if (!preserves_edges(graph, g)) {
      throw ConsistencyError("search produced a map that is not an automorphism");
    }
  }

  const std::uint64_t order =
      static_cast<std::uint64_t>(orbit_points.size()) * stab_group.order();
  if (order > options.cap) {
    return PermGroup::from_order(nv, std::move(gens), order);
  }
  std::sort(orbit_points.begin(), orbit_points.end());
  std::vector<VertexMap> elements;
  elements.reserve(order);
  for (VertexId v : orbit_points) {
    for (const auto& s : stab_group.elements()) {
      elements.push_back(compose(s, *transversal[v]));
    }
  }
  PermGroup group = PermGroup::from_elements(nv, std::move(gens), std::move(elements));
  if (group.order() != order) {
    throw ConsistencyError("coset enumeration produced repeated elements");
  }
  return group;
}

PermGroup little_group(const CayleyGraph& graph, const SearchOptions& options) {
  check_search_size(graph);
  const AdjacencyCache adj(graph);
  const VertexId e = graph.identity_vertex();
  std::vector<std::pair<VertexId, VertexId>> pinned{{e, e}};
  for (VertexId v : graph.neighbors(e)) pinned.emplace_back(v, v);
  auto maps = extend_automorphisms(graph, adj, pinned, 0, options.jobs);
  PermGroup group = closure(maps, graph.vertex_count(), options.cap);
  if (group.order() != maps.size()) {
    throw ConsistencyError("little group enumeration is not a group");
  }
  return group;
}

Restriction restrict_to_generators(const CayleyGraph& graph, const VertexMap& g) {
  const VertexId e = graph.identity_vertex();
  if (g[e] != e) throw PreconditionError("map does not fix the identity vertex");
  const auto& gens = graph.generators();
  std::map<VertexId, int> position;
  for (size_t k = 0; k < gens.size(); ++k) {
    position[graph.index_of(gens[k])] = static_cast<int>(k);
  }
  Restriction r;
  for (const auto& t : gens) {
    auto it = position.find(g[graph.index_of(t)]);
    if (it == position.end()) {
      throw InvalidArgument("map does not send the connection set onto itself");
    }
    r.images.push_back(it->second);
  }
  const SimpleGraph lt = line_graph(graph.transposition_graph());
  r.valid = true;
  for (int a = 0; a < lt.vertex_count() && r.valid; ++a) {
    for (int b = a + 1; b < lt.vertex_count(); ++b) {
      if (lt.adjacent(a, b) != lt.adjacent(r.images[a], r.images[b])) {
        r.valid = false;
        break;
      }
    }
  }
  return r;
}

RestrictionAnalysis restriction_analysis(const CayleyGraph& graph,
                                         const PermGroup& aut) {
  const VertexId e = graph.identity_vertex();
  RestrictionAnalysis ra;
  ra.all_valid = true;
  std::set<std::vector<int>> images;
  for (const auto& g : aut.elements()) {
    if (!g.fixes(e)) continue;
    ++ra.stabilizer_order;
    Restriction r = restrict_to_generators(graph, g);
    ra.all_valid = ra.all_valid && r.valid;
    bool trivial = true;
    for (size_t k = 0; k < r.images.size(); ++k) trivial = trivial && r.images[k] == int(k);
    ra.kernel_order += trivial;
    images.insert(std::move(r.images));
  }
  ra.image_order = images.size();
  ra.line_graph_aut_order =
      small_graph_automorphisms(line_graph(graph.transposition_graph())).order();
  ra.surjective = ra.all_valid && ra.image_order == ra.line_graph_aut_order;
  return ra;
}

PermGroup right_regular_group(const CayleyGraph& graph) {
  std::vector<VertexMap> gens;
  for (const auto& t : graph.generators()) gens.push_back(right_translation(graph, t));
  return closure(gens, graph.vertex_count());
}

CayleyNormality is_normal_cayley(const CayleyGraph& graph, const PermGroup& aut,
                                 const SearchOptions& options) {
  CayleyNormality result;
  const PermGroup regular = right_regular_group(graph);
  SubgroupNormality sn = is_normal_in(regular, aut);
  result.by_conjugation = sn.normal;
  result.witness = std::move(sn.witness);
  result.little_group_order = little_group(graph, options).order();
  if (graph.n() >= 5) {
    result.by_little_group = result.little_group_order == 1;
    if (*result.by_little_group != result.by_conjugation) {
      throw ConsistencyError("conjugation test and little-group test disagree");
    }
  }
  result.normal = result.by_conjugation;
  return result;
}

CayleyNormality is_normal_cayley(const CayleyGraph& graph,
                                 const SearchOptions& options) {
  return is_normal_cayley(graph, automorphism_group(graph, options), options);
}

std::vector<VertexId> down_neighbors(const CayleyGraph& graph, VertexId v) {
  const auto& layer_of = graph.layers().layer_of;
  std::vector<VertexId> out;
  for (VertexId w : graph.neighbors(v)) {
    if (layer_of[w] == layer_of[v] - 1) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NeighborCheck distinct_neighbor_check(const CayleyGraph& graph, int k) {
  if (!graph.is_complete()) {
    throw PreconditionError("down-neighbor check needs the complete transposition set");
  }
  if (graph.n() < 5) throw PreconditionError("hypothesis requires n >= 5");
  if (k < 3 || k > graph.layers().diameter()) {
    throw PreconditionError("layer index must lie in [3, diameter]");
  }
  std::vector<std::pair<std::vector<VertexId>, VertexId>> keyed;
  for (VertexId v : graph.layers().layers[k]) keyed.emplace_back(down_neighbors(graph, v), v);
  std::sort(keyed.begin(), keyed.end());
  NeighborCheck nc;
  const size_t m = keyed.size();
  nc.pairs_checked = m * (m - 1) / 2;
  for (size_t i = 1; i < m; ++i) {
    if (keyed[i].first == keyed[i - 1].first) {
      nc.distinct = false;
      nc.counterexample = std::pair{keyed[i - 1].second, keyed[i].second};
      break;
    }
  }
  return nc;
}

nlohmann::json group_report(const PermGroup& group) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : group.generators()) {
    gens.push_back(std::vector<int>(g.images().begin(), g.images().end()));
  }
  return {{"order", group.order()},
          {"n_generators", group.generators().size()},
          {"domain_size", group.domain_size()},
          {"generators", gens}};
}

nlohmann::json aut_report(const CayleyGraph& graph, const SearchOptions& options) {
  const PermGroup aut = automorphism_group(graph, options);
  nlohmann::json gens_text = nlohmann::json::array();
  for (const auto& t : graph.generators()) gens_text.push_back(t.to_string());

  nlohmann::json report;
  report["graph"] = {{"n", graph.n()},
                     {"generators", gens_text},
                     {"vertices", graph.vertex_count()},
                     {"valency", graph.valency()},
                     {"layer_sizes", graph.layers().layer_sizes()}};
  report["order"] = aut.order();
  report["generators"] = group_report(aut)["generators"];

  const CayleyNormality normality = is_normal_cayley(graph, aut, options);
  report["little_group_order"] = normality.little_group_order;
  nlohmann::json normal = {{"verdict", normality.normal},
                           {"by_conjugation", normality.by_conjugation}};
  normal["by_little_group"] = normality.by_little_group
                                  ? nlohmann::json(*normality.by_little_group)
                                  : nlohmann::json(nullptr);
  if (normality.witness) {
    const auto& w = *normality.witness;
    auto arr = [](const VertexMap& m) {
      return std::vector<int>(m.images().begin(), m.images().end());
    };
    normal["witness"] = {{"conjugator", arr(w.conjugator)},
                         {"element", arr(w.element)},
                         {"conjugate", arr(w.conjugate)}};
  } else {
    normal["witness"] = nullptr;
  }
  report["normal"] = normal;

  if (!aut.materialized() ||
      graph.valency() > static_cast<size_t>(kSmallGraphVertexCap)) {
    report["stabilizer_order"] = aut.order() / graph.vertex_count();
    report["restriction"] = nullptr;
    return report;
  }
  const RestrictionAnalysis ra = restriction_analysis(graph, aut);
  report["stabilizer_order"] = ra.stabilizer_order;
  report["restriction"] = {{"stabilizer_order", ra.stabilizer_order},
                           {"kernel_order", ra.kernel_order},
                           {"image_order", ra.image_order},
                           {"line_graph_aut_order", ra.line_graph_aut_order},
                           {"all_valid", ra.all_valid},
                           {"surjective", ra.surjective}};
  return report;
}

}  // namespace cayleylab
