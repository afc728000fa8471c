#include "cayleylab/cayley.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "cayleylab/error.hpp"

namespace cayleylab {

std::vector<size_t> DistancePartition::layer_sizes() const {
  std::vector<size_t> sizes;
  for (const auto& layer : layers) sizes.push_back(layer.size());
  return sizes;
}

bool CayleyGraph::is_complete() const {
  return generators_.size() == static_cast<size_t>(n_ * (n_ - 1) / 2);
}

VertexId CayleyGraph::index_of(const Permutation& p) const {
  if (p.degree() != n_) throw InvalidArgument("vertex has wrong degree");
  return static_cast<VertexId>(rank(p));
}

std::optional<size_t> CayleyGraph::connecting_generator(VertexId u,
                                                        VertexId v) const {
  const Permutation tau = compose(vertex(v), inverse(vertex(u)));
  auto it = std::find(generators_.begin(), generators_.end(), tau);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<size_t>(it - generators_.begin());
}

std::vector<VertexId> CayleyGraph::neighbors(VertexId v) const {
  const Permutation alpha = vertex(v);
  std::vector<VertexId> out;
  out.reserve(generators_.size());
  for (const auto& tau : generators_) out.push_back(index_of(compose(tau, alpha)));
  return out;
}

CayleyGraph build_cayley(int n, std::vector<Permutation> transpositions,
                         const BuildOptions& options) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  const int limit = std::min(options.max_n, kCayleyHardMaxN);
  if (n > limit) {
    throw CapExceeded("Cayley graph of S_" + std::to_string(n) +
                      " exceeds the size cap n <= " + std::to_string(limit));
  }
  if (transpositions.empty()) throw InvalidArgument("connection set is empty");
  std::set<Permutation> distinct(transpositions.begin(), transpositions.end());
  if (distinct.size() != transpositions.size()) {
    throw InvalidArgument("connection set contains duplicates");
  }

  CayleyGraph g;
  g.n_ = n;
  g.tgraph_ = transposition_graph(n, transpositions);
  if (!is_connected(g.tgraph_)) {
    throw InvalidArgument("S does not generate S_n");
  }
  g.generators_ = std::move(transpositions);
  g.vertex_count_ = static_cast<size_t>(factorial(n));
  g.layers_ = distance_partition(g, g.identity_vertex());
  return g;
}

std::vector<Permutation> generator_preset(int n, std::string_view spec) {
  std::vector<Permutation> out;
  auto t = [n](int i, int j) { return Permutation::transposition(n, i, j); };
  if (!spec.empty() && spec.front() == '(') return parse_permutation_list(n, spec);
  if (spec == "complete") {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) out.push_back(t(i, j));
  } else if (spec == "star") {
    for (int k = 2; k <= n; ++k) out.push_back(t(1, k));
  } else if (spec == "path") {
    for (int k = 1; k < n; ++k) out.push_back(t(k, k + 1));
  } else if (spec.starts_with("cycle")) {
    auto suffix = spec.substr(5);
    if (!suffix.empty() && suffix != std::to_string(n)) {
      throw InvalidArgument("preset '" + std::string(spec) +
                            "' does not match n = " + std::to_string(n));
    }
    if (n < 3) throw InvalidArgument("cycle preset needs n >= 3");
    for (int k = 1; k < n; ++k) out.push_back(t(k, k + 1));
    out.push_back(t(1, n));
  } else {
    throw InvalidArgument("unknown generator preset '" + std::string(spec) + "'");
  }
  return out;
}

DistancePartition distance_partition(const CayleyGraph& graph, VertexId root) {
  DistancePartition dp;
  dp.layer_of.assign(graph.vertex_count(), -1);
  dp.layer_of[root] = 0;
  dp.layers.push_back({root});
  while (true) {
    std::vector<VertexId> next;
    for (VertexId u : dp.layers.back()) {
      for (VertexId v : graph.neighbors(u)) {
        if (dp.layer_of[v] < 0) {
          dp.layer_of[v] = static_cast<int>(dp.layers.size());
          next.push_back(v);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    dp.layers.push_back(std::move(next));
  }
  return dp;
}

std::vector<VertexId> common_neighbors(const CayleyGraph& graph, VertexId u,
                                       VertexId v) {
  auto a = graph.neighbors(u);
  auto b = graph.neighbors(v);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

int four_cycles_through(const CayleyGraph& graph, VertexId a, VertexId b,
                        VertexId c) {
  if (a == b || b == c || a == c) return 0;
  // The fourth vertex d is adjacent to two of the anchors, so it lies in
  // some pairwise common-neighbor set. Each 4-vertex set carries at most
  // three cyclic orders; count the ones whose four edges all exist.
  std::set<VertexId> fourth;
  for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
    for (VertexId d : common_neighbors(graph, x, y)) {
      if (d != a && d != b && d != c) fourth.insert(d);
    }
  }
  auto is_cycle = [&](VertexId p, VertexId q, VertexId r, VertexId s) {
    return graph.adjacent(p, q) && graph.adjacent(q, r) &&
           graph.adjacent(r, s) && graph.adjacent(s, p);
  };
  int count = 0;
  for (VertexId d : fourth) {
    count += is_cycle(a, b, c, d);
    count += is_cycle(a, b, d, c);
    count += is_cycle(a, c, b, d);
  }
  return count;
}

std::vector<VertexId> w_set(const CayleyGraph& graph, VertexId gamma) {
  const auto& layer_of = graph.layers().layer_of;
  if (layer_of[gamma] != 2) {
    throw PreconditionError(graph.vertex(gamma).to_string() +
                            " is not at distance 2 from e");
  }
  std::vector<VertexId> out;
  for (VertexId v : graph.neighbors(gamma)) {
    if (layer_of[v] == 3) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AdjacencyCache::AdjacencyCache(const CayleyGraph& graph)
    : vertex_count_(graph.vertex_count()),
      valency_(graph.valency()),
      words_((graph.vertex_count() + 63) / 64),
      table_(vertex_count_ * valency_),
      bits_(vertex_count_ * words_, 0) {
  for (VertexId v = 0; v < vertex_count_; ++v) {
    auto nbrs = graph.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end());
    std::copy(nbrs.begin(), nbrs.end(), table_.begin() + v * valency_);
    for (VertexId w : nbrs) bits_[v * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
  }
}

int AdjacencyCache::common_neighbor_count(VertexId u, VertexId v) const {
  int count = 0;
  for (size_t k = 0; k < words_; ++k) {
    count += std::popcount(bits_[u * words_ + k] & bits_[v * words_ + k]);
  }
  return count;
}

nlohmann::json to_json(const CayleyGraph& graph) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& t : graph.generators()) gens.push_back(t.to_string());
  nlohmann::json vertices = nlohmann::json::array();
  nlohmann::json edges = nlohmann::json::array();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    vertices.push_back(graph.vertex(v).to_string());
    for (VertexId w : graph.neighbors(v)) {
      if (v < w) edges.push_back({v, w});
    }
  }
  return {{"n", graph.n()}, {"generators", gens}, {"vertices", vertices},
          {"edges", edges}};
}

std::string to_dimacs(const CayleyGraph& graph) {
  std::ostringstream out;
  out << "p edge " << graph.vertex_count() << ' '
      << graph.vertex_count() * graph.valency() / 2 << '\n';
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    auto nbrs = graph.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end());
    for (VertexId w : nbrs) {
      if (v < w) out << "e " << v + 1 << ' ' << w + 1 << '\n';
    }
  }
  return out.str();
}

}  // namespace cayleylab
