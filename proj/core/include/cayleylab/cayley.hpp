#ifndef CAYLEYLAB_CAYLEY_HPP
#define CAYLEYLAB_CAYLEY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cayleylab/perm.hpp"
#include "cayleylab/tgraph.hpp"

namespace cayleylab {

using VertexId = std::uint32_t;

// X_0(e), X_1(e), ..., X_d(e) with d the diameter.
struct DistancePartition {
  std::vector<std::vector<VertexId>> layers;  // each ascending
  std::vector<int> layer_of;                  // indexed by vertex

  int diameter() const { return static_cast<int>(layers.size()) - 1; }
  std::vector<size_t> layer_sizes() const;
};

struct BuildOptions {
  // Whole-graph operations stop at n = 5 unless raised; 6 is the hard limit.
  int max_n = 5;
};

inline constexpr int kCayleyHardMaxN = 6;

// Cay(S_n, S) for a set S of transpositions: vertex v is unrank(n, v), and
// alpha ~ beta iff beta = tau * alpha for some tau in S. Neighbors are
// computed from the generators on demand; the BFS layers from e are built
// once at construction.
class CayleyGraph {
 public:
  int n() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  size_t vertex_count() const { return vertex_count_; }
  size_t valency() const { return generators_.size(); }
  // True when S is every transposition of S_n.
  bool is_complete() const;

  VertexId identity_vertex() const { return 0; }
  Permutation vertex(VertexId v) const { return unrank(n_, v); }
  VertexId index_of(const Permutation& p) const;
  // Index of the generator tau with v = tau * u, if any.
  std::optional<size_t> connecting_generator(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const {
    return connecting_generator(u, v).has_value();
  }
  std::vector<VertexId> neighbors(VertexId v) const;

  const SimpleGraph& transposition_graph() const { return tgraph_; }
  const DistancePartition& layers() const { return layers_; }

 private:
  friend CayleyGraph build_cayley(int, std::vector<Permutation>,
                                  const BuildOptions&);
  int n_ = 0;
  size_t vertex_count_ = 0;
  std::vector<Permutation> generators_;
  SimpleGraph tgraph_;
  DistancePartition layers_;
};

// Throws InvalidArgument for an empty set, non-transpositions, duplicates,
// or a disconnected transposition graph ("S does not generate S_n"), and
// CapExceeded when n exceeds options.max_n.
CayleyGraph build_cayley(int n, std::vector<Permutation> transpositions,
                         const BuildOptions& options = {});

// Named generator families: "complete", "star" {(1,k)}, "path" {(k,k+1)},
// "cycle" (path plus (1,n)). "cycleN" is accepted when N == n. Anything
// starting with '(' is parsed as an explicit list.
std::vector<Permutation> generator_preset(int n, std::string_view spec);

// BFS layers from `root`.
DistancePartition distance_partition(const CayleyGraph& graph, VertexId root);
inline const DistancePartition& distance_partition(const CayleyGraph& graph) {
  return graph.layers();
}

std::vector<VertexId> common_neighbors(const CayleyGraph& graph, VertexId u,
                                       VertexId v);

// Number of distinct 4-cycles (edge sets) whose vertex set contains a, b
// and c.
int four_cycles_through(const CayleyGraph& graph, VertexId a, VertexId b,
                        VertexId c);

// Neighbors of gamma at distance 3 from e. Throws PreconditionError unless
// gamma is at distance 2.
std::vector<VertexId> w_set(const CayleyGraph& graph, VertexId gamma);

// Dense neighbor table and adjacency bit matrix for searches.
class AdjacencyCache {
 public:
  explicit AdjacencyCache(const CayleyGraph& graph);

  size_t vertex_count() const { return vertex_count_; }
  size_t valency() const { return valency_; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {table_.data() + v * valency_, valency_};
  }
  bool adjacent(VertexId u, VertexId v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  int common_neighbor_count(VertexId u, VertexId v) const;

 private:
  size_t vertex_count_;
  size_t valency_;
  size_t words_;
  std::vector<VertexId> table_;
  std::vector<std::uint64_t> bits_;
};

// {"n", "generators", "vertices", "edges"} with 0-based vertex indices in
// "edges" matching positions in "vertices".
nlohmann::json to_json(const CayleyGraph& graph);
std::string to_dimacs(const CayleyGraph& graph);

}  // namespace cayleylab

#endif  // CAYLEYLAB_CAYLEY_HPP
