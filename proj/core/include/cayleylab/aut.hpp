#ifndef CAYLEYLAB_AUT_HPP
#define CAYLEYLAB_AUT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cayleylab/cayley.hpp"
#include "cayleylab/groups.hpp"

namespace cayleylab {

struct SearchOptions {
  std::uint64_t cap = default_element_cap();
  // Worker threads for the branches at the first free choice point. The
  // result does not depend on this value.
  int jobs = 1;
};

// Every automorphism of `graph` extending `pinned` (pairs vertex -> image),
// in lexicographic order of image arrays. Stops after `limit` results when
// limit > 0. Exposed for tests and for the specialised searches below.
std::vector<VertexMap> extend_automorphisms(
    const CayleyGraph& graph, const AdjacencyCache& adjacency,
    const std::vector<std::pair<VertexId, VertexId>>& pinned,
    size_t limit = 0, int jobs = 1);

// The full automorphism group. Elements are materialized when the order is
// at most options.cap; otherwise the result carries generators and order
// only. Every generator is re-checked edge by edge before returning.
PermGroup automorphism_group(const CayleyGraph& graph,
                             const SearchOptions& options = {});

// L_e: automorphisms fixing e and each neighbor of e, found by a search
// with those vertices pinned (not by filtering the full group).
PermGroup little_group(const CayleyGraph& graph, const SearchOptions& options = {});

// True when g maps every edge of the graph onto an edge.
bool preserves_edges(const CayleyGraph& graph, const VertexMap& g);

struct Restriction {
  // images[k] = index of the generator that generator k is sent to.
  std::vector<int> images;
  // Whether `images` is an automorphism of the line graph of T(S).
  bool valid = false;
};

// tau -> tau^g on X_1(e) = S. Throws PreconditionError when g moves e, and
// InvalidArgument if g does not send S onto S.
Restriction restrict_to_generators(const CayleyGraph& graph, const VertexMap& g);

struct RestrictionAnalysis {
  std::uint64_t stabilizer_order = 0;
  std::uint64_t kernel_order = 0;
  std::uint64_t image_order = 0;
  std::uint64_t line_graph_aut_order = 0;
  bool all_valid = false;
  bool surjective = false;
};

// Restricts every element of G_e to S and compares the image with the
// automorphism group of L(T(S)). `aut` must be materialized.
RestrictionAnalysis restriction_analysis(const CayleyGraph& graph,
                                         const PermGroup& aut);

struct CayleyNormality {
  bool normal = false;
  // R(S_n) normal in Aut(X), decided by conjugating generators.
  bool by_conjugation = false;
  std::optional<NormalityWitness> witness;
  // |L_e| == 1; only computed for n >= 5.
  std::optional<bool> by_little_group;
  std::uint64_t little_group_order = 0;
};

// The right regular representation as a materialized group.
PermGroup right_regular_group(const CayleyGraph& graph);

// Both normality criteria. Throws ConsistencyError if they disagree.
CayleyNormality is_normal_cayley(const CayleyGraph& graph, const PermGroup& aut,
                                 const SearchOptions& options = {});
CayleyNormality is_normal_cayley(const CayleyGraph& graph,
                                 const SearchOptions& options = {});

struct NeighborCheck {
  bool distinct = true;
  size_t pairs_checked = 0;
  std::optional<std::pair<VertexId, VertexId>> counterexample;
};

// Distinct vertices of X_k(e) have distinct neighbor sets in X_{k-1}(e).
// Requires complete S, n >= 5 and 3 <= k <= diameter.
NeighborCheck distinct_neighbor_check(const CayleyGraph& graph, int k);

// Down-neighbors of v: its neighbors one layer closer to e, ascending.
std::vector<VertexId> down_neighbors(const CayleyGraph& graph, VertexId v);

// {"graph", "order", "generators", "stabilizer_order", "little_group_order",
//  "normal": {"verdict", "witness"}, "restriction": {...}}
nlohmann::json aut_report(const CayleyGraph& graph, const SearchOptions& options = {});

// {"order", "n_generators", "domain_size", "generators"}
nlohmann::json group_report(const PermGroup& group);

}  // namespace cayleylab

#endif  // CAYLEYLAB_AUT_HPP
