#ifndef CAYLEYLAB_TGRAPH_HPP
#define CAYLEYLAB_TGRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cayleylab/groups.hpp"
#include "cayleylab/perm.hpp"

namespace cayleylab {

// Small undirected simple graph with an explicit edge list.
//
// Edges keep their insertion order. For a transposition graph, edge k is
// generator k; for a line graph, vertex k is edge k of the source graph.
class SimpleGraph {
 public:
  using Edge = std::pair<int, int>;  // first < second

  SimpleGraph() = default;
  // Throws InvalidArgument on loops, repeated edges or bad endpoints.
  SimpleGraph(int vertex_count, std::vector<Edge> edges,
              std::vector<std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  size_t edge_count() const { return edges_.size(); }
  bool adjacent(int u, int v) const { return adj_[u * vertex_count_ + v]; }
  int degree(int v) const { return degrees_[v]; }
  // "1".."n" unless labels were supplied.
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<bool> adj_;
  std::vector<int> degrees_;
};

// Graph on points 1..n with edge {i,j} per transposition (i,j) in S. Edge k
// corresponds to transpositions[k].
SimpleGraph transposition_graph(int n, const std::vector<Permutation>& transpositions);

bool is_connected(const SimpleGraph& g);

// Vertex k is edge k of g, labelled "(a,b)" from the endpoint labels.
SimpleGraph line_graph(const SimpleGraph& g);

inline constexpr int kSmallGraphVertexCap = 12;

// Every edge-preserving vertex permutation, found by backtracking with
// degree pruning. Throws CapExceeded above kSmallGraphVertexCap vertices or
// when the group would exceed `cap` elements.
PermGroup small_graph_automorphisms(const SimpleGraph& g,
                                    std::uint64_t cap = default_element_cap());

// The line-graph permutation induced by a vertex automorphism of g.
VertexMap induced_edge_map(const SimpleGraph& g, const VertexMap& vertex_map);

struct WhitneyReport {
  bool holds = false;
  std::uint64_t graph_aut_order = 0;
  std::uint64_t line_aut_order = 0;
  bool injective = false;   // distinct automorphisms induce distinct maps
  bool surjective = false;  // every line-graph automorphism is induced
};

// Compares Aut(g) with Aut(L(g)) through the induced-map correspondence.
// Throws PreconditionError unless g is connected with at least 5 vertices.
WhitneyReport whitney_check(const SimpleGraph& g);

// "p edge N M" then one "e u v" line per edge, 1-based.
std::string to_dimacs(const SimpleGraph& g);
// {"n": N, "edges": [[u,v],...], "labels": [...]}, 1-based endpoints.
nlohmann::json to_json(const SimpleGraph& g);

}  // namespace cayleylab

#endif  // CAYLEYLAB_TGRAPH_HPP
