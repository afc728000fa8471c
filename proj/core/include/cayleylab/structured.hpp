#ifndef CAYLEYLAB_STRUCTURED_HPP
#define CAYLEYLAB_STRUCTURED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cayleylab/cayley.hpp"
#include "cayleylab/groups.hpp"

namespace cayleylab {

// alpha -> alpha * sigma. An automorphism for every connection set.
VertexMap right_translation(const CayleyGraph& graph, const Permutation& sigma);

// alpha -> sigma^-1 alpha sigma. Throws InvalidArgument unless conjugation
// by sigma maps the connection set onto itself, i.e. sigma is an
// automorphism of the transposition graph.
VertexMap inner_conjugation(const CayleyGraph& graph, const Permutation& sigma);

// alpha -> alpha^-1. Only offered for the complete transposition set;
// throws InvalidArgument otherwise.
VertexMap inversion_map(const CayleyGraph& graph);

// For beta = (i,j) * alpha, the transposition tau with beta^-1 = tau alpha^-1,
// read off the cycle that contains both i and j. Writing that cycle as
// (a_1..a_r, i, b_1..b_s, j): tau = (a_1,b_1) if r,s >= 1; (i,b_1) if r = 0
// and s >= 1; (j,a_1) if s = 0 and r >= 1; (i,j) if r = s = 0. When i and j
// sit in different cycles of alpha the same rule is read off beta, whose
// product with (i,j) is alpha. Points are 1-based.
Permutation predicted_inverse_edge_transposition(const Permutation& alpha, int i, int j);

struct StructureReport {
  std::uint64_t translations_order = 0;   // |R|
  std::uint64_t conjugations_order = 0;   // |Inn|
  std::uint64_t product_order = 0;        // |<R, Inn>|
  std::uint64_t order = 0;                // |<R, Inn, h>|
  bool generators_are_automorphisms = false;
  bool translations_normal_in_product = false;
  bool product_index_two = false;
  bool inversion_outside_product = false;
  bool inversion_is_involution = false;
  bool inversion_normalizes_product = false;

  bool ok(int n) const;
};

struct StructuredGroup {
  std::vector<VertexMap> translations;   // rho_sigma, sigma in rank order
  std::vector<VertexMap> conjugations;   // c_sigma, sigma in rank order
  VertexMap inversion;                   // h
  PermGroup translations_group;
  PermGroup product_group;               // <R, Inn>
  PermGroup group;                       // <R, Inn, h>
  StructureReport report;
};

// Needs the complete transposition set.
StructuredGroup build_structured_group(const CayleyGraph& graph,
                                       std::uint64_t cap = default_element_cap());

struct MainTheoremReport {
  int n = 0;
  std::uint64_t expected_order = 0;  // 2 (n!)^2
  std::uint64_t search_order = 0;
  std::uint64_t structured_order = 0;
  bool search_in_structured = false;
  bool structured_in_search = false;
  bool holds = false;
};

// Compares the searched automorphism group of the complete transposition
// graph with the explicit construction. 3 <= n <= 5.
MainTheoremReport verify_main_theorem(int n, int jobs = 1);

struct NonNormalityWitness {
  Permutation sigma;
  VertexMap conjugated;  // h rho_sigma h
  bool is_translation = true;
  // alpha -> sigma^-1 alpha, checked vertex by vertex.
  bool is_left_translation = false;
};

// h rho_sigma h is an automorphism outside R(S_n), so R(S_n) is not normal.
// Needs complete S, n >= 3 and sigma != identity.
NonNormalityWitness non_normality_witness(const CayleyGraph& graph,
                                          const Permutation& sigma);

nlohmann::json to_json(const StructureReport& report);

}  // namespace cayleylab

#endif  // CAYLEYLAB_STRUCTURED_HPP
