#include "cayleylab/structured.hpp"

#include <algorithm>

#include "cayleylab/aut.hpp"
#include "cayleylab/error.hpp"

namespace cayleylab {
namespace {

template <typename F>
VertexMap vertex_map_from(const CayleyGraph& graph, F&& f) {
  std::vector<VertexMap::Index> images(graph.vertex_count());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    images[v] = static_cast<VertexMap::Index>(graph.index_of(f(graph.vertex(v))));
  }
  return VertexMap(std::move(images));
}

void require_complete(const CayleyGraph& graph, const char* what) {
  if (!graph.is_complete()) {
    throw InvalidArgument(std::string(what) +
                          " needs the complete transposition set");
  }
}

}  // namespace

VertexMap right_translation(const CayleyGraph& graph, const Permutation& sigma) {
  if (sigma.degree() != graph.n()) throw InvalidArgument("degree mismatch");
  return vertex_map_from(graph, [&](const Permutation& a) { return compose(a, sigma); });
}

VertexMap inner_conjugation(const CayleyGraph& graph, const Permutation& sigma) {
  if (sigma.degree() != graph.n()) throw InvalidArgument("degree mismatch");
  const auto& gens = graph.generators();
  for (const auto& t : gens) {
    if (std::find(gens.begin(), gens.end(), conjugate(t, sigma)) == gens.end()) {
      throw InvalidArgument("conjugation by " + sigma.to_string() + " sends " +
                            t.to_string() + " outside the connection set; " +
                            sigma.to_string() +
                            " is not an automorphism of the transposition graph");
    }
  }
  return vertex_map_from(graph,
                         [&](const Permutation& a) { return conjugate(a, sigma); });
}

VertexMap inversion_map(const CayleyGraph& graph) {
  require_complete(graph, "the inversion map");
  return vertex_map_from(graph, [](const Permutation& a) { return inverse(a); });
}

Permutation predicted_inverse_edge_transposition(const Permutation& alpha, int i,
                                                  int j) {
  const int n = alpha.degree();
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw InvalidArgument("need two distinct points in 1..n");
  }
  const int pi = i - 1, pj = j - 1;
  auto same_cycle = [](const Permutation& p, int a, int b) {
    for (int x = p[a];; x = p[x]) {
      if (x == b) return true;
      if (x == a) return false;
    }
  };
  const Permutation source =
      same_cycle(alpha, pi, pj)
          ? alpha
          : compose(Permutation::transposition(n, i, j), alpha);
  // In source's cycle (a_1..a_r, i, b_1..b_s, j): i is followed by b_1, or by
  // j when s = 0; j is followed by a_1, or by i when r = 0.
  const int after_i = source[pi];
  const int after_j = source[pj];
  const bool r_zero = after_j == pi;
  const bool s_zero = after_i == pj;
  int x, y;
  if (!r_zero && !s_zero) {
    x = after_j, y = after_i;  // (a_1, b_1)
  } else if (r_zero && !s_zero) {
    x = pi, y = after_i;       // (i, b_1)
  } else if (!r_zero && s_zero) {
    x = pj, y = after_j;       // (j, a_1)
  } else {
    x = pi, y = pj;            // (i, j)
  }
  return Permutation::transposition(n, x + 1, y + 1);
}

bool StructureReport::ok(int n) const {
  const std::uint64_t f = factorial(n);
  return translations_order == f && conjugations_order == f &&
         product_order == f * f && order == 2 * f * f &&
         generators_are_automorphisms && translations_normal_in_product &&
         product_index_two && inversion_outside_product &&
         inversion_is_involution && inversion_normalizes_product;
}

StructuredGroup build_structured_group(const CayleyGraph& graph, std::uint64_t cap) {
  require_complete(graph, "the structured group");
  StructuredGroup sg;
  const size_t nv = graph.vertex_count();
  for (VertexId v = 0; v < nv; ++v) {
    const Permutation sigma = graph.vertex(v);
    sg.translations.push_back(right_translation(graph, sigma));
    sg.conjugations.push_back(inner_conjugation(graph, sigma));
  }
  sg.inversion = inversion_map(graph);

  StructureReport& rep = sg.report;
  rep.generators_are_automorphisms = preserves_edges(graph, sg.inversion);
  for (const auto& maps : {sg.translations, sg.conjugations}) {
    for (const auto& g : maps) {
      rep.generators_are_automorphisms =
          rep.generators_are_automorphisms && preserves_edges(graph, g);
    }
  }

  sg.translations_group = closure(sg.translations, nv, cap);
  rep.translations_order = sg.translations_group.order();
  rep.conjugations_order = closure(sg.conjugations, nv, cap).order();

  std::vector<VertexMap> gens = sg.translations;
  gens.insert(gens.end(), sg.conjugations.begin(), sg.conjugations.end());
  sg.product_group = closure(gens, nv, cap);
  rep.product_order = sg.product_group.order();
  gens.push_back(sg.inversion);
  sg.group = closure(gens, nv, cap);
  rep.order = sg.group.order();

  rep.translations_normal_in_product =
      is_normal_in(sg.translations_group, sg.product_group).normal;
  rep.product_index_two = rep.order == 2 * rep.product_order;
  rep.inversion_outside_product = !sg.product_group.contains(sg.inversion);
  rep.inversion_is_involution = compose(sg.inversion, sg.inversion).is_identity();
  rep.inversion_normalizes_product = true;
  for (const auto& g : sg.product_group.generators()) {
    if (!sg.product_group.contains(conjugate(g, sg.inversion))) {
      rep.inversion_normalizes_product = false;
      break;
    }
  }
  return sg;
}

MainTheoremReport verify_main_theorem(int n, int jobs) {
  if (n < 3 || n > 5) throw PreconditionError("main theorem check runs for 3 <= n <= 5");
  const CayleyGraph graph = build_cayley(n, generator_preset(n, "complete"));
  const PermGroup aut = automorphism_group(graph, SearchOptions{default_element_cap(), jobs});
  const StructuredGroup sg = build_structured_group(graph);

  MainTheoremReport r;
  r.n = n;
  r.expected_order = 2 * factorial(n) * factorial(n);
  r.search_order = aut.order();
  r.structured_order = sg.group.order();
  r.search_in_structured = std::all_of(
      aut.generators().begin(), aut.generators().end(),
      [&](const VertexMap& g) { return sg.group.contains(g); });
  r.structured_in_search = std::all_of(
      sg.group.generators().begin(), sg.group.generators().end(),
      [&](const VertexMap& g) { return aut.contains(g); });
  r.holds = r.search_order == r.expected_order &&
            r.structured_order == r.expected_order && r.search_in_structured &&
            r.structured_in_search;
  return r;
}

NonNormalityWitness non_normality_witness(const CayleyGraph& graph,
                                          const Permutation& sigma) {
  if (graph.n() < 3) throw PreconditionError("needs n >= 3");
  if (sigma.is_identity()) throw PreconditionError("sigma must not be the identity");
  const VertexMap h = inversion_map(graph);
  NonNormalityWitness w;
  w.sigma = sigma;
  w.conjugated = compose(compose(h, right_translation(graph, sigma)), h);
  w.is_translation = is_right_translation(graph, w.conjugated).has_value();
  const Permutation sigma_inv = inverse(sigma);
  w.is_left_translation =
      w.conjugated == vertex_map_from(graph, [&](const Permutation& a) {
        return compose(sigma_inv, a);
      });
  return w;
}

nlohmann::json to_json(const StructureReport& r) {
  return {{"translations_order", r.translations_order},
          {"conjugations_order", r.conjugations_order},
          {"product_order", r.product_order},
          {"order", r.order},
          {"generators_are_automorphisms", r.generators_are_automorphisms},
          {"translations_normal_in_product", r.translations_normal_in_product},
          {"product_index_two", r.product_index_two},
          {"inversion_outside_product", r.inversion_outside_product},
          {"inversion_is_involution", r.inversion_is_involution},
          {"inversion_normalizes_product", r.inversion_normalizes_product}};
}

}  // namespace cayleylab
