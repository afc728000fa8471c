#include <gtest/gtest.h>

#include "cayleylab/aut.hpp"
#include "cayleylab/error.hpp"
#include "cayleylab/structured.hpp"
#include "oracles.hpp"

namespace cayleylab {
namespace {

Permutation P(int n, const char* text) { return Permutation::parse(n, text); }

CayleyGraph graph(int n, const char* gens = "complete") {
  return build_cayley(n, generator_preset(n, gens));
}

oracle::Adjacency oracle_adjacency(const CayleyGraph& x) {
  std::vector<oracle::Images> gens;
  for (const auto& t : x.generators()) gens.push_back(oracle::images(t));
  return oracle::cayley_adjacency(x.n(), gens, x.vertex_count(), [&](const oracle::Images& a) {
    return x.index_of(Permutation(std::span<const int>(a)));
  });
}

std::vector<int> raw(const VertexMap& m) { return {m.images().begin(), m.images().end()}; }

TEST(RightTranslation, Examples) {
  const CayleyGraph x = graph(4, "cycle");
  EXPECT_TRUE(right_translation(x, Permutation::identity(4)).is_identity());
  const auto adj = oracle_adjacency(x);
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    const VertexMap rho = right_translation(x, x.vertex(v));
    EXPECT_TRUE(oracle::preserves_edges(adj, raw(rho)));
    EXPECT_EQ(x.vertex(rho[0]), x.vertex(v));
  }
  EXPECT_THROW(right_translation(x, Permutation::identity(3)), InvalidArgument);
}

TEST(InnerConjugation, CompleteAcceptsAll) {
  for (int n : {3, 4, 5}) {
    const CayleyGraph x = graph(n);
    std::vector<VertexMap> c;
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
      c.push_back(inner_conjugation(x, x.vertex(v)));
      EXPECT_TRUE(c.back().fixes(0));
    }
    EXPECT_EQ(closure(c, x.vertex_count()).order(), factorial(n));
  }
}

TEST(InnerConjugation, StarChecksTranspositionGraph) {
  const CayleyGraph x = graph(4, "star");
  const VertexMap c23 = inner_conjugation(x, P(4, "(2,3)"));
  EXPECT_TRUE(preserves_edges(x, c23));
  EXPECT_THROW(inner_conjugation(x, P(4, "(1,2)")), InvalidArgument);
}

TEST(Inversion, ThreeSwapsTheThreeCycles) {
  const CayleyGraph x = graph(3);
  const VertexMap h = inversion_map(x);
  const VertexId a = x.index_of(P(3, "(1,2,3)")), b = x.index_of(P(3, "(1,3,2)"));
  EXPECT_EQ(h[a], b);
  EXPECT_EQ(h[b], a);
  for (VertexId v = 0; v < 6; ++v) {
    if (v != a && v != b) EXPECT_TRUE(h.fixes(v));
  }
}

TEST(Inversion, InvolutionFixingS) {
  for (int n : {3, 4, 5}) {
    const CayleyGraph x = graph(n);
    const VertexMap h = inversion_map(x);
    EXPECT_TRUE(compose(h, h).is_identity());
    EXPECT_TRUE(h.fixes(0));
    for (const auto& t : x.generators()) EXPECT_TRUE(h.fixes(x.index_of(t)));
    EXPECT_TRUE(oracle::preserves_edges(oracle_adjacency(x), raw(h)));
  }
  EXPECT_THROW(inversion_map(graph(4, "star")), InvalidArgument);
}

// Not asserted by any theorem; records what alpha -> alpha^-1 does for the
// other preset families.
TEST(Inversion, ProbeOnOtherFamilies) {
  for (auto [n, gens] : {std::pair{4, "star"}, {4, "path"}, {4, "cycle"}, {5, "star"},
                         {5, "path"}, {5, "cycle"}, {3, "path"}}) {
    const CayleyGraph x = graph(n, gens);
    std::vector<VertexMap::Index> images(x.vertex_count());
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
      images[v] = static_cast<VertexMap::Index>(x.index_of(inverse(x.vertex(v))));
    }
    EXPECT_FALSE(preserves_edges(x, VertexMap(images))) << n << gens;
  }
}

TEST(CaseTable, WorkedExamples) {
  EXPECT_EQ(predicted_inverse_edge_transposition(P(3, "(1,2)"), 1, 2), P(3, "(1,2)"));
  // (1,3,2) read as (i, b_1, j) with i = 1, j = 2: r = 0, s = 1.
  const Permutation alpha = P(3, "(1,3,2)");
  EXPECT_EQ(predicted_inverse_edge_transposition(alpha, 1, 2), P(3, "(1,3)"));
  const Permutation beta = compose(P(3, "(1,2)"), alpha);
  EXPECT_EQ(compose(inverse(beta), alpha), P(3, "(1,3)"));
  EXPECT_THROW(predicted_inverse_edge_transposition(alpha, 2, 2), InvalidArgument);
  EXPECT_THROW(predicted_inverse_edge_transposition(alpha, 0, 2), InvalidArgument);
}

TEST(CaseTable, MatchesOracleExhaustively) {
  for (int n : {3, 4, 5}) {
    int cases = 0;
    for (const auto& a : oracle::all_images(n)) {
      const Permutation alpha{std::span<const int>(a)};
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const auto beta = oracle::compose(oracle::transposition(n, i, j), a);
          // tau with beta^-1 = tau alpha^-1.
          const auto tau = oracle::compose(oracle::inverse(beta), a);
          const auto predicted = predicted_inverse_edge_transposition(alpha, i, j);
          ASSERT_EQ(oracle::images(predicted), tau) << alpha.to_string() << " " << i << j;
          ASSERT_EQ(oracle::compose(tau, oracle::inverse(a)), oracle::inverse(beta));
          ASSERT_TRUE(predicted.is_transposition());
          ++cases;
        }
      }
    }
    EXPECT_EQ(cases, int(factorial(n)) * n * (n - 1) / 2);
  }
}

TEST(StructuredGroup, Orders) {
  for (auto [n, order] : {std::pair{3, 72u}, {4, 1152u}, {5, 28800u}}) {
    const CayleyGraph x = graph(n);
    const StructuredGroup sg = build_structured_group(x);
    EXPECT_EQ(sg.group.order(), order);
    EXPECT_EQ(sg.product_group.order(), order / 2);
    EXPECT_TRUE(sg.report.ok(n)) << to_json(sg.report).dump();
    const auto adj = oracle_adjacency(x);
    for (const auto& g : sg.translations) EXPECT_TRUE(oracle::preserves_edges(adj, raw(g)));
    for (const auto& g : sg.conjugations) EXPECT_TRUE(oracle::preserves_edges(adj, raw(g)));
    for (const auto& g : sg.conjugations) EXPECT_TRUE(g.fixes(0));
  }
  EXPECT_EQ(build_structured_group(graph(3)).report.product_order, 36u);
  EXPECT_THROW(build_structured_group(graph(4, "star")), InvalidArgument);
}

TEST(StructuredGroup, InversionNormalizesProductElementwise) {
  const CayleyGraph x = graph(4);
  const StructuredGroup sg = build_structured_group(x);
  for (const auto& g : sg.product_group.elements()) {
    ASSERT_TRUE(sg.product_group.contains(conjugate(g, sg.inversion)));
  }
}

TEST(MainTheorem, HoldsThroughFive) {
  for (int n : {3, 4, 5}) {
    const MainTheoremReport r = verify_main_theorem(n);
    EXPECT_TRUE(r.holds) << n;
    EXPECT_EQ(r.search_order, 2 * factorial(n) * factorial(n));
    EXPECT_TRUE(r.search_in_structured);
    EXPECT_TRUE(r.structured_in_search);
  }
  EXPECT_THROW(verify_main_theorem(2), PreconditionError);
  EXPECT_THROW(verify_main_theorem(6), PreconditionError);
}

TEST(NonNormalityWitness, LeftTranslationForEverySigma) {
  for (int n : {3, 4}) {
    const CayleyGraph x = graph(n);
    for (VertexId s = 1; s < x.vertex_count(); ++s) {
      const Permutation sigma = x.vertex(s);
      const NonNormalityWitness w = non_normality_witness(x, sigma);
      EXPECT_FALSE(w.is_translation);
      EXPECT_TRUE(w.is_left_translation);
      // Independent check: alpha -> sigma^-1 alpha on every vertex.
      const auto si = oracle::inverse(oracle::images(sigma));
      for (VertexId v = 0; v < x.vertex_count(); ++v) {
        const auto expected = oracle::compose(si, oracle::images(x.vertex(v)));
        ASSERT_EQ(oracle::images(x.vertex(w.conjugated[v])), expected);
      }
    }
    EXPECT_THROW(non_normality_witness(x, Permutation::identity(n)), PreconditionError);
  }
}

}  // namespace
}  // namespace cayleylab
