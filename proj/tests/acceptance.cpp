// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cayleylab/aut.hpp"
#include "cayleylab/cayley.hpp"
#include "cayleylab/structured.hpp"
#include "oracles.hpp"

namespace {

using namespace cayleylab;

// All counts and orders are compared exactly. Runtime ceilings in seconds.
constexpr double kMainSmallSeconds = 1.0;  // n = 3, 4
constexpr double kMainFiveSeconds = 60.0;
constexpr double kFourCycleSeconds = 5.0;
constexpr double kDownNeighborSeconds = 30.0;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CayleyGraph complete(int n) { return build_cayley(n, generator_preset(n, "complete")); }

oracle::Adjacency oracle_adjacency(const CayleyGraph& x) {
  std::vector<oracle::Images> gens;
  for (const auto& t : x.generators()) gens.push_back(oracle::images(t));
  return oracle::cayley_adjacency(x.n(), gens, x.vertex_count(), [&](const oracle::Images& a) {
    return x.index_of(Permutation(std::span<const int>(a)));
  });
}

void main_theorem(Outcome& o) {
  for (int n : {3, 4, 5}) {
    const auto start = std::chrono::steady_clock::now();
    const MainTheoremReport r = verify_main_theorem(n);
    const double secs = seconds_since(start);
    const std::uint64_t f = factorial(n);
    o.detail << " n=" << n << ": " << r.search_order << " (" << secs << " s);";
    o.require(r.search_order == 2 * f * f, "search order n=" + std::to_string(n));
    o.require(r.structured_order == 2 * f * f, "structured order n=" + std::to_string(n));
    o.require(r.search_in_structured && r.structured_in_search,
              "mutual containment n=" + std::to_string(n));
    o.require(secs < (n == 5 ? kMainFiveSeconds : kMainSmallSeconds),
              "runtime n=" + std::to_string(n));
  }
}

void little_group_is_inversion(Outcome& o) {
  for (int n : {3, 4, 5}) {
    const CayleyGraph x = complete(n);
    const PermGroup le = little_group(x);
    const VertexMap h = inversion_map(x);
    o.detail << " n=" << n << ": |L_e|=" << le.order() << ";";
    o.require(le.order() == 2, "order n=" + std::to_string(n));
    for (const auto& g : le.elements()) {
      if (g.is_identity()) continue;
      bool same = true;
      for (VertexId v = 0; v < x.vertex_count(); ++v) {
        same = same && x.vertex(g[v]) == inverse(x.vertex(v));
      }
      o.require(same && g == h, "non-identity element is inversion n=" + std::to_string(n));
    }
  }
}

void non_normality(Outcome& o) {
  for (int n : {3, 4, 5}) {
    const CayleyGraph x = complete(n);
    const PermGroup aut = automorphism_group(x);
    const PermGroup r = right_regular_group(x);
    const SubgroupNormality sn = is_normal_in(r, aut);
    o.require(!sn.normal && sn.witness, "conjugation test n=" + std::to_string(n));
    if (sn.witness) {
      const auto& w = *sn.witness;
      const auto sigma = is_right_translation(x, w.element);
      o.detail << " n=" << n << ": g^-1 rho g with rho = rho_" << (sigma ? sigma->to_string() : "?")
               << ", g: e->" << x.vertex(w.conjugator[0]).to_string() << ", result e->"
               << x.vertex(w.conjugate[0]).to_string() << " not a right translation;";
      o.require(!is_right_translation(x, w.conjugate) && aut.contains(w.conjugator),
                "witness checks n=" + std::to_string(n));
    }
    if (n == 5) {
      const CayleyNormality cn = is_normal_cayley(x, aut);
      o.detail << " n=5 L_e test: |L_e|=" << cn.little_group_order;
      o.require(cn.by_little_group.has_value() && !*cn.by_little_group && !cn.normal,
                "L_e criterion at n=5");
    }
  }
}

void four_cycle_lemma(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (int n : {4, 5}) {
    const CayleyGraph x = complete(n);
    const auto& s = x.generators();
    int commuting = 0, other = 0;
    for (size_t a = 0; a < s.size(); ++a) {
      for (size_t b = a + 1; b < s.size(); ++b) {
        const bool commute = compose(s[a], s[b]) == compose(s[b], s[a]);
        const int c = four_cycles_through(x, 0, x.index_of(s[a]), x.index_of(s[b]));
        o.require(commute ? c == 1 : c == 2, s[a].to_string() + " " + s[b].to_string());
        (commute ? commuting : other)++;
      }
    }
    o.detail << " n=" << n << ": " << commuting << " commuting (1 cycle), " << other
             << " non-commuting (2 cycles);";
  }
  const double secs = seconds_since(start);
  o.detail << " " << secs << " s";
  o.require(secs < kFourCycleSeconds, "runtime");
}

void w_set_counts(Outcome& o) {
  const CayleyGraph x = complete(5);
  auto w = [&](const char* s) {
    auto v = w_set(x, x.index_of(Permutation::parse(5, s)));
    std::sort(v.begin(), v.end());
    return v;
  };
  auto meet = [&](const char* a, const char* b) {
    const auto wa = w(a), wb = w(b);
    std::vector<VertexId> out;
    std::set_intersection(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(out));
    return out;
  };
  const auto ab = meet("(1,2,3)", "(2,3,4)");
  const auto aibi = meet("(1,3,2)", "(2,4,3)");
  const auto abi = meet("(1,2,3)", "(2,4,3)");
  const auto aib = meet("(1,3,2)", "(2,3,4)");
  o.detail << " " << ab.size() << ", " << aibi.size() << ", " << abi.size() << " {"
           << (abi.empty() ? std::string() : x.vertex(abi[0]).to_string()) << "}, " << aib.size();
  o.require(ab.size() == 2 && aibi.size() == 2 && aib.size() == 1, "intersection sizes");
  o.require(abi.size() == 1 && x.vertex(abi[0]) == Permutation::parse(5, "(1,2,4,3)"),
            "unique element (1,2,4,3)");
}

void distinct_down_neighbors(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const CayleyGraph x = complete(5);
  for (int k : {3, 4}) {
    const NeighborCheck nc = distinct_neighbor_check(x, k);
    size_t by_formula = 0;
    for (VertexId v = 0; v < x.vertex_count(); ++v) by_formula += 5 - cycle_count(x.vertex(v)) == k;
    const size_t by_bfs = x.layers().layers[k].size();
    o.detail << " k=" << k << ": |X_k|=" << by_bfs << " (formula " << by_formula << "), "
             << nc.pairs_checked << " pairs;";
    o.require(by_bfs == by_formula, "layer size cross-check k=" + std::to_string(k));
    o.require(nc.distinct, "distinct sets k=" + std::to_string(k));
    o.require(nc.pairs_checked == by_bfs * (by_bfs - 1) / 2, "exhaustive k=" + std::to_string(k));
  }
  const double secs = seconds_since(start);
  o.detail << " " << secs << " s";
  o.require(secs < kDownNeighborSeconds, "runtime");
}

void restriction_map(Outcome& o) {
  for (int n : {4, 5}) {
    const CayleyGraph x = complete(n);
    const RestrictionAnalysis ra = restriction_analysis(x, automorphism_group(x));
    const std::uint64_t f = factorial(n);
    const std::string tag = " n=" + std::to_string(n);
    o.detail << tag << ": |G_e|=" << ra.stabilizer_order << " kernel=" << ra.kernel_order
             << " image=" << ra.image_order << " |Aut(L(K_n))|=" << ra.line_graph_aut_order << ";";
    o.require(ra.all_valid, "all restrictions valid" + tag);
    o.require(ra.image_order == f, "image order = n!" + tag);
    o.require(ra.line_graph_aut_order == f, "|Aut(L(K_n))| = n!" + tag);
    o.require(ra.kernel_order == 2, "kernel 2" + tag);
    o.require(ra.stabilizer_order == 2 * f, "|G_e| = 2 n!" + tag);
  }
}

void normality_landscape(Outcome& o) {
  struct Case {
    int n;
    const char* gens;
    bool normal;
    std::uint64_t order;  // 0: not pinned
  };
  for (const Case& c : {Case{4, "star", true, 144}, Case{4, "path", true, 0},
                        Case{4, "cycle4", false, 0}, Case{5, "cycle", true, 1200}}) {
    const CayleyGraph x = build_cayley(c.n, generator_preset(c.n, c.gens));
    const PermGroup aut = automorphism_group(x);
    const CayleyNormality cn = is_normal_cayley(x, aut);
    const std::string tag = std::string(c.gens) + " n=" + std::to_string(c.n);
    o.detail << " " << tag << ": " << (cn.normal ? "normal" : "not normal") << ", |Aut|="
             << aut.order() << ";";
    o.require(cn.normal == c.normal, "verdict " + tag);
    if (c.order) o.require(aut.order() == c.order, "order " + tag);
  }
}

void case_table(Outcome& o) {
  for (int n : {4, 5}) {
    int cases = 0, matches = 0;
    for (const auto& a : oracle::all_images(n)) {
      const Permutation alpha{std::span<const int>(a)};
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const auto beta = oracle::compose(oracle::transposition(n, i, j), a);
          const auto actual = oracle::compose(oracle::inverse(beta), a);
          matches += oracle::images(predicted_inverse_edge_transposition(alpha, i, j)) == actual;
          ++cases;
        }
      }
    }
    o.detail << " n=" << n << ": " << matches << "/" << cases << ";";
    o.require(matches == cases && cases == int(factorial(n)) * n * (n - 1) / 2,
              "n=" + std::to_string(n));
  }
}

void property_suites(Outcome& o) {
  size_t triples = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto all = oracle::all_permutations(n);
    for (const auto& a : all) {
      o.require(compose(inverse(a), a).is_identity() && compose(a, inverse(a)).is_identity(),
                "inverse " + a.to_string());
      for (const auto& b : all) {
        o.require(cycle_type(conjugate(a, b)) == cycle_type(a), "conjugation cycle type");
        for (const auto& c : all) {
          ++triples;
          if (compose(compose(a, b), c) != compose(a, compose(b, c))) {
            o.require(false, "associativity");
          }
        }
      }
    }
  }
  size_t ranks = 0;
  for (int n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      o.require(rank(unrank(n, r)) == r, "rank round trip");
      ++ranks;
    }
    for (const auto& p : oracle::all_permutations(n)) seen.insert(rank(p));
    o.require(seen.size() == factorial(n), "rank injective n=" + std::to_string(n));
  }
  size_t checked = 0;
  for (auto [n, gens] : {std::pair{3, "complete"}, {4, "complete"}, {5, "complete"}, {4, "star"},
                         {4, "path"}, {4, "cycle"}, {5, "cycle"}}) {
    const CayleyGraph x = build_cayley(n, generator_preset(n, gens));
    const auto adj = oracle_adjacency(x);
    const PermGroup aut = automorphism_group(x);
    for (const auto& g : aut.elements()) {
      const std::vector<int> images(g.images().begin(), g.images().end());
      if (!oracle::preserves_edges(adj, images)) o.require(false, "edge preservation");
      ++checked;
    }
  }
  o.detail << " " << triples << " associativity triples, " << ranks << " rank round trips, "
           << checked << " automorphisms re-verified";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "automorphism group order 2(n!)^2", main_theorem},
      {2, "little group is {1, inversion}", little_group_is_inversion},
      {3, "right regular representation not normal", non_normality},
      {4, "4-cycles through e and two generators", four_cycle_lemma},
      {5, "W-set intersections at n=5", w_set_counts},
      {6, "distinct down-neighbor sets at n=5", distinct_down_neighbors},
      {7, "restriction map onto Aut(L(K_n))", restriction_map},
      {8, "normality of star/path/cycle families", normality_landscape},
      {9, "inverse-edge case table", case_table},
      {10, "permutation and automorphism properties", property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    o.detail << std::fixed << std::setprecision(3);
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(start);
    std::printf("%s  %2d  %-42s %.3f s |%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.str().c_str());
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
