#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "cayleylab/aut.hpp"
#include "cayleylab/cayley.hpp"
#include "cayleylab/error.hpp"
#include "cayleylab/structured.hpp"
#include "cayleylab/tgraph.hpp"

namespace cayleylab::cli {
namespace {

SearchOptions search_options(const JobSpec& spec) {
  return SearchOptions{spec.cap.value_or(default_element_cap()), spec.jobs};
}

CayleyGraph make_graph(const JobSpec& spec, const std::string& gens) {
  return build_cayley(spec.n, generator_preset(spec.n, gens),
                      BuildOptions{spec.max_n});
}

CayleyGraph make_graph(const JobSpec& spec) { return make_graph(spec, spec.gens); }

// Writes to spec.output when set, else to `out`.
void emit(const JobSpec& spec, const std::string& text, std::ostream& out) {
  if (spec.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(spec.output);
  if (!file) throw InvalidArgument("cannot open output file '" + spec.output + "'");
  file << text;
}

std::string join(const std::vector<size_t>& xs) {
  std::string s;
  for (size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s;
}

std::vector<int> images_of(const VertexMap& m) {
  return {m.images().begin(), m.images().end()};
}

bool is_bipartite(const CayleyGraph& graph) {
  const auto& layer_of = graph.layers().layer_of;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for (VertexId w : graph.neighbors(v)) {
      if (layer_of[v] == layer_of[w]) return false;
    }
  }
  return true;
}

void print_summary(const CayleyGraph& graph, std::ostream& out) {
  const size_t edges = graph.vertex_count() * graph.valency() / 2;
  out << "Cay(S_" << graph.n() << ", S), |S| = " << graph.valency() << "\n"
      << "  vertices: " << graph.vertex_count() << "\n"
      << "  edges:    " << edges << "\n"
      << "  degree:   " << graph.valency() << " (regular)\n"
      << "  layers:   " << join(graph.layers().layer_sizes()) << " (diameter "
      << graph.layers().diameter() << ")\n";
  const bool bip = is_bipartite(graph);
  out << "  bipartite: " << (bip ? "yes" : "no");
  if (bip && 2 * graph.valency() == graph.vertex_count()) {
    out << " (complete bipartite K" << graph.valency() << "," << graph.valency() << ")";
  }
  out << "\n";
}

// Statement table: canonical id, aliases, whether the complete set is
// required.
struct StatementInfo {
  std::string id;
  std::vector<std::string> aliases;
  bool needs_complete;
};

const std::vector<StatementInfo>& statement_table() {
  static const std::vector<StatementInfo> table = {
      {"four-cycle-uniqueness", {"lemma-3.1"}, false},
      {"restriction-preserves-line-graph", {"prop-3.3"}, false},
      {"restriction-surjective", {"prop-3.4"}, false},
      {"normality-criterion", {"thm-3.5"}, false},
      {"inversion-automorphism", {"prop-4.1"}, true},
      {"structured-subgroup", {"thm-4.2"}, true},
      {"non-normality", {"thm-4.3"}, true},
      {"little-group", {"thm-5.1"}, true},
      {"distinct-down-neighbors", {"prop-5.2"}, true},
      {"order-bound", {"cor-5.3"}, true},
      {"main-theorem", {"main", "corollary"}, true},
      {"vertex-transitivity", {}, false},
  };
  return table;
}

struct Outcome {
  Status status;
  std::string detail;
  nlohmann::json witness = nullptr;
};

Outcome pass(std::string d, nlohmann::json w = nullptr) { return {Status::kPass, std::move(d), std::move(w)}; }
Outcome fail(std::string d, nlohmann::json w = nullptr) { return {Status::kFail, std::move(d), std::move(w)}; }
Outcome skip(std::string d) { return {Status::kSkipped, std::move(d)}; }

Outcome check_four_cycles(const JobSpec& spec) {
  const CayleyGraph x = make_graph(spec);
  const auto& s = x.generators();
  const VertexId e = x.identity_vertex();
  size_t commuting = 0, other = 0;
  for (size_t a = 0; a < s.size(); ++a) {
    for (size_t b = a + 1; b < s.size(); ++b) {
      const bool commute = compose(s[a], s[b]) == compose(s[b], s[a]);
      const int cycles = four_cycles_through(x, e, x.index_of(s[a]), x.index_of(s[b]));
      const bool ok = commute ? cycles == 1 : (cycles != 1 && (!x.is_complete() || cycles == 2));
      if (!ok) {
        return fail("pair " + s[a].to_string() + ", " + s[b].to_string() + " has " +
                        std::to_string(cycles) + " 4-cycles",
                    {{"tau", s[a].to_string()}, {"kappa", s[b].to_string()}, {"cycles", cycles}});
      }
      (commute ? commuting : other)++;
    }
  }
  return pass(std::to_string(commuting) + " commuting + " + std::to_string(other) +
              " non-commuting pairs checked");
}

Outcome check_restriction_valid(const JobSpec& spec) {
  const CayleyGraph x = make_graph(spec);
  const PermGroup aut = automorphism_group(x, search_options(spec));
  size_t checked = 0;
  for (const auto& g : aut.elements()) {
    if (!g.fixes(x.identity_vertex())) continue;
    ++checked;
    if (!restrict_to_generators(x, g).valid) {
      return fail("stabilizer element restricts to a non-automorphism of L(T)",
                  {{"element", images_of(g)}});
    }
  }
  return pass(std::to_string(checked) + " stabilizer elements restrict to L(T) automorphisms");
}

Outcome check_restriction_surjective(const JobSpec& spec) {
  const CayleyGraph x = make_graph(spec);
  const RestrictionAnalysis ra = restriction_analysis(x, automorphism_group(x, search_options(spec)));
  std::ostringstream d;
  d << "kernel " << ra.kernel_order << ", image " << ra.image_order << ", |Aut(L(T))| "
    << ra.line_graph_aut_order;
  if (x.transposition_graph().vertex_count() < 5) {
    return skip("line-graph correspondence requires T(S) with at least 5 vertices (" +
                d.str() + ")");
  }
  return ra.surjective && ra.stabilizer_order == ra.kernel_order * ra.image_order
             ? pass(d.str())
             : fail(d.str());
}

Outcome check_normality_criterion(const JobSpec& spec) {
  if (spec.n < 5) return skip("hypothesis requires n >= 5");
  std::vector<std::string> sets{spec.gens};
  for (const char* p : {"complete", "star", "path", "cycle"}) {
    if (std::find(sets.begin(), sets.end(), p) == sets.end()) sets.push_back(p);
  }
  std::string detail;
  for (const auto& gens : sets) {
    const CayleyGraph x = make_graph(spec, gens);
    try {
      const CayleyNormality cn = is_normal_cayley(x, search_options(spec));
      detail += (detail.empty() ? "" : "; ") + gens + ": " +
                (cn.normal ? "normal" : "not normal") + " (|L_e| = " +
                std::to_string(cn.little_group_order) + ")";
    } catch (const ConsistencyError& ex) {
      return fail(gens + ": " + ex.what());
    }
  }
  return pass(detail);
}

Outcome check_inversion(const JobSpec& spec) {
  const CayleyGraph x = make_graph(spec);
  if (!preserves_edges(x, inversion_map(x))) return fail("inversion map breaks an edge");
  const int n = spec.n;
  size_t cases = 0;
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    const Permutation alpha = x.vertex(v);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const Permutation beta = compose(Permutation::transposition(n, i, j), alpha);
        const Permutation actual = compose(inverse(beta), alpha);
        const Permutation predicted = predicted_inverse_edge_transposition(alpha, i, j);
        if (!actual.is_transposition() || actual != predicted) {
          return fail("case table mismatch",
                      {{"alpha", alpha.to_string()}, {"i", i}, {"j", j},
                       {"predicted", predicted.to_string()}, {"actual", actual.to_string()}});
        }
        ++cases;
      }
    }
  }
  return pass("inversion preserves edges; case table matches " + std::to_string(cases) +
              " cases");
}

Outcome check_structured(const JobSpec& spec) {
  const CayleyGraph x = make_graph(spec);
  const StructuredGroup sg = build_structured_group(x, search_options(spec).cap);
  const auto& r = sg.report;
  std::string d = "|R| " + std::to_string(r.translations_order) + ", |R Inn| " +
                  std::to_string(r.product_order) + ", |H| " + std::to_string(r.order);
  return r.ok(spec.n) ? pass(d, to_json(r)) : fail(d, to_json(r));
}

Outcome check_non_normality(const JobSpec& spec) {
  const CayleyGraph x = make_graph(spec);
  const CayleyNormality cn = is_normal_cayley(x, search_options(spec));
  const NonNormalityWitness w =
      non_normality_witness(x, Permutation::transposition(spec.n, 1, 2));
  nlohmann::json witness;
  if (cn.witness) {
    witness["conjugator"] = images_of(cn.witness->conjugator);
    witness["element"] = images_of(cn.witness->element);
    witness["conjugate"] = images_of(cn.witness->conjugate);
  }
  witness["h_rho_h_is_translation"] = w.is_translation;
  std::string d = "R(S_n) normal: " + std::string(cn.by_conjugation ? "yes" : "no");
  if (cn.by_little_group) {
    d += "; |L_e| = " + std::to_string(cn.little_group_order);
  }
  const bool ok = !cn.normal && cn.witness && !w.is_translation && w.is_left_translation &&
                  (!cn.by_little_group || !*cn.by_little_group);
  return ok ? pass(d, witness) : fail(d, witness);
}

Outcome check_little_group(const JobSpec& spec) {
  const CayleyGraph x = make_graph(spec);
  const PermGroup le = little_group(x, search_options(spec));
  const VertexMap h = inversion_map(x);
  bool ok = le.order() == 2 && le.contains(h);
  std::string d = "|L_e| = " + std::to_string(le.order());
  if (spec.n >= 4) {
    auto id = [&](const char* s) { return x.index_of(Permutation::parse(spec.n, s)); };
    auto meet = [&](const char* a, const char* b) {
      auto wa = w_set(x, id(a)), wb = w_set(x, id(b));
      std::vector<VertexId> o;
      std::set_intersection(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(o));
      return o;
    };
    auto ab = meet("(1,2,3)", "(2,3,4)");
    auto aibi = meet("(1,3,2)", "(2,4,3)");
    auto abi = meet("(1,2,3)", "(2,4,3)");
    auto aib = meet("(1,3,2)", "(2,3,4)");
    ok = ok && ab.size() == 2 && aibi.size() == 2 && abi.size() == 1 && aib.size() == 1 &&
         x.vertex(abi.front()) == Permutation::parse(spec.n, "(1,2,4,3)");
    d += "; W-set intersections " + std::to_string(ab.size()) + "," +
         std::to_string(aibi.size()) + "," + std::to_string(abi.size()) + "," +
         std::to_string(aib.size());
  }
  return ok ? pass(d) : fail(d);
}

Outcome check_down_neighbors(const JobSpec& spec) {
  if (spec.n < 5) return skip("hypothesis requires n >= 5");
  const CayleyGraph x = make_graph(spec);
  std::string d;
  for (int k = 3; k <= x.layers().diameter(); ++k) {
    const NeighborCheck nc = distinct_neighbor_check(x, k);
    if (!nc.distinct) {
      return fail("layer " + std::to_string(k) + " has equal down-neighbor sets",
                  {{"alpha", x.vertex(nc.counterexample->first).to_string()},
                   {"beta", x.vertex(nc.counterexample->second).to_string()}});
    }
    d += (d.empty() ? "" : "; ") + std::string("layer ") + std::to_string(k) + ": " +
         std::to_string(nc.pairs_checked) + " pairs";
  }
  return pass(d);
}

Outcome check_order_bound(const JobSpec& spec) {
  const CayleyGraph x = make_graph(spec);
  const PermGroup aut = automorphism_group(x, search_options(spec));
  const std::uint64_t f = factorial(spec.n);
  const std::uint64_t stab = vertex_stabilizer(aut, x.identity_vertex()).order();
  std::string d = "|Aut| = " + std::to_string(aut.order()) + " <= " + std::to_string(2 * f * f) +
                  ", |G_e| = " + std::to_string(stab) + " <= " + std::to_string(2 * f);
  return aut.order() <= 2 * f * f && stab <= 2 * f ? pass(d) : fail(d);
}

Outcome check_main_theorem(const JobSpec& spec) {
  if (spec.n < 3 || spec.n > 5) return skip("checked for 3 <= n <= 5");
  const MainTheoremReport r = verify_main_theorem(spec.n, spec.jobs);
  std::string d = "search " + std::to_string(r.search_order) + ", structured " +
                  std::to_string(r.structured_order) + ", expected " +
                  std::to_string(r.expected_order);
  return r.holds ? pass(d) : fail(d);
}

Outcome check_vertex_transitivity(const JobSpec& spec) {
  const CayleyGraph x = make_graph(spec);
  const auto reference = x.layers().layer_sizes();
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(x.vertex_count() - 1));
  for (int k = 0; k < spec.samples; ++k) {
    const VertexId root = pick(rng);
    if (distance_partition(x, root).layer_sizes() != reference) {
      return fail("layer sizes differ from root " + x.vertex(root).to_string());
    }
  }
  return pass(std::to_string(spec.samples) + " sampled roots (seed " +
              std::to_string(spec.seed) + ") match layers " + join(reference));
}

Outcome dispatch(const std::string& id, const JobSpec& spec) {
  static const std::map<std::string, Outcome (*)(const JobSpec&)> checks = {
      {"four-cycle-uniqueness", check_four_cycles},
      {"restriction-preserves-line-graph", check_restriction_valid},
      {"restriction-surjective", check_restriction_surjective},
      {"normality-criterion", check_normality_criterion},
      {"inversion-automorphism", check_inversion},
      {"structured-subgroup", check_structured},
      {"non-normality", check_non_normality},
      {"little-group", check_little_group},
      {"distinct-down-neighbors", check_down_neighbors},
      {"order-bound", check_order_bound},
      {"main-theorem", check_main_theorem},
      {"vertex-transitivity", check_vertex_transitivity},
  };
  return checks.at(id)(spec);
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "text") return Format::kText;
  if (text == "json") return Format::kJson;
  if (text == "dimacs") return Format::kDimacs;
  throw InvalidArgument("unknown format '" + text + "'");
}

std::string to_string(Status status) {
  switch (status) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kSkipped: return "SKIPPED";
  }
  return "?";
}

std::vector<std::string> statement_ids() {
  std::vector<std::string> ids;
  for (const auto& s : statement_table()) ids.push_back(s.id);
  return ids;
}

std::optional<std::string> canonical_statement(const std::string& id) {
  for (const auto& s : statement_table()) {
    if (s.id == id) return s.id;
    if (std::find(s.aliases.begin(), s.aliases.end(), id) != s.aliases.end()) return s.id;
  }
  return std::nullopt;
}

StatementResult run_statement(const std::string& id, const JobSpec& spec) {
  const auto canonical = canonical_statement(id);
  if (!canonical) throw InvalidArgument("unknown statement id '" + id + "'");
  const auto& info = *std::find_if(statement_table().begin(), statement_table().end(),
                                   [&](const auto& s) { return s.id == *canonical; });
  StatementResult result;
  result.id = *canonical;
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome = skip("");
  if (spec.n < 3) {
    outcome = skip("needs n >= 3");
  } else if (info.needs_complete && spec.gens != "complete" &&
             !make_graph(spec).is_complete()) {
    outcome = skip("needs the complete transposition set");
  } else {
    try {
      outcome = dispatch(*canonical, spec);
    } catch (const ConsistencyError& ex) {
      outcome = fail(std::string("internal consistency failure: ") + ex.what());
    }
  }
  result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  result.status = outcome.status;
  result.detail = std::move(outcome.detail);
  result.witness = std::move(outcome.witness);
  return result;
}

nlohmann::json to_json(const StatementResult& r, const JobSpec& spec) {
  return {{"statement", r.id},
          {"parameters", {{"n", spec.n}, {"gens", spec.gens}, {"seed", spec.seed},
                          {"samples", spec.samples}}},
          {"status", to_string(r.status)},
          {"pass", r.status != Status::kFail},
          {"detail", r.detail},
          {"witness", r.witness},
          {"wall_time_ms", r.wall_ms}};
}

int cmd_build(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  const CayleyGraph x = make_graph(spec);
  std::string exported;
  if (spec.what == "cayley") {
    if (spec.format == Format::kJson) exported = to_json(x).dump() + "\n";
    if (spec.format == Format::kDimacs) exported = to_dimacs(x);
  } else if (spec.what == "tgraph" || spec.what == "line") {
    const SimpleGraph g = spec.what == "tgraph" ? x.transposition_graph()
                                                : line_graph(x.transposition_graph());
    if (spec.format == Format::kJson) exported = to_json(g).dump() + "\n";
    if (spec.format == Format::kDimacs) exported = to_dimacs(g);
  } else {
    throw InvalidArgument("unknown --what '" + spec.what + "'");
  }
  // The summary goes to stderr only when the export itself occupies stdout.
  const bool export_on_stdout = !exported.empty() && spec.output.empty();
  print_summary(x, export_on_stdout ? err : out);
  if (!exported.empty()) emit(spec, exported, out);
  return kOk;
}

int cmd_aut(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  const CayleyGraph x = make_graph(spec);
  const SearchOptions options = search_options(spec);
  nlohmann::json report = aut_report(x, options);
  const auto order = report.at("order").get<std::uint64_t>();
  report["materialized"] = order <= options.cap;
  emit(spec, report.dump(2) + "\n", out);
  if (order > options.cap) {
    err << "group order " << order << " exceeds the element cap " << options.cap
        << "; elements were not materialized\n";
    return kCapExceeded;
  }
  return kOk;
}

int cmd_normality(const JobSpec& spec, std::ostream& out, std::ostream&) {
  const CayleyGraph x = make_graph(spec);
  const CayleyNormality cn = is_normal_cayley(x, search_options(spec));
  if (spec.format == Format::kJson) {
    nlohmann::json j = {{"n", spec.n}, {"gens", spec.gens}, {"normal", cn.normal},
                        {"by_conjugation", cn.by_conjugation},
                        {"little_group_order", cn.little_group_order}};
    j["by_little_group"] = cn.by_little_group ? nlohmann::json(*cn.by_little_group) : nlohmann::json(nullptr);
    if (cn.witness) {
      j["witness"] = {{"conjugator", images_of(cn.witness->conjugator)},
                      {"element", images_of(cn.witness->element)},
                      {"conjugate", images_of(cn.witness->conjugate)}};
    }
    emit(spec, j.dump(2) + "\n", out);
    return kOk;
  }
  std::ostringstream text;
  text << "Cay(S_" << spec.n << ", " << spec.gens << "): "
       << (cn.normal ? "NORMAL" : "NOT NORMAL") << "\n";
  text << "  conjugation test: R(S_n) " << (cn.by_conjugation ? "is" : "is not")
       << " normal in Aut\n";
  if (cn.by_little_group) {
    text << "  little-group test: |L_e| = " << cn.little_group_order << " -> "
         << (*cn.by_little_group ? "normal" : "not normal") << " (methods agree)\n";
  } else {
    text << "  little-group test: not applied for n < 5 (|L_e| = "
         << cn.little_group_order << ")\n";
  }
  if (cn.witness) {
    const auto& w = *cn.witness;
    auto describe = [&](const VertexMap& m) {
      if (auto s = is_right_translation(x, m)) return "right translation by " + s->to_string();
      std::string d = "e -> " + x.vertex(m[x.identity_vertex()]).to_string() + ";";
      for (const auto& t : x.generators()) {
        d += (d.back() == ';' ? " " : ", ") + t.to_string() + " -> " + x.vertex(m[x.index_of(t)]).to_string();
      }
      return d;
    };
    text << "  witness: g = " << describe(w.conjugator) << "\n"
         << "           n = " << describe(w.element) << "\n"
         << "           g^-1 n g = " << describe(w.conjugate) << " (not in R(S_n))\n";
  }
  emit(spec, text.str(), out);
  return kOk;
}

int cmd_verify(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  if (spec.statement == "all") {
    ids = statement_ids();
  } else {
    auto c = canonical_statement(spec.statement);
    if (!c) {
      err << "unknown statement id '" << spec.statement << "'; known ids:";
      for (const auto& id : statement_ids()) err << ' ' << id;
      err << '\n';
      return kUsage;
    }
    ids.push_back(*c);
  }
  nlohmann::json report = {{"statements", nlohmann::json::array()}};
  bool all_ok = true;
  for (const auto& id : ids) {
    const StatementResult r = run_statement(id, spec);
    all_ok = all_ok && r.status != Status::kFail;
    report["statements"].push_back(to_json(r, spec));
    if (spec.format != Format::kJson) {
      char timing[32];
      std::snprintf(timing, sizeof timing, "%.1f ms", r.wall_ms);
      out << to_string(r.status) << "  " << r.id << "  (n=" << spec.n << ", " << spec.gens
          << ")  " << r.detail << "  [" << timing << "]\n";
    }
  }
  report["pass"] = all_ok;
  if (spec.format == Format::kJson) {
    out << report.dump(2) << "\n";
  }
  if (!spec.output.empty()) {
    std::ofstream file(spec.output);
    if (!file) throw InvalidArgument("cannot open output file '" + spec.output + "'");
    file << report.dump(2) << "\n";
  }
  return all_ok ? kOk : kVerificationFailed;
}

int cmd_replay(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  std::ifstream file(spec.report_path);
  if (!file) {
    err << "cannot read report '" << spec.report_path << "'\n";
    return kUsage;
  }
  nlohmann::json report;
  try {
    report = nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& ex) {
    err << "malformed report: " << ex.what() << "\n";
    return kUsage;
  }
  bool reproduced = true;
  for (const auto& entry : report.at("statements")) {
    JobSpec s = spec;
    const auto& p = entry.at("parameters");
    s.n = p.at("n").get<int>();
    s.gens = p.at("gens").get<std::string>();
    s.seed = p.value("seed", std::uint64_t{0});
    s.samples = p.value("samples", 8);
    s.max_n = std::max(s.max_n, s.n);
    const std::string id = entry.at("statement").get<std::string>();
    const StatementResult r = run_statement(id, s);
    const bool same = to_string(r.status) == entry.at("status").get<std::string>();
    reproduced = reproduced && same;
    out << (same ? "REPRODUCED" : "DIFFERS") << "  " << id << "  (n=" << s.n << ", " << s.gens
        << ")  recorded " << entry.at("status").get<std::string>() << ", now "
        << to_string(r.status) << "\n";
  }
  return reproduced ? kOk : kVerificationFailed;
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    if (spec.command == "build") return cmd_build(spec, out, err);
    if (spec.command == "aut") return cmd_aut(spec, out, err);
    if (spec.command == "normality") return cmd_normality(spec, out, err);
    if (spec.command == "verify") return cmd_verify(spec, out, err);
    if (spec.command == "replay") return cmd_replay(spec, out, err);
    err << "unknown command '" << spec.command << "'\n";
    return kUsage;
  } catch (const CapExceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return kCapExceeded;
  } catch (const InvalidArgument& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& ex) {
    err << "internal consistency failure: " << ex.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace cayleylab::cli
