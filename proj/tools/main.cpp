// Command-line front end: constructions, invariants, decomposition families,
// closed-form values, the exhaustive oracles, and the claim-by-claim
// verification reports. Graphs cross the boundary as graph6 strings.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "blowup/canonical.hpp"
#include "blowup/constructions.hpp"
#include "blowup/decomposition.hpp"
#include "blowup/formulas.hpp"
#include "blowup/graph6.hpp"
#include "blowup/invariants.hpp"
#include "blowup/oracle.hpp"
#include "blowup/registry.hpp"

using nlohmann::json;
using namespace blowup;

namespace {

std::vector<int> mask_to_list(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

json graph_stats(const Graph& g) {
  return json{{"graph6", graph6_encode(g)},
              {"order", g.order()},
              {"size", g.size()},
              {"canonical", canonical_form(g).value}};
}

BlowupKind parse_kind(const std::string& name, int t, int s) {
  if (name == "matching") return {BlowupKind::Type::kMatching, t, 0};
  if (name == "star") return {BlowupKind::Type::kStar, t, 0};
  if (name == "path") return {BlowupKind::Type::kPath, t, 0};
  if (name == "cycle") return {BlowupKind::Type::kCycle, t, 0};
  if (name == "clique") return {BlowupKind::Type::kClique, t, 0};
  if (name == "complete-bipartite")
    return {BlowupKind::Type::kCompleteBipartite, t, s};
  throw ParameterError("unknown formula kind: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Turan-number workbench for edge blow-ups"};
  app.require_subcommand(1);

  std::string cache_dir;
  if (const char* env = std::getenv("BLOWUP_CACHE_DIR")) cache_dir = env;
  bool paranoid = false;
  int threads = 0;
  app.add_option("--cache-dir", cache_dir,
                 "oracle result cache directory (env BLOWUP_CACHE_DIR)");
  app.add_flag("--paranoid", paranoid, "replay-verify cache hits");
  app.add_option("--threads", threads, "worker threads for the oracle");

  // construct
  auto* construct = app.add_subcommand("construct", "build a named graph");
  std::string c_kind;
  int c_n = 0, c_p = 2, c_s = 1, c_t = 1, c_a = 0, c_b = 0, c_nu = 0,
      c_delta = 0, c_k = 1;
  std::string c_base, c_apex = "clique", c_apex_graph;
  bool c_stats = false;
  construct->add_option("kind", c_kind,
                        "turan|blowup|h|hfamily|kst-split|gadget|witness|"
                        "complete|path|cycle|star|matching|complete-bipartite")
      ->required();
  construct->add_option("--n", c_n);
  construct->add_option("--p", c_p);
  construct->add_option("--s", c_s);
  construct->add_option("--t", c_t);
  construct->add_option("--a", c_a);
  construct->add_option("--b", c_b);
  construct->add_option("--nu", c_nu);
  construct->add_option("--delta", c_delta);
  construct->add_option("--k", c_k);
  construct->add_option("--base", c_base, "base graph as graph6");
  construct->add_option("--apex", c_apex, "clique|independent");
  construct->add_option("--apex-graph", c_apex_graph, "graph6 on the apex");
  construct->add_flag("--stats", c_stats, "emit JSON stats, not bare graph6");

  // params
  auto* params_cmd = app.add_subcommand("params", "invariants of a graph");
  std::string p_graph;
  params_cmd->add_option("graph6", p_graph, "graph6 input")->required();

  // decompose
  auto* decompose = app.add_subcommand("decompose", "decomposition family");
  std::string d_base;
  int d_p = 3, d_tmax = -1;
  bool d_direct = false;
  decompose->add_option("--base", d_base, "graph6 base graph")->required();
  decompose->add_option("--p", d_p)->required();
  decompose->add_flag("--direct", d_direct,
                      "base is the forbidden graph itself; run the "
                      "definition search instead of the split shortcut");
  decompose->add_option("--t-max", d_tmax, "spill size for the search");

  // formula
  auto* formula = app.add_subcommand("formula", "closed-form values");
  std::string f_kind;
  long long f_n = 0;
  int f_p = 3, f_t = 2, f_s = 1;
  bool f_nim = false;
  formula->add_option("kind", f_kind)->required();
  formula->add_option("--n", f_n)->required();
  formula->add_option("--p", f_p);
  formula->add_option("--t", f_t);
  formula->add_option("--s", f_s);
  formula->add_flag("--nim", f_nim, "uncovered-edge variant");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
  oracle->require_subcommand(1);
  auto* oracle_ex = oracle->add_subcommand("ex", "exact Turan number");
  int oe_n = 0;
  std::vector<std::string> oe_family;
  oracle_ex->add_option("--n", oe_n)->required();
  oracle_ex->add_option("--family", oe_family, "forbidden graphs, graph6")
      ->required();
  auto* oracle_nim = oracle->add_subcommand("nim", "uncovered-edge maximum");
  int on_n = 0;
  std::string on_pattern;
  oracle_nim->add_option("--n", on_n)->required();
  oracle_nim->add_option("--pattern", on_pattern)->required();
  auto* oracle_stab = oracle->add_subcommand("stabilize", "excess sequence");
  int os_s = 1, os_t = 2, os_p = 3, os_min = 4, os_max = 8;
  oracle_stab->add_option("--s", os_s)->required();
  oracle_stab->add_option("--t", os_t)->required();
  oracle_stab->add_option("--p", os_p);
  oracle_stab->add_option("--n-min", os_min);
  oracle_stab->add_option("--n-max", os_max);

  // verify
  auto* verify = app.add_subcommand("verify", "run a registered claim");
  std::string v_key, v_params = "{}", v_format = "text", v_out;
  bool v_list = false;
  verify->add_option("key", v_key, "claim key (see --list)");
  verify->add_option("--params", v_params, "JSON grid overrides");
  verify->add_option("--format", v_format, "text|json");
  verify->add_option("--out", v_out, "also write the JSON report here");
  verify->add_flag("--list", v_list, "list registered claims");

  // report
  auto* report_cmd = app.add_subcommand("report", "re-render a saved report");
  std::string r_in, r_format = "text";
  report_cmd->add_option("--in", r_in, "saved JSON report")->required();
  report_cmd->add_option("--format", r_format, "text|json");

  CLI11_PARSE(app, argc, argv);

  try {
    std::unique_ptr<OracleCache> cache;
    OracleOptions options;
    if (!cache_dir.empty()) {
      cache = std::make_unique<OracleCache>(cache_dir);
      options.cache = cache.get();
    }
    options.paranoid = paranoid;
    options.threads = threads;

    if (*construct) {
      Graph g;
      if (c_kind == "turan") g = turan_graph(c_n, c_p);
      else if (c_kind == "blowup") g = edge_blowup(graph6_decode(c_base), c_p);
      else if (c_kind == "h")
        g = h_construction(c_n, c_p, c_s,
                           c_apex == "independent" ? ApexKind::kIndependent
                                                   : ApexKind::kClique);
      else if (c_kind == "hfamily")
        g = h_family_member({c_n, c_p, c_s, c_nu, c_delta,
                             c_apex_graph.empty() ? Graph(0)
                                                  : graph6_decode(c_apex_graph)});
      else if (c_kind == "kst-split") g = k_st_split(c_s, c_t, c_a, c_b);
      else if (c_kind == "gadget") g = h_odd_gadget(c_t);
      else if (c_kind == "witness") g = e_nu_delta_witness(c_nu, c_delta);
      else if (c_kind == "complete") g = complete_graph(c_n);
      else if (c_kind == "path") g = path_graph(c_n);
      else if (c_kind == "cycle") g = cycle_graph(c_n);
      else if (c_kind == "star") g = star_graph(c_n);
      else if (c_kind == "matching") g = matching_graph(c_k);
      else if (c_kind == "complete-bipartite")
        g = complete_bipartite_graph(c_s, c_t);
      else throw ParameterError("unknown construct kind: " + c_kind);
      if (c_stats)
        std::cout << graph_stats(g).dump(2) << '\n';
      else
        std::cout << graph6_encode(g) << '\n';
    } else if (*params_cmd) {
      Graph g = graph6_decode(p_graph);
      json out{{"graph6", graph6_encode(g)},
               {"order", g.order()},
               {"size", g.size()},
               {"canonical", canonical_form(g).value},
               {"max_degree", g.max_degree()},
               {"matching_number", matching_number(g)},
               {"factor_critical", is_factor_critical(g)}};
      if (g.order() <= 20) out["chromatic_number"] = chromatic_number(g);
      if (g.order() <= 32) out["covering_number"] = covering_number(g);
      if (auto part = bipartition(g)) {
        out["bipartite"] = true;
        out["side_a"] = mask_to_list(part->side_a);
        auto icn = independent_covering_number(g);
        out["independent_covering_number"] = icn->size;
        out["independent_covering"] = mask_to_list(icn->vertices);
      } else {
        out["bipartite"] = false;
      }
      std::cout << out.dump(2) << '\n';
    } else if (*decompose) {
      Graph base = graph6_decode(d_base);
      DecompositionFamily family =
          d_direct ? decomposition_family_direct(base, d_p, d_tmax)
                   : decomposition_family_blowup(base, d_p);
      ParamRecord record = derive_params(family);
      ExBounds bounds = decomposition_ex_bounds(family, record, options);
      json witnesses = json::array();
      for (const SWitness& w : record.s_witnesses)
        witnesses.push_back(json{{"member", graph6_encode(w.member)},
                                 {"covering", mask_to_list(w.covering)}});
      json out{{"members", family.members.labels()},
               {"provenance", family.provenance == Provenance::kSplitShortcut
                                  ? "split-shortcut"
                                  : "definition-search"},
               {"p", family.p},
               {"q", record.q},
               {"k", record.k},
               {"S_witnesses", witnesses},
               {"ex_bounds",
                {{"ex_q1_B", bounds.ex_q1_b},
                 {"equality", bounds.equality},
                 {"lower_at_20", bounds.lower(20)},
                 {"upper_at_20", bounds.upper(20)}}}};
      if (record.b_sentinel)
        out["B"] = "sentinel";
      else
        out["B"] = record.b.labels();
      std::cout << out.dump(2) << '\n';
    } else if (*formula) {
      BlowupKind kind = parse_kind(f_kind, f_t, f_s);
      FormulaResult result =
          f_nim ? nim_formula(kind, f_n, f_p) : ex_blowup_formula(kind, f_n, f_p);
      json out{{"kind", result.kind},
               {"n", f_n},
               {"p", f_p},
               {"value", result.value},
               {"valid_for", "sufficiently large n"},
               {"source", result.source}};
      if (result.unresolved) out["unresolved_constant"] = *result.unresolved;
      std::cout << out.dump(2) << '\n';
    } else if (*oracle_ex) {
      GraphFamily family;
      for (const std::string& g6 : oe_family) family.insert(graph6_decode(g6));
      OracleResult result = exact_ex(oe_n, family, options);
      json out{{"n", result.n},
               {"family", family.labels()},
               {"value", result.value},
               {"witnesses", result.witnesses},
               {"explored", result.explored}};
      std::cout << out.dump(2) << '\n';
    } else if (*oracle_nim) {
      NimResult result = exact_nim_g(on_n, graph6_decode(on_pattern), options);
      json out{{"n", result.n},
               {"pattern", result.pattern},
               {"value", result.value},
               {"red_edges", result.red_edges},
               {"nim_edges", result.nim_edges}};
      std::cout << out.dump(2) << '\n';
    } else if (*oracle_stab) {
      StabilizeResult result =
          stabilize_p_st(os_s, os_t, os_p, os_min, os_max, options);
      json diffs = json::array();
      for (auto [n, diff] : result.differences)
        diffs.push_back(json{{"n", n}, {"excess", diff}});
      json out{{"s", os_s},
               {"t", os_t},
               {"p", os_p},
               {"family", result.family.labels()},
               {"differences", diffs},
               {"stabilized", result.stabilized}};
      std::cout << out.dump(2) << '\n';
    } else if (*verify) {
      if (v_list || v_key.empty()) {
        for (const std::string& key : registry_keys()) std::cout << key << '\n';
        return 0;
      }
      VerificationReport report =
          run_verification(v_key, json::parse(v_params), options);
      std::cout << render_report(report, v_format);
      if (!v_out.empty()) {
        std::ofstream out(v_out);
        out << report_to_json(report).dump(2) << '\n';
      }
      return report.exit_code();
    } else if (*report_cmd) {
      std::ifstream in(r_in);
      if (!in) throw ParameterError("cannot open " + r_in);
      json j = json::parse(in);
      std::cout << render_report(report_from_json(j), r_format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
