#include "blowup/registry.hpp"

#include <algorithm>
#include <bit>

#include "blowup/canonical.hpp"
#include "blowup/constructions.hpp"
#include "blowup/decomposition.hpp"
#include "blowup/formulas.hpp"
#include "blowup/graph6.hpp"
#include "blowup/invariants.hpp"

namespace blowup {

namespace {

using nlohmann::json;

int param_or(const json& params, const char* name, int fallback) {
  return params.contains(name) ? params[name].get<int>() : fallback;
}

OracleResult run_ex(VerificationReport& report, int n, const GraphFamily& family,
                    const OracleOptions& options) {
  OracleResult result = exact_ex(n, family, options);
  report.explored += result.explored;
  return result;
}

ReportRow& add_row(VerificationReport& report, json params, std::string claim,
                   RowMode mode) {
  ReportRow row;
  row.params = std::move(params);
  row.claim = std::move(claim);
  row.mode = mode;
  report.rows.push_back(std::move(row));
  return report.rows.back();
}

void equality_row(VerificationReport& report, json params, std::string claim,
                  long long expected, long long observed,
                  std::string note = {}) {
  ReportRow& row = add_row(report, std::move(params), std::move(claim),
                           RowMode::kEquality);
  row.expected = expected;
  row.observed = observed;
  row.match = expected == observed;
  row.note = std::move(note);
}

void check_row(VerificationReport& report, json params, std::string claim,
               bool ok, std::string note = {}) {
  ReportRow& row = add_row(report, std::move(params), std::move(claim),
                           RowMode::kEquality);
  row.match = ok;
  row.note = std::move(note);
}

// The extremal candidate construction for a blow-up kind, sized n_c.
Graph extremal_candidate(const BlowupKind& kind, int n_c, int p) {
  switch (kind.type) {
    case BlowupKind::Type::kMatching:
      return h_construction(n_c, p, kind.t, ApexKind::kClique);
    case BlowupKind::Type::kStar:
      return h_family_member({n_c, p, 1, kind.t - 1, kind.t - 1, Graph(0)});
    case BlowupKind::Type::kPath: {
      int q = kind.t / 2;
      if (kind.t % 2 == 1)
        return h_family_member({n_c, p, q, 1, 1, complete_graph(q - 1)});
      return h_construction(n_c, p, q, ApexKind::kClique);
    }
    case BlowupKind::Type::kCycle: {
      if (kind.t % 2 == 0)
        return h_family_member(
            {n_c, p, kind.t / 2, 1, 1, complete_graph(kind.t / 2 - 1)});
      return h_construction(n_c, p, (kind.t + 1) / 2, ApexKind::kClique);
    }
    case BlowupKind::Type::kClique: {
      int q = static_cast<int>(binom2(kind.t - 1)) + 1;
      return h_family_member({n_c, p, q, 0, 0, empty_graph(q - 1)});
    }
    default:
      throw ParameterError("no extremal candidate for this kind");
  }
}

// Shared runner for the matching/star/path corollaries, where the blow-up is
// small enough for the direct Turan oracle.
void run_blowup_corollary(VerificationReport& report, const BlowupKind& kind,
                          int p, int n_min, int n_max, bool full_host,
                          const OracleOptions& options) {
  Graph base = blowup_base(kind);
  Graph pattern = edge_blowup(base, p);
  GraphFamily forbidden{pattern};
  std::string name = blowup_kind_name(kind);

  size_t first = report.rows.size();
  for (int n = n_min; n <= n_max; ++n) {
    json params{{"n", n}, {"p", p}};
    FormulaResult formula = ex_blowup_formula(kind, n, p);
    if (pattern.order() > n) {
      ReportRow& row = add_row(report, params, "ex(n, blow-up) vs formula",
                               RowMode::kThreshold);
      row.skipped = "blow-up has " + std::to_string(pattern.order()) +
                    " vertices; every graph on n vertices is vacuously free";
      continue;
    }
    try {
      OracleResult oracle = run_ex(report, n, forbidden, options);
      ReportRow& row = add_row(report, params, "ex(n, blow-up) vs formula",
                               RowMode::kThreshold);
      row.expected = formula.value;
      row.observed = oracle.value;
      row.match = formula.value == oracle.value;
      row.witnesses = oracle.witnesses;
    } catch (const ResourceError& e) {
      ReportRow& row = add_row(report, params, "ex(n, blow-up) vs formula",
                               RowMode::kThreshold);
      row.skipped = e.what();
    }
  }
  judge_threshold(report, first, report.rows.size(), name + " blow-up, p=" +
                                                         std::to_string(p));

  int n_c = std::max(n_max, pattern.order() + 2);
  Graph candidate = extremal_candidate(kind, n_c, p);
  equality_row(report, json{{"n", n_c}, {"p", p}},
               "extremal candidate edge count equals the formula",
               ex_blowup_formula(kind, n_c, p).value, candidate.size());
  if (full_host) {
    FreenessCertificate cert = verify_free(candidate, forbidden);
    check_row(report, json{{"n", n_c}, {"p", p}},
              "extremal candidate contains no blow-up copy", cert.free);
  }
}

void run_chvatal_diag(VerificationReport& report, const json& params) {
  int k_max = param_or(params, "k_max", 200);
  for (int k = 2; k <= k_max; ++k) {
    bool ok = f_diag(k) == f_chvatal_hanson(k - 1, k - 1) &&
              g_diag(k) <= f_diag(k);
    if (!ok || k == k_max || k <= 6) {
      ReportRow& row =
          add_row(report, json{{"k", k}},
                  "piecewise diagonal equals the product formula, and the "
                  "restricted value never exceeds it",
                  RowMode::kEquality);
      row.expected = f_diag(k);
      row.observed = f_chvatal_hanson(k - 1, k - 1);
      row.match = ok;
    }
  }
  check_row(report, json{{"k_max", k_max}},
            "identity verified for every k in [2, k_max]",
            [&] {
              for (int k = 2; k <= k_max; ++k)
                if (f_diag(k) != f_chvatal_hanson(k - 1, k - 1) ||
                    g_diag(k) > f_diag(k))
                  return false;
              return true;
            }());
}

void run_lem_6_1(VerificationReport& report, const json& params,
                 const OracleOptions& options) {
  std::vector<int> ts = params.contains("t")
                            ? std::vector<int>{params["t"].get<int>()}
                            : std::vector<int>{3, 4};
  int n_min = param_or(params, "n_min", 8);
  int n_max = param_or(params, "n_max", 10);
  for (int t : ts) {
    GraphFamily family{star_graph(t + 1), matching_graph(t)};
    for (int i = 0; i <= t - 1; ++i) family.insert(k_st_split(2, t - 1, 0, i));

    size_t first = report.rows.size();
    for (int n = n_min; n <= n_max; ++n) {
      OracleResult oracle = run_ex(report, n, family, options);
      ReportRow& row =
          add_row(report, json{{"t", t}, {"n", n}},
                  "ex(n, {star, matching, split patterns}) vs g_diag(t)",
                  RowMode::kThreshold);
      row.expected = g_diag(t);
      row.observed = oracle.value;
      row.match = row.expected == row.observed;
      row.witnesses = oracle.witnesses;
    }
    judge_threshold(report, first, report.rows.size(),
                    "restricted family, t=" + std::to_string(t));

    // The two lower-bound constructions attain the value and avoid the family.
    Graph construction;
    if (t % 2 == 0) {
      construction = disjoint_union(complete_graph(t), complete_graph(t - 1));
    } else {
      Graph trimmed = complete_graph(t);
      trimmed.remove_edge(0, 1);
      if (t >= 3) trimmed.remove_edge(0, 2);
      for (int v = 3; v + 1 < t; v += 2) trimmed.remove_edge(v, v + 1);
      construction = disjoint_union(complete_graph(t), trimmed);
    }
    equality_row(report, json{{"t", t}}, "construction attains g_diag(t)",
                 g_diag(t), construction.size());
    check_row(report, json{{"t", t}}, "construction avoids the family",
              verify_free(construction, family).free);
  }
}

void run_prop_6_2(VerificationReport& report, const json& params) {
  std::vector<int> ts = params.contains("t")
                            ? std::vector<int>{params["t"].get<int>()}
                            : std::vector<int>{4, 6, 8};
  for (int t : ts) {
    Graph gadget = h_odd_gadget(t);
    equality_row(report, json{{"t", t}}, "gadget order is 2t-1", 2 * t - 1,
                 gadget.order());
    equality_row(report, json{{"t", t}}, "gadget max degree is t-1", t - 1,
                 gadget.max_degree());
    equality_row(report, json{{"t", t}}, "gadget matching number is t-1",
                 t - 1, matching_number(gadget));
    equality_row(report, json{{"t", t}}, "gadget edge count is f(t-1,t-1)",
                 f_diag(t), gadget.size());
    GraphFamily patterns = k_family(t);
    FreenessCertificate cert = verify_free(gadget, patterns);
    ReportRow& row = add_row(report, json{{"t", t}, {"patterns", patterns.size()}},
                             "gadget avoids every split pattern K_{a,b}(0,c)",
                             RowMode::kEquality);
    row.match = cert.free;
    if (!cert.free) {
      Graph member = patterns.members()[static_cast<size_t>(cert.member)];
      row.witnesses.push_back(graph6_encode(member));
      std::string map;
      for (int v : cert.embedding->map) map += std::to_string(v) + " ";
      row.note =
          "replayable counterexample: the pattern above embeds via map [" +
          map + "]; a maximum-degree vertex's closed neighbourhood plus "
          "distinct pendants realises K_{t-1,2}(0,1) inside the gadget";
    }
  }
}

void run_lem_31(VerificationReport& report, const json& params) {
  struct Case {
    const char* name;
    Graph base;
  };
  std::vector<Case> cases{{"M_4", matching_graph(2)}, {"P_3", path_graph(3)},
                          {"P_4", path_graph(4)},     {"S_4", star_graph(4)},
                          {"K_3", complete_graph(3)}, {"C_4", cycle_graph(4)}};
  int replay_cap = param_or(params, "replay_cap", 2);
  for (const Case& c : cases) {
    int p = chromatic_number(c.base) + 1;
    GraphFamily split = split_family(c.base);
    Graph pattern = edge_blowup(c.base, p);
    DecompositionFamily direct = decomposition_family_direct(pattern, p);
    check_row(report, json{{"base", c.name}, {"p", p}},
              "definition search equals the split family up to isomorphism",
              split == direct.members,
              std::to_string(split.size()) + " members");
    // Literal replay: each member, inserted into one class of the host,
    // recreates the blow-up.
    std::vector<Graph> members = direct.members.members();
    int replayed = 0;
    for (const Graph& m : members) {
      if (replayed >= replay_cap) break;
      ++replayed;
      auto embedding = decomposition_host_embedding(pattern, p, m);
      check_row(report,
                json{{"base", c.name}, {"member", graph6_encode(m)}},
                "host assembled from the member contains the blow-up",
                embedding.has_value() &&
                    embedding->verify(
                        join(disjoint_union(m, empty_graph(pattern.order())),
                             complete_multipartite_graph(std::vector<int>(
                                 static_cast<size_t>(p - 1),
                                 pattern.order()))),
                        pattern));
    }
  }
}

struct BoundsCase {
  const char* name;
  Graph base;
  int p;
  // Which closed form the family's Turan number is expected to reach for
  // large n: 0 = lower bound, 1 = upper bound.
  int expected_side;
};

void run_lem_decomp_bounds(VerificationReport& report, const json& params,
                           const OracleOptions& options) {
  std::vector<BoundsCase> cases;
  cases.push_back({"M_4", matching_graph(2), 3, 0});
  cases.push_back({"S_4", star_graph(4), 3, 1});
  cases.push_back({"P_4", path_graph(4), 3, 0});
  cases.push_back({"C_4", cycle_graph(4), 3, 1});
  cases.push_back({"K_3", complete_graph(3), 4, 0});
  cases.push_back({"K_4", complete_graph(4), 5, 0});
  int n_min = param_or(params, "n_min", 7);
  int n_max = param_or(params, "n_max", 9);

  for (const BoundsCase& c : cases) {
    DecompositionFamily family = decomposition_family_blowup(c.base, c.p);
    ParamRecord record = derive_params(family);
    ExBounds bounds = decomposition_ex_bounds(family, record, options);
    size_t first = report.rows.size();
    for (int n = n_min; n <= n_max; ++n) {
      OracleResult oracle = run_ex(report, n, family.members, options);
      json cell{{"base", c.name}, {"n", n}};
      {
        ReportRow& row = add_row(report, cell, "ex(n, family) above the lower bound",
                                 RowMode::kLowerBound);
        row.expected = bounds.lower(n);
        row.observed = oracle.value;
        row.match = oracle.value >= bounds.lower(n);
      }
      {
        ReportRow& row = add_row(report, cell, "upper bound above ex(n, family)",
                                 RowMode::kLowerBound);
        row.expected = oracle.value;
        row.observed = bounds.upper(n);
        row.match = bounds.upper(n) >= oracle.value;
      }
      {
        long long target =
            c.expected_side == 0 ? bounds.lower(n) : bounds.upper(n);
        ReportRow& row = add_row(report, cell,
                                 "ex(n, family) attains the predicted bound",
                                 RowMode::kThreshold);
        row.expected = target;
        row.observed = oracle.value;
        row.match = target == oracle.value;
      }
    }
    judge_threshold(report, first, report.rows.size(),
                    std::string("family bounds, base ") + c.name);
  }
}

void run_thm_clique(VerificationReport& report, const json& params,
                    const OracleOptions& options) {
  int t = param_or(params, "t", 3);
  int p = param_or(params, "p", t + 1);
  int n_min = param_or(params, "n_min", 6);
  int n_max = param_or(params, "n_max", 9);
  bool full_host = param_or(params, "full_host", 1) != 0;

  Graph base = complete_graph(t);
  DecompositionFamily family = decomposition_family_blowup(base, p);
  ParamRecord record = derive_params(family);
  long long q_expected = binom2(t - 1) + 1;
  equality_row(report, json{{"t", t}}, "q equals C(t-1,2)+1", q_expected,
               record.q);
  check_row(report, json{{"t", t}}, "covering family reduces to a single edge",
            record.b_sentinel
                ? record.q == 2
                : record.b.size() == 1 &&
                      record.b.members().front() == complete_graph(2),
            record.b_sentinel ? "sentinel {K_q} with q = 2" : "literal {K_2}");
  equality_row(report, json{{"t", t}}, "k = 1 (non-bipartite base)", 1,
               record.k);

  ExBounds bounds = decomposition_ex_bounds(family, record, options);
  check_row(report, json{{"t", t}}, "bounds collapse to equality",
            bounds.equality);
  for (long long n : {20LL, 33LL}) {
    equality_row(report, json{{"t", t}, {"p", p}, {"n", n}},
                 "clique formula equals the decomposition closed form",
                 ex_blowup_formula({BlowupKind::Type::kClique, t, 0}, n, p).value,
                 h_prime_edges(n, p, record.q) + bounds.ex_q1_b);
  }

  size_t first = report.rows.size();
  for (int n = n_min; n <= n_max; ++n) {
    OracleResult oracle = run_ex(report, n, family.members, options);
    ReportRow& row = add_row(report, json{{"t", t}, {"n", n}},
                             "ex(n, decomposition family) vs closed form",
                             RowMode::kThreshold);
    row.expected = bounds.lower(n);
    row.observed = oracle.value;
    row.match = row.expected == row.observed;
    row.witnesses = oracle.witnesses;
  }
  judge_threshold(report, first, report.rows.size(),
                  "clique decomposition family, t=" + std::to_string(t));

  Graph pattern = edge_blowup(base, p);
  int n_c = pattern.order() + 2;
  Graph candidate = extremal_candidate({BlowupKind::Type::kClique, t, 0}, n_c, p);
  equality_row(report, json{{"t", t}, {"n", n_c}},
               "extremal candidate edge count equals the formula",
               ex_blowup_formula({BlowupKind::Type::kClique, t, 0}, n_c, p).value,
               candidate.size());
  if (full_host) {
    check_row(report, json{{"t", t}, {"n", n_c}},
              "extremal candidate contains no blow-up copy",
              verify_free(candidate, GraphFamily{pattern}).free);
  }
}

void run_cor_cycle(VerificationReport& report, const json& params,
                   const OracleOptions& options) {
  int t = param_or(params, "t", 4);
  int p = param_or(params, "p", t % 2 == 0 ? 3 : 4);
  int n_min = param_or(params, "n_min", 6);
  int n_max = param_or(params, "n_max", 9);
  bool full_host = param_or(params, "full_host", 1) != 0;
  BlowupKind kind{BlowupKind::Type::kCycle, t, 0};

  Graph base = cycle_graph(t);
  Graph pattern = edge_blowup(base, p);
  add_row(report, json{{"t", t}, {"p", p}}, "direct Turan oracle",
          RowMode::kThreshold)
      .skipped = "blow-up has " + std::to_string(pattern.order()) +
                 " vertices, beyond the exhaustive-search guard";

  DecompositionFamily family = decomposition_family_blowup(base, p);
  ParamRecord record = derive_params(family);
  ExBounds bounds = decomposition_ex_bounds(family, record, options);
  size_t first = report.rows.size();
  for (int n = n_min; n <= n_max; ++n) {
    OracleResult oracle = run_ex(report, n, family.members, options);
    ReportRow& row =
        add_row(report, json{{"t", t}, {"n", n}},
                "ex(n, decomposition family) attains the upper bound",
                RowMode::kThreshold);
    row.expected = t % 2 == 0 ? bounds.upper(n) : bounds.lower(n);
    row.observed = oracle.value;
    row.match = row.expected == row.observed;
    row.witnesses = oracle.witnesses;
  }
  judge_threshold(report, first, report.rows.size(),
                  "cycle decomposition family, t=" + std::to_string(t));

  int n_c = std::max(n_max, pattern.order() + 2);
  Graph candidate = extremal_candidate(kind, n_c, p);
  equality_row(report, json{{"t", t}, {"n", n_c}},
               "extremal candidate edge count equals the formula",
               ex_blowup_formula(kind, n_c, p).value, candidate.size());
  if (full_host) {
    check_row(report, json{{"t", t}, {"n", n_c}},
              "extremal candidate contains no blow-up copy",
              verify_free(candidate, GraphFamily{pattern}).free);
  }
}

void run_thm_kst(VerificationReport& report, const json& params,
                 const OracleOptions& options) {
  struct Probe {
    int s, t, n_min, n_max;
  };
  std::vector<Probe> probes{{1, 2, 4, 8}, {1, 3, 5, 8}, {2, 2, 6, 9}};
  if (params.contains("s"))
    probes = {{params["s"].get<int>(), params["t"].get<int>(),
               param_or(params, "n_min", 6), param_or(params, "n_max", 9)}};
  int p = param_or(params, "p", 3);

  for (const Probe& probe : probes) {
    StabilizeResult stab =
        stabilize_p_st(probe.s, probe.t, p, probe.n_min, probe.n_max, options);
    report.explored += stab.explored;
    json cell{{"s", probe.s}, {"t", probe.t}, {"p", p}};
    for (auto [n, diff] : stab.differences) {
      ReportRow& row = add_row(report, json{{"s", probe.s}, {"t", probe.t}, {"n", n}},
                               "ex(n, split family) - h'(n,1,s)",
                               RowMode::kExperiment);
      row.observed = diff;
    }
    check_row(report, cell, "difference sequence stabilized", stab.stabilized,
              "constant excess resolves the open additive constant");
    if (probe.s == 1) {
      // Stars: the constant is pinned by the star corollary.
      size_t first = report.rows.size();
      ReportRow& row = add_row(report, cell,
                               "stabilized excess equals f(t-1,t-1)",
                               RowMode::kThreshold);
      row.expected = f_chvatal_hanson(probe.t - 1, probe.t - 1);
      row.observed = stab.differences.back().second;
      row.match = row.expected == row.observed;
      judge_threshold(report, first, report.rows.size(),
                      "excess constant, s=1, t=" + std::to_string(probe.t));
    }
  }
}

void run_conj_7_1(VerificationReport& report, const json& params,
                  const OracleOptions& options) {
  struct Probe {
    int s, t, n_min, n_max;
  };
  std::vector<Probe> probes{{1, 2, 4, 8}, {1, 3, 5, 8}, {2, 2, 6, 9}};
  int p = param_or(params, "p", 3);
  for (const Probe& probe : probes) {
    StabilizeResult stab =
        stabilize_p_st(probe.s, probe.t, p, probe.n_min, probe.n_max, options);
    report.explored += stab.explored;
    long long i = (probe.s == probe.t && probe.s % 2 == 0) ? 1 : 0;
    long long conjectured = binom2(probe.s - 1) +
                            f_chvatal_hanson(probe.t - 1, probe.t - 1) -
                            (probe.s - 1 + 1) / 2 + i;
    ReportRow& row = add_row(
        report, json{{"s", probe.s}, {"t", probe.t}},
        "observed excess vs conjectured closed form (recorded, not judged)",
        RowMode::kExperiment);
    row.expected = conjectured;
    row.observed = stab.differences.back().second;
    row.note = stab.stabilized ? "sequence stabilized" : "sequence still moving";
  }
}

void run_cor_7_1(VerificationReport& report,
                 [[maybe_unused]] const json& params,
                 const OracleOptions& options) {
  struct Probe {
    const char* name;
    int copies;  // of K_{p+1}
    int p;
    int n_min, n_max;
  };
  std::vector<Probe> probes{{"2K_3", 2, 2, 6, 9}, {"2K_4", 2, 3, 8, 9}};
  for (const Probe& probe : probes) {
    Graph base = matching_graph(probe.copies);
    Graph pattern = edge_blowup(base, probe.p);
    DecompositionFamily direct =
        decomposition_family_direct(pattern, probe.p);
    check_row(report, json{{"family", probe.name}},
              "decomposition family is the single matching",
              direct.members == GraphFamily{base});

    size_t first = report.rows.size();
    for (int n = probe.n_min; n <= probe.n_max; ++n) {
      OracleResult oracle = run_ex(report, n, GraphFamily{pattern}, options);
      ReportRow& row = add_row(report, json{{"family", probe.name}, {"n", n}},
                               "ex(n, clique union) vs h(n,p,s)",
                               RowMode::kThreshold);
      row.expected = h_edges(n, probe.p, probe.copies);
      row.observed = oracle.value;
      row.match = row.expected == row.observed;
      row.witnesses = oracle.witnesses;
    }
    judge_threshold(report, first, report.rows.size(),
                    std::string("matching-only decomposition, ") + probe.name);
  }
}

void run_thm_nim(VerificationReport& report, const json& params,
                 const OracleOptions& options) {
  int n_max = param_or(params, "n_max", 7);

  size_t first = report.rows.size();
  for (int n = 5; n <= n_max; ++n) {
    NimResult nim = exact_nim_g(n, complete_graph(3), options);
    ReportRow& row = add_row(report, json{{"n", n}, {"pattern", "K_3"}},
                             "uncovered-edge maximum vs ex(n, K_3)",
                             RowMode::kThreshold);
    row.expected = t_p_edges(n, 2);
    row.observed = nim.value;
    row.match = row.expected == row.observed;
    if (!row.match)
      row.note = n < 6 ? "below the Ramsey number R(3,3)=6 a colouring with "
                         "no monochromatic triangle leaves every edge "
                         "uncovered"
                       : "a colouring whose few monochromatic triangles "
                         "overlap beats the extremal-graph colouring at "
                         "this n";
  }
  judge_threshold(report, first, report.rows.size(),
                  "edge-critical uncovered-edge bound, K_3");

  for (int n = 5; n <= n_max; ++n) {
    NimResult nim = exact_nim_g(n, complete_graph(3), options);
    OracleResult ex = run_ex(report, n, GraphFamily{complete_graph(3)}, options);
    ReportRow& row = add_row(report, json{{"n", n}, {"pattern", "K_3"}},
                             "uncovered-edge maximum is at least ex",
                             RowMode::kLowerBound);
    row.expected = ex.value;
    row.observed = nim.value;
    row.match = nim.value >= ex.value;
    ReportRow& excess = add_row(report, json{{"n", n}, {"pattern", "K_3"}},
                                "observed excess over ex (constant-excess "
                                "conjecture data)",
                                RowMode::kExperiment);
    excess.observed = nim.value - ex.value;
  }

  for (int t : {3, 4}) {
    int p = t + 1;
    long long n_eval = 60;
    long long ex_value =
        ex_blowup_formula({BlowupKind::Type::kClique, t, 0}, n_eval, p).value;
    long long nim_value =
        nim_formula({BlowupKind::Type::kClique, t, 0}, n_eval, p).value;
    equality_row(report, json{{"t", t}, {"p", p}, {"n", n_eval}},
                 "clique excess equals C(C(t-1,2), 2)", binom2(binom2(t - 1)),
                 nim_value - ex_value);
  }
  {
    long long n_eval = 60;
    long long ex_value =
        ex_blowup_formula({BlowupKind::Type::kCycle, 7, 0}, n_eval, 4).value;
    long long nim_value =
        nim_formula({BlowupKind::Type::kCycle, 7, 0}, n_eval, 4).value;
    equality_row(report, json{{"t", 7}, {"p", 4}, {"n", n_eval}},
                 "odd cycle has no excess (sentinel covering family)",
                 ex_value, nim_value);
  }
}

}  // namespace

std::vector<std::string> registry_keys() {
  return {"chvatal-diag",      "cor-matching",     "cor-star",
          "cor-path",          "cor-cycle",        "thm-clique",
          "thm-kst-experiment", "lem-decomp-bounds", "lem-6.1",
          "prop-6.2",          "lem-3.1-consistency", "thm-nim",
          "conj-7.1",          "cor-7.1"};
}

VerificationReport run_verification(const std::string& key, const json& params,
                                    const OracleOptions& options) {
  VerificationReport report;
  report.theorem_key = key;

  if (key == "chvatal-diag") {
    report.title = "bounded-degree bounded-matching maximum: piecewise diagonal";
    run_chvatal_diag(report, params);
  } else if (key == "cor-matching") {
    report.title = "Turan numbers for blow-ups of matchings";
    run_blowup_corollary(report,
                         {BlowupKind::Type::kMatching, param_or(params, "t", 2), 0},
                         param_or(params, "p", 2), param_or(params, "n_min", 6),
                         param_or(params, "n_max", 9),
                         param_or(params, "full_host", 1) != 0, options);
  } else if (key == "cor-star") {
    report.title = "Turan numbers for blow-ups of stars";
    run_blowup_corollary(report,
                         {BlowupKind::Type::kStar, param_or(params, "t", 2), 0},
                         param_or(params, "p", 2), param_or(params, "n_min", 6),
                         param_or(params, "n_max", 10),
                         param_or(params, "full_host", 1) != 0, options);
  } else if (key == "cor-path") {
    report.title = "Turan numbers for blow-ups of paths";
    run_blowup_corollary(report,
                         {BlowupKind::Type::kPath, param_or(params, "t", 3), 0},
                         param_or(params, "p", 3), param_or(params, "n_min", 7),
                         param_or(params, "n_max", 9),
                         param_or(params, "full_host", 1) != 0, options);
  } else if (key == "cor-cycle") {
    report.title = "Turan numbers for blow-ups of cycles";
    run_cor_cycle(report, params, options);
  } else if (key == "thm-clique") {
    report.title = "Turan numbers for blow-ups of cliques";
    run_thm_clique(report, params, options);
  } else if (key == "thm-kst-experiment") {
    report.title = "complete bipartite blow-ups: the open additive constant";
    run_thm_kst(report, params, options);
  } else if (key == "lem-decomp-bounds") {
    report.title = "closed-form bounds for decomposition-family Turan numbers";
    run_lem_decomp_bounds(report, params, options);
  } else if (key == "lem-6.1") {
    report.title = "restricted star/matching/split-pattern family maximum";
    run_lem_6_1(report, params, options);
  } else if (key == "prop-6.2") {
    report.title = "order-(2t-1) gadget avoids all split patterns";
    run_prop_6_2(report, params);
  } else if (key == "lem-3.1-consistency") {
    report.title = "definition search equals the split-family shortcut";
    run_lem_31(report, params);
  } else if (key == "thm-nim") {
    report.title = "edges outside monochromatic blow-up copies";
    run_thm_nim(report, params, options);
  } else if (key == "conj-7.1") {
    report.title = "conjectured closed form for the split-family constant";
    run_conj_7_1(report, params, options);
  } else if (key == "cor-7.1") {
    report.title = "families whose decomposition family is one matching";
    run_cor_7_1(report, params, options);
  } else {
    throw ParameterError("unknown theorem key: " + key +
                         " (see registry_keys())");
  }

  tally_rows(report);
  return report;
}

}  // namespace blowup
