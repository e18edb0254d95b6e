#include "blowup/formulas.hpp"

#include "blowup/decomposition.hpp"

namespace blowup {

long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

long long t_p_edges(long long n, int p) {
  if (n < 0 || p < 1) throw ParameterError("t_p(n) needs n >= 0 and p >= 1");
  long long m = n / p, r = n % p;
  return binom2(n) - r * binom2(m + 1) - (p - r) * binom2(m);
}

long long h_edges(long long n, int p, int s) {
  if (s < 1 || n < s - 1)
    throw ParameterError("h(n,p,s) needs s >= 1 and n >= s-1");
  return binom2(s - 1) + static_cast<long long>(s - 1) * (n - s + 1) +
         t_p_edges(n - s + 1, p);
}

long long h_prime_edges(long long n, int p, int s) {
  return h_edges(n, p, s) - binom2(s - 1);
}

long long f_chvatal_hanson(int nu, int delta) {
  if (nu < 0 || delta < 0)
    throw ParameterError("f(nu,delta) needs nu, delta >= 0");
  if (nu == 0 || delta == 0) return 0;
  long long ceil_half = (delta + 1) / 2;
  return static_cast<long long>(nu) * delta +
         static_cast<long long>(delta / 2) * (nu / ceil_half);
}

long long f_diag(int k) {
  if (k < 1) throw ParameterError("f_diag needs k >= 1");
  long long kk = k;
  return k % 2 == 1 ? kk * kk - kk : kk * kk - 3 * kk / 2;
}

long long g_diag(int k) {
  if (k < 2) throw ParameterError("g_diag needs k >= 2");
  long long kk = k;
  return k % 2 == 1 ? (2 * kk * kk - 3 * kk - 1) / 2 : kk * kk - 2 * kk + 1;
}

Graph blowup_base(const BlowupKind& kind) {
  switch (kind.type) {
    case BlowupKind::Type::kMatching:
      return matching_graph(kind.t);
    case BlowupKind::Type::kStar:
      return star_graph(kind.t + 1);
    case BlowupKind::Type::kPath:
      return path_graph(kind.t);
    case BlowupKind::Type::kCycle:
      return cycle_graph(kind.t);
    case BlowupKind::Type::kClique:
      return complete_graph(kind.t);
    case BlowupKind::Type::kCompleteBipartite:
      return complete_bipartite_graph(kind.s, kind.t);
  }
  throw ParameterError("unknown blow-up kind");
}

std::string blowup_kind_name(const BlowupKind& kind) {
  switch (kind.type) {
    case BlowupKind::Type::kMatching:
      return "matching(" + std::to_string(kind.t) + ")";
    case BlowupKind::Type::kStar:
      return "star(" + std::to_string(kind.t) + ")";
    case BlowupKind::Type::kPath:
      return "path(" + std::to_string(kind.t) + ")";
    case BlowupKind::Type::kCycle:
      return "cycle(" + std::to_string(kind.t) + ")";
    case BlowupKind::Type::kClique:
      return "clique(" + std::to_string(kind.t) + ")";
    case BlowupKind::Type::kCompleteBipartite:
      return "complete_bipartite(" + std::to_string(kind.s) + "," +
             std::to_string(kind.t) + ")";
  }
  return "?";
}

FormulaResult ex_blowup_formula(const BlowupKind& kind, long long n, int p) {
  FormulaResult out;
  out.kind = blowup_kind_name(kind);
  switch (kind.type) {
    case BlowupKind::Type::kMatching:
      if (kind.t < 1) throw ParameterError("matching needs t >= 1");
      if (p < 2) throw ParameterError("matching blow-ups need p >= 2");
      out.value = h_edges(n, p, kind.t);
      out.source = "cor-matching";
      return out;
    case BlowupKind::Type::kStar:
      if (kind.t < 1) throw ParameterError("star needs t >= 1");
      if (p < 2) throw ParameterError("star blow-ups need p >= 2");
      out.value = h_edges(n, p, 1) + f_chvatal_hanson(kind.t - 1, kind.t - 1);
      out.source = "cor-star";
      return out;
    case BlowupKind::Type::kPath:
      if (kind.t < 2) throw ParameterError("path needs t >= 2");
      if (p < 3) throw ParameterError("path blow-ups need p >= 3");
      out.value = h_edges(n, p, kind.t / 2) + (kind.t % 2 == 1 ? 1 : 0);
      out.source = "cor-path";
      return out;
    case BlowupKind::Type::kCycle:
      if (kind.t < 3) throw ParameterError("cycle needs t >= 3");
      if (kind.t % 2 == 0) {
        if (p < 3) throw ParameterError("even cycle blow-ups need p >= 3");
        out.value = h_edges(n, p, kind.t / 2) + 1;
      } else {
        if (p < 4) throw ParameterError("odd cycle blow-ups need p >= 4");
        out.value = h_edges(n, p, (kind.t + 1) / 2);
      }
      out.source = "cor-cycle";
      return out;
    case BlowupKind::Type::kClique: {
      if (kind.t < 3) throw ParameterError("clique needs t >= 3");
      if (p < kind.t + 1) throw ParameterError("clique blow-ups need p >= t+1");
      long long apex = binom2(kind.t - 1);
      out.value = apex * (n - apex) + t_p_edges(n - apex, p);
      out.source = "thm-clique";
      return out;
    }
    case BlowupKind::Type::kCompleteBipartite:
      if (kind.s < 1 || kind.t < kind.s)
        throw ParameterError("complete bipartite needs 1 <= s <= t");
      if (p < 3)
        throw ParameterError("complete bipartite blow-ups need p >= 3");
      out.value = h_prime_edges(n, p, kind.s);
      out.unresolved = "p(s,t)";
      out.source = "thm-kst-experiment";
      return out;
  }
  throw ParameterError("unknown blow-up kind");
}

FormulaResult nim_formula(const BlowupKind& kind, long long n, int p) {
  bool clique = kind.type == BlowupKind::Type::kClique;
  bool odd_cycle =
      kind.type == BlowupKind::Type::kCycle && kind.t % 2 == 1;
  if (!clique && !odd_cycle)
    throw ParameterError(
        "monochromatic-excess formula needs a non-bipartite base "
        "(clique or odd cycle)");

  FormulaResult ex = ex_blowup_formula(kind, n, p);
  DecompositionFamily family =
      decomposition_family_blowup(blowup_base(kind), p);
  ParamRecord params = derive_params(family);

  FormulaResult out;
  out.kind = ex.kind;
  out.source = "thm-nim";
  if (params.b_sentinel) {
    out.value = ex.value;  // no excess
  } else {
    long long ex_b = exact_ex(params.q - 1, params.b).value;
    out.value = ex.value + binom2(params.q - 1) - ex_b;
  }
  return out;
}

}  // namespace blowup
