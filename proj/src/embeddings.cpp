#include "grouplab/embeddings.hpp"

#include <algorithm>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

EmbeddingVerdict base(const char* predicate, const Subgroup& h) {
  EmbeddingVerdict v;
  v.predicate = predicate;
  v.subgroup = h.generators_string();
  v.group = h.parent->name();
  return v;
}

bool conjugate_equals(const Subgroup& h, const Perm& x, const Subgroup& target) {
  for (const Perm& e : h.elements)
    if (!target.contains(e.conjugated_by(x))) return false;
  return true;
}

// permutes-with-every-Sylow loop shared by the two s-properties
EmbeddingVerdict sylow_permute_check(const char* predicate, const Subgroup& h0,
                                     AnalysisContext& ctx, bool skip_own_primes) {
  EmbeddingVerdict v = base(predicate, h0);
  GroupPtr g = ctx.canonical(h0.parent);
  Subgroup h = rebase(h0, g);
  for (unsigned q : prime_divisors(g->order())) {
    if (skip_own_primes && h.order() % q == 0) continue;
    for (const Subgroup& syl : ctx.sylow_orbit(g, q)) {
      if (!permutes(h, syl)) {
        v.value = false;
        v.witness_prime = q;
        v.witness_subgroup = syl;
        v.witness_text = "HQ != QH for the Sylow " + std::to_string(q) +
                         "-subgroup " + syl.generators_string();
        return v;
      }
    }
  }
  v.value = true;
  v.witness_text = skip_own_primes
                       ? "permutes with every Sylow q-subgroup, q coprime to |H|"
                       : "permutes with every Sylow subgroup";
  return v;
}

} // namespace

EmbeddingVerdict is_s_permutable(const Subgroup& h, AnalysisContext& ctx) {
  return sylow_permute_check("s-permutable", h, ctx, false);
}

EmbeddingVerdict is_s_semipermutable(const Subgroup& h, AnalysisContext& ctx) {
  return sylow_permute_check("s-semipermutable", h, ctx, true);
}

EmbeddingVerdict is_pronormal(const Subgroup& h, AnalysisContext& ctx) {
  EmbeddingVerdict v = base("pronormal", h);
  GroupPtr g = ctx.canonical(h.parent);
  Subgroup hh = rebase(h, g);
  for (const Perm& x : g->elements()) {
    Subgroup hx = conjugate_subgroup(hh, x);
    if (hx.elements == hh.elements) continue;
    std::vector<Perm> gens = hh.generators;
    gens.insert(gens.end(), hx.generators.begin(), hx.generators.end());
    Subgroup joined = subgroup_generated(g, gens);
    bool conjugate_inside = false;
    for (const Perm& y : joined.elements) {
      if (conjugate_equals(hh, y, hx)) {
        conjugate_inside = true;
        break;
      }
    }
    if (!conjugate_inside) {
      v.value = false;
      v.witness_element = x;
      v.witness_text = "H and H^g are not conjugate in <H, H^g> for g = " +
                       x.to_cycle_string();
      return v;
    }
  }
  v.value = true;
  v.witness_text = "H is conjugate to H^g inside <H, H^g> for every g";
  return v;
}

EmbeddingVerdict is_c_supplemented(const Subgroup& h, AnalysisContext& ctx) {
  EmbeddingVerdict v = base("c-supplemented", h);
  GroupPtr g = ctx.canonical(h.parent);
  Subgroup hh = rebase(h, g);
  Subgroup h_core = core(g, hh);
  for (const Subgroup& k : ctx.subgroup_lattice(g)) {
    if (hh.order() * k.order() < g->order()) continue;
    if ((hh.order() * k.order()) % g->order() != 0) continue;
    if (product_set(hh, k).size() != g->order()) continue;
    Subgroup meet = intersect(hh, k);
    if (sorted_is_subset(meet.elements, h_core.elements)) {
      v.value = true;
      v.witness_subgroup = k;
      v.witness_text = "supplement K = " + k.generators_string() +
                       " of order " + std::to_string(k.order());
      return v;
    }
  }
  v.value = false;
  v.witness_text = "no subgroup K satisfies G = HK with H ∩ K <= H_G";
  return v;
}

EmbeddingVerdict is_h_subgroup(const Subgroup& h, AnalysisContext& ctx) {
  EmbeddingVerdict v = base("H-subgroup", h);
  GroupPtr g = ctx.canonical(h.parent);
  Subgroup hh = rebase(h, g);
  Subgroup norm = normalizer(g, hh);
  for (const Perm& x : g->elements()) {
    Subgroup hx = conjugate_subgroup(hh, x);
    for (const Perm& e : hx.elements) {
      if (norm.contains(e) && !hh.contains(e)) {
        v.value = false;
        v.witness_element = x;
        v.witness_text = "N_G(H) ∩ H^g is not inside H for g = " +
                         x.to_cycle_string();
        return v;
      }
    }
  }
  v.value = true;
  v.witness_text = "N_G(H) ∩ H^g <= H for every g";
  return v;
}

EmbeddingVerdict is_weakly_h_subgroup(const Subgroup& h, AnalysisContext& ctx) {
  EmbeddingVerdict v = base("weakly-H-subgroup", h);
  GroupPtr g = ctx.canonical(h.parent);
  Subgroup hh = rebase(h, g);
  for (const Subgroup& k : ctx.normal_subgroups(g)) {
    if (hh.order() * k.order() < g->order()) continue;
    if ((hh.order() * k.order()) % g->order() != 0) continue;
    if (product_set(hh, k).size() != g->order()) continue;
    Subgroup meet = intersect(hh, k);
    if (is_h_subgroup(meet, ctx).value) {
      v.value = true;
      v.witness_subgroup = k;
      v.witness_text = "normal K = " + k.generators_string() + " of order " +
                       std::to_string(k.order()) +
                       " with H ∩ K an H-subgroup";
      return v;
    }
  }
  v.value = false;
  v.witness_text = "no normal K satisfies G = HK with H ∩ K an H-subgroup";
  return v;
}

EmbeddingVerdict is_s_permutable(const Subgroup& h) {
  AnalysisContext ctx;
  return is_s_permutable(h, ctx);
}
EmbeddingVerdict is_s_semipermutable(const Subgroup& h) {
  AnalysisContext ctx;
  return is_s_semipermutable(h, ctx);
}
EmbeddingVerdict is_pronormal(const Subgroup& h) {
  AnalysisContext ctx;
  return is_pronormal(h, ctx);
}
EmbeddingVerdict is_c_supplemented(const Subgroup& h) {
  AnalysisContext ctx;
  return is_c_supplemented(h, ctx);
}
EmbeddingVerdict is_h_subgroup(const Subgroup& h) {
  AnalysisContext ctx;
  return is_h_subgroup(h, ctx);
}
EmbeddingVerdict is_weakly_h_subgroup(const Subgroup& h) {
  AnalysisContext ctx;
  return is_weakly_h_subgroup(h, ctx);
}

} // namespace grouplab
