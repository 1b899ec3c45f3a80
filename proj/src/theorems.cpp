#include "grouplab/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <thread>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

struct IdName {
  TheoremId id;
  const char* name;
};
constexpr IdName kTheoremNames[] = {
    {TheoremId::MAIN, "MAIN"},
    {TheoremId::XU_LI, "XU_LI"},
    {TheoremId::SPECIAL_NILP, "SPECIAL_NILP"},
    {TheoremId::ABELIAN_OBS, "ABELIAN_OBS"},
    {TheoremId::LIU_YU, "LIU_YU"},
    {TheoremId::LIU_YU_SPERM, "LIU_YU_SPERM"},
    {TheoremId::LIU_YU_PSUP, "LIU_YU_PSUP"},
    {TheoremId::CHEN, "CHEN"},
    {TheoremId::CHEN_CSUP, "CHEN_CSUP"},
    {TheoremId::CHEN_CSUP_PSUP, "CHEN_CSUP_PSUP"},
};

struct LemmaName {
  LemmaId id;
  const char* name;
};
constexpr LemmaName kLemmaNames[] = {
    {LemmaId::L2_1_QUOTIENT, "L2_1_QUOTIENT"},
    {LemmaId::L2_1_INTERSECTION, "L2_1_INTERSECTION"},
    {LemmaId::L2_1_RESTRICTION, "L2_1_RESTRICTION"},
    {LemmaId::L2_1_CLOSURE_SOLVABLE, "L2_1_CLOSURE_SOLVABLE"},
    {LemmaId::L2_2, "L2_2"},
    {LemmaId::L2_3, "L2_3"},
    {LemmaId::L2_4, "L2_4"},
};

} // namespace

std::string to_string(TheoremId id) {
  for (const auto& e : kTheoremNames)
    if (e.id == id) return e.name;
  return "?";
}

std::string to_string(LemmaId id) {
  for (const auto& e : kLemmaNames)
    if (e.id == id) return e.name;
  return "?";
}

std::optional<TheoremId> theorem_from_string(const std::string& s) {
  for (const auto& e : kTheoremNames)
    if (s == e.name) return e.id;
  return std::nullopt;
}

std::optional<LemmaId> lemma_from_string(const std::string& s) {
  for (const auto& e : kLemmaNames)
    if (s == e.name) return e.id;
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& e : kTheoremNames) v.push_back(e.id);
    return v;
  }();
  return ids;
}

const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids = [] {
    std::vector<LemmaId> v;
    for (const auto& e : kLemmaNames) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string to_string(HypStatus s) {
  switch (s) {
    case HypStatus::holds: return "holds";
    case HypStatus::fails: return "fails";
    case HypStatus::skipped: return "skipped";
    case HypStatus::undecided: return "undecided";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::vacuous: return "vacuous";
    case Verdict::confirmed: return "confirmed";
    case Verdict::violation: return "VIOLATION";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

namespace {

int theorem_rank(TheoremId id) {
  const auto& ids = all_theorems();
  return static_cast<int>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

int lemma_rank(LemmaId id) {
  const auto& ids = all_lemmas();
  return 100 +
         static_cast<int>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

// ------------------------------------------------------------- check runner

struct Hyp {
  std::string description;
  int cost = 0;
  std::function<bool(std::string&)> eval;
};

TheoremReport run_check(const std::string& check, int rank, const GroupPtr& g,
                        unsigned p, std::vector<Hyp> hyps,
                        const std::string& conclusion_desc,
                        const std::function<bool(std::string&)>& conclusion) {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport rep;
  rep.group = g->name();
  rep.order = g->order();
  rep.prime = p;
  rep.check = check;
  rep.check_rank = rank;
  rep.conclusion.description = conclusion_desc;

  rep.hypotheses.resize(hyps.size());
  for (std::size_t i = 0; i < hyps.size(); ++i)
    rep.hypotheses[i].description = hyps[i].description;

  std::vector<std::size_t> order(hyps.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return hyps[a].cost < hyps[b].cost;
  });

  bool any_fail = false;
  bool any_undecided = false;
  for (std::size_t idx : order) {
    if (any_fail) break;
    HypothesisResult& hr = rep.hypotheses[idx];
    try {
      std::string witness;
      bool ok = hyps[idx].eval(witness);
      hr.status = ok ? HypStatus::holds : HypStatus::fails;
      hr.witness = witness;
      if (!ok) any_fail = true;
    } catch (const BudgetError& e) {
      hr.status = HypStatus::undecided;
      hr.witness = e.what();
      any_undecided = true;
    }
  }

  if (any_fail) {
    rep.verdict = Verdict::vacuous;
  } else if (any_undecided) {
    rep.verdict = Verdict::undecided;
  } else {
    try {
      std::string witness;
      bool ok = conclusion(witness);
      rep.conclusion.status = ok ? HypStatus::holds : HypStatus::fails;
      rep.conclusion.witness = witness;
      rep.verdict = ok ? Verdict::confirmed : Verdict::violation;
    } catch (const BudgetError& e) {
      rep.conclusion.status = HypStatus::undecided;
      rep.conclusion.witness = e.what();
      rep.verdict = Verdict::undecided;
    }
  }

  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

// ------------------------------------------------------- shared hypotheses

struct Env {
  GroupPtr g;
  unsigned p;
  AnalysisContext& ctx;

  const Subgroup& sylow() { return ctx.sylow(g, p); }
  GroupPtr sylow_group() { return ctx.group_of(sylow()); }
  const Subgroup& norm() { return ctx.sylow_normalizer(g, p); }
  GroupPtr norm_group() { return ctx.group_of(norm()); }
};

std::string subgroup_label(const Subgroup& s) {
  return s.generators_string() + " of order " + std::to_string(s.order());
}

bool group_is_abelian(const GroupPtr& g) {
  const auto& gens = g->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

Hyp hyp_p_divides(Env& env) {
  return {"p divides |G|", 0, [&env](std::string& w) {
            w = "|G| = " + std::to_string(env.g->order());
            return env.g->order() % env.p == 0;
          }};
}

Hyp hyp_smallest_prime(Env& env) {
  return {"p is the smallest prime divisor of |G|", 0,
          [&env](std::string& w) {
            auto divs = prime_divisors(env.g->order());
            if (divs.empty()) {
              w = "|G| = 1 has no prime divisors";
              return false;
            }
            w = "smallest prime divisor is " + std::to_string(divs.front());
            return divs.front() == env.p;
          }};
}

Hyp hyp_gcd_p_minus_1(Env& env) {
  return {"gcd(|G|, p-1) = 1", 1, [&env](std::string& w) {
            auto g = std::gcd(env.g->order(),
                              static_cast<std::size_t>(env.p - 1));
            w = "gcd(" + std::to_string(env.g->order()) + ", " +
                std::to_string(env.p - 1) + ") = " + std::to_string(g);
            return g == 1;
          }};
}

Hyp hyp_p_solvable(Env& env) {
  return {"G is p-solvable", 10, [&env](std::string& w) {
            ClassVerdict v =
                is_p_solvable_on(env.g, env.p, env.ctx.chief(env.g));
            w = v.witness_text;
            return v.value;
          }};
}

Hyp hyp_sylow_abelian(Env& env) {
  return {"the Sylow p-subgroup P is abelian", 5, [&env](std::string& w) {
            bool ab = group_is_abelian(env.sylow_group());
            w = "|P| = " + std::to_string(env.sylow().order());
            return ab;
          }};
}

Hyp hyp_sylow_derived_normal(Env& env) {
  return {"P' is normal in G", 5, [&env](std::string& w) {
            Subgroup der =
                rebase(env.ctx.derived_of(env.sylow_group()), env.g);
            w = "P' = " + subgroup_label(der);
            return is_normal(der);
          }};
}

Hyp hyp_norm_p_supersolvable(Env& env) {
  return {"N_G(P) is p-supersolvable", 20, [&env](std::string& w) {
            GroupPtr n = env.norm_group();
            ClassVerdict v =
                is_p_supersolvable_on(n, env.p, env.ctx.chief(n));
            w = "|N_G(P)| = " + std::to_string(n->order()) + "; " +
                v.witness_text;
            return v.value;
          }};
}

Hyp hyp_norm_p_nilpotent(Env& env) {
  return {"N_G(P) is p-nilpotent", 20, [&env](std::string& w) {
            GroupPtr n = env.norm_group();
            ClassVerdict v = is_p_nilpotent(n, env.p);
            w = "|N_G(P)| = " + std::to_string(n->order()) + "; " +
                v.witness_text;
            return v.value;
          }};
}

Hyp hyp_main_witness(Env& env) {
  return {"some H with P' <= H <= Phi(P) is s-semipermutable in G", 30,
          [&env](std::string& w) {
            auto h = find_witness_main(env.g, env.p, env.ctx);
            if (h) {
              w = "H = " + subgroup_label(*h);
              return true;
            }
            w = "no subgroup between P' and Phi(P) is s-semipermutable in G";
            return false;
          }};
}

Hyp hyp_xu_li_witness(Env& env) {
  return {"some normal H <= Phi(P) with cl(P/H) <= p-1 is s-semipermutable "
          "in G",
          30, [&env](std::string& w) {
            auto h = find_witness_xu_li(env.g, env.p, env.ctx);
            if (h) {
              w = "H = " + subgroup_label(*h);
              return true;
            }
            w = "no normal H <= Phi(P) with cl(P/H) <= p-1 is "
                "s-semipermutable in G";
            return false;
          }};
}

// ------------------------------------------------ the |D| order hypothesis

enum class DEmbedding { pronormal, s_permutable, c_supplemented };

const char* to_string(DEmbedding e) {
  switch (e) {
    case DEmbedding::pronormal: return "pronormal";
    case DEmbedding::s_permutable: return "s-permutable";
    case DEmbedding::c_supplemented: return "c-supplemented";
  }
  return "?";
}

struct DSearchSpec {
  DEmbedding predicate;
  bool include_order_one = false;  // 1 <= |D| < |P| rather than 1 < |D| < |P|
  bool pair_with_p_times = false;  // check orders |D| and p|D|
  std::size_t proviso_trigger = 0; // |D| that triggers the cyclic-4 condition
};

bool d_predicate_holds(DEmbedding e, const Subgroup& h, AnalysisContext& ctx) {
  switch (e) {
    case DEmbedding::pronormal: return is_pronormal(h, ctx).value;
    case DEmbedding::s_permutable: return is_s_permutable(h, ctx).value;
    case DEmbedding::c_supplemented: return is_c_supplemented(h, ctx).value;
  }
  return false;
}

// container is a p-subgroup of the ambient group in which the embedding
// property is evaluated. Searches |D| ascending over the p-power divisors of
// |container| in the requested range; every subgroup of container with order
// |D| (and p|D| when requested) must satisfy the predicate, plus the cyclic
// order-4 proviso when container is a nonabelian 2-group and |D| hits the
// trigger. Returns the first |D| that works.
std::optional<std::size_t> find_d_order(const Subgroup& container, unsigned p,
                                        const DSearchSpec& spec,
                                        AnalysisContext& ctx,
                                        std::string& detail) {
  GroupPtr pg = ctx.group_of(container);
  const std::vector<Subgroup>& lattice = ctx.subgroup_lattice(pg);
  bool nonabelian_2group =
      p_part(pg->order(), 2) == pg->order() && pg->order() > 1 &&
      !group_is_abelian(pg);

  std::vector<std::size_t> candidates;
  for (std::size_t d = spec.include_order_one ? 1 : p; d < container.order();
       d *= p)
    candidates.push_back(d);
  if (candidates.empty()) {
    detail = "no order |D| in range (|P| = " +
             std::to_string(container.order()) + ")";
    return std::nullopt;
  }

  std::string first_failure;
  for (std::size_t d : candidates) {
    std::vector<std::size_t> orders{d};
    if (spec.pair_with_p_times) orders.push_back(d * p);
    bool ok = true;
    std::size_t checked = 0;
    for (const Subgroup& s : lattice) {
      if (!ok) break;
      bool wanted = std::find(orders.begin(), orders.end(), s.order()) !=
                    orders.end();
      if (!wanted) continue;
      ++checked;
      if (!d_predicate_holds(spec.predicate, rebase(s, container.parent),
                             ctx)) {
        ok = false;
        if (first_failure.empty())
          first_failure = "|D| = " + std::to_string(d) + " fails at " +
                          subgroup_label(s);
      }
    }
    if (ok && nonabelian_2group && spec.proviso_trigger == d) {
      for (const Subgroup& s : lattice) {
        if (s.order() != 4) continue;
        bool cyclic = false;
        for (const Perm& x : s.elements)
          if (x.order() == 4) { cyclic = true; break; }
        if (!cyclic) continue;
        ++checked;
        if (!d_predicate_holds(spec.predicate, rebase(s, container.parent),
                               ctx)) {
          ok = false;
          if (first_failure.empty())
            first_failure = "|D| = " + std::to_string(d) +
                            " fails the cyclic order-4 proviso at " +
                            subgroup_label(s);
          break;
        }
      }
    }
    if (ok) {
      detail = "|D| = " + std::to_string(d) + "; " + std::to_string(checked) +
               " subgroup(s) verified " + to_string(spec.predicate);
      return d;
    }
  }
  detail = "no |D| works; " + first_failure;
  return std::nullopt;
}

Hyp hyp_d_search(Env& env, std::string description, bool in_normalizer,
                 DSearchSpec spec) {
  return {std::move(description), 40, [&env, in_normalizer, spec](std::string& w) {
            GroupPtr ambient =
                in_normalizer ? env.norm_group() : env.ctx.canonical(env.g);
            Subgroup p_in_ambient = rebase(env.sylow(), ambient);
            return find_d_order(p_in_ambient, env.p, spec, env.ctx, w)
                .has_value();
          }};
}

Hyp hyp_chen_maximals(Env& env) {
  return {"every maximal subgroup of P is a weakly H-subgroup of N_G(P)", 40,
          [&env](std::string& w) {
            GroupPtr pg = env.sylow_group();
            GroupPtr ng = env.norm_group();
            const auto& lattice = env.ctx.subgroup_lattice(pg);
            std::size_t count = 0;
            for (const Subgroup& m : lattice) {
              if (m.order() == pg->order()) continue;
              bool maximal = true;
              for (const Subgroup& t : lattice) {
                if (t.order() <= m.order() || t.order() == pg->order())
                  continue;
                if (t.order() % m.order() == 0 &&
                    sorted_is_subset(m.elements, t.elements)) {
                  maximal = false;
                  break;
                }
              }
              if (!maximal) continue;
              ++count;
              EmbeddingVerdict v =
                  is_weakly_h_subgroup(rebase(m, ng), env.ctx);
              if (!v.value) {
                w = "maximal subgroup " + subgroup_label(m) +
                    " is not a weakly H-subgroup of N_G(P)";
                return false;
              }
            }
            w = std::to_string(count) +
                " maximal subgroup(s) of P checked in N_G(P)";
            return true;
          }};
}

std::function<bool(std::string&)> concl_p_supersolvable(Env& env) {
  return [&env](std::string& w) {
    ClassVerdict v =
        is_p_supersolvable_on(env.g, env.p, env.ctx.chief(env.g));
    w = v.witness_text;
    return v.value;
  };
}

std::function<bool(std::string&)> concl_p_nilpotent(Env& env) {
  return [&env](std::string& w) {
    ClassVerdict v = is_p_nilpotent(env.g, env.p);
    w = v.witness_text;
    return v.value;
  };
}

} // namespace

// -------------------------------------------------------- witness searches

std::optional<Subgroup> find_witness_main(const GroupPtr& g0, unsigned p,
                                          AnalysisContext& ctx) {
  GroupPtr g = ctx.canonical(g0);
  Subgroup p_syl = ctx.sylow(g, p);
  GroupPtr pg = ctx.group_of(p_syl);
  const Subgroup& derived = ctx.derived_of(pg);
  const Subgroup& phi = ctx.frattini_of(pg);
  if (!sorted_is_subset(derived.elements, phi.elements)) return std::nullopt;
  for (const Subgroup& h : ctx.subgroup_lattice(pg)) {
    if (!sorted_is_subset(derived.elements, h.elements)) continue;
    if (!sorted_is_subset(h.elements, phi.elements)) continue;
    Subgroup candidate = rebase(h, g);
    if (is_s_semipermutable(candidate, ctx).value) return candidate;
  }
  return std::nullopt;
}

std::optional<Subgroup> find_witness_xu_li(const GroupPtr& g0, unsigned p,
                                           AnalysisContext& ctx) {
  GroupPtr g = ctx.canonical(g0);
  Subgroup p_syl = ctx.sylow(g, p);
  GroupPtr pg = ctx.group_of(p_syl);
  const Subgroup& phi = ctx.frattini_of(pg);
  for (const Subgroup& h : ctx.subgroup_lattice(pg)) {
    if (!sorted_is_subset(h.elements, phi.elements)) continue;
    if (!is_normal(h)) continue;
    std::optional<unsigned> cls;
    if (h.is_trivial()) {
      cls = nilpotency_class(pg);
    } else {
      const QuotientGroup& q = ctx.quotient_by(pg, h);
      cls = nilpotency_class(q.group());
    }
    if (!cls || *cls > p - 1) continue;
    Subgroup candidate = rebase(h, g);
    if (is_s_semipermutable(candidate, ctx).value) return candidate;
  }
  return std::nullopt;
}

// ------------------------------------------------------------- evaluate()

TheoremReport evaluate(TheoremId id, const GroupPtr& g0, unsigned p,
                       AnalysisContext& ctx) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  GroupPtr g = ctx.canonical(g0);
  Env env{g, p, ctx};
  std::vector<Hyp> hyps;
  std::string concl_desc;
  std::function<bool(std::string&)> concl;

  const DSearchSpec pronormal_strict{DEmbedding::pronormal, false, false, 2};
  const DSearchSpec sperm_strict{DEmbedding::s_permutable, false, false, 2};
  const DSearchSpec csup_wide{DEmbedding::c_supplemented, true, true, 1};

  switch (id) {
    case TheoremId::MAIN:
      hyps.push_back(hyp_p_solvable(env));
      hyps.push_back(hyp_norm_p_supersolvable(env));
      hyps.push_back(hyp_main_witness(env));
      concl_desc = "G is p-supersolvable";
      concl = concl_p_supersolvable(env);
      break;
    case TheoremId::XU_LI:
      hyps.push_back(hyp_p_divides(env));
      hyps.push_back(hyp_norm_p_nilpotent(env));
      hyps.push_back(hyp_xu_li_witness(env));
      concl_desc = "G is p-nilpotent";
      concl = concl_p_nilpotent(env);
      break;
    case TheoremId::SPECIAL_NILP:
      hyps.push_back(hyp_norm_p_nilpotent(env));
      hyps.push_back(hyp_main_witness(env));
      concl_desc = "G is p-nilpotent";
      concl = concl_p_nilpotent(env);
      break;
    case TheoremId::ABELIAN_OBS:
      hyps.push_back(hyp_p_solvable(env));
      hyps.push_back(hyp_sylow_abelian(env));
      hyps.push_back(hyp_norm_p_supersolvable(env));
      concl_desc = "G is p-supersolvable";
      concl = concl_p_supersolvable(env);
      break;
    case TheoremId::LIU_YU:
      hyps.push_back(hyp_p_divides(env));
      hyps.push_back(hyp_gcd_p_minus_1(env));
      hyps.push_back(hyp_sylow_derived_normal(env));
      hyps.push_back(hyp_d_search(
          env,
          "some |D| with 1 < |D| < |P| has every subgroup of P of order "
          "|D| pronormal in N_G(P)",
          true, pronormal_strict));
      concl_desc = "G is p-nilpotent";
      concl = concl_p_nilpotent(env);
      break;
    case TheoremId::LIU_YU_SPERM:
      hyps.push_back(hyp_p_divides(env));
      hyps.push_back(hyp_gcd_p_minus_1(env));
      hyps.push_back(hyp_xu_li_witness(env));
      hyps.push_back(hyp_d_search(
          env,
          "some |D| with 1 < |D| < |P| has every subgroup of P of order "
          "|D| s-permutable in N_G(P)",
          true, sperm_strict));
      concl_desc = "G is p-nilpotent";
      concl = concl_p_nilpotent(env);
      break;
    case TheoremId::LIU_YU_PSUP:
      hyps.push_back(hyp_p_solvable(env));
      hyps.push_back(hyp_main_witness(env));
      hyps.push_back(hyp_d_search(
          env,
          "some |D| with 1 < |D| < |P| has every subgroup of P of order "
          "|D| s-permutable in N_G(P)",
          true, sperm_strict));
      concl_desc = "G is p-supersolvable";
      concl = concl_p_supersolvable(env);
      break;
    case TheoremId::CHEN:
      hyps.push_back(hyp_smallest_prime(env));
      hyps.push_back(hyp_sylow_derived_normal(env));
      hyps.push_back(hyp_chen_maximals(env));
      concl_desc = "G is p-nilpotent";
      concl = concl_p_nilpotent(env);
      break;
    case TheoremId::CHEN_CSUP:
      hyps.push_back(hyp_smallest_prime(env));
      hyps.push_back(hyp_xu_li_witness(env));
      hyps.push_back(hyp_d_search(
          env,
          "some |D| with 1 <= |D| < |P| has every subgroup of P of order "
          "|D| or p|D| c-supplemented in N_G(P)",
          true, csup_wide));
      concl_desc = "G is p-nilpotent";
      concl = concl_p_nilpotent(env);
      break;
    case TheoremId::CHEN_CSUP_PSUP:
      hyps.push_back(hyp_p_solvable(env));
      hyps.push_back(hyp_main_witness(env));
      hyps.push_back(hyp_d_search(
          env,
          "some |D| with 1 <= |D| < |P| has every subgroup of P of order "
          "|D| or p|D| c-supplemented in N_G(P)",
          true, csup_wide));
      concl_desc = "G is p-supersolvable";
      concl = concl_p_supersolvable(env);
      break;
  }

  return run_check(to_string(id), theorem_rank(id), g, p, std::move(hyps),
                   concl_desc, concl);
}

TheoremReport evaluate(TheoremId id, const GroupPtr& g, unsigned p) {
  AnalysisContext ctx;
  return evaluate(id, g, p, ctx);
}

// ------------------------------------------------------------- the lemmas

namespace {

// subgroups of the canonical Sylow p-subgroup that are s-semipermutable in G
std::vector<Subgroup> semipermutable_p_subgroups(Env& env) {
  std::vector<Subgroup> out;
  GroupPtr pg = env.sylow_group();
  for (const Subgroup& h : env.ctx.subgroup_lattice(pg)) {
    Subgroup cand = rebase(h, env.g);
    if (is_s_semipermutable(cand, env.ctx).value) out.push_back(cand);
  }
  return out;
}

Hyp hyp_semis_enumerated(Env& env, std::vector<Subgroup>& semis) {
  return {"the s-semipermutable subgroups of a Sylow p-subgroup are "
          "enumerated",
          10, [&env, &semis](std::string& w) {
            semis = semipermutable_p_subgroups(env);
            w = std::to_string(semis.size()) + " of " +
                std::to_string(
                    env.ctx.subgroup_lattice(env.sylow_group()).size()) +
                " subgroups of P are s-semipermutable in G";
            return !semis.empty();
          }};
}

TheoremReport lemma_21_part(LemmaId id, Env& env) {
  std::vector<Subgroup> semis;
  std::vector<Hyp> hyps{hyp_semis_enumerated(env, semis)};
  std::string concl_desc;
  std::function<bool(std::string&)> concl;

  switch (id) {
    case LemmaId::L2_1_QUOTIENT:
      concl_desc = "HN/N is s-semipermutable in G/N for every normal N";
      concl = [&env, &semis](std::string& w) {
        std::size_t checks = 0;
        for (const Subgroup& n : env.ctx.normal_subgroups(env.g)) {
          const QuotientGroup* q = nullptr;
          for (const Subgroup& h : semis) {
            if (!q) q = &env.ctx.quotient_by(env.g, n);
            Subgroup image = q->project_subgroup(h);
            ++checks;
            if (!is_s_semipermutable(image, env.ctx).value) {
              w = "image of H = " + h.generators_string() +
                  " fails in G/N for |N| = " + std::to_string(n.order());
              return false;
            }
          }
        }
        w = std::to_string(checks) + " (H, N) pairs verified";
        return true;
      };
      break;
    case LemmaId::L2_1_INTERSECTION:
      concl_desc =
          "H ∩ N is normalized by O^p(G) for every normal p-subgroup N";
      concl = [&env, &semis](std::string& w) {
        Subgroup op = o_upper_p(env.g, env.p);
        std::size_t checks = 0;
        for (const Subgroup& n : env.ctx.normal_subgroups(env.g)) {
          if (p_part(n.order(), env.p) != n.order()) continue;
          for (const Subgroup& h : semis) {
            Subgroup meet = intersect(h, n);
            ++checks;
            for (const Perm& y : op.generators) {
              for (const Perm& x : meet.generators.empty()
                                       ? meet.elements
                                       : meet.generators) {
                if (!meet.contains(x.conjugated_by(y))) {
                  w = "O^p(G) does not normalize H ∩ N for H = " +
                      h.generators_string() +
                      ", |N| = " + std::to_string(n.order());
                  return false;
                }
              }
            }
          }
        }
        w = std::to_string(checks) + " (H, N) pairs verified";
        return true;
      };
      break;
    case LemmaId::L2_1_RESTRICTION:
      concl_desc = "H is s-semipermutable in every K with H <= K <= G";
      concl = [&env, &semis](std::string& w) {
        std::size_t checks = 0;
        for (const Subgroup& k : env.ctx.subgroup_lattice(env.g)) {
          GroupPtr kg;
          for (const Subgroup& h : semis) {
            if (!sorted_is_subset(h.elements, k.elements)) continue;
            if (!kg) kg = env.ctx.group_of(k);
            ++checks;
            if (!is_s_semipermutable(rebase(h, kg), env.ctx).value) {
              w = "H = " + h.generators_string() +
                  " is not s-semipermutable in K = " + subgroup_label(k);
              return false;
            }
          }
        }
        w = std::to_string(checks) + " (H, K) pairs verified";
        return true;
      };
      break;
    case LemmaId::L2_1_CLOSURE_SOLVABLE:
      concl_desc = "the normal closure H^G is solvable";
      concl = [&env, &semis](std::string& w) {
        for (const Subgroup& h : semis) {
          Subgroup closure = normal_closure(env.g, h);
          if (!is_solvable(env.ctx.group_of(closure)).value) {
            w = "H^G of order " + std::to_string(closure.order()) +
                " is not solvable for H = " + h.generators_string();
            return false;
          }
        }
        w = std::to_string(semis.size()) + " normal closures verified";
        return true;
      };
      break;
    default:
      throw Error("not a Lemma 2.1 part");
  }

  return run_check(to_string(id), lemma_rank(id), env.g, env.p,
                   std::move(hyps), concl_desc, concl);
}

} // namespace

TheoremReport evaluate_lemma(LemmaId id, const GroupPtr& g0, unsigned p,
                             AnalysisContext& ctx) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  GroupPtr g = ctx.canonical(g0);
  Env env{g, p, ctx};

  const DSearchSpec sperm_strict{DEmbedding::s_permutable, false, false, 2};
  const DSearchSpec csup_wide{DEmbedding::c_supplemented, true, true, 1};

  switch (id) {
    case LemmaId::L2_1_QUOTIENT:
    case LemmaId::L2_1_INTERSECTION:
    case LemmaId::L2_1_RESTRICTION:
    case LemmaId::L2_1_CLOSURE_SOLVABLE:
      return lemma_21_part(id, env);

    case LemmaId::L2_2: {
      std::vector<Hyp> hyps;
      hyps.push_back(hyp_p_divides(env));
      hyps.push_back(hyp_d_search(
          env,
          "some |D| with 1 < |D| < |P| has every subgroup of P of order "
          "|D| s-permutable in G",
          false, sperm_strict));
      return run_check(to_string(id), lemma_rank(id), g, p, std::move(hyps),
                       "G is p-supersolvable", concl_p_supersolvable(env));
    }

    case LemmaId::L2_3: {
      auto qualifying = std::make_shared<std::vector<Subgroup>>();
      std::vector<Hyp> hyps;
      hyps.push_back(
          {"some nontrivial normal p-subgroup P of G satisfies the "
           "c-supplement condition for an order 1 <= |D| < |P|",
           40, [&env, qualifying, csup_wide](std::string& w) {
             std::string last;
             for (const Subgroup& n : env.ctx.normal_subgroups(env.g)) {
               if (n.is_trivial()) continue;
               if (p_part(n.order(), env.p) != n.order()) continue;
               std::string detail;
               if (find_d_order(n, env.p, csup_wide, env.ctx, detail)) {
                 qualifying->push_back(n);
                 last += (last.empty() ? "" : "; ") + std::string("|P| = ") +
                         std::to_string(n.order()) + ": " + detail;
               }
             }
             if (qualifying->empty()) {
               w = "no nontrivial normal p-subgroup qualifies";
               return false;
             }
             w = last;
             return true;
           }});
      auto concl = [&env, qualifying](std::string& w) {
        Subgroup zu = supersolvable_hypercentre(env.g);
        for (const Subgroup& n : *qualifying) {
          if (!sorted_is_subset(n.elements, zu.elements)) {
            w = "normal p-subgroup of order " + std::to_string(n.order()) +
                " is not inside Z_U(G) of order " +
                std::to_string(zu.order());
            return false;
          }
        }
        w = std::to_string(qualifying->size()) +
            " qualifying subgroup(s) lie inside Z_U(G) of order " +
            std::to_string(zu.order());
        return true;
      };
      return run_check(to_string(id), lemma_rank(id), g, p, std::move(hyps),
                       "every qualifying normal p-subgroup lies in the "
                       "supersolvable hypercentre Z_U(G)",
                       concl);
    }

    case LemmaId::L2_4: {
      std::vector<Hyp> hyps;
      hyps.push_back(hyp_smallest_prime(env));
      hyps.push_back(hyp_d_search(
          env,
          "some |D| with 1 <= |D| < |P| has every subgroup of P of order "
          "|D| or p|D| c-supplemented in G",
          false, csup_wide));
      return run_check(to_string(id), lemma_rank(id), g, p, std::move(hyps),
                       "G is p-nilpotent", concl_p_nilpotent(env));
    }
  }
  throw Error("unknown lemma");
}

std::vector<TheoremReport> lemma_suite(const GroupPtr& g, unsigned p,
                                       AnalysisContext& ctx,
                                       const LemmaOptions& opts) {
  std::vector<TheoremReport> out;
  for (LemmaId id : all_lemmas()) {
    bool is_21 = id == LemmaId::L2_1_QUOTIENT ||
                 id == LemmaId::L2_1_INTERSECTION ||
                 id == LemmaId::L2_1_RESTRICTION ||
                 id == LemmaId::L2_1_CLOSURE_SOLVABLE;
    if (is_21 && (!opts.include_21 || g->order() > opts.lemma21_max_order))
      continue;
    out.push_back(evaluate_lemma(id, g, p, ctx));
  }
  return out;
}

// ------------------------------------------------------------------- scan

ScanResult scan(const std::vector<ScanTarget>& targets,
                const ScanOptions& opts) {
  std::vector<std::vector<TheoremReport>> per_target(targets.size());

  auto process = [&](std::size_t i) {
    const ScanTarget& target = targets[i];
    AnalysisContext ctx;
    std::vector<TheoremReport> reports;
    std::vector<unsigned> primes = prime_divisors(target.group->order());
    if (!opts.primes.empty()) {
      std::vector<unsigned> keep;
      for (unsigned p : primes)
        if (std::find(opts.primes.begin(), opts.primes.end(), p) !=
            opts.primes.end())
          keep.push_back(p);
      primes = keep;
    }
    for (unsigned p : primes) {
      for (TheoremId id : opts.theorems) {
        TheoremReport rep = evaluate(id, target.group, p, ctx);
        rep.group = target.name;
        reports.push_back(std::move(rep));
      }
      for (LemmaId id : opts.lemmas) {
        bool is_21 = id == LemmaId::L2_1_QUOTIENT ||
                     id == LemmaId::L2_1_INTERSECTION ||
                     id == LemmaId::L2_1_RESTRICTION ||
                     id == LemmaId::L2_1_CLOSURE_SOLVABLE;
        if (is_21 && target.group->order() > opts.lemma21_max_order) continue;
        TheoremReport rep = evaluate_lemma(id, target.group, p, ctx);
        rep.group = target.name;
        reports.push_back(std::move(rep));
      }
    }
    per_target[i] = std::move(reports);
  };

  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || targets.size() <= 1) {
    for (std::size_t i = 0; i < targets.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= per_target.size()) break;
        process(i);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ScanResult result;
  for (auto& chunk : per_target)
    for (auto& rep : chunk) result.reports.push_back(std::move(rep));
  std::sort(result.reports.begin(), result.reports.end(),
            [](const TheoremReport& a, const TheoremReport& b) {
              if (a.group != b.group) return a.group < b.group;
              if (a.prime != b.prime) return a.prime < b.prime;
              return a.check_rank < b.check_rank;
            });

  result.summary.records = result.reports.size();
  for (const TheoremReport& rep : result.reports) {
    switch (rep.verdict) {
      case Verdict::confirmed: ++result.summary.confirmed; break;
      case Verdict::vacuous: ++result.summary.vacuous; break;
      case Verdict::violation: ++result.summary.violations; break;
      case Verdict::undecided: ++result.summary.undecided; break;
    }
  }
  return result;
}

} // namespace grouplab
