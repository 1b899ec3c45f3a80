#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grouplab/analysis.hpp"
#include "grouplab/classes.hpp"
#include "grouplab/embeddings.hpp"

namespace grouplab {

// The ten checkable statements: hypothesis search plus conclusion predicate.
enum class TheoremId {
  MAIN,            // p-solvable, P' <= H <= Phi(P) s-semipermutable,
                   // N_G(P) p-supersolvable  =>  G p-supersolvable
  XU_LI,           // H normal in P, H <= Phi(P), cl(P/H) <= p-1,
                   // H s-semipermutable, N_G(P) p-nilpotent  =>  p-nilpotent
  SPECIAL_NILP,    // P' <= H <= Phi(P) s-semipermutable,
                   // N_G(P) p-nilpotent  =>  p-nilpotent
  ABELIAN_OBS,     // p-solvable, P abelian, N_G(P) p-supersolvable
                   //  =>  p-supersolvable
  LIU_YU,          // gcd(|G|,p-1)=1, P' normal, subgroups of one order |D|
                   // pronormal in N_G(P)  =>  p-nilpotent
  LIU_YU_SPERM,    // gcd=1, XU_LI-style H, order-|D| subgroups s-permutable
                   // in N_G(P)  =>  p-nilpotent
  LIU_YU_PSUP,     // p-solvable, MAIN-style H, order-|D| subgroups
                   // s-permutable in N_G(P)  =>  p-supersolvable
  CHEN,            // p smallest, P' normal, maximal subgroups of P weakly
                   // H-subgroups of N_G(P)  =>  p-nilpotent
  CHEN_CSUP,       // p smallest, XU_LI-style H, subgroups of order |D|, p|D|
                   // c-supplemented in N_G(P)  =>  p-nilpotent
  CHEN_CSUP_PSUP,  // p-solvable, MAIN-style H, same c-supplement condition
                   //  =>  p-supersolvable
};

// The supporting lemmas run as property checks of their own.
enum class LemmaId {
  L2_1_QUOTIENT,    // images of s-semipermutable p-subgroups stay
                    // s-semipermutable in every quotient
  L2_1_INTERSECTION,// H ∩ N is normalized by O^p(G) for normal p-subgroups N
  L2_1_RESTRICTION, // s-semipermutability restricts to intermediate subgroups
  L2_1_CLOSURE_SOLVABLE,  // the normal closure H^G is solvable
  L2_2,             // order-|D| subgroups s-permutable in G => p-supersolvable
  L2_3,             // c-supplement condition on a normal p-subgroup P puts P
                    // inside the supersolvable hypercentre
  L2_4,             // p smallest, c-supplement condition => p-nilpotent
};

std::string to_string(TheoremId id);
std::string to_string(LemmaId id);
std::optional<TheoremId> theorem_from_string(const std::string& s);
std::optional<LemmaId> lemma_from_string(const std::string& s);
const std::vector<TheoremId>& all_theorems();
const std::vector<LemmaId>& all_lemmas();

enum class HypStatus { holds, fails, skipped, undecided };
enum class Verdict { vacuous, confirmed, violation, undecided };
std::string to_string(HypStatus s);
std::string to_string(Verdict v);

struct HypothesisResult {
  std::string description;
  HypStatus status = HypStatus::skipped;
  std::string witness;
};

// One record per (group, prime, check). verdict = confirmed iff every
// hypothesis holds and the conclusion holds; vacuous iff some hypothesis
// fails; violation iff all hypotheses hold and the conclusion fails;
// undecided iff a budget ran out before the question was settled.
struct TheoremReport {
  std::string group;
  std::size_t order = 0;
  unsigned prime = 0;
  std::string check;
  int check_rank = 0;  // canonical sort position of the check
  std::vector<HypothesisResult> hypotheses;
  HypothesisResult conclusion;
  Verdict verdict = Verdict::vacuous;
  double wall_ms = 0;  // measured; never serialized (reports must be
                       // byte-identical across schedules)
};

// First subgroup H (ascending order, canonical element order) with
// P' <= H <= Phi(P) and H s-semipermutable in G; P = Sylow p-subgroup.
std::optional<Subgroup> find_witness_main(const GroupPtr& g, unsigned p,
                                          AnalysisContext& ctx);

// First H normal in P with H <= Phi(P), P/H of nilpotency class at most
// p-1, and H s-semipermutable in G.
std::optional<Subgroup> find_witness_xu_li(const GroupPtr& g, unsigned p,
                                           AnalysisContext& ctx);

TheoremReport evaluate(TheoremId id, const GroupPtr& g, unsigned p,
                       AnalysisContext& ctx);
TheoremReport evaluate(TheoremId id, const GroupPtr& g, unsigned p);

TheoremReport evaluate_lemma(LemmaId id, const GroupPtr& g, unsigned p,
                             AnalysisContext& ctx);

struct LemmaOptions {
  bool include_21 = true;
  std::size_t lemma21_max_order = 120;  // only run the 2.1 parts below this
};
std::vector<TheoremReport> lemma_suite(const GroupPtr& g, unsigned p,
                                       AnalysisContext& ctx,
                                       const LemmaOptions& opts = {});

struct ScanTarget {
  std::string name;
  GroupPtr group;
};

struct ScanSummary {
  std::size_t records = 0;
  std::size_t confirmed = 0;
  std::size_t vacuous = 0;
  std::size_t violations = 0;
  std::size_t undecided = 0;
};

struct ScanOptions {
  std::vector<TheoremId> theorems = all_theorems();
  std::vector<LemmaId> lemmas;
  std::size_t lemma21_max_order = 120;
  std::vector<unsigned> primes;  // empty = every prime divisor of each order
  unsigned jobs = 1;
};

struct ScanResult {
  std::vector<TheoremReport> reports;  // canonically sorted
  ScanSummary summary;
};

// One report per (group, applicable prime, requested check). Work is
// distributed group-by-group across jobs; results are sorted canonically,
// so the output does not depend on the schedule.
ScanResult scan(const std::vector<ScanTarget>& targets,
                const ScanOptions& opts = {});

} // namespace grouplab
