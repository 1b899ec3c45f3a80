#pragma once

#include <optional>
#include <string>

#include "grouplab/analysis.hpp"
#include "grouplab/group.hpp"

namespace grouplab {

// Outcome of a subgroup-embedding predicate for H inside its parent group.
// The witness re-validates the boolean by direct recomputation: a Sylow
// q-subgroup that fails to permute, the supplement K found, or the element g
// whose conjugate breaks the definition.
struct EmbeddingVerdict {
  std::string predicate;
  std::string subgroup;
  std::string group;
  bool value = false;
  std::string witness_text;
  std::optional<unsigned> witness_prime;
  std::optional<Subgroup> witness_subgroup;
  std::optional<Perm> witness_element;

  explicit operator bool() const { return value; }
};

// H permutes with every Sylow subgroup of the parent (all conjugates of all
// primes are checked individually).
EmbeddingVerdict is_s_permutable(const Subgroup& h, AnalysisContext& ctx);

// H permutes with every Sylow q-subgroup for all primes q not dividing |H|.
EmbeddingVerdict is_s_semipermutable(const Subgroup& h, AnalysisContext& ctx);

// H and H^g are conjugate inside <H, H^g> for every g.
EmbeddingVerdict is_pronormal(const Subgroup& h, AnalysisContext& ctx);

// Some K <= G with G = HK and H ∩ K inside the core of H. Needs the full
// subgroup lattice of the parent (throws BudgetError past the budget).
EmbeddingVerdict is_c_supplemented(const Subgroup& h, AnalysisContext& ctx);

// N_G(H) ∩ H^g <= H for all g.
EmbeddingVerdict is_h_subgroup(const Subgroup& h, AnalysisContext& ctx);

// Some normal K with G = HK and H ∩ K an H-subgroup of G.
EmbeddingVerdict is_weakly_h_subgroup(const Subgroup& h, AnalysisContext& ctx);

EmbeddingVerdict is_s_permutable(const Subgroup& h);
EmbeddingVerdict is_s_semipermutable(const Subgroup& h);
EmbeddingVerdict is_pronormal(const Subgroup& h);
EmbeddingVerdict is_c_supplemented(const Subgroup& h);
EmbeddingVerdict is_h_subgroup(const Subgroup& h);
EmbeddingVerdict is_weakly_h_subgroup(const Subgroup& h);

} // namespace grouplab
