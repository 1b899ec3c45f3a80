#pragma once

#include <optional>
#include <string>

#include "grouplab/group.hpp"
#include "grouplab/structure.hpp"

namespace grouplab {

// Result of a group-class predicate. The witness certifies the boolean:
// a violating chief factor (as the adjacent series terms) for a negative
// answer, a normal complement or the checked series for a positive one.
struct ClassVerdict {
  std::string predicate;
  std::string group;
  std::optional<unsigned> prime;
  bool value = false;
  std::string witness_text;
  std::optional<Subgroup> complement;  // p-nilpotent: the normal Hall p'-subgroup
  std::optional<std::pair<Subgroup, Subgroup>> violating_factor;
  std::optional<SeriesRecord> series;  // backing series for a positive verdict

  explicit operator bool() const { return value; }
};

ClassVerdict is_solvable(const GroupPtr& g);
ClassVerdict is_p_solvable(const GroupPtr& g, unsigned p);
ClassVerdict is_p_nilpotent(const GroupPtr& g, unsigned p);
ClassVerdict is_p_supersolvable(const GroupPtr& g, unsigned p);
ClassVerdict is_nilpotent(const GroupPtr& g);
ClassVerdict is_supersolvable(const GroupPtr& g);

// Variants over a precomputed chief series (verdicts are series-independent;
// tests recompute with the other minimal-normal choice to confirm).
ClassVerdict is_p_solvable_on(const GroupPtr& g, unsigned p,
                              const SeriesRecord& chief);
ClassVerdict is_p_supersolvable_on(const GroupPtr& g, unsigned p,
                                   const SeriesRecord& chief);

} // namespace grouplab
