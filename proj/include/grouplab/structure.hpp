#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grouplab/group.hpp"

namespace grouplab {

bool is_prime(std::uint64_t n);
std::vector<unsigned> prime_divisors(std::size_t n);
std::size_t p_part(std::size_t n, unsigned p);

// G/N as a faithful permutation group on the right cosets of N, together
// with the projection map defined on every element of G.
class QuotientGroup {
public:
  QuotientGroup(const GroupPtr& g, const Subgroup& n);  // throws if N not normal

  const GroupPtr& group() const { return group_; }
  const GroupPtr& parent() const { return parent_; }
  const Subgroup& kernel() const { return kernel_; }

  Perm project(const Perm& g) const;
  Subgroup project_subgroup(const Subgroup& h) const;  // image, subgroup of group()
  Subgroup preimage(const Subgroup& hbar) const;       // subgroup of parent()

private:
  GroupPtr parent_;
  GroupPtr group_;
  Subgroup kernel_;
  std::vector<Perm> images_;  // aligned with parent_->elements()
};

QuotientGroup quotient(const GroupPtr& g, const Subgroup& n);

enum class SeriesKind { derived, upper_central, chief };

struct SeriesRecord {
  SeriesKind kind;
  std::vector<Subgroup> terms;  // chief/upper_central ascend, derived descends
  std::vector<std::size_t> factor_orders() const;
};

// Grows a p-subgroup by adjoining p-elements of its normalizer until the
// full p-part of |G| is reached. p ∤ |G| yields the trivial subgroup.
Subgroup sylow_subgroup(const GroupPtr& g, unsigned p);
std::vector<Subgroup> sylow_conjugates(const GroupPtr& g, unsigned p);

Subgroup derived_subgroup(const GroupPtr& g);
SeriesRecord derived_series(const GroupPtr& g);

SeriesRecord upper_central_series(const GroupPtr& g);
std::optional<unsigned> nilpotency_class(const GroupPtr& g);

// Intersection of all maximal subgroups (the trivial group has none and is
// its own Frattini subgroup).
Subgroup frattini(const GroupPtr& g);

Subgroup o_p(const GroupPtr& g, unsigned p);        // largest normal p-subgroup
Subgroup o_p_prime(const GroupPtr& g, unsigned p);  // largest normal p'-subgroup
Subgroup o_upper_p(const GroupPtr& g, unsigned p);  // smallest normal N with G/N a p-group

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g);
std::vector<Subgroup> all_normal_subgroups(const GroupPtr& g);

// Which minimal normal subgroup to lift at each chief-series step; the
// factor orders are series-independent, and tests exercise both choices.
enum class ChiefChoice { first_minimal, last_minimal };
SeriesRecord chief_series(const GroupPtr& g,
                          ChiefChoice choice = ChiefChoice::first_minimal);

// Ascending fixpoint: repeatedly adjoin the product of all prime-order
// minimal normal subgroups of the current quotient.
Subgroup supersolvable_hypercentre(const GroupPtr& g);

} // namespace grouplab
