#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "grouplab/perm.hpp"

namespace grouplab {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A sorted, duplicate-free list of permutations. All set-valued results in
// the library are kept in this canonical (lexicographic) order so that
// witnesses, hashes and reports are deterministic.
using ElementList = std::vector<Perm>;

bool sorted_contains(const ElementList& sorted, const Perm& p);
ElementList sorted_intersection(const ElementList& a, const ElementList& b);
bool sorted_is_subset(const ElementList& small, const ElementList& big);
std::size_t element_list_hash(const ElementList& sorted);

// A fully materialized finite permutation group: generators plus the complete
// element set, closed under composition and inverse. Immutable once built.
class Group {
public:
  // Breadth-first closure of the generators. Throws BudgetError once the
  // closure exceeds the element budget (0 = use the global budget).
  static GroupPtr generate(Point degree, std::vector<Perm> generators,
                           std::string name = "",
                           std::size_t element_budget = 0);

  // Adopts an already-closed element set (not re-verified beyond sorting).
  static GroupPtr from_elements(Point degree, ElementList elements,
                                std::vector<Perm> generators,
                                std::string name = "");

  Point degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const ElementList& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  Perm identity() const { return Perm(degree_); }
  bool contains(const Perm& p) const;

private:
  Group() = default;

  Point degree_ = 0;
  std::vector<Perm> generators_;
  ElementList elements_;
  std::string name_;
};

// A subgroup handle tied to a parent group. elements is a closed subset of
// parent->elements(); generators is some (usually small) generating list.
struct Subgroup {
  GroupPtr parent;
  ElementList elements;
  std::vector<Perm> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const Perm& p) const { return sorted_contains(elements, p); }
  bool is_trivial() const { return elements.size() == 1; }
  bool is_whole_group() const;
  bool same_elements(const Subgroup& other) const;

  // Detach as a standalone group (same degree, same element set).
  GroupPtr as_group(std::string name = "") const;

  std::string generators_string() const;  // "<(1 2), (3 4)>", "<()>" if trivial
};

// A plain subset of a group, no closure requirement (e.g. a product set HK).
struct ElementSet {
  GroupPtr parent;
  ElementList elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Perm& p) const { return sorted_contains(elements, p); }
};

// ---- perm-core operations ------------------------------------------------

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);

// Smallest subgroup of parent containing elems; throws if an element is
// outside the parent.
Subgroup subgroup_generated(const GroupPtr& parent, const ElementList& elems);

// Reinterpret h (given by its element set) as a subgroup of new_parent;
// validates containment.
Subgroup rebase(const Subgroup& h, const GroupPtr& new_parent);

ElementSet product_set(const Subgroup& h, const Subgroup& k);

// HK = KH as sets. Also verifies the equivalent characterization
// |HK| = |<H union K>| and refuses to answer if the two routes disagree.
bool permutes(const Subgroup& h, const Subgroup& k);

Subgroup conjugate_subgroup(const Subgroup& h, const Perm& g);

Subgroup normalizer(const GroupPtr& g, const Subgroup& h);
Subgroup centralizer(const GroupPtr& g, const ElementList& s);
Subgroup center(const GroupPtr& g);

Subgroup normal_closure(const GroupPtr& g, const Subgroup& h);
Subgroup core(const GroupPtr& g, const Subgroup& h);

bool is_normal(const Subgroup& h);     // normal in its parent
bool is_subnormal(const Subgroup& h);  // via the descending normal-closure chain

// Complete subgroup lattice, sorted by (order, element list). Throws
// BudgetError when the parent order exceeds the lattice budget.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);
std::vector<Subgroup> subgroups_of_order(const GroupPtr& g, std::size_t m);
std::vector<Subgroup> maximal_subgroups(const GroupPtr& g);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
bool subgroup_leq(const Subgroup& a, const Subgroup& b);

// Greedy small generating list for a closed element set.
std::vector<Perm> reduce_generators(Point degree, const ElementList& elements);

} // namespace grouplab
