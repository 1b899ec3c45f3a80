#include "grouplab/group.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "grouplab/budget.hpp"
#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

// Right-multiplication closure of a generator list. Budget of 0 means
// "unlimited" (callers pass an explicit cap or the global element budget).
ElementList closed_set(Point degree, const std::vector<Perm>& gens,
                       std::size_t budget) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> frontier;
  std::vector<Perm> use;
  for (const Perm& g : gens) {
    if (g.degree() != degree)
      throw Error("generator degree mismatch");
    if (!g.is_identity() &&
        std::find(use.begin(), use.end(), g) == use.end())
      use.push_back(g);
  }
  Perm id(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : use) {
        Perm y = x * g;
        if (seen.insert(y).second) {
          if (budget != 0 && seen.size() > budget)
            throw BudgetError("group too large: closure exceeded " +
                              std::to_string(budget) + " elements");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  ElementList out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> normalized_generators(std::vector<Perm> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const Perm& p) { return p.is_identity(); }),
             gens.end());
  return gens;
}

bool same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent == b.parent) return true;
  return a.parent && b.parent && a.parent->degree() == b.parent->degree() &&
         a.parent->elements() == b.parent->elements();
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!same_parent(a, b)) throw Error("mismatched parents");
}

Subgroup make_subgroup(GroupPtr parent, ElementList elements,
                       std::vector<Perm> generators) {
  return Subgroup{std::move(parent), std::move(elements),
                  normalized_generators(std::move(generators))};
}

} // namespace

bool sorted_contains(const ElementList& sorted, const Perm& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

ElementList sorted_intersection(const ElementList& a, const ElementList& b) {
  ElementList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool sorted_is_subset(const ElementList& small, const ElementList& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::size_t element_list_hash(const ElementList& sorted) {
  std::uint64_t h = 1469598103934665603ull;
  PermHash ph;
  for (const Perm& p : sorted) {
    h ^= ph(p);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

GroupPtr Group::generate(Point degree, std::vector<Perm> generators,
                         std::string name, std::size_t element_budget) {
  if (degree == 0) throw Error("degree must be at least 1");
  std::size_t budget =
      element_budget != 0 ? element_budget : global_budget().element_limit;
  auto g = std::shared_ptr<Group>(new Group());
  g->degree_ = degree;
  g->generators_ = normalized_generators(std::move(generators));
  g->elements_ = closed_set(degree, g->generators_, budget);
  g->name_ = std::move(name);
  return g;
}

GroupPtr Group::from_elements(Point degree, ElementList elements,
                              std::vector<Perm> generators, std::string name) {
  auto g = std::shared_ptr<Group>(new Group());
  g->degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  g->elements_ = std::move(elements);
  g->generators_ = normalized_generators(std::move(generators));
  g->name_ = std::move(name);
  return g;
}

bool Group::contains(const Perm& p) const {
  return p.degree() == degree_ && sorted_contains(elements_, p);
}

bool Subgroup::is_whole_group() const {
  return parent && elements.size() == parent->order();
}

bool Subgroup::same_elements(const Subgroup& other) const {
  return elements == other.elements;
}

GroupPtr Subgroup::as_group(std::string name) const {
  return Group::from_elements(parent->degree(), elements, generators,
                              std::move(name));
}

std::string Subgroup::generators_string() const {
  std::ostringstream out;
  out << '<';
  if (generators.empty()) {
    out << "()";
  } else {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (i) out << ", ";
      out << generators[i].to_cycle_string();
    }
  }
  out << '>';
  return out.str();
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  return make_subgroup(g, {g->identity()}, {});
}

Subgroup full_subgroup(const GroupPtr& g) {
  return make_subgroup(g, g->elements(), g->generators());
}

Subgroup subgroup_generated(const GroupPtr& parent, const ElementList& elems) {
  for (const Perm& p : elems)
    if (!parent->contains(p))
      throw Error("element " + p.to_cycle_string() + " not in parent group");
  ElementList closed = closed_set(parent->degree(), elems, parent->order());
  return make_subgroup(parent, std::move(closed), elems);
}

Subgroup rebase(const Subgroup& h, const GroupPtr& new_parent) {
  if (new_parent->degree() != h.parent->degree() ||
      !sorted_is_subset(h.elements, new_parent->elements()))
    throw Error("subgroup does not lie inside the new parent");
  return Subgroup{new_parent, h.elements, h.generators};
}

ElementSet product_set(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  std::unordered_set<Perm, PermHash> prods;
  for (const Perm& a : h.elements)
    for (const Perm& b : k.elements)
      prods.insert(a * b);
  ElementList out(prods.begin(), prods.end());
  std::sort(out.begin(), out.end());
  return ElementSet{h.parent, std::move(out)};
}

bool permutes(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  ElementSet hk = product_set(h, k);
  ElementSet kh = product_set(k, h);
  bool as_sets = hk.elements == kh.elements;

  std::vector<Perm> gens = h.generators;
  gens.insert(gens.end(), k.generators.begin(), k.generators.end());
  ElementList joined = closed_set(h.parent->degree(), gens, h.parent->order());
  bool as_join = hk.elements.size() == joined.size();

  if (as_sets != as_join)
    throw Error("internal inconsistency: HK = KH disagrees with |HK| = |<H,K>|");
  return as_sets;
}

Subgroup conjugate_subgroup(const Subgroup& h, const Perm& g) {
  if (!h.parent->contains(g))
    throw Error("conjugating element not in parent group");
  ElementList conj;
  conj.reserve(h.elements.size());
  for (const Perm& x : h.elements) conj.push_back(x.conjugated_by(g));
  std::sort(conj.begin(), conj.end());
  std::vector<Perm> gens;
  gens.reserve(h.generators.size());
  for (const Perm& x : h.generators) gens.push_back(x.conjugated_by(g));
  return make_subgroup(h.parent, std::move(conj), std::move(gens));
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) {
  if (!sorted_is_subset(h.elements, g->elements()))
    throw Error("mismatched parents");
  const std::vector<Perm>& hgens =
      h.generators.empty() ? h.elements : h.generators;
  ElementList found;
  for (const Perm& x : g->elements()) {
    bool ok = true;
    for (const Perm& s : hgens) {
      if (!h.contains(s.conjugated_by(x))) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(x);
  }
  return make_subgroup(g, found, reduce_generators(g->degree(), found));
}

Subgroup centralizer(const GroupPtr& g, const ElementList& s) {
  for (const Perm& p : s)
    if (!g->contains(p)) throw Error("mismatched parents");
  ElementList found;
  for (const Perm& x : g->elements()) {
    bool ok = true;
    for (const Perm& p : s) {
      if (!(x * p == p * x)) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(x);
  }
  return make_subgroup(g, found, reduce_generators(g->degree(), found));
}

Subgroup center(const GroupPtr& g) {
  return centralizer(g, g->generators());
}

Subgroup normal_closure(const GroupPtr& g, const Subgroup& h) {
  if (!sorted_is_subset(h.elements, g->elements()))
    throw Error("mismatched parents");
  std::vector<Perm> seeds =
      h.generators.empty() ? std::vector<Perm>{} : h.generators;
  ElementList closure = closed_set(g->degree(), seeds, g->order());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm& gg : g->generators()) {
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        Perm t = seeds[i].conjugated_by(gg);
        if (!sorted_contains(closure, t)) {
          seeds.push_back(t);
          closure = closed_set(g->degree(), seeds, g->order());
          changed = true;
        }
      }
    }
  }
  return make_subgroup(g, std::move(closure), std::move(seeds));
}

Subgroup core(const GroupPtr& g, const Subgroup& h) {
  if (!sorted_is_subset(h.elements, g->elements()))
    throw Error("mismatched parents");
  ElementList cur = h.elements;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm& gg : g->generators()) {
      ElementList conj;
      conj.reserve(cur.size());
      for (const Perm& x : cur) conj.push_back(x.conjugated_by(gg));
      std::sort(conj.begin(), conj.end());
      ElementList meet = sorted_intersection(cur, conj);
      if (meet.size() != cur.size()) {
        cur = std::move(meet);
        changed = true;
      }
    }
  }
  return make_subgroup(g, cur, reduce_generators(g->degree(), cur));
}

bool is_normal(const Subgroup& h) {
  const std::vector<Perm>& hgens =
      h.generators.empty() ? h.elements : h.generators;
  for (const Perm& g : h.parent->generators())
    for (const Perm& s : hgens)
      if (!h.contains(s.conjugated_by(g))) return false;
  return true;
}

bool is_subnormal(const Subgroup& h) {
  GroupPtr cur = h.parent;
  while (true) {
    Subgroup hh = rebase(h, cur);
    Subgroup nc = normal_closure(cur, hh);
    if (nc.order() == cur->order())
      return cur->order() == h.order();
    if (nc.order() == h.order()) return true;
    cur = nc.as_group();
  }
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  if (g->order() > global_budget().lattice_limit)
    throw BudgetError("subgroup enumeration too large: order " +
                      std::to_string(g->order()) + " exceeds budget " +
                      std::to_string(global_budget().lattice_limit));

  struct Entry {
    ElementList elements;
    std::vector<Perm> generators;
  };
  std::vector<Entry> known;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;

  auto insert = [&](ElementList els, std::vector<Perm> gens) -> bool {
    std::size_t h = element_list_hash(els);
    for (std::size_t idx : by_hash[h])
      if (known[idx].elements == els) return false;
    by_hash[h].push_back(known.size());
    known.push_back(Entry{std::move(els), std::move(gens)});
    return true;
  };

  insert({g->identity()}, {});
  for (const Perm& x : g->elements()) {
    if (x.is_identity()) continue;
    insert(closed_set(g->degree(), {x}, g->order()), {x});
  }

  // extend every known subgroup by one outside element until fixpoint
  for (std::size_t i = 0; i < known.size(); ++i) {
    if (known[i].elements.size() == g->order()) continue;
    for (const Perm& x : g->elements()) {
      if (sorted_contains(known[i].elements, x)) continue;
      std::vector<Perm> gens = known[i].generators;
      gens.push_back(x);
      ElementList els = closed_set(g->degree(), gens, g->order());
      insert(std::move(els), std::move(gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (Entry& e : known)
    out.push_back(make_subgroup(g, std::move(e.elements),
                                std::move(e.generators)));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> subgroups_of_order(const GroupPtr& g, std::size_t m) {
  if (m == 0 || g->order() % m != 0) return {};
  std::vector<Subgroup> out;
  for (Subgroup& s : all_subgroups(g))
    if (s.order() == m) out.push_back(std::move(s));
  return out;
}

std::vector<Subgroup> maximal_subgroups(const GroupPtr& g) {
  std::vector<Subgroup> proper;
  for (Subgroup& s : all_subgroups(g))
    if (s.order() < g->order()) proper.push_back(std::move(s));
  std::vector<Subgroup> out;
  for (const Subgroup& s : proper) {
    bool maximal = true;
    for (const Subgroup& t : proper) {
      if (t.order() > s.order() && t.order() % s.order() == 0 &&
          sorted_is_subset(s.elements, t.elements)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  ElementList meet = sorted_intersection(a.elements, b.elements);
  return make_subgroup(a.parent, meet,
                       reduce_generators(a.parent->degree(), meet));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<Perm> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  ElementList els = closed_set(a.parent->degree(), gens, a.parent->order());
  return make_subgroup(a.parent, std::move(els), std::move(gens));
}

bool subgroup_leq(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return sorted_is_subset(a.elements, b.elements);
}

std::vector<Perm> reduce_generators(Point degree, const ElementList& elements) {
  std::vector<Perm> gens;
  ElementList closed{Perm(degree)};
  for (const Perm& e : elements) {
    if (sorted_contains(closed, e)) continue;
    gens.push_back(e);
    closed = closed_set(degree, gens, elements.size());
    if (closed.size() == elements.size()) break;
  }
  return gens;
}

} // namespace grouplab
