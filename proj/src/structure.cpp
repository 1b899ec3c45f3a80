#include "grouplab/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "grouplab/errors.hpp"

namespace grouplab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> out;
  std::size_t m = n;
  for (std::size_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(static_cast<unsigned>(d));
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(static_cast<unsigned>(m));
  return out;
}

std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

namespace {

void require_prime(unsigned p) {
  if (!is_prime(p))
    throw Error(std::to_string(p) + " is not prime");
}

Subgroup ensure_inside(const GroupPtr& g, const Subgroup& h) {
  if (h.parent == g) return h;
  return rebase(h, g);
}

bool is_p_power(std::size_t n, unsigned p) {
  return p_part(n, p) == n;
}

} // namespace

// ---------------------------------------------------------------- quotient

QuotientGroup::QuotientGroup(const GroupPtr& g, const Subgroup& n)
: parent_(g) {
  kernel_ = ensure_inside(g, n);
  if (!is_normal(kernel_))
    throw Error("quotient by a non-normal subgroup");

  const ElementList& els = g->elements();
  std::unordered_map<Perm, Point, PermHash> coset_of;
  coset_of.reserve(els.size());
  std::vector<Perm> reps;
  for (const Perm& x : els) {
    if (coset_of.count(x)) continue;
    Point idx = static_cast<Point>(reps.size());
    reps.push_back(x);
    for (const Perm& k : kernel_.elements) coset_of.emplace(k * x, idx);
  }

  Point qdeg = static_cast<Point>(reps.size());
  images_.reserve(els.size());
  ElementList qelems;
  for (const Perm& x : els) {
    std::vector<Point> img(qdeg);
    for (Point c = 0; c < qdeg; ++c) img[c] = coset_of.at(reps[c] * x);
    images_.push_back(Perm::from_images(std::move(img)));
    qelems.push_back(images_.back());
  }

  std::vector<Perm> qgens;
  for (const Perm& gg : g->generators()) {
    auto it = std::lower_bound(els.begin(), els.end(), gg);
    qgens.push_back(images_[static_cast<std::size_t>(it - els.begin())]);
  }
  std::string qname = g->name().empty()
                          ? ""
                          : g->name() + "/" + std::to_string(kernel_.order());
  group_ = Group::from_elements(qdeg, std::move(qelems), std::move(qgens),
                                std::move(qname));
}

Perm QuotientGroup::project(const Perm& g) const {
  const ElementList& els = parent_->elements();
  auto it = std::lower_bound(els.begin(), els.end(), g);
  if (it == els.end() || *it != g)
    throw Error("element not in quotient domain");
  return images_[static_cast<std::size_t>(it - els.begin())];
}

Subgroup QuotientGroup::project_subgroup(const Subgroup& h) const {
  if (!sorted_is_subset(h.elements, parent_->elements()))
    throw Error("mismatched parents");
  ElementList img;
  img.reserve(h.elements.size());
  for (const Perm& x : h.elements) img.push_back(project(x));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  std::vector<Perm> gens;
  for (const Perm& x : h.generators) gens.push_back(project(x));
  return Subgroup{group_, std::move(img), std::move(gens)};
}

Subgroup QuotientGroup::preimage(const Subgroup& hbar) const {
  if (!sorted_is_subset(hbar.elements, group_->elements()))
    throw Error("subgroup does not live in the quotient");
  ElementList pre;
  const ElementList& els = parent_->elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    if (sorted_contains(hbar.elements, images_[i])) pre.push_back(els[i]);
  return Subgroup{parent_, pre, reduce_generators(parent_->degree(), pre)};
}

QuotientGroup quotient(const GroupPtr& g, const Subgroup& n) {
  return QuotientGroup(g, n);
}

// ------------------------------------------------------------------ series

std::vector<std::size_t> SeriesRecord::factor_orders() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    std::size_t a = terms[i].order();
    std::size_t b = terms[i + 1].order();
    out.push_back(std::max(a, b) / std::min(a, b));
  }
  return out;
}

// ------------------------------------------------------------------- sylow

Subgroup sylow_subgroup(const GroupPtr& g, unsigned p) {
  require_prime(p);
  std::size_t target = p_part(g->order(), p);
  Subgroup s = trivial_subgroup(g);
  while (s.order() < target) {
    Subgroup norm = normalizer(g, s);
    const Perm* grow = nullptr;
    for (const Perm& y : norm.elements) {
      if (s.contains(y)) continue;
      if (is_p_power(y.order(), p) && y.order() > 1) {
        grow = &y;
        break;
      }
    }
    if (!grow)
      throw Error("internal inconsistency: Sylow growth found no p-element");
    ElementList seed = s.elements;
    seed.push_back(*grow);
    s = subgroup_generated(g, seed);
    s.generators = reduce_generators(g->degree(), s.elements);
  }
  return s;
}

std::vector<Subgroup> sylow_conjugates(const GroupPtr& g, unsigned p) {
  require_prime(p);
  Subgroup start = sylow_subgroup(g, p);
  std::vector<Subgroup> orbit{start};
  std::unordered_set<std::size_t> seen{element_list_hash(start.elements)};
  auto known = [&](const Subgroup& s) {
    if (!seen.count(element_list_hash(s.elements))) return false;
    for (const Subgroup& t : orbit)
      if (t.elements == s.elements) return true;
    return false;
  };
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& gg : g->generators()) {
      Subgroup c = conjugate_subgroup(orbit[i], gg);
      if (!known(c)) {
        seen.insert(element_list_hash(c.elements));
        orbit.push_back(std::move(c));
      }
    }
  }
  std::sort(orbit.begin(), orbit.end(),
            [](const Subgroup& a, const Subgroup& b) {
              return a.elements < b.elements;
            });
  if (orbit.size() % p != 1 || g->order() % orbit.size() != 0)
    throw Error("internal inconsistency: Sylow conjugate count violates "
                "the counting congruences");
  return orbit;
}

// ----------------------------------------------------------------- derived

Subgroup derived_subgroup(const GroupPtr& g) {
  // normal closure of the commutators of the generators
  ElementList comms;
  for (const Perm& a : g->generators())
    for (const Perm& b : g->generators())
      comms.push_back(a.commutator_with(b));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  Subgroup seed = subgroup_generated(g, comms);
  return normal_closure(g, seed);
}

SeriesRecord derived_series(const GroupPtr& g) {
  SeriesRecord rec{SeriesKind::derived, {full_subgroup(g)}};
  while (true) {
    const Subgroup& cur = rec.terms.back();
    Subgroup next = rebase(derived_subgroup(cur.as_group()), g);
    if (next.order() == cur.order()) break;
    rec.terms.push_back(std::move(next));
    if (rec.terms.back().is_trivial()) break;
  }
  return rec;
}

// ----------------------------------------------------------- upper central

SeriesRecord upper_central_series(const GroupPtr& g) {
  SeriesRecord rec{SeriesKind::upper_central, {trivial_subgroup(g)}};
  while (true) {
    const Subgroup& z = rec.terms.back();
    ElementList next;
    for (const Perm& x : g->elements()) {
      bool central_mod_z = true;
      for (const Perm& gg : g->generators()) {
        if (!z.contains(x.commutator_with(gg))) {
          central_mod_z = false;
          break;
        }
      }
      if (central_mod_z) next.push_back(x);
    }
    if (next.size() == z.order()) break;
    rec.terms.push_back(
        Subgroup{g, next, reduce_generators(g->degree(), next)});
    if (rec.terms.back().order() == g->order()) break;
  }
  return rec;
}

std::optional<unsigned> nilpotency_class(const GroupPtr& g) {
  SeriesRecord ucs = upper_central_series(g);
  if (ucs.terms.back().order() != g->order()) return std::nullopt;
  return static_cast<unsigned>(ucs.terms.size() - 1);
}

// ---------------------------------------------------------------- frattini

Subgroup frattini(const GroupPtr& g) {
  if (g->order() == 1) return full_subgroup(g);
  ElementList meet = g->elements();
  for (const Subgroup& m : maximal_subgroups(g))
    meet = sorted_intersection(meet, m.elements);
  return Subgroup{g, meet, reduce_generators(g->degree(), meet)};
}

// ------------------------------------------------------- O_p, O_p', O^p(G)

namespace {

Subgroup join_of_cyclic_closures(const GroupPtr& g,
                                 bool (*keep_order)(std::size_t, unsigned),
                                 unsigned p) {
  Subgroup acc = trivial_subgroup(g);
  for (const Perm& x : g->elements()) {
    if (x.is_identity()) continue;
    if (!keep_order(static_cast<std::size_t>(x.order()), p)) continue;
    Subgroup n = normal_closure(g, subgroup_generated(g, {x}));
    if (!keep_order(n.order(), p)) continue;
    if (sorted_is_subset(n.elements, acc.elements)) continue;
    acc = join(acc, n);
  }
  return acc;
}

} // namespace

Subgroup o_p(const GroupPtr& g, unsigned p) {
  require_prime(p);
  return join_of_cyclic_closures(
      g, [](std::size_t n, unsigned q) { return p_part(n, q) == n; }, p);
}

Subgroup o_p_prime(const GroupPtr& g, unsigned p) {
  require_prime(p);
  return join_of_cyclic_closures(
      g, [](std::size_t n, unsigned q) { return n % q != 0; }, p);
}

Subgroup o_upper_p(const GroupPtr& g, unsigned p) {
  require_prime(p);
  ElementList coprime;
  for (const Perm& x : g->elements())
    if (x.order() % p != 0 && !x.is_identity()) coprime.push_back(x);
  Subgroup seed = subgroup_generated(g, coprime);
  seed.generators = reduce_generators(g->degree(), seed.elements);
  Subgroup result = normal_closure(g, seed);

  // G = P * O^p(G) must hold as a product set
  Subgroup p_syl = sylow_subgroup(g, p);
  if (product_set(p_syl, result).size() != g->order())
    throw Error("internal inconsistency: G != P * O^p(G)");
  return result;
}

// ------------------------------------------------------- normal subgroups

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g) {
  std::vector<Subgroup> closures;
  std::unordered_set<std::size_t> seen;
  for (const Perm& x : g->elements()) {
    if (x.is_identity()) continue;
    Subgroup n = normal_closure(g, subgroup_generated(g, {x}));
    std::size_t h = element_list_hash(n.elements);
    if (seen.count(h)) {
      bool dup = false;
      for (const Subgroup& m : closures)
        if (m.elements == n.elements) { dup = true; break; }
      if (dup) continue;
    }
    seen.insert(h);
    closures.push_back(std::move(n));
  }
  std::vector<Subgroup> out;
  for (const Subgroup& n : closures) {
    bool minimal = true;
    for (const Subgroup& m : closures) {
      if (m.order() < n.order() && sorted_is_subset(m.elements, n.elements)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> all_normal_subgroups(const GroupPtr& g) {
  std::vector<Subgroup> known{trivial_subgroup(g)};
  std::unordered_set<std::size_t> seen{element_list_hash(known[0].elements)};
  auto add = [&](Subgroup s) -> bool {
    std::size_t h = element_list_hash(s.elements);
    if (seen.count(h)) {
      for (const Subgroup& t : known)
        if (t.elements == s.elements) return false;
    }
    seen.insert(h);
    known.push_back(std::move(s));
    return true;
  };
  for (const Perm& x : g->elements()) {
    if (x.is_identity()) continue;
    add(normal_closure(g, subgroup_generated(g, {x})));
  }
  // close under joins
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t n = known.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (sorted_is_subset(known[i].elements, known[j].elements) ||
            sorted_is_subset(known[j].elements, known[i].elements))
          continue;
        if (add(join(known[i], known[j]))) changed = true;
      }
    }
  }
  std::sort(known.begin(), known.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elements < b.elements;
            });
  return known;
}

// ------------------------------------------------------------ chief series

SeriesRecord chief_series(const GroupPtr& g, ChiefChoice choice) {
  SeriesRecord rec{SeriesKind::chief, {trivial_subgroup(g)}};
  while (rec.terms.back().order() < g->order()) {
    const Subgroup& cur = rec.terms.back();
    if (cur.is_trivial()) {
      std::vector<Subgroup> mins = minimal_normal_subgroups(g);
      if (mins.empty())
        throw Error("internal inconsistency: nontrivial group with no "
                    "minimal normal subgroup");
      rec.terms.push_back(choice == ChiefChoice::first_minimal ? mins.front()
                                                               : mins.back());
      continue;
    }
    QuotientGroup q(g, cur);
    std::vector<Subgroup> mins = minimal_normal_subgroups(q.group());
    if (mins.empty())
      throw Error("internal inconsistency: proper quotient with no minimal "
                  "normal subgroup");
    const Subgroup& pick =
        choice == ChiefChoice::first_minimal ? mins.front() : mins.back();
    rec.terms.push_back(q.preimage(pick));
  }
  return rec;
}

// -------------------------------------------------- supersolvable hypercentre

Subgroup supersolvable_hypercentre(const GroupPtr& g) {
  Subgroup cur = trivial_subgroup(g);
  while (cur.order() < g->order()) {
    auto prime_socle = [](const std::vector<Subgroup>& mins)
        -> std::optional<Subgroup> {
      std::optional<Subgroup> socle;
      for (const Subgroup& m : mins) {
        if (!is_prime(m.order())) continue;
        socle = socle ? join(*socle, m) : m;
      }
      return socle;
    };
    if (cur.is_trivial()) {
      auto socle = prime_socle(minimal_normal_subgroups(g));
      if (!socle) break;
      cur = *socle;
      continue;
    }
    QuotientGroup q(g, cur);
    auto socle = prime_socle(minimal_normal_subgroups(q.group()));
    if (!socle) break;
    cur = q.preimage(*socle);
  }
  return cur;
}

} // namespace grouplab
