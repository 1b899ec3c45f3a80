#include "grouplab/analysis.hpp"

namespace grouplab {

AnalysisContext::Entry& AnalysisContext::entry(const GroupPtr& g) {
  std::size_t h = element_list_hash(g->elements());
  auto& bucket = entries_[h];
  for (auto& e : bucket)
    if (e->group->degree() == g->degree() &&
        e->group->elements() == g->elements())
      return *e;
  bucket.push_back(std::make_unique<Entry>());
  bucket.back()->group = g;
  return *bucket.back();
}

GroupPtr AnalysisContext::canonical(const GroupPtr& g) {
  return entry(g).group;
}

GroupPtr AnalysisContext::group_of(const Subgroup& s) {
  if (s.is_whole_group()) return canonical(s.parent);
  std::size_t h = element_list_hash(s.elements);
  auto& bucket = entries_[h];
  for (auto& e : bucket)
    if (e->group->degree() == s.parent->degree() &&
        e->group->elements() == s.elements)
      return e->group;
  bucket.push_back(std::make_unique<Entry>());
  bucket.back()->group = s.as_group();
  return bucket.back()->group;
}

const std::vector<Subgroup>& AnalysisContext::subgroup_lattice(
    const GroupPtr& g) {
  Entry& e = entry(g);
  if (!e.lattice) e.lattice = all_subgroups(e.group);
  return *e.lattice;
}

const std::vector<Subgroup>& AnalysisContext::normal_subgroups(
    const GroupPtr& g) {
  Entry& e = entry(g);
  if (!e.normals) e.normals = all_normal_subgroups(e.group);
  return *e.normals;
}

const std::vector<Subgroup>& AnalysisContext::minimal_normals(
    const GroupPtr& g) {
  Entry& e = entry(g);
  if (!e.min_normals) e.min_normals = minimal_normal_subgroups(e.group);
  return *e.min_normals;
}

const Subgroup& AnalysisContext::sylow(const GroupPtr& g, unsigned p) {
  Entry& e = entry(g);
  auto it = e.sylows.find(p);
  if (it == e.sylows.end())
    it = e.sylows.emplace(p, sylow_subgroup(e.group, p)).first;
  return it->second;
}

const std::vector<Subgroup>& AnalysisContext::sylow_orbit(const GroupPtr& g,
                                                          unsigned p) {
  Entry& e = entry(g);
  auto it = e.sylow_orbits.find(p);
  if (it == e.sylow_orbits.end())
    it = e.sylow_orbits.emplace(p, sylow_conjugates(e.group, p)).first;
  return it->second;
}

const Subgroup& AnalysisContext::sylow_normalizer(const GroupPtr& g,
                                                  unsigned p) {
  Entry& e = entry(g);
  auto it = e.sylow_norms.find(p);
  if (it == e.sylow_norms.end())
    it = e.sylow_norms.emplace(p, normalizer(e.group, sylow(g, p))).first;
  return it->second;
}

const SeriesRecord& AnalysisContext::chief(const GroupPtr& g) {
  Entry& e = entry(g);
  if (!e.chief) e.chief = chief_series(e.group);
  return *e.chief;
}

const Subgroup& AnalysisContext::frattini_of(const GroupPtr& g) {
  Entry& e = entry(g);
  if (!e.frattini) e.frattini = frattini(e.group);
  return *e.frattini;
}

const Subgroup& AnalysisContext::derived_of(const GroupPtr& g) {
  Entry& e = entry(g);
  if (!e.derived) e.derived = derived_subgroup(e.group);
  return *e.derived;
}

const QuotientGroup& AnalysisContext::quotient_by(const GroupPtr& g,
                                                  const Subgroup& n) {
  Entry& e = entry(g);
  auto it = e.quotients.find(n.elements);
  if (it == e.quotients.end())
    it = e.quotients
             .emplace(n.elements,
                      std::make_unique<QuotientGroup>(e.group, n))
             .first;
  return *it->second;
}

} // namespace grouplab
