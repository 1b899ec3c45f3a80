#pragma once

#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "grouplab/group.hpp"
#include "grouplab/structure.hpp"

namespace grouplab {

// Memo store for the expensive per-group computations (subgroup lattices,
// Sylow data, quotients, chief series). Groups are keyed by element set, so
// the same group reached along different routes shares one cache entry.
// All cached values are pure functions of immutable inputs; a context is not
// shared across threads, which keeps every answer schedule-independent.
class AnalysisContext {
public:
  // Canonical group for an element set (registers g on first sight).
  GroupPtr canonical(const GroupPtr& g);
  GroupPtr group_of(const Subgroup& s);  // canonical standalone group for s

  const std::vector<Subgroup>& subgroup_lattice(const GroupPtr& g);
  const std::vector<Subgroup>& normal_subgroups(const GroupPtr& g);
  const std::vector<Subgroup>& minimal_normals(const GroupPtr& g);
  const Subgroup& sylow(const GroupPtr& g, unsigned p);
  const std::vector<Subgroup>& sylow_orbit(const GroupPtr& g, unsigned p);
  const Subgroup& sylow_normalizer(const GroupPtr& g, unsigned p);
  const SeriesRecord& chief(const GroupPtr& g);
  const Subgroup& frattini_of(const GroupPtr& g);
  const Subgroup& derived_of(const GroupPtr& g);
  const QuotientGroup& quotient_by(const GroupPtr& g, const Subgroup& n);

private:
  struct Entry {
    GroupPtr group;
    std::optional<std::vector<Subgroup>> lattice;
    std::optional<std::vector<Subgroup>> normals;
    std::optional<std::vector<Subgroup>> min_normals;
    std::map<unsigned, Subgroup> sylows;
    std::map<unsigned, std::vector<Subgroup>> sylow_orbits;
    std::map<unsigned, Subgroup> sylow_norms;
    std::optional<SeriesRecord> chief;
    std::optional<Subgroup> frattini;
    std::optional<Subgroup> derived;
    std::map<ElementList, std::unique_ptr<QuotientGroup>> quotients;
  };

  Entry& entry(const GroupPtr& g);

  std::unordered_map<std::size_t, std::vector<std::unique_ptr<Entry>>> entries_;
};

} // namespace grouplab
