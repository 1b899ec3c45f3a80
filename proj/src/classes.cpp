#include "grouplab/classes.hpp"

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

ClassVerdict base(const char* predicate, const GroupPtr& g,
                  std::optional<unsigned> p = std::nullopt) {
  ClassVerdict v;
  v.predicate = predicate;
  v.group = g->name();
  v.prime = p;
  return v;
}

std::string factor_text(const SeriesRecord& chief, std::size_t i) {
  return "chief factor of order " +
         std::to_string(chief.factor_orders()[i]) + " between terms of order " +
         std::to_string(chief.terms[i].order()) + " and " +
         std::to_string(chief.terms[i + 1].order());
}

} // namespace

ClassVerdict is_solvable(const GroupPtr& g) {
  ClassVerdict v = base("solvable", g);
  SeriesRecord series = derived_series(g);
  v.value = series.terms.back().is_trivial();
  v.series = series;
  if (v.value)
    v.witness_text = "derived series reaches 1 after " +
                     std::to_string(series.terms.size() - 1) + " steps";
  else
    v.witness_text = "derived series stabilizes at order " +
                     std::to_string(series.terms.back().order());
  return v;
}

ClassVerdict is_p_solvable_on(const GroupPtr& g, unsigned p,
                              const SeriesRecord& chief) {
  ClassVerdict v = base("p-solvable", g, p);
  std::vector<std::size_t> factors = chief.factor_orders();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    bool p_power = p_part(factors[i], p) == factors[i];
    bool coprime = factors[i] % p != 0;
    if (!p_power && !coprime) {
      v.value = false;
      v.violating_factor = {chief.terms[i], chief.terms[i + 1]};
      v.witness_text = factor_text(chief, i) + " is neither a " +
                       std::to_string(p) + "-group nor coprime to " +
                       std::to_string(p);
      return v;
    }
  }
  v.value = true;
  v.series = chief;
  v.witness_text = "all chief factors are p-groups or p'-groups";
  return v;
}

ClassVerdict is_p_solvable(const GroupPtr& g, unsigned p) {
  return is_p_solvable_on(g, p, chief_series(g));
}

ClassVerdict is_p_nilpotent(const GroupPtr& g, unsigned p) {
  ClassVerdict v = base("p-nilpotent", g, p);
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  Subgroup complement = o_p_prime(g, p);
  std::size_t target = g->order() / p_part(g->order(), p);
  v.value = complement.order() == target;
  if (v.value) {
    v.complement = complement;
    v.witness_text = "normal p-complement of order " +
                     std::to_string(complement.order());
  } else {
    v.witness_text = "largest normal p'-subgroup has order " +
                     std::to_string(complement.order()) + ", need " +
                     std::to_string(target);
  }
  return v;
}

ClassVerdict is_p_supersolvable_on(const GroupPtr& g, unsigned p,
                                   const SeriesRecord& chief) {
  ClassVerdict v = base("p-supersolvable", g, p);
  ClassVerdict solv = is_p_solvable_on(g, p, chief);
  if (!solv.value) {
    v.value = false;
    v.violating_factor = solv.violating_factor;
    v.witness_text = "not p-solvable: " + solv.witness_text;
    return v;
  }
  std::vector<std::size_t> factors = chief.factor_orders();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] % p == 0 && factors[i] != p) {
      v.value = false;
      v.violating_factor = {chief.terms[i], chief.terms[i + 1]};
      v.witness_text = factor_text(chief, i) + " is divisible by " +
                       std::to_string(p) + " but not of order " +
                       std::to_string(p);
      return v;
    }
  }
  v.value = true;
  v.series = chief;
  v.witness_text = "every p-divisible chief factor has order exactly p";
  return v;
}

ClassVerdict is_p_supersolvable(const GroupPtr& g, unsigned p) {
  return is_p_supersolvable_on(g, p, chief_series(g));
}

ClassVerdict is_nilpotent(const GroupPtr& g) {
  ClassVerdict v = base("nilpotent", g);
  SeriesRecord ucs = upper_central_series(g);
  v.value = ucs.terms.back().order() == g->order();
  v.series = ucs;
  if (v.value)
    v.witness_text = "upper central series reaches G at class " +
                     std::to_string(ucs.terms.size() - 1);
  else
    v.witness_text = "upper central series stabilizes at order " +
                     std::to_string(ucs.terms.back().order());
  return v;
}

ClassVerdict is_supersolvable(const GroupPtr& g) {
  ClassVerdict v = base("supersolvable", g);
  SeriesRecord chief = chief_series(g);
  std::vector<std::size_t> factors = chief.factor_orders();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_prime(factors[i])) {
      v.value = false;
      v.violating_factor = {chief.terms[i], chief.terms[i + 1]};
      v.witness_text = factor_text(chief, i) + " has non-prime order";
      return v;
    }
  }
  v.value = true;
  v.series = chief;
  v.witness_text = "all chief factors have prime order";
  return v;
}

} // namespace grouplab
