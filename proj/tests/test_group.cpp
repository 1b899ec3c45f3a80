#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "grouplab/budget.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/group.hpp"

using namespace grouplab;

namespace {

GroupPtr sym(unsigned n) {
  std::vector<Point> big(n);
  for (unsigned i = 1; i <= n; ++i) big[i - 1] = i;
  return Group::generate(
      n, {Perm::from_cycles(n, {{1, 2}}), Perm::from_cycles(n, {big})},
      "s" + std::to_string(n));
}

GroupPtr alt4() {
  return Group::generate(4,
                         {parse_cycles(4, "(1 2 3)"), parse_cycles(4, "(2 3 4)")},
                         "a4");
}

GroupPtr quat8() {
  return Group::generate(
      8, {parse_cycles(8, "(1 3 2 4)(5 8 6 7)"), parse_cycles(8, "(1 5 2 6)(3 7 4 8)")},
      "q8");
}

Subgroup gen_sub(const GroupPtr& g, const std::string& cycles) {
  return subgroup_generated(g, {parse_cycles(g->degree(), cycles)});
}

// Independent oracle: closures of all element pairs. Valid for groups whose
// subgroups are all 2-generated, which holds for the groups compared below.
std::set<ElementList> pair_closure_subgroups(const GroupPtr& g) {
  std::set<ElementList> out;
  out.insert({g->identity()});
  for (const Perm& a : g->elements())
    for (const Perm& b : g->elements())
      out.insert(subgroup_generated(g, {a, b}).elements);
  return out;
}

} // namespace

TEST_CASE("generate_group basics") {
  GroupPtr s3 = sym(3);
  CHECK(s3->order() == 6);

  GroupPtr trivial = Group::generate(4, {}, "one");
  CHECK(trivial->order() == 1);

  GroupPtr d8 = Group::generate(
      4, {parse_cycles(4, "(1 2 3 4)"), parse_cycles(4, "(1 3)")}, "d8");
  CHECK(d8->order() == 8);

  CHECK_THROWS_AS(Group::generate(3, {parse_cycles(4, "(1 2)")}, ""), Error);
  CHECK_THROWS_AS(Group::generate(6, {parse_cycles(6, "(1 2 3 4 5 6)")}, "",
                                  5),
                  BudgetError);
}

TEST_CASE("subgroup_generated") {
  GroupPtr s3 = sym(3);
  CHECK(gen_sub(s3, "(1 2 3)").order() == 3);
  CHECK(subgroup_generated(s3, {}).order() == 1);

  GroupPtr s4 = sym(4);
  Subgroup whole = subgroup_generated(
      s4, {parse_cycles(4, "(1 2)"), parse_cycles(4, "(1 3 4)")});
  CHECK(whole.order() == 24);

  CHECK_THROWS_AS(subgroup_generated(alt4(), {parse_cycles(4, "(1 2)")}),
                  Error);
}

TEST_CASE("product sets and permuting subgroups") {
  GroupPtr s3 = sym(3);
  Subgroup h = gen_sub(s3, "(1 2)");
  Subgroup k3 = gen_sub(s3, "(1 2 3)");
  Subgroup k2 = gen_sub(s3, "(1 3)");

  CHECK(product_set(h, k3).size() == 6);
  CHECK(permutes(h, k3));            // K normal in S3
  CHECK(product_set(h, k2).size() == 4);
  CHECK_FALSE(permutes(h, k2));      // 4 does not divide 6
  CHECK(permutes(subgroup_generated(s3, {}), k2));  // trivial H

  GroupPtr other = sym(4);
  CHECK_THROWS_AS(permutes(h, gen_sub(other, "(1 2)")), Error);
}

TEST_CASE("product set size identity |HK| = |H||K|/|H∩K|") {
  for (GroupPtr g : {sym(4), alt4(), quat8()}) {
    std::vector<Subgroup> subs = all_subgroups(g);
    for (const Subgroup& h : subs) {
      for (const Subgroup& k : subs) {
        std::size_t meet = intersect(h, k).order();
        CHECK(product_set(h, k).size() == h.order() * k.order() / meet);
        CHECK(permutes(h, k) == permutes(k, h));
      }
    }
  }
}

TEST_CASE("normal subgroups permute with everything") {
  GroupPtr s4 = sym(4);
  Subgroup v4 = subgroup_generated(
      s4, {parse_cycles(4, "(1 2)(3 4)"), parse_cycles(4, "(1 3)(2 4)")});
  REQUIRE(is_normal(v4));
  for (const Subgroup& k : all_subgroups(s4)) CHECK(permutes(v4, k));
}

TEST_CASE("conjugate_subgroup") {
  GroupPtr s3 = sym(3);
  Subgroup h = gen_sub(s3, "(1 2)");
  Subgroup hg = conjugate_subgroup(h, parse_cycles(3, "(2 3)"));
  CHECK(hg.elements == gen_sub(s3, "(1 3)").elements);
  CHECK(conjugate_subgroup(h, Perm(3)).elements == h.elements);

  GroupPtr s4 = sym(4);
  Subgroup v4 = subgroup_generated(
      s4, {parse_cycles(4, "(1 2)(3 4)"), parse_cycles(4, "(1 3)(2 4)")});
  for (const Perm& g : s4->elements())
    CHECK(conjugate_subgroup(v4, g).elements == v4.elements);

  GroupPtr a4 = alt4();
  Subgroup c3 = gen_sub(a4, "(1 2 3)");
  CHECK_THROWS_AS(conjugate_subgroup(c3, parse_cycles(4, "(1 2)")), Error);
}

TEST_CASE("normalizer, centralizer, center") {
  GroupPtr s4 = sym(4);
  Subgroup d8 = subgroup_generated(
      s4, {parse_cycles(4, "(1 2 3 4)"), parse_cycles(4, "(1 3)")});
  REQUIRE(d8.order() == 8);
  Subgroup n = normalizer(s4, d8);
  CHECK(n.order() == 8);  // Sylow 2-subgroup of S4 is self-normalizing
  CHECK(n.elements == d8.elements);

  GroupPtr s3 = sym(3);
  CHECK(center(s3).order() == 1);
  CHECK(centralizer(s3, {s3->identity()}).order() == 6);

  GroupPtr q8 = quat8();
  CHECK(center(q8).order() == 2);
}

TEST_CASE("normal closure and core") {
  GroupPtr s3 = sym(3);
  Subgroup h = gen_sub(s3, "(1 2)");
  CHECK(normal_closure(s3, h).order() == 6);
  CHECK(core(s3, h).order() == 1);

  Subgroup a3 = gen_sub(s3, "(1 2 3)");
  CHECK(core(s3, a3).elements == a3.elements);  // core of a normal subgroup

  // sandwich: core <= H <= closure, both ends normal
  GroupPtr s4 = sym(4);
  for (const Subgroup& h2 : all_subgroups(s4)) {
    Subgroup lo = core(s4, h2);
    Subgroup hi = normal_closure(s4, h2);
    CHECK(sorted_is_subset(lo.elements, h2.elements));
    CHECK(sorted_is_subset(h2.elements, hi.elements));
    CHECK(is_normal(lo));
    CHECK(is_normal(hi));
  }
}

TEST_CASE("is_normal and is_subnormal") {
  GroupPtr s4 = sym(4);
  Subgroup v4 = subgroup_generated(
      s4, {parse_cycles(4, "(1 2)(3 4)"), parse_cycles(4, "(1 3)(2 4)")});
  CHECK(is_normal(v4));
  CHECK(is_subnormal(v4));

  GroupPtr a4 = alt4();
  Subgroup h = gen_sub(a4, "(1 2)(3 4)");
  CHECK_FALSE(is_normal(h));
  CHECK(is_subnormal(h));  // normal in V4, V4 normal in A4

  GroupPtr s3 = sym(3);
  Subgroup t = gen_sub(s3, "(1 2)");
  CHECK_FALSE(is_subnormal(t));
  CHECK(is_subnormal(full_subgroup(s3)));
  CHECK(is_subnormal(trivial_subgroup(s3)));
}

TEST_CASE("subgroup enumeration matches the pair-closure oracle") {
  // expected counts fixed up front: S3 6, A4 10, Q8 6, S4 30
  struct Case { GroupPtr g; std::size_t count; };
  for (const Case& c : {Case{sym(3), 6}, Case{alt4(), 10}, Case{quat8(), 6},
                        Case{sym(4), 30}}) {
    std::vector<Subgroup> lattice = all_subgroups(c.g);
    CHECK(lattice.size() == c.count);

    std::set<ElementList> oracle = pair_closure_subgroups(c.g);
    CHECK(oracle.size() == c.count);
    for (const Subgroup& s : lattice)
      CHECK(oracle.count(s.elements) == 1);

    // duplicate-free and closed
    std::set<ElementList> unique;
    for (const Subgroup& s : lattice) {
      CHECK(unique.insert(s.elements).second);
      CHECK(c.g->order() % s.order() == 0);  // Lagrange
      CHECK(subgroup_generated(c.g, s.elements).order() == s.order());
    }
  }
}

TEST_CASE("subgroups_of_order and maximal_subgroups") {
  GroupPtr q8 = quat8();
  CHECK(subgroups_of_order(q8, 4).size() == 3);
  CHECK(subgroups_of_order(q8, 3).empty());  // 3 does not divide 8

  GroupPtr c6 = Group::generate(6, {parse_cycles(6, "(1 2 3 4 5 6)")}, "c6");
  std::vector<Subgroup> maxs = maximal_subgroups(c6);
  REQUIRE(maxs.size() == 2);
  CHECK(maxs[0].order() == 2);
  CHECK(maxs[1].order() == 3);
}

TEST_CASE("lattice budget bites loudly") {
  Budget saved = global_budget();
  global_budget().lattice_limit = 5;
  CHECK_THROWS_AS(all_subgroups(sym(3)), BudgetError);
  global_budget() = saved;
}
