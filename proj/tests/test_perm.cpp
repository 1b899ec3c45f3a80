#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "grouplab/errors.hpp"
#include "grouplab/perm.hpp"

using namespace grouplab;

namespace {

Perm random_perm(Point degree, std::mt19937& rng) {
  std::vector<Point> img(degree);
  for (Point i = 0; i < degree; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(img);
}

} // namespace

TEST_CASE("identity and images") {
  Perm id(5);
  CHECK(id.is_identity());
  CHECK(id.degree() == 5);
  CHECK(id.to_cycle_string() == "()");
  CHECK(id.order() == 1);
}

TEST_CASE("cycle construction and printing") {
  Perm p = Perm::from_cycles(5, {{1, 2, 3}, {4, 5}});
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p[4] == 3);
  CHECK(p.to_cycle_string() == "(1 2 3)(4 5)");
  CHECK(p.order() == 6);

  CHECK(parse_cycles(5, "(1 2 3)(4 5)") == p);
  CHECK(parse_cycles(3, "()").is_identity());
  CHECK(parse_cycles(4, " (1 2) ") == Perm::from_cycles(4, {{1, 2}}));
}

TEST_CASE("cycle parse errors") {
  CHECK_THROWS_AS(parse_cycles(3, "(1 2 2)"), Error);
  CHECK_THROWS_AS(parse_cycles(3, "(1 2)(2 3)"), Error);  // overlapping
  CHECK_THROWS_AS(parse_cycles(3, "(1 4)"), Error);       // out of range
  CHECK_THROWS_AS(parse_cycles(3, "(0 1)"), Error);       // 0 is not a point
  CHECK_THROWS_AS(parse_cycles(3, "(1 2"), Error);        // unterminated
  CHECK_THROWS_AS(parse_cycles(3, "1 2"), Error);
  CHECK_THROWS_AS(parse_cycles(3, ""), Error);
  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), Error);
}

TEST_CASE("composition applies left factor first") {
  Perm a = parse_cycles(3, "(1 2)");
  Perm b = parse_cycles(3, "(2 3)");
  // x -> a -> b: 1 -> 2 -> 3
  Perm ab = a * b;
  CHECK(ab[0] == 2);
  CHECK(ab == parse_cycles(3, "(1 3 2)"));
}

TEST_CASE("conjugation relabels points") {
  Perm h = parse_cycles(3, "(1 2)");
  Perm g = parse_cycles(3, "(2 3)");
  CHECK(h.conjugated_by(g) == parse_cycles(3, "(1 3)"));
  CHECK(h.conjugated_by(g) == g.inverse() * h * g);
}

TEST_CASE("inverse and order properties on random permutations") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    Point degree = 1 + rng() % 10;
    Perm p = random_perm(degree, rng);
    Perm q = random_perm(degree, rng);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
    CHECK((p * q).inverse() == q.inverse() * p.inverse());
    // order really is the exponent
    Perm power = p;
    for (std::uint64_t i = 1; i < p.order(); ++i) power = power * p;
    CHECK(power.is_identity());
    // round trip through cycle text
    CHECK(parse_cycles(degree, p.to_cycle_string()) == p);
  }
}
