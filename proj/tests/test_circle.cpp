#include "qcircle/circle.hpp"
#include "qcircle/random.hpp"

#include "doctest.h"

#include <vector>

using namespace qcircle;

namespace {

RatPoint rp(const char* s) { return RatPoint::parse(s); }

// Brute-force cycle oracle: checks every c-ordered index triple against the
// ternary relation (the definition, cubic in n). The production check must
// agree with this on every input.
bool cycle_oracle(const std::vector<RatPoint>& pts) {
  const std::size_t n = pts.size();
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 points");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pts[i] == pts[j]) return false;
      for (std::size_t k = j + 1; k < n; ++k)
        if (!between(pts[i], pts[j], pts[k])) return false;
    }
  return true;
}

// Circular order rebuilt from the cut order <_z by the standard construction.
bool between_from_cut(const RatPoint& z, const RatPoint& a, const RatPoint& b,
                      const RatPoint& c) {
  const auto less = [&](const RatPoint& x, const RatPoint& y) {
    return cut_compare(z, x, y) == CutOrder::precedes;
  };
  return (less(a, b) && less(b, c)) || (less(b, c) && less(c, a)) ||
         (less(c, a) && less(a, b));
}

}  // namespace

TEST_CASE("between: standard counter-clockwise order") {
  CHECK(between(rp("0"), rp("1/3"), rp("2/3")));
  CHECK_FALSE(between(rp("1/3"), rp("0"), rp("2/3")));
  CHECK(between(rp("2/3"), rp("0"), rp("1/3")));  // wrap-around triple
  // Non-distinct triples are false, not errors.
  CHECK_FALSE(between(rp("1/4"), rp("1/4"), rp("3/4")));
  CHECK_FALSE(between(rp("1/4"), rp("3/4"), rp("3/4")));
  CHECK_FALSE(between(rp("1/4"), rp("1/4"), rp("1/4")));
}

TEST_CASE("RatPoint normalizes into [0,1)") {
  CHECK(RatPoint(Rat(5, 4)) == rp("1/4"));
  CHECK(RatPoint(Rat(-1, 4)) == rp("3/4"));
  CHECK(rp("0").str() == "0/1");
  CHECK(rp("2/4").str() == "1/2");
}

TEST_CASE("cut_compare: z is the least element") {
  CHECK(cut_compare(rp("1/2"), rp("3/4"), rp("1/4")) == CutOrder::precedes);
  CHECK(cut_compare(rp("1/2"), rp("1/2"), rp("1/4")) == CutOrder::precedes);
  CHECK(cut_compare(rp("0"), rp("1/4"), rp("3/4")) == CutOrder::precedes);
  CHECK(cut_compare(rp("0"), rp("3/4"), rp("1/4")) == CutOrder::follows);
  CHECK(cut_compare(rp("1/3"), rp("1/5"), rp("1/5")) == CutOrder::equal);
}

TEST_CASE("cut round-trip restores the circular order") {
  Rng rng(7);
  for (int it = 0; it < 2000; ++it) {
    const RatPoint z = random_point(rng, 64);
    const RatPoint a = random_point(rng, 64);
    const RatPoint b = random_point(rng, 64);
    const RatPoint c = random_point(rng, 64);
    if (a == b || b == c || a == c) continue;
    CHECK(between_from_cut(z, a, b, c) == between(a, b, c));
  }
}

TEST_CASE("circular order axioms on random samples") {
  const auto report = check_order_axioms(5000, 1000, 11);
  CHECK(report.passed());
  CHECK(report.transitivity_hits > 100);
}

TEST_CASE("is_cycle agrees with the cubic oracle") {
  SUBCASE("fixed examples") {
    CHECK(is_cycle(std::vector<RatPoint>{rp("0"), rp("1/4"), rp("1/2"), rp("3/4")}));
    CHECK_FALSE(is_cycle(std::vector<RatPoint>{rp("0"), rp("1/2"), rp("1/4"), rp("3/4")}));
    CHECK_THROWS_AS((void)is_cycle(std::vector<RatPoint>{rp("0"), rp("1/4")}),
                    std::invalid_argument);
    // Winding-2 tour: every consecutive triple is fine, the whole tuple is not.
    CHECK_FALSE(is_cycle(std::vector<RatPoint>{rp("0"), rp("1/3"), rp("2/3"),
                                               rp("1/6"), rp("1/2"), rp("5/6")}));
  }
  SUBCASE("randomized equivalence") {
    Rng rng(23);
    for (int it = 0; it < 400; ++it) {
      const std::size_t n = 3 + rng.below(5);
      std::vector<RatPoint> pts;
      for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(rng, 40));
      bool fast = false, slow = false;
      try {
        fast = is_cycle(pts);
        slow = cycle_oracle(pts);
      } catch (const std::invalid_argument&) {
        continue;
      }
      CHECK(fast == slow);
    }
    // Genuine cycles from the generator must pass both.
    for (int it = 0; it < 200; ++it) {
      const Cycle nu = random_cycle(rng, 3 + rng.below(6), 200);
      CHECK(cycle_oracle(nu.points()));
    }
  }
}

TEST_CASE("interval membership through the ternary relation") {
  const Interval wrap = open_interval(rp("2/3"), rp("1/3"));
  CHECK(wrap.contains(rp("0")));
  CHECK(wrap.contains(rp("5/6")));
  CHECK_FALSE(wrap.contains(rp("1/2")));
  CHECK_FALSE(wrap.contains(rp("2/3")));

  CHECK(open_interval(rp("1/4"), rp("1/4")).is_empty());
  const Interval singleton(rp("1/4"), rp("1/4"), IntervalKind::closed);
  CHECK_FALSE(singleton.is_empty());
  CHECK(singleton.contains(rp("1/4")));
  CHECK_FALSE(singleton.contains(rp("1/2")));

  const Interval half_open(rp("0"), rp("1/2"), IntervalKind::left_closed);
  CHECK(half_open.contains(rp("0")));
  CHECK_FALSE(half_open.contains(rp("1/2")));
}

TEST_CASE("open_arc_subset") {
  CHECK(open_arc_subset(rp("1/8"), rp("1/4"), rp("0"), rp("1/2")));
  CHECK(open_arc_subset(rp("0"), rp("1/2"), rp("0"), rp("1/2")));
  CHECK_FALSE(open_arc_subset(rp("3/8"), rp("5/8"), rp("0"), rp("1/2")));
  // Wrap-around container.
  CHECK(open_arc_subset(rp("7/8"), rp("1/8"), rp("3/4"), rp("1/4")));
  // Arc escaping through the complement despite endpoints inside.
  CHECK_FALSE(open_arc_subset(rp("3/8"), rp("1/8"), rp("0"), rp("1/2")));
}

TEST_CASE("cov covering: cells and counts") {
  const Cycle nu({rp("0"), rp("1/3"), rp("2/3")});
  const Covering c = cov_cells(nu, CoveringVariant::cov);
  REQUIRE(c.cells().size() == 6);
  CHECK(c.cells()[0].singleton);
  CHECK(c.cells()[0].left == rp("0"));
  CHECK_FALSE(c.cells()[1].singleton);
  CHECK(c.cells()[1].left == rp("0"));
  CHECK(c.cells()[1].right == rp("1/3"));
  CHECK(c.cells()[2].singleton);
  CHECK(c.cells()[2].left == rp("1/3"));
  CHECK(c.cells()[5].left == rp("2/3"));
  CHECK(c.cells()[5].right == rp("0"));

  const Covering s = cov_cells(nu, CoveringVariant::cov_star);
  REQUIRE(s.cells().size() == 3);
  for (const auto& cell : s.cells()) CHECK_FALSE(cell.singleton);

  Rng rng(3);
  for (int it = 0; it < 30; ++it) {
    const Cycle c2 = random_cycle(rng, 3 + rng.below(7), 100);
    CHECK(cov_cells(c2, CoveringVariant::cov).cells().size() == 2 * c2.size());
    CHECK(cov_cells(c2, CoveringVariant::cov_star).cells().size() == c2.size());
  }
}

TEST_CASE("locate: unique cell, cov_star rejects cycle points") {
  const Cycle nu({rp("0"), rp("1/3"), rp("2/3")});
  CHECK(locate(nu, rp("1/2"), CoveringVariant::cov) == 3);  // (1/3, 2/3)
  CHECK(locate(nu, rp("1/3"), CoveringVariant::cov) == 2);  // {1/3}
  CHECK_THROWS_AS((void)locate(nu, rp("1/3"), CoveringVariant::cov_star),
                  std::domain_error);

  Rng rng(5);
  for (int it = 0; it < 500; ++it) {
    const Cycle c = random_cycle(rng, 3 + rng.below(6), 60);
    const RatPoint x = random_point(rng, 500);
    const Covering cov = cov_cells(c, CoveringVariant::cov);
    const std::size_t idx = cov.locate(x);
    int hits = 0;
    for (const auto& cell : cov.cells())
      if (cell.contains(x)) ++hits;
    CHECK(hits == 1);
    CHECK(cov.cells()[idx].contains(x));
  }
}

TEST_CASE("circle_distance") {
  CHECK(circle_distance(rp("1/8"), rp("7/8")) == Rat(1, 4));
  CHECK(circle_distance(rp("2/5"), rp("2/5")) == 0);
  CHECK(circle_distance(rp("0"), rp("1/2")) == Rat(1, 2));

  Rng rng(9);
  for (int it = 0; it < 500; ++it) {
    const RatPoint a = random_point(rng, 99);
    const RatPoint b = random_point(rng, 99);
    const RatPoint c = random_point(rng, 99);
    CHECK(circle_distance(a, b) == circle_distance(b, a));
    CHECK(circle_distance(a, b) <= Rat(1, 2));
    CHECK(circle_distance(a, c) <= circle_distance(a, b) + circle_distance(b, c));
  }
}
