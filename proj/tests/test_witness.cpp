#include "qcircle/witness.hpp"

#include "doctest.h"

using namespace qcircle;

namespace {

RatPoint rp(const char* s) { return RatPoint::parse(s); }

struct U1Instance {
  Cycle nu;
  std::size_t k;
  PLAut f;
  PLAut g;
};

// Builds a precondition-satisfying instance. `mirror` picks the side of a_k
// that f(a_k) lands on; `upward` hands over a g that needs the inverse
// normalization.
U1Instance make_u1_instance(Rng& rng, bool mirror, bool upward) {
  const std::size_t n = 3 + rng.below(4);
  Cycle nu = random_cycle(rng, n, 48);
  const std::size_t k = rng.below(n);
  const auto sk = static_cast<std::ptrdiff_t>(k);
  const RatPoint a = nu[k];
  const RatPoint prev = nu.at_mod(sk - 1);
  const RatPoint next = nu.at_mod(sk + 1);

  const RatPoint fa = mirror ? random_point_in_arc(rng, prev, a, 64)
                             : random_point_in_arc(rng, a, next, 64);
  const PLAut f = extend({{prev, prev}, {a, fa}, {next, next}});
  const PLAut fp = mirror ? f.inverse() : f;
  const RatPoint fpa = fp(a);

  const NbhdDescriptor W{CycleNeighborhood{nu}};
  for (int attempt = 2;; ++attempt) {
    // Every cycle point slides slightly toward its predecessor (or successor
    // when `upward`); shrink the slide until all neighborhood conditions hold.
    const Rat tshift(Int(1), Int(1) << attempt);
    std::vector<PLAut::Pair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      const auto si = static_cast<std::ptrdiff_t>(i);
      const RatPoint& p = nu[i];
      const Rat gap = upward ? arc_length(p, nu.at_mod(si + 1))
                             : arc_length(nu.at_mod(si - 1), p);
      const Rat move = gap * tshift;
      const Rat image = upward ? Rat(p.value() + move) : Rat(p.value() - move);
      pairs.emplace_back(p, RatPoint(image));
    }
    const PLAut g = extend(std::move(pairs));
    const PLAut gi = g.inverse();
    if (!in_nbhd(g, W) || !in_nbhd(gi, W)) continue;
    if (!between(a, g(fpa), next) || !between(a, gi(fpa), next)) continue;
    if (g(a) == a) continue;
    return {std::move(nu), k, f, g};
  }
}

}  // namespace

TEST_CASE("witness_u1: the worked example") {
  const Cycle nu({rp("0"), rp("1/4"), rp("1/2"), rp("3/4")});
  const std::size_t k = 1;  // a_k = 1/4
  const PLAut f = extend({{rp("0"), rp("0")}, {rp("1/4"), rp("3/8")},
                          {rp("1/2"), rp("1/2")}, {rp("3/4"), rp("3/4")}});
  // g slides every cycle point slightly backwards; g(1/4) in (0, 1/4).
  const PLAut g = extend({{rp("0"), rp("63/64")}, {rp("1/4"), rp("15/64")},
                          {rp("1/2"), rp("31/64")}, {rp("3/4"), rp("47/64")}});
  REQUIRE(between(rp("0"), g(rp("1/4")), rp("1/4")));

  const U1Witness w = witness_u1(nu, k, f, g);
  CHECK(w.witness.verification);
  CHECK_FALSE(w.degenerate);
  CHECK_FALSE(w.mirrored);
  CHECK(in_nbhd(w.phi, NbhdDescriptor(PointwiseStabilizer{nu.points()})));
  REQUIRE(w.support.has_value());
  CHECK(move_set(w.phi).within(w.support->left(), w.support->right()));

  // The certified word multiplies back to f, factor tags included.
  REQUIRE(w.witness.factors.size() == 4);
  PLAut prod = w.witness.factors[0].element;
  for (std::size_t i = 1; i < w.witness.factors.size(); ++i)
    prod = compose(prod, w.witness.factors[i].element);
  CHECK(prod == f);

  // g ∘ phi ∘ g^-1 ∘ f fixes every cycle point, exactly.
  const PLAut check = compose(g, compose(w.phi, compose(g.inverse(), f)));
  for (const auto& p : nu.points()) CHECK(check(p) == p);
}

TEST_CASE("witness_u1: degenerate and rejected inputs") {
  const Cycle nu({rp("0"), rp("1/4"), rp("1/2"), rp("3/4")});
  const PLAut f_fixing = extend({{rp("0"), rp("0")}, {rp("1/4"), rp("1/4")},
                                 {rp("5/16"), rp("3/8")}, {rp("1/2"), rp("1/2")},
                                 {rp("3/4"), rp("3/4")}});
  const PLAut g = extend({{rp("0"), rp("63/64")}, {rp("1/4"), rp("15/64")},
                          {rp("1/2"), rp("31/64")}, {rp("3/4"), rp("47/64")}});
  const U1Witness w = witness_u1(nu, 1, f_fixing, g);
  CHECK(w.degenerate);
  CHECK(w.phi == PLAut::identity());
  CHECK(w.witness.verification);

  // f supported too widely is rejected.
  const PLAut f_wide = extend({{rp("0"), rp("1/16")}, {rp("1/4"), rp("3/8")},
                               {rp("1/2"), rp("1/2")}, {rp("3/4"), rp("3/4")}});
  CHECK_THROWS_AS((void)witness_u1(nu, 1, f_wide, g), std::invalid_argument);

  // g must move a_k.
  const PLAut f = extend({{rp("0"), rp("0")}, {rp("1/4"), rp("3/8")},
                          {rp("1/2"), rp("1/2")}, {rp("3/4"), rp("3/4")}});
  const PLAut g_fix = extend({{rp("0"), rp("63/64")}, {rp("1/4"), rp("1/4")},
                              {rp("1/2"), rp("31/64")}, {rp("3/4"), rp("47/64")}});
  CHECK_THROWS_WITH_AS((void)witness_u1(nu, 1, f, g_fix), "g must move a_k",
                       std::invalid_argument);
}

TEST_CASE("witness_u1: randomized instances on both branches") {
  Rng rng(103);
  int mirrored_seen = 0, plain_seen = 0;
  for (int it = 0; it < 40; ++it) {
    const bool mirror = (it % 2) == 1;
    const bool upward = (it % 4) >= 2;
    const U1Instance inst = make_u1_instance(rng, mirror, upward);
    const U1Witness w = witness_u1(inst.nu, inst.k, inst.f, inst.g);
    CHECK(w.witness.verification);
    CHECK(w.mirrored == mirror);
    (mirror ? mirrored_seen : plain_seen)++;
    CHECK(in_nbhd(w.phi, NbhdDescriptor(PointwiseStabilizer{inst.nu.points()})));
    REQUIRE(w.support.has_value());
    CHECK(move_set(w.phi).within(w.support->left(), w.support->right()));
  }
  CHECK(mirrored_seen == 20);
  CHECK(plain_seen == 20);
}

TEST_CASE("maximality_witness: the three cases and the trivial one") {
  Rng rng(107);
  const RatPoint a = rp("0");

  SUBCASE("case a: g(a) = f(a)") {
    const PLAut f = random_aut_with_value(rng, a, rp("1/4"), 2, 40);
    const PLAut g = random_aut_with_value(rng, a, rp("1/4"), 3, 40);
    const MaximalityWitness w = maximality_witness(a, f, g);
    CHECK(w.proof_case == 'a');
    CHECK(w.phi == PLAut::identity());
    CHECK(w.h(a) == a);
    CHECK(w.witness.verification);
    CHECK(compose(g, w.h) == f);
  }
  SUBCASE("cases b and c: a conjugating phi is built") {
    const PLAut f = random_aut_with_value(rng, a, rp("1/3"), 2, 40);
    const PLAut g = random_aut_with_value(rng, a, rp("1/4"), 2, 40);
    const MaximalityWitness w = maximality_witness(a, f, g);
    CHECK(w.proof_case == 'b');  // [a, g(a), f(a)] = [0, 1/4, 1/3] holds
    CHECK(w.phi(rp("1/3")) == rp("1/4"));
    CHECK(w.phi(a) == a);
    CHECK(w.h(a) == a);
    CHECK(w.witness.verification);
    CHECK(compose(w.phi.inverse(), compose(g, w.h)) == f);

    const PLAut g2 = random_aut_with_value(rng, a, rp("1/2"), 2, 40);
    const MaximalityWitness w2 = maximality_witness(a, f, g2);
    CHECK(w2.proof_case == 'c');  // [a, f(a), g(a)] = [0, 1/3, 1/2] holds
  }
  SUBCASE("f fixing a is its own witness") {
    const RatPoint pts[1] = {a};
    const PLAut f = random_aut_fixing(rng, pts, 3, 40);
    const PLAut g = random_aut_with_value(rng, a, rp("1/4"), 2, 40);
    const MaximalityWitness w = maximality_witness(a, f, g);
    CHECK(w.proof_case == 't');
    CHECK(w.witness.verification);
  }
  SUBCASE("g in G_a is rejected") {
    const RatPoint pts[1] = {a};
    const PLAut f = random_aut_with_value(rng, a, rp("1/3"), 2, 40);
    const PLAut g = random_aut_fixing(rng, pts, 3, 40);
    CHECK_THROWS_AS((void)maximality_witness(a, f, g), std::invalid_argument);
  }
}

TEST_CASE("maximality_witness: randomized reconstruction") {
  Rng rng(109);
  int seen[3] = {0, 0, 0};
  for (int it = 0; it < 60; ++it) {
    const RatPoint a = random_point(rng, 40);
    const RatPoint fa = random_point(rng, 40);
    if (fa == a) continue;
    RatPoint ga;
    switch (it % 3) {
      case 0: ga = fa; break;
      default:
        ga = random_point(rng, 40);
        if (ga == a) continue;
    }
    const PLAut f = random_aut_with_value(rng, a, fa, 2, 60);
    const PLAut g = random_aut_with_value(rng, a, ga, 2, 60);
    const MaximalityWitness w = maximality_witness(a, f, g);
    CHECK(w.witness.verification);
    const PLAut rebuilt = compose(w.phi.inverse(), compose(g, w.h));
    CHECK(rebuilt == f);
    for (int s = 0; s < 20; ++s) {
      const RatPoint x = random_point(rng, 200);
      CHECK(rebuilt(x) == f(x));
    }
    if (w.proof_case == 'a') ++seen[0];
    if (w.proof_case == 'b') ++seen[1];
    if (w.proof_case == 'c') ++seen[2];
  }
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
  CHECK(seen[2] > 0);
}

TEST_CASE("conjugation_check") {
  const ConjugationReport id_rep = conjugation_check(PLAut::identity(), rp("0"), 20, 1);
  CHECK(id_rep.passed());

  Rng rng(113);
  for (int it = 0; it < 5; ++it) {
    const PLAut g = random_aut(rng, 1 + rng.below(4), 40);
    const RatPoint a = random_point(rng, 60);
    const ConjugationReport rep = conjugation_check(g, a, 50, 1000 + it);
    CHECK(rep.passed());
    CHECK(rep.samples == 50);
    CHECK(rep.adversarial_samples == 50);
  }
}

TEST_CASE("stabilization_index") {
  const IrrPoint u = IrrPoint::quadratic(2, 0, 1);
  const IrrPoint v = IrrPoint::quadratic(3, 0, 1);
  const LazyAut t = LazyAut::transport(u, v);

  CHECK(stabilization_index(t, rp("0")) == 1);
  // 41/100 sits inside (2/5, 5/12) but outside (12/29, 29/70).
  REQUIRE(t.depth_offset() == 0);
  CHECK(stabilization_index(t, rp("41/100")) == 2);

  const LazyAut idt = LazyAut::transport(u, u);
  CHECK(stabilization_index(idt, rp("2/5")) == 1);
  CHECK(stabilization_index(idt, rp("17/40")) == 1);

  // Monotone: if x is outside interval m then the index is at most m.
  Rng rng(127);
  for (int probe = 0; probe < 40; ++probe) {
    const RatPoint x = random_point(rng, 300);
    const int idx = stabilization_index(t, x);
    for (int m = 1; m < idx; ++m) CHECK(t.forward_intervals(m)[0].contains(x));
    CHECK_FALSE(t.forward_intervals(idx)[0].contains(x));
  }
}
