#include "qcircle/witness.hpp"

#include "qcircle/random.hpp"

namespace qcircle {

bool WordWitness::verify(int sample_count, Rng& rng) const {
  if (factors.empty()) return false;
  for (const auto& wf : factors)
    if (wf.tag && !in_nbhd(wf.element, *wf.tag)) return false;
  PLAut prod = factors.front().element;
  for (std::size_t i = 1; i < factors.size(); ++i)
    prod = compose(prod, factors[i].element);
  if (prod != claimed_product) return false;
  for (int i = 0; i < sample_count; ++i) {
    const RatPoint x = random_point(rng, 1000);
    if (prod(x) != claimed_product(x)) return false;
  }
  return true;
}

WordWitness make_witness(std::vector<WitnessFactor> factors, PLAut claimed_product,
                         int sample_count, std::uint64_t seed) {
  WordWitness w{std::move(factors), std::move(claimed_product), false};
  Rng rng(seed);
  w.verification = w.verify(sample_count, rng);
  return w;
}

U1Witness witness_u1(const Cycle& nu, std::size_t k, const PLAut& f, const PLAut& g) {
  const std::size_t n = nu.size();
  if (k >= n) throw std::out_of_range("cycle index out of range");
  const auto sk = static_cast<std::ptrdiff_t>(k);
  const RatPoint& a = nu[k];
  const RatPoint& prev = nu.at_mod(sk - 1);
  const RatPoint& next = nu.at_mod(sk + 1);
  const RatPoint& prev2 = nu.at_mod(sk - 2);

  if (!move_set(f).within(prev, next))
    throw std::invalid_argument("f is not supported in (a_{k-1}, a_{k+1})");
  const RatPoint fa = f(a);

  const NbhdDescriptor W{CycleNeighborhood{nu}};
  const NbhdDescriptor Gnu{PointwiseStabilizer{nu.points()}};

  if (fa == a) {
    U1Witness out;
    out.phi = PLAut::identity();
    out.degenerate = true;
    out.witness = make_witness({{f, Gnu, "f"}}, f, 1000);
    return out;
  }

  const bool mirrored = between(prev, fa, a);
  const PLAut fp = mirrored ? f.inverse() : f;
  const RatPoint fpa = fp(a);
  if (!between(a, fpa, next))
    throw std::invalid_argument("f(a_k) escapes (a_{k-1}, a_{k+1})");

  PLAut gg = g;
  PLAut gi = g.inverse();
  if (!in_nbhd(gg, W) || !in_nbhd(gi, W))
    throw std::invalid_argument("g violates the cycle conditions");
  if (!between(a, gg(fpa), next) || !between(a, gi(fpa), next))
    throw std::invalid_argument("g moves f(a_k) out of (a_k, a_{k+1})");
  if (gg(a) == a) throw std::invalid_argument("g must move a_k");
  if (between(a, gg(a), next)) std::swap(gg, gi);
  if (!between(prev, gg(a), a))
    throw std::invalid_argument("g(a_k) escapes (a_{k-1}, a_{k+1})");

  // s: the later of {g^-1(a_{k-1}), a_{k-1}} in the cut at a_{k-2};
  // t: the earlier of {g^-1(a_{k+1}), a_{k+1}} in the cut at g^-1(f(a_k)).
  const RatPoint gia = gi(prev);
  const RatPoint s = cut_compare(prev2, gia, prev) == CutOrder::follows ? gia : prev;
  const RatPoint z0 = gi(fpa);
  const RatPoint gib = gi(next);
  const RatPoint t = cut_compare(z0, gib, next) == CutOrder::precedes ? gib : next;

  // No other cycle point, nor its g^-1 image, may sit inside (s, t).
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    if (between(s, nu[i], t) || between(s, gi(nu[i]), t))
      throw std::invalid_argument("cycle point inside the correction support");
  }

  std::vector<PLAut::Pair> pairs;
  for (const auto& p : nu.points()) pairs.emplace_back(p, p);
  pairs.emplace_back(s, s);
  pairs.emplace_back(t, t);
  pairs.emplace_back(z0, gi(a));
  const PLAut phi = extend(std::move(pairs));

  const PLAut h = compose(gg, compose(phi, compose(gi, fp)));
  for (const auto& p : nu.points())
    if (h(p) != p) throw std::logic_error("decomposition failed to fix the cycle");

  std::vector<WitnessFactor> fs;
  if (!mirrored) {
    // f = g ∘ phi^-1 ∘ g^-1 ∘ h
    fs = {{gg, W, "g"},
          {phi.inverse(), Gnu, "phi^-1"},
          {gi, W, "g^-1"},
          {h, Gnu, "h"}};
  } else {
    // f^-1 = g ∘ phi^-1 ∘ g^-1 ∘ h, hence f = h^-1 ∘ g ∘ phi ∘ g^-1
    fs = {{h.inverse(), Gnu, "h^-1"},
          {gg, W, "g"},
          {phi, Gnu, "phi"},
          {gi, W, "g^-1"}};
  }
  U1Witness out;
  out.phi = phi;
  out.mirrored = mirrored;
  out.support = open_interval(s, t);
  out.witness = make_witness(std::move(fs), f, 1000);
  return out;
}

MaximalityWitness maximality_witness(const RatPoint& a, const PLAut& f, const PLAut& g) {
  if (g(a) == a) throw std::invalid_argument("g outside G_a required");
  const NbhdDescriptor Ga{PointwiseStabilizer{{a}}};

  MaximalityWitness out;
  if (f(a) == a) {
    out.phi = PLAut::identity();
    out.h = f;
    out.proof_case = 't';
    out.witness = make_witness({{f, Ga, "f"}}, f, 1000);
    return out;
  }

  const RatPoint fa = f(a);
  const RatPoint ga = g(a);
  const PLAut gi = g.inverse();
  if (fa == ga) {
    out.phi = PLAut::identity();
    out.h = compose(gi, f);
    out.proof_case = 'a';
    out.witness = make_witness({{g, std::nullopt, "g"}, {out.h, Ga, "h"}}, f, 1000);
    return out;
  }

  out.phi = extend({{a, a}, {fa, ga}});
  out.h = compose(gi, compose(out.phi, f));
  if (out.h(a) != a) throw std::logic_error("h fails to fix a");
  out.proof_case = between(a, ga, fa) ? 'b' : 'c';
  out.witness = make_witness(
      {{out.phi.inverse(), Ga, "phi^-1"}, {g, std::nullopt, "g"}, {out.h, Ga, "h"}}, f,
      1000);
  return out;
}

ConjugationReport conjugation_check(const PLAut& g, const RatPoint& a, int samples,
                                    std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  Rng rng(seed);
  ConjugationReport rep;
  const RatPoint ga = g(a);
  const RatPoint fix_a[1] = {a};
  const RatPoint fix_ga[1] = {ga};
  const NbhdDescriptor Ga{PointwiseStabilizer{{a}}};
  const NbhdDescriptor Gga{PointwiseStabilizer{{ga}}};
  const PLAut gi = g.inverse();

  for (int i = 0; i < samples; ++i) {
    ++rep.samples;
    const PLAut h = random_aut_fixing(rng, fix_a, 3, 64);
    if (!in_nbhd(compose(g, compose(h, gi)), Gga)) {
      ++rep.failures;
      rep.details.push_back("forward inclusion failed at sample " + std::to_string(i));
    }
    const PLAut h2 = random_aut_fixing(rng, fix_ga, 3, 64);
    if (!in_nbhd(compose(gi, compose(h2, g)), Ga)) {
      ++rep.failures;
      rep.details.push_back("reverse inclusion failed at sample " + std::to_string(i));
    }
    ++rep.adversarial_samples;
    const PLAut r = random_aut(rng, 1 + static_cast<int>(rng.below(4)), 48);
    const bool before = in_nbhd(r, Ga);
    const bool after = in_nbhd(compose(g, compose(r, gi)), Gga);
    if (before != after) {
      ++rep.adversarial_failures;
      rep.details.push_back("conjugation changed membership at sample " + std::to_string(i));
    }
  }
  return rep;
}

int stabilization_index(const LazyAut& g, const RatPoint& x, int cap) {
  const int n = g.first_exclusion_index(x, cap);
  const RatPoint value = g.stage(n + 1)(x);
  for (int m = n + 2; m <= n + 5; ++m)
    if (g.stage(m)(x) != value)
      throw std::logic_error("stabilization contract violated");
  return n;
}

}  // namespace qcircle
