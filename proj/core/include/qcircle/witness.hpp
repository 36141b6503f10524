#pragma once

#include "qcircle/completion.hpp"
#include "qcircle/pl_aut.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcircle {

// One factor of a product decomposition, optionally tagged with the
// neighborhood it is claimed to belong to.
struct WitnessFactor {
  PLAut element;
  std::optional<NbhdDescriptor> tag;
  std::string label;
};

// Evidence that a product of tagged factors equals a claimed automorphism.
// Factors multiply left to right: product = factors[0] ∘ ... ∘ factors[m-1].
struct WordWitness {
  std::vector<WitnessFactor> factors;
  PLAut claimed_product;
  bool verification = false;

  // Re-checks the evidence: tag memberships, exact product equality, and
  // sampled evaluation of the product against the claim.
  bool verify(int sample_count, Rng& rng) const;
};

WordWitness make_witness(std::vector<WitnessFactor> factors, PLAut claimed_product,
                         int sample_count, std::uint64_t seed = 0x9e3779b9u);

// Decomposition of an automorphism supported in one covering interval
// through the cycle neighborhood and the pointwise stabilizer of the cycle.
struct U1Witness {
  PLAut phi;             // fixes every cycle point, supported in (s, t)
  WordWitness witness;   // four tagged factors multiplying to f
  bool degenerate = false;  // f already fixes a_k: f itself certified in G_nu
  bool mirrored = false;    // f(a_k) on the lower side, handled through f^-1
  std::optional<Interval> support;  // the computed (s, t)
};

// Requires: f fixes everything outside (a_{k-1}, a_{k+1}); g and g^-1 lie in
// the cycle neighborhood of nu and keep f's displacement of a_k inside its
// side interval; g moves a_k. k is a 0-based index into nu.
U1Witness witness_u1(const Cycle& nu, std::size_t k, const PLAut& f, const PLAut& g);

// Decomposition f = phi^-1 ∘ g ∘ h with phi, h fixing the point a, following
// the three cases: g(a) = f(a); [a, g(a), f(a)]; [a, f(a), g(a)].
struct MaximalityWitness {
  PLAut phi;
  PLAut h;
  WordWitness witness;
  char proof_case = '?';  // 'a', 'b', 'c', or 't' when f already fixes a
};

MaximalityWitness maximality_witness(const RatPoint& a, const PLAut& f, const PLAut& g);

// Randomized verification of g G_a g^-1 = G_{g(a)} by membership, both
// inclusions, plus adversarial samples that must fail on both sides or
// neither.
struct ConjugationReport {
  int samples = 0;
  int failures = 0;
  int adversarial_samples = 0;
  int adversarial_failures = 0;
  std::vector<std::string> details;

  bool passed() const { return failures == 0 && adversarial_failures == 0; }
};

ConjugationReport conjugation_check(const PLAut& g, const RatPoint& a, int samples,
                                    std::uint64_t seed);

// Least n with x outside the n-th controlling interval of every moved pair,
// verified by evaluating stages n+1 ... n+5 at x.
int stabilization_index(const LazyAut& g, const RatPoint& x,
                        int cap = kDefaultRefinementCap);

}  // namespace qcircle
