#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ringlab/ideal_subset.hpp"

namespace ringlab {

// A rng I carrying a unital (R,R)-bimodule structure compatible with its own
// multiplication: r(ij) = (ri)j, i(rj) = (ir)j, (ij)r = i(jr).
struct RRngStructure {
  RngPtr ring;  // R, unital
  RngPtr rng;   // I
  std::vector<Elem> left;   // r * |I| + i  ->  r.i
  std::vector<Elem> right;  // i * |R| + r  ->  i.r

  // Nonempty iff I is a re-indexed ideal of R; maps I-index to R-index.
  std::vector<Elem> embed;
  // Nonempty iff built by direct_sum_rrng; the summand structures.
  std::vector<std::shared_ptr<const RRngStructure>> summands;

  Elem lact(Elem r, Elem i) const { return left[r * rng->order() + i]; }
  Elem ract(Elem i, Elem r) const { return right[i * ring->order() + r]; }
};
using RRngPtr = std::shared_ptr<const RRngStructure>;

std::vector<AxiomViolation> check_rrng_axioms(const RngPtr& ring,
                                              const RngPtr& rng,
                                              std::span<const Elem> left,
                                              std::span<const Elem> right);

// Throws AxiomError with the complete violation list; DimensionMismatch for
// shape problems. R must be unital.
RRngPtr validate_rrng(const RngPtr& ring, const RngPtr& rng,
                      std::vector<Elem> left, std::vector<Elem> right);

// An ideal K of R viewed as an R-rng: inherited multiplication, actions by
// multiplication in R. Elements are K's members re-indexed in ascending order.
RRngPtr ideal_as_rrng(const RngPtr& ring, const IdealSubset& k);

// Action of a cyclic ring Z/n by repeated addition: r.i = i + ... + i
// (r times). Valid whenever n annihilates I; validated on construction.
RRngPtr cyclic_scalar_action(const RngPtr& cyclic, const RngPtr& rng);

// R a matrix or upper-triangular ring over the same base and dimension as the
// full matrix ring underlying I; actions are matrix multiplication. I may be
// the full matrix ring or a trivial-multiplication wrap of it.
RRngPtr matrix_mult_action(const RngPtr& ring, const RngPtr& rng);

// Direct sum of R-rngs over one shared R, componentwise actions.
RRngPtr direct_sum_rrng(const std::vector<RRngPtr>& parts,
                        const Config& cfg = {});

struct QuotientRRng {
  RRngPtr structure;        // (R/A)-rng I/J
  RngMorphism ring_proj;    // R -> R/A
  RngMorphism rng_proj;     // I -> I/J
};

// Quotient structure for an ideal A of R and an R-ideal J of I with
// AI + IA contained in J (so the actions descend).
QuotientRRng quotient_rrng(const RRngStructure& x, const IdealSubset& a,
                           const IdealSubset& j);

// ann_R(I) = {r : rI = Ir = 0}; always a two-sided ideal of R.
IdealSubset annihilator(const RRngStructure& x);

struct CentralGeneration {
  bool centrally_generated = false;
  std::vector<Elem> central_elements;  // C = {i : ri = ir for all r}
};

// True iff the elements commuting with all of R generate I as a left
// R-module.
CentralGeneration is_centrally_generated(const RRngStructure& x);

// ---- Dorroh extension ------------------------------------------------------

// E(R,I): the ring on R + I with (r,i)(p,j) = (rp, ip + rj + ij).
struct DorrohRing {
  RRngPtr source;
  RngPtr ext;

  Elem encode(Elem r, Elem i) const { return r * source->rng->order() + i; }
  std::pair<Elem, Elem> decode(Elem e) const {
    int n = source->rng->order();
    return {e / n, e % n};
  }
};

DorrohRing dorroh_extend(const RRngPtr& x, const Config& cfg = {});

// The ideal 0 + I and the unital subring R + 0 of E.
IdealSubset embedded_rng_ideal(const DorrohRing& e);
IdealSubset embedded_ring_subring(const DorrohRing& e);

// ---- R-homomorphisms -------------------------------------------------------

// Target of an R-homomorphism: a rng T with a two-sided R-action and a
// projection R -> T (identity when T = R, canonical projection for R/Z).
struct ActionTarget {
  RngPtr ring;  // R
  RngPtr t;
  std::vector<Elem> left, right;
  std::vector<Elem> proj;

  Elem lact(Elem r, Elem x) const { return left[r * t->order() + x]; }
  Elem ract(Elem x, Elem r) const { return right[x * ring->order() + r]; }
};

ActionTarget target_ring(const RngPtr& ring);
ActionTarget target_quotient(const RngPtr& ring, const IdealSubset& z);

// An additive, multiplicative, action-equivariant map from an R-subrng J of I
// into a target. Stored densely over I (-1 outside the domain).
struct RHomomorphism {
  RRngPtr structure;
  IdealSubset domain;
  ActionTarget target;
  std::vector<Elem> dense;

  Elem apply(Elem j) const { return dense[j]; }
  bool total() const;
  bool injective() const;
  std::vector<Elem> image_tuple() const;  // images of domain members, in order
};

std::vector<AxiomViolation> check_r_homomorphism(const RHomomorphism& h);

// The complete list of R-homomorphisms J -> target, ordered lexicographically
// by image tuple. Backtracks over images of a greedy additive generating set
// with early pruning on additive relations; node count capped by
// cfg.search_budget (SearchBudgetExceeded beyond it).
std::vector<RHomomorphism> enumerate_r_homs(const RRngPtr& x,
                                            const IdealSubset& j,
                                            const ActionTarget& target,
                                            const Config& cfg = {});

// phi total on I with target R: i.phi(j) = ij = phi(i).j for all i, j.
bool is_multiplicative_retraction(const RRngStructure& x,
                                  const RHomomorphism& phi);

// All multiplicative retractions I -> R, in enumerate_r_homs order.
std::vector<RHomomorphism> find_retractions(const RRngPtr& x,
                                            const Config& cfg = {});

// psi(r,i) = (r + phi(i), -i); an involutive ring automorphism of E mapping
// 0+I onto I_phi = {(phi(i), -i)} and fixing R+0 setwise.
RngMorphism psi_automorphism(const DorrohRing& e, const RHomomorphism& phi);

// {(phi(j), -j) : j in J}; J defaults to the whole domain of phi.
IdealSubset graph_subset(const DorrohRing& e, const RHomomorphism& phi,
                         const IdealSubset& j);

}  // namespace ringlab
