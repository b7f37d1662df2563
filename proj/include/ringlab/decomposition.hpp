#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/rrng.hpp"

namespace ringlab {

// All flags for a subset, including the R-module ones when a structure whose
// rng is the ambient is supplied.
IdealSubset subset_predicates(const RngPtr& ambient, std::vector<Elem> members,
                              const RRngStructure* ctx = nullptr);

enum class SubsetKind { two_sided_ideal, left_ideal, r_ideal, r_subrng };

// Least subset of the requested kind containing the seed. The r_* kinds need
// ctx with ctx->rng == ambient.
IdealSubset generated_subset(const RngPtr& ambient, std::span<const Elem> seed,
                             SubsetKind kind,
                             const RRngStructure* ctx = nullptr);

// Join-closures of principal subsets; canonical (size, lex) order.
std::vector<IdealSubset> enumerate_r_subrngs(const RRngStructure& x,
                                             const Config& cfg = {});
std::vector<IdealSubset> enumerate_r_ideals(const RRngStructure& x,
                                            const Config& cfg = {});

enum class IdealKind { two_sided, left };

// The (A, Z, J, phi) data of an ideal K of E(R,I):
//   K = {(a, -j) : a in A, j in J, a + Z = phi(j)}.
// phi is stored as a table J-member -> coset representative in A, where the
// representative of a coset of Z is its minimal element index.
struct IdealDecomposition {
  IdealKind kind = IdealKind::two_sided;
  IdealSubset a, z;  // ideals (left ideals) of R, Z inside A
  IdealSubset j;     // R-subrng (left R-submodule) of I
  std::vector<Elem> phi;  // parallel to j.members()

  Elem phi_of(Elem j_elem) const;
};

// Extraction from a verified (two-sided or left) ideal of E.
IdealDecomposition decompose_ideal(const DorrohRing& e, const IdealSubset& k,
                                   IdealKind kind);

struct DecompositionCheck {
  bool ok = true;
  std::string condition;       // first violated condition when !ok
  std::vector<Elem> witness;
};

// Verifies every structural invariant of a decomposition: flags of A, Z, J,
// phi a surjective R-homomorphism (left-module homomorphism for the left
// kind) onto A/Z, and the side conditions ai - ji, ia - ij in ker(phi)
// (only the latter for the left kind).
DecompositionCheck check_decomposition(const DorrohRing& e,
                                       const IdealDecomposition& d);

// Builds K from a decomposition; throws InvalidDecomposition naming the first
// violated condition when the input does not verify.
IdealSubset reconstruct_ideal(const DorrohRing& e,
                              const IdealDecomposition& d);

// K = {(a, -j) : j in J, a + Z = phi(j)} for a *total* R-homomorphism
// phi : I -> R/Z; the side conditions hold automatically and are not checked.
IdealSubset reconstruct_from_total_hom(const DorrohRing& e,
                                       const IdealSubset& z,
                                       const IdealSubset& j,
                                       const RHomomorphism& phi);

struct DirectSumCase {
  bool hypothesis = false;
  bool conclusion = false;
};

// The three direct-sum ideal criteria:
//   J an R-ideal            =>  0 + J  is an ideal of E
//   A inside ann_R(I)       =>  A + 0  is an ideal of E
//   AI + IA inside J        =>  A + J  is an ideal of E
DirectSumCase dirsum_j_case(const DorrohRing& e, const IdealSubset& j);
DirectSumCase dirsum_a_case(const DorrohRing& e, const IdealSubset& a);
DirectSumCase dirsum_aj_case(const DorrohRing& e, const IdealSubset& a,
                             const IdealSubset& j);

// {(a, j) : a in A, j in J} as a subset of E, with flags.
IdealSubset direct_sum_subset(const DorrohRing& e, const IdealSubset& a,
                              const IdealSubset& j);

// Additive span of {r j s : r, s in R, j in J}; equals the R-ideal generated
// by an ideal J of I.
IdealSubset rjr_span(const RRngStructure& x, const IdealSubset& j);

}  // namespace ringlab
