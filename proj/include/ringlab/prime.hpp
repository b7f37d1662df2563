#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/decomposition.hpp"

namespace ringlab {

// Verdict with a re-checkable witness on failure.
struct PrimenessVerdict {
  bool verdict = true;
  std::string failed_condition;  // empty, or "1" / "2" / "3" (theorem paths),
                                 // "square-zero-ideal" / "zero-product-pair"
  std::optional<IdealSubset> witness_ideal;
  std::optional<IdealSubset> witness_ideal2;
  std::optional<RHomomorphism> witness_phi;  // domain is the witnessing J
};

// Definitional tests by ideal enumeration (order <= cfg.enum_cap).
PrimenessVerdict is_semiprime_rng(const RngPtr& rng, const Config& cfg = {});
PrimenessVerdict is_prime_rng(const RngPtr& rng, const Config& cfg = {});

// Via the quotient: K prime iff ambient/K is a prime rng; K maximal iff K is
// proper and nothing sits strictly between K and the ambient.
bool is_prime_ideal(const RngPtr& ambient, const IdealSubset& k,
                    const Config& cfg = {});
bool is_maximal_ideal(const RngPtr& ambient, const IdealSubset& k,
                      const Config& cfg = {});
bool is_semiprime_ideal(const RngPtr& ambient, const IdealSubset& k,
                        const Config& cfg = {});

// First (J, phi) with J a nonzero R-subrng of I and phi : J -> R an
// R-homomorphism satisfying ij = i.phi(j), ji = phi(j).i for all i in I,
// j in J. Optional constraints: J^2 = 0, phi injective. Witness selection is
// deterministic: minimal J in canonical order, then minimal phi.
std::optional<RHomomorphism> find_subrng_obstruction(const RRngPtr& x,
                                                     bool square_zero,
                                                     bool require_injective,
                                                     const Config& cfg = {});

// E(R,I) semiprime iff (1) I semiprime, (2) no nonzero square-zero ideal of R
// inside ann_R(I), (3) no square-zero (J, phi) obstruction. The variant of
// (3) without injectivity is evaluated too and checked equivalent under (1);
// the verdict is checked against the definitional test on E.
PrimenessVerdict semiprime_via_theorem(const DorrohRing& e,
                                       const Config& cfg = {});

// E(R,I) prime iff (1) I prime, (2) ann_R(I) = 0, (3) no injective (J, phi)
// obstruction. I must be nonzero (EmptyRng otherwise).
PrimenessVerdict prime_via_theorem(const DorrohRing& e, const Config& cfg = {});

struct CorollaryVerdict {
  bool verdict = false;
  bool c1 = false, c2 = false, c3 = false;
};

// Criteria for the ideal A + J of E to be semiprime (resp. prime), given an
// ideal A of R and an R-ideal J of I with AI + IA inside J (prime case also
// needs J proper). Checked against the quotient-based ideal test.
CorollaryVerdict semiprime_aj_via_corollary(const DorrohRing& e,
                                            const IdealSubset& a,
                                            const IdealSubset& j,
                                            const Config& cfg = {});
CorollaryVerdict prime_aj_via_corollary(const DorrohRing& e,
                                        const IdealSubset& a,
                                        const IdealSubset& j,
                                        const Config& cfg = {});

struct ClassifiedPrime {
  enum class Form { sum, graph } form = Form::sum;
  IdealSubset base;     // A (sum) or Z (graph), inside R
  int component = -1;   // summand index for the direct-sum classification
  IdealSubset members;  // the ideal inside E
};

// Classification with a multiplicative retraction phi: the prime (resp.
// maximal) ideals of E are exactly the A + I for prime (maximal) A, plus the
// graphs {(a, -i) : a - phi(i) in Z} for prime (maximal) Z not containing
// phi(I). Equality with the brute-force list is checked.
std::vector<ClassifiedPrime> classify_prime_ideals(const DorrohRing& e,
                                                   const RHomomorphism& phi,
                                                   const Config& cfg = {});
std::vector<ClassifiedPrime> classify_maximal_ideals(const DorrohRing& e,
                                                     const RHomomorphism& phi,
                                                     const Config& cfg = {});

// Classification over I = J_1 + ... + J_n built by direct_sum_rrng, with one
// retraction per summand; graph forms use a - phi_d(pi_d(i)) in Z.
std::vector<ClassifiedPrime> classify_primes_direct_sum(
    const DorrohRing& e, const std::vector<RHomomorphism>& phis,
    const Config& cfg = {});

// Unique maximal ideal.
bool is_local(const RngPtr& ring, const Config& cfg = {});

// For commutative E with retraction phi: E local iff R local and phi(I) != R.
// NotCommutative when E is not commutative.
bool local_via_corollary(const DorrohRing& e, const RHomomorphism& phi,
                         const Config& cfg = {});

}  // namespace ringlab
