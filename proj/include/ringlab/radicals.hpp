#pragma once

#include <vector>

#include "ringlab/rrng.hpp"

namespace ringlab {

struct QuasiRegularity {
  bool regular = false;
  Elem witness = -1;  // k with i + k + ki = 0 (left) or i + k + ik = 0 (right)
};

QuasiRegularity is_left_quasi_regular(const FiniteRng& rng, Elem i);
QuasiRegularity is_right_quasi_regular(const FiniteRng& rng, Elem i);

struct RadicalReport {
  IdealSubset radical;
  enum class Method { definition, theorem } method = Method::definition;
  struct MemberWitness {
    Elem left_k = -1;      // quasi-regularity witnesses (Jacobson)
    Elem right_k = -1;
    int nil_exponent = 0;  // least n with x^n = 0 (upper nil radical)
  };
  std::vector<MemberWitness> witnesses;  // parallel to radical.members()
};

// rad(I) = {i : ji is left quasi-regular for all j}. The right-handed set is
// computed independently and checked equal; every member is checked
// quasi-regular on both sides and the result is checked to be an ideal.
RadicalReport jacobson_radical(const RngPtr& rng);

// Nil*(I) = {i : <i> is nil}. When cross_check is set (and the order is
// within cfg.enum_cap, else OrderCapExceeded), the result is checked to be a
// nil ideal containing every nil ideal of the enumeration.
RadicalReport upper_nil_radical(const RngPtr& rng, bool cross_check = true,
                                const Config& cfg = {});

// (r,i) in rad(E) iff r in rad(R) and jr + ji in rad(I) for all j. Evaluates
// that condition, checks it against the symmetric right-handed condition, and
// returns it. rad_r / rad_i are precomputed radicals of R and I.
bool rad_membership_theorem(const DorrohRing& e, const IdealSubset& rad_r,
                            const IdealSubset& rad_i, Elem r, Elem i);
bool nil_membership_theorem(const DorrohRing& e, const IdealSubset& nil_r,
                            const IdealSubset& nil_i, Elem r, Elem i);

// Whether rad(E) = rad(R) + rad(I); the three-way equivalence with
// I.rad(R) and rad(R).I landing in rad(I) is checked.
bool rad_direct_sum_criterion(const DorrohRing& e);
bool nil_direct_sum_criterion(const DorrohRing& e);

struct PowerFormResult {
  bool holds = false;
  Elem witness_j = -1;  // j with (r,i)^n = (r^n, jr + ji + r^(n-1) i)
};

// Checks the power form of (r,i)^n and returns the witnessing j (scanned in
// ascending order). n >= 1.
PowerFormResult power_form_check(const DorrohRing& e, Elem r, Elem i, int n);

}  // namespace ringlab
