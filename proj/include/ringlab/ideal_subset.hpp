#pragma once

#include <span>
#include <string>
#include <vector>

#include "ringlab/finite_rng.hpp"

namespace ringlab {

struct SubsetFlags {
  bool additive_subgroup = false;
  bool left_ideal = false;
  bool right_ideal = false;
  bool two_sided_ideal = false;
  // The flags below are meaningful only when computed against an
  // RRngStructure whose rng is the ambient (see subset_predicates).
  bool sub_bimodule = false;
  bool r_ideal = false;
  bool r_subrng = false;
  bool left_r_submodule = false;
  bool left_r_ideal = false;
};

// A canonical membership set of element indices inside an ambient rng.
// Members are kept sorted ascending; a dense mask gives O(1) membership.
class IdealSubset {
 public:
  IdealSubset() = default;
  IdealSubset(RngPtr ambient, std::vector<Elem> members);

  const RngPtr& ambient() const { return ambient_; }
  const std::vector<Elem>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(Elem x) const { return mask_[x] != 0; }
  bool is_zero() const { return size() == 1; }
  bool is_all() const;

  SubsetFlags flags;

  bool same_members(const IdealSubset& other) const {
    return members_ == other.members_;
  }

 private:
  RngPtr ambient_;
  std::vector<Elem> members_;
  std::vector<char> mask_;
};

std::string show_subset(const IdealSubset& s);        // "{0, 2}"
std::string show_subset_rendered(const IdealSubset& s);

// Plain closure predicates on the ambient rng.
bool is_additive_subgroup(const IdealSubset& s);
bool is_left_ideal(const IdealSubset& s);
bool is_right_ideal(const IdealSubset& s);
bool is_two_sided_ideal(const IdealSubset& s);

// Least two-sided (resp. left) ideal containing the seed, by worklist closure.
IdealSubset generated_two_sided_ideal(const RngPtr& ambient,
                                      std::span<const Elem> seed);
IdealSubset generated_left_ideal(const RngPtr& ambient,
                                 std::span<const Elem> seed);

// Complete list of two-sided (or left) ideals, computed as the join-closure
// of all principal ideals. Deterministic order: by size, then lexicographic
// member list. Requires order <= cfg.enum_cap.
std::vector<IdealSubset> enumerate_ideals(const RngPtr& ambient,
                                          bool left_only = false,
                                          const Config& cfg = {});

struct NilpotencyResult {
  bool nilpotent = false;
  int exponent = 0;  // least n with K^n = 0, valid when nilpotent
};

struct NilResult {
  bool nil = false;
  int max_exponent = 0;   // max over members of least n with x^n = 0
  Elem witness = -1;      // non-nilpotent member when !nil
};

// K^n as the additive span of n-fold products; accepts any multiplicatively
// closed subset, ideal or not.
NilpotencyResult is_nilpotent_ideal(const IdealSubset& k);
NilResult is_nil_ideal(const IdealSubset& k);

// {i : iI = Ii = 0}; always a square-zero ideal of I.
IdealSubset rng_annihilator(const RngPtr& rng);

struct QuotientResult {
  RngPtr quotient;
  RngMorphism projection;
};

// Quotient by a verified two-sided ideal. Coset representatives are minimal
// element indices; the coset of zero is element 0.
QuotientResult quotient_rng(const RngPtr& r, const IdealSubset& k);

}  // namespace ringlab
