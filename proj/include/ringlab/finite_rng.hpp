#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

// Element of a finite rng, as an index into its operation tables.
// Index 0 is always the additive identity.
using Elem = int;

class FiniteRng;
using RngPtr = std::shared_ptr<const FiniteRng>;

// How elements of a rng are rendered. Builders attach the appropriate kind;
// rngs assembled from raw tables stay opaque and print bare indices.
struct Notation {
  enum class Kind {
    opaque,
    cyclic,    // residues mod n
    matrix,    // k x k matrices over `base`, entries at `positions` (row-major)
    product,   // tuples over `factors`, first factor most significant
    trivial,   // additive group of `base` with zero multiplication
    subset,    // re-indexed subset of `base`; reps[i] is the base element
    quotient,  // cosets in `base`; reps[i] is the minimal coset member
    pair,      // Dorroh pairs (r, i) over pair_ring / pair_rng
  };
  Kind kind = Kind::opaque;
  int modulus = 0;
  int dim = 0;
  std::vector<std::pair<int, int>> positions;
  RngPtr base;
  std::vector<RngPtr> factors;
  std::vector<Elem> reps;
  RngPtr pair_ring, pair_rng;
};

// A finite rng (associative ring, unit optional) given by dense operation
// tables. Immutable after construction; safe for concurrent reads.
class FiniteRng {
 public:
  // Tables must already satisfy the rng axioms; use validate_rng for
  // untrusted input. Derives negation and the commutativity flag.
  FiniteRng(int order, std::vector<Elem> add, std::vector<Elem> mul,
            std::optional<Elem> unit, Notation notation);

  int order() const { return order_; }
  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem zero() const { return 0; }
  const std::optional<Elem>& unit() const { return unit_; }
  bool unital() const { return unit_.has_value(); }
  bool commutative() const { return commutative_; }

  // a^n for n >= 1; n == 0 requires a unit.
  Elem pow(Elem a, int n) const;
  // n-fold sum of a; n may be negative or zero.
  Elem times(int n, Elem a) const;

  std::string show(Elem a) const;
  const Notation& notation() const { return notation_; }

 private:
  int order_;
  std::vector<Elem> add_, mul_, neg_;
  std::optional<Elem> unit_;
  bool commutative_;
  Notation notation_;
};

// Scans the tables for every rng axiom and reports all violated axioms, each
// with one witness tuple. Shape problems (wrong table size, out-of-range
// entries) throw DimensionMismatch instead. If `unit` is empty, a two-sided
// identity is searched for and, when found, reported back via *detected_unit.
std::vector<AxiomViolation> check_rng_axioms(
    int order, std::span<const Elem> add, std::span<const Elem> mul,
    std::optional<Elem> unit, std::optional<Elem>* detected_unit = nullptr);

// Validated construction from raw tables. Throws AxiomError with the complete
// violation list. When `unit` is omitted, the unit is auto-detected.
RngPtr validate_rng(int order, std::vector<Elem> add, std::vector<Elem> mul,
                    std::optional<Elem> unit = std::nullopt,
                    Notation notation = {});

// A map of rngs given as a table source index -> target index.
struct RngMorphism {
  RngPtr source, target;
  std::vector<Elem> map;
  Elem operator()(Elem x) const { return map[x]; }
};

// Additivity and multiplicativity violations of a candidate morphism.
std::vector<AxiomViolation> check_morphism(const RngMorphism& m);
bool morphism_surjective(const RngMorphism& m);
std::vector<Elem> morphism_kernel(const RngMorphism& m);

// ---- builders -------------------------------------------------------------

// Z/n with unit 1 % n. n >= 1.
RngPtr cyclic_ring(int n, const Config& cfg = {});

// k x k matrices over a unital base, enumerated in row-major lexicographic
// order of entry indices (first entry most significant).
RngPtr matrix_ring(const RngPtr& base, int k, const Config& cfg = {});

// Upper-triangular k x k matrices over a unital base.
RngPtr upper_triangular_ring(const RngPtr& base, int k, const Config& cfg = {});

// Componentwise operations; unital iff every factor is.
RngPtr direct_product(const std::vector<RngPtr>& factors,
                      const Config& cfg = {});

// Additive group of `carrier` with all products zero.
RngPtr trivial_mult_rng(const RngPtr& carrier);

}  // namespace ringlab
