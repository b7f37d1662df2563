#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ringlab/decomposition.hpp"
#include "support/oracles.hpp"

using namespace ringlab;

namespace {

std::vector<Elem> flat_add(const FiniteRng& r) {
  std::vector<Elem> out;
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b) out.push_back(r.add(a, b));
  return out;
}

std::vector<Elem> flat_mul(const FiniteRng& r) {
  std::vector<Elem> out;
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b) out.push_back(r.mul(a, b));
  return out;
}

void expect_revalidates(const RngPtr& r) {
  auto violations =
      check_rng_axioms(r->order(), flat_add(*r), flat_mul(*r), r->unit());
  CHECK(violations.empty());
}

}  // namespace

TEST_CASE("validate_rng accepts Z/4 and finds the unit") {
  auto z4 = cyclic_ring(4);
  auto rebuilt = validate_rng(4, flat_add(*z4), flat_mul(*z4));
  CHECK(rebuilt->unital());
  CHECK(*rebuilt->unit() == 1);
}

TEST_CASE("validate_rng reports corrupted tables with witnesses") {
  auto z4 = cyclic_ring(4);
  auto add = flat_add(*z4);
  auto mul = flat_mul(*z4);
  mul[2 * 4 + 2] = 1;  // 2*2 corrupted to 1

  auto violations = check_rng_axioms(4, add, mul, std::nullopt);
  REQUIRE(!violations.empty());

  // Oracle: independent scan over all triples agrees on which axioms broke.
  auto oracle = test_oracles::violated_axioms(4, add, mul);
  CHECK(!oracle.empty());
  for (const auto& v : violations) {
    CHECK(oracle.count(v.axiom) == 1);
    CHECK(!v.witnesses.empty());
  }
  // Every oracle-violated axiom is reported.
  std::set<std::string> reported;
  for (const auto& v : violations) reported.insert(v.axiom);
  CHECK(reported == oracle);

  CHECK_THROWS_AS(validate_rng(4, add, mul), AxiomError);
}

TEST_CASE("order-1 zero ring is valid and unital") {
  auto z1 = validate_rng(1, {0}, {0});
  CHECK(z1->unital());
  CHECK(*z1->unit() == 0);
}

TEST_CASE("cyclic rings") {
  auto z2 = cyclic_ring(2);
  CHECK(z2->order() == 2);
  CHECK(*z2->unit() == 1);
  auto z6 = cyclic_ring(6);
  CHECK(z6->mul(2, 3) == 0);
  auto z1 = cyclic_ring(1);
  CHECK(*z1->unit() == 0);
  CHECK_THROWS_AS(cyclic_ring(0), Error);
  expect_revalidates(z6);
}

TEST_CASE("matrix rings over F2") {
  auto z2 = cyclic_ring(2);
  auto m2 = matrix_ring(z2, 2);
  CHECK(m2->order() == 16);
  CHECK(m2->unital());
  auto t2 = upper_triangular_ring(z2, 2);
  CHECK(t2->order() == 8);
  CHECK(t2->unital());

  // entry encoding: e11 = 8, e12 = 4, e21 = 2, e22 = 1
  CHECK(m2->mul(4, 2) == 8);  // e12 e21 = e11
  CHECK(m2->mul(2, 4) == 1);  // e21 e12 = e22
  CHECK(m2->show(4) == "[0 1; 0 0]");
  CHECK(t2->show(2) == "[0 1; 0 0]");
  expect_revalidates(m2);
  expect_revalidates(t2);

  CHECK_THROWS_AS(matrix_ring(cyclic_ring(16), 2), OrderCapExceeded);
  CHECK_THROWS_AS(matrix_ring(trivial_mult_rng(z2), 2), Error);
}

TEST_CASE("direct products") {
  auto z2 = cyclic_ring(2);
  auto p = direct_product({z2, z2});
  CHECK(p->order() == 4);
  CHECK(*p->unit() == 3);          // (1,1)
  CHECK(p->mul(2, 1) == 0);        // (1,0)(0,1) = (0,0)
  CHECK(p->show(2) == "(1, 0)");
  auto q = direct_product({z2, trivial_mult_rng(z2)});
  CHECK(!q->unital());
  expect_revalidates(p);
  expect_revalidates(q);
}

TEST_CASE("trivial multiplication rngs") {
  auto z2 = cyclic_ring(2);
  auto t = trivial_mult_rng(z2);
  CHECK(t->order() == 2);
  CHECK(t->mul(1, 1) == 0);
  CHECK(!t->unital());
  auto t4 = trivial_mult_rng(direct_product({z2, z2}));
  CHECK(t4->order() == 4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) CHECK(t4->mul(a, b) == 0);
  expect_revalidates(t4);
}

TEST_CASE("quotients") {
  auto z12 = cyclic_ring(12);
  auto k = subset_predicates(z12, {0, 4, 8});
  REQUIRE(k.flags.two_sided_ideal);
  auto q = quotient_rng(z12, k);
  CHECK(q.quotient->order() == 4);

  // Oracle: exhaustive isomorphism search against Z/4.
  auto iso = test_oracles::find_ring_isomorphism(*q.quotient, *cyclic_ring(4));
  CHECK(iso.has_value());

  CHECK(morphism_surjective(q.projection));
  CHECK(check_morphism(q.projection).empty());
  CHECK(morphism_kernel(q.projection) == std::vector<Elem>{0, 4, 8});

  auto zero = subset_predicates(z12, {0});
  auto qz = quotient_rng(z12, zero);
  CHECK(qz.quotient->order() == 12);
  for (Elem x = 0; x < 12; ++x) CHECK(qz.projection(x) == x);

  auto all = subset_predicates(z12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  CHECK(quotient_rng(z12, all).quotient->order() == 1);

  auto not_ideal = subset_predicates(z12, {0, 1});
  CHECK_THROWS_AS(quotient_rng(z12, not_ideal), NotAnIdeal);
}

TEST_CASE("projection from a product is a surjective morphism") {
  auto z2 = cyclic_ring(2);
  auto z3 = cyclic_ring(3);
  auto p = direct_product({z2, z3});
  RngMorphism proj;
  proj.source = p;
  proj.target = z3;
  proj.map.resize(p->order());
  for (Elem v = 0; v < p->order(); ++v) proj.map[v] = v % 3;
  CHECK(check_morphism(proj).empty());
  CHECK(morphism_surjective(proj));
}
