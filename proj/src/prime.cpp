#include "ringlab/prime.hpp"

#include <algorithm>
#include <set>

namespace ringlab {

namespace {

bool product_is_zero(const FiniteRng& r, const IdealSubset& a,
                     const IdealSubset& b) {
  for (Elem x : a.members())
    for (Elem y : b.members())
      if (r.mul(x, y) != 0) return false;
  return true;
}

}  // namespace

PrimenessVerdict is_semiprime_rng(const RngPtr& rng, const Config& cfg) {
  PrimenessVerdict out;
  for (const auto& ideal : enumerate_ideals(rng, false, cfg)) {
    if (ideal.is_zero()) continue;
    if (product_is_zero(*rng, ideal, ideal)) {
      out.verdict = false;
      out.failed_condition = "square-zero-ideal";
      out.witness_ideal = ideal;
      return out;
    }
  }
  return out;
}

PrimenessVerdict is_prime_rng(const RngPtr& rng, const Config& cfg) {
  PrimenessVerdict out;
  if (rng->order() == 1) {
    out.verdict = false;
    out.failed_condition = "zero-rng";
    return out;
  }
  auto ideals = enumerate_ideals(rng, false, cfg);
  for (const auto& a : ideals) {
    if (a.is_zero()) continue;
    for (const auto& b : ideals) {
      if (b.is_zero()) continue;
      if (product_is_zero(*rng, a, b)) {
        out.verdict = false;
        out.failed_condition = "zero-product-pair";
        out.witness_ideal = a;
        out.witness_ideal2 = b;
        return out;
      }
    }
  }
  return out;
}

bool is_prime_ideal(const RngPtr& ambient, const IdealSubset& k,
                    const Config& cfg) {
  auto q = quotient_rng(ambient, k);
  return is_prime_rng(q.quotient, cfg).verdict;
}

bool is_semiprime_ideal(const RngPtr& ambient, const IdealSubset& k,
                        const Config& cfg) {
  auto q = quotient_rng(ambient, k);
  return is_semiprime_rng(q.quotient, cfg).verdict;
}

bool is_maximal_ideal(const RngPtr& ambient, const IdealSubset& k,
                      const Config& cfg) {
  auto q = quotient_rng(ambient, k);
  if (q.quotient->order() == 1) return false;  // K must be proper
  // Ideals of the quotient are exactly the ideals between K and the ambient.
  return enumerate_ideals(q.quotient, false, cfg).size() == 2;
}

std::optional<RHomomorphism> find_subrng_obstruction(const RRngPtr& x,
                                                     bool square_zero,
                                                     bool require_injective,
                                                     const Config& cfg) {
  auto target = target_ring(x->ring);
  for (const auto& j : enumerate_r_subrngs(*x, cfg)) {
    if (j.is_zero()) continue;
    if (square_zero && !product_is_zero(*x->rng, j, j)) continue;
    for (const auto& phi : enumerate_r_homs(x, j, target, cfg)) {
      if (require_injective && !phi.injective()) continue;
      bool ok = true;
      for (Elem i = 0; i < x->rng->order() && ok; ++i)
        for (Elem v : j.members()) {
          Elem iv = x->rng->mul(i, v);
          Elem vi = x->rng->mul(v, i);
          if (x->ract(i, phi.dense[v]) != iv ||
              x->lact(phi.dense[v], i) != vi) {
            ok = false;
            break;
          }
        }
      if (ok) return phi;
    }
  }
  return std::nullopt;
}

PrimenessVerdict semiprime_via_theorem(const DorrohRing& e,
                                       const Config& cfg) {
  const RRngStructure& x = *e.source;
  PrimenessVerdict out;

  PrimenessVerdict c1 = is_semiprime_rng(x.rng, cfg);

  std::optional<IdealSubset> c2_witness;
  IdealSubset ann = annihilator(x);
  for (const auto& a : enumerate_ideals(x.ring, false, cfg)) {
    if (a.is_zero()) continue;
    bool inside = std::all_of(a.members().begin(), a.members().end(),
                              [&](Elem r) { return ann.contains(r); });
    if (inside && product_is_zero(*x.ring, a, a)) {
      c2_witness = a;
      break;
    }
  }

  auto c3 = find_subrng_obstruction(e.source, true, true, cfg);
  auto c3p = find_subrng_obstruction(e.source, true, false, cfg);
  if (c1.verdict && c3.has_value() != c3p.has_value())
    throw CheckFailure("semiprime conditions (3) and (3') disagree");

  out.verdict = c1.verdict && !c2_witness && !c3;
  if (!c1.verdict) {
    out.failed_condition = "1";
    out.witness_ideal = c1.witness_ideal;
  } else if (c2_witness) {
    out.failed_condition = "2";
    out.witness_ideal = c2_witness;
  } else if (c3) {
    out.failed_condition = "3";
    out.witness_phi = c3;
  }

  if (is_semiprime_rng(e.ext, cfg).verdict != out.verdict)
    throw CheckFailure("semiprime theorem disagrees with the definition");
  return out;
}

PrimenessVerdict prime_via_theorem(const DorrohRing& e, const Config& cfg) {
  const RRngStructure& x = *e.source;
  if (x.rng->order() == 1)
    throw EmptyRng("primeness theorem needs a nonzero I");
  PrimenessVerdict out;

  PrimenessVerdict c1 = is_prime_rng(x.rng, cfg);
  IdealSubset ann = annihilator(x);
  bool c2 = ann.is_zero();
  auto c3 = find_subrng_obstruction(e.source, false, true, cfg);
  auto c3p = find_subrng_obstruction(e.source, false, false, cfg);
  if (c1.verdict && c3.has_value() != c3p.has_value())
    throw CheckFailure("prime conditions (3) and (3') disagree");

  out.verdict = c1.verdict && c2 && !c3;
  if (!c1.verdict) {
    out.failed_condition = "1";
    out.witness_ideal = c1.witness_ideal;
    out.witness_ideal2 = c1.witness_ideal2;
  } else if (!c2) {
    out.failed_condition = "2";
    out.witness_ideal = ann;
  } else if (c3) {
    out.failed_condition = "3";
    out.witness_phi = c3;
  }

  if (is_prime_rng(e.ext, cfg).verdict != out.verdict)
    throw CheckFailure("prime theorem disagrees with the definition");
  return out;
}

namespace {

void require_aj_hypothesis(const DorrohRing& e, const IdealSubset& a,
                           const IdealSubset& j) {
  const RRngStructure& x = *e.source;
  IdealSubset jj = subset_predicates(x.rng, j.members(), &x);
  if (!is_two_sided_ideal(a) || !jj.flags.r_ideal)
    throw HypothesisViolated("A must be an ideal of R and J an R-ideal of I");
  for (Elem r : a.members())
    for (Elem i = 0; i < x.rng->order(); ++i)
      if (!jj.contains(x.lact(r, i)) || !jj.contains(x.ract(i, r)))
        throw HypothesisViolated("AI + IA must land inside J");
}

}  // namespace

CorollaryVerdict semiprime_aj_via_corollary(const DorrohRing& e,
                                            const IdealSubset& a,
                                            const IdealSubset& j,
                                            const Config& cfg) {
  const RRngStructure& x = *e.source;
  require_aj_hypothesis(e, a, j);
  CorollaryVerdict out;

  // (1) ideals L of I containing J with L^2 inside J collapse to J
  out.c1 = true;
  auto ideals_i = enumerate_ideals(x.rng, false, cfg);
  auto contains_all = [](const IdealSubset& big, const IdealSubset& small) {
    return std::all_of(small.members().begin(), small.members().end(),
                       [&](Elem v) { return big.contains(v); });
  };
  for (const auto& l : ideals_i) {
    if (!contains_all(l, j)) continue;
    bool square_in_j = true;
    for (Elem p : l.members()) {
      for (Elem q : l.members())
        if (!j.contains(x.rng->mul(p, q))) {
          square_in_j = false;
          break;
        }
      if (!square_in_j) break;
    }
    if (square_in_j && !l.same_members(j)) {
      out.c1 = false;
      break;
    }
  }

  // (2) no ideal B strictly above A with B^2 inside A and BI + IB inside J
  out.c2 = true;
  for (const auto& b : enumerate_ideals(x.ring, false, cfg)) {
    if (!contains_all(b, a) || b.same_members(a)) continue;
    bool sq = true;
    for (Elem p : b.members()) {
      for (Elem q : b.members())
        if (!a.contains(x.ring->mul(p, q))) {
          sq = false;
          break;
        }
      if (!sq) break;
    }
    if (!sq) continue;
    bool acts = true;
    for (Elem r : b.members())
      for (Elem i = 0; i < x.rng->order() && acts; ++i)
        acts = j.contains(x.lact(r, i)) && j.contains(x.ract(i, r));
    if (acts) {
      out.c2 = false;
      break;
    }
  }

  // (3) square-zero subrng obstruction in the quotient structure
  auto q = quotient_rrng(x, a, j);
  out.c3 = !find_subrng_obstruction(q.structure, true, false, cfg);

  out.verdict = out.c1 && out.c2 && out.c3;
  if (is_semiprime_ideal(e.ext, direct_sum_subset(e, a, j), cfg) !=
      out.verdict)
    throw CheckFailure("semiprime A+J corollary disagrees with the quotient");
  return out;
}

CorollaryVerdict prime_aj_via_corollary(const DorrohRing& e,
                                        const IdealSubset& a,
                                        const IdealSubset& j,
                                        const Config& cfg) {
  const RRngStructure& x = *e.source;
  if (x.rng->order() == 1)
    throw EmptyRng("prime A+J corollary needs a nonzero I");
  require_aj_hypothesis(e, a, j);
  if (j.is_all()) throw HypothesisViolated("J must be a proper R-ideal");
  CorollaryVerdict out;

  auto contains_all = [](const IdealSubset& big, const IdealSubset& small) {
    return std::all_of(small.members().begin(), small.members().end(),
                       [&](Elem v) { return big.contains(v); });
  };

  // (1) primeness of I/J through ideals of I containing J
  out.c1 = true;
  auto ideals_i = enumerate_ideals(x.rng, false, cfg);
  std::vector<const IdealSubset*> above;
  for (const auto& l : ideals_i)
    if (contains_all(l, j)) above.push_back(&l);
  for (const auto* l1 : above) {
    for (const auto* l2 : above) {
      bool prod_in_j = true;
      for (Elem p : l1->members()) {
        for (Elem q : l2->members())
          if (!j.contains(x.rng->mul(p, q))) {
            prod_in_j = false;
            break;
          }
        if (!prod_in_j) break;
      }
      if (prod_in_j && !l1->same_members(j) && !l2->same_members(j)) {
        out.c1 = false;
        break;
      }
    }
    if (!out.c1) break;
  }

  // (2) A = {r : rI + Ir inside J}
  std::vector<Elem> carrier;
  for (Elem r = 0; r < x.ring->order(); ++r) {
    bool lands = true;
    for (Elem i = 0; i < x.rng->order() && lands; ++i)
      lands = j.contains(x.lact(r, i)) && j.contains(x.ract(i, r));
    if (lands) carrier.push_back(r);
  }
  out.c2 = carrier == a.members();

  // (3) subrng obstruction in the quotient structure
  auto q = quotient_rrng(x, a, j);
  out.c3 = !find_subrng_obstruction(q.structure, false, false, cfg);

  out.verdict = out.c1 && out.c2 && out.c3;
  if (is_prime_ideal(e.ext, direct_sum_subset(e, a, j), cfg) != out.verdict)
    throw CheckFailure("prime A+J corollary disagrees with the quotient");
  return out;
}

namespace {

std::vector<ClassifiedPrime> classify_with(const DorrohRing& e,
                                           const RHomomorphism& phi,
                                           bool maximal, const Config& cfg) {
  const RRngStructure& x = *e.source;
  if (!is_multiplicative_retraction(x, phi))
    throw NotARetraction("classification needs a multiplicative retraction");

  auto qualifies = [&](const IdealSubset& k) {
    return maximal ? is_maximal_ideal(x.ring, k, cfg)
                   : is_prime_ideal(x.ring, k, cfg);
  };

  std::vector<Elem> image;
  for (Elem i = 0; i < x.rng->order(); ++i) image.push_back(phi.dense[i]);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  std::vector<ClassifiedPrime> out;
  std::vector<Elem> all_i(x.rng->order());
  for (Elem i = 0; i < x.rng->order(); ++i) all_i[i] = i;
  IdealSubset full_i(x.rng, all_i);

  for (const auto& base : enumerate_ideals(x.ring, false, cfg)) {
    if (!qualifies(base)) continue;
    ClassifiedPrime sum;
    sum.form = ClassifiedPrime::Form::sum;
    sum.base = base;
    sum.members = direct_sum_subset(e, base, full_i);
    out.push_back(std::move(sum));

    bool phi_escapes =
        !std::all_of(image.begin(), image.end(),
                     [&](Elem v) { return base.contains(v); });
    if (phi_escapes) {
      ClassifiedPrime graph;
      graph.form = ClassifiedPrime::Form::graph;
      graph.base = base;
      std::vector<Elem> members;
      for (Elem i = 0; i < x.rng->order(); ++i)
        for (Elem z : base.members())
          members.push_back(
              e.encode(x.ring->add(z, phi.dense[i]), x.rng->neg(i)));
      graph.members = subset_predicates(e.ext, std::move(members));
      out.push_back(std::move(graph));
    }
  }

  // The classified list must coincide with brute force; that is the theorem.
  std::set<std::vector<Elem>> classified, brute;
  for (const auto& c : out) classified.insert(c.members.members());
  for (const auto& k : enumerate_ideals(e.ext, false, cfg)) {
    bool is = maximal ? is_maximal_ideal(e.ext, k, cfg)
                      : is_prime_ideal(e.ext, k, cfg);
    if (is) brute.insert(k.members());
  }
  if (classified != brute)
    throw CheckFailure(maximal
                           ? "maximal classification disagrees with brute force"
                           : "prime classification disagrees with brute force");
  return out;
}

}  // namespace

std::vector<ClassifiedPrime> classify_prime_ideals(const DorrohRing& e,
                                                   const RHomomorphism& phi,
                                                   const Config& cfg) {
  return classify_with(e, phi, false, cfg);
}

std::vector<ClassifiedPrime> classify_maximal_ideals(const DorrohRing& e,
                                                     const RHomomorphism& phi,
                                                     const Config& cfg) {
  return classify_with(e, phi, true, cfg);
}

std::vector<ClassifiedPrime> classify_primes_direct_sum(
    const DorrohRing& e, const std::vector<RHomomorphism>& phis,
    const Config& cfg) {
  const RRngStructure& x = *e.source;
  if (x.summands.empty())
    throw Error(ErrorClass::input,
                "direct-sum classification needs a direct_sum_rrng source");
  if (phis.size() != x.summands.size())
    throw Error(ErrorClass::input, "one retraction per summand required");
  for (size_t d = 0; d < phis.size(); ++d)
    if (!is_multiplicative_retraction(*x.summands[d], phis[d]))
      throw NotARetraction("summand map is not a multiplicative retraction");

  int nf = static_cast<int>(x.summands.size());
  std::vector<int> orders(nf);
  for (int d = 0; d < nf; ++d) orders[d] = x.summands[d]->rng->order();
  auto project = [&](Elem i, int d) {
    for (int k = nf - 1; k > d; --k) i /= orders[k];
    return i % orders[d];
  };

  std::vector<Elem> all_i(x.rng->order());
  for (Elem i = 0; i < x.rng->order(); ++i) all_i[i] = i;
  IdealSubset full_i(x.rng, all_i);

  std::vector<ClassifiedPrime> out;
  std::set<std::vector<Elem>> dedup;
  for (const auto& base : enumerate_ideals(x.ring, false, cfg)) {
    if (!is_prime_ideal(x.ring, base, cfg)) continue;
    ClassifiedPrime sum;
    sum.form = ClassifiedPrime::Form::sum;
    sum.base = base;
    sum.members = direct_sum_subset(e, base, full_i);
    if (dedup.insert(sum.members.members()).second) out.push_back(std::move(sum));

    for (int d = 0; d < nf; ++d) {
      bool escapes = false;
      for (Elem v = 0; v < orders[d] && !escapes; ++v)
        escapes = !base.contains(phis[d].dense[v]);
      if (!escapes) continue;
      ClassifiedPrime graph;
      graph.form = ClassifiedPrime::Form::graph;
      graph.base = base;
      graph.component = d;
      std::vector<Elem> members;
      for (Elem i = 0; i < x.rng->order(); ++i) {
        Elem value = phis[d].dense[project(i, d)];
        for (Elem z : base.members())
          members.push_back(
              e.encode(x.ring->add(z, value), x.rng->neg(i)));
      }
      graph.members = subset_predicates(e.ext, std::move(members));
      if (dedup.insert(graph.members.members()).second)
        out.push_back(std::move(graph));
    }
  }

  std::set<std::vector<Elem>> brute;
  for (const auto& k : enumerate_ideals(e.ext, false, cfg))
    if (is_prime_ideal(e.ext, k, cfg)) brute.insert(k.members());
  if (dedup != brute)
    throw CheckFailure(
        "direct-sum prime classification disagrees with brute force");
  return out;
}

bool is_local(const RngPtr& ring, const Config& cfg) {
  int count = 0;
  for (const auto& k : enumerate_ideals(ring, false, cfg))
    if (is_maximal_ideal(ring, k, cfg)) ++count;
  return count == 1;
}

bool local_via_corollary(const DorrohRing& e, const RHomomorphism& phi,
                         const Config& cfg) {
  if (!e.ext->commutative())
    throw NotCommutative("local corollary applies to commutative E only");
  const RRngStructure& x = *e.source;
  if (!is_multiplicative_retraction(x, phi))
    throw NotARetraction("local corollary needs a multiplicative retraction");
  std::vector<char> hit(x.ring->order(), 0);
  for (Elem i = 0; i < x.rng->order(); ++i) hit[phi.dense[i]] = 1;
  bool image_is_all =
      std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  return is_local(x.ring, cfg) && !image_is_all;
}

}  // namespace ringlab
