#include "ringlab/radicals.hpp"

#include <algorithm>

namespace ringlab {

QuasiRegularity is_left_quasi_regular(const FiniteRng& rng, Elem i) {
  for (Elem k = 0; k < rng.order(); ++k)
    if (rng.add(rng.add(i, k), rng.mul(k, i)) == 0) return {true, k};
  return {};
}

QuasiRegularity is_right_quasi_regular(const FiniteRng& rng, Elem i) {
  for (Elem k = 0; k < rng.order(); ++k)
    if (rng.add(rng.add(i, k), rng.mul(i, k)) == 0) return {true, k};
  return {};
}

RadicalReport jacobson_radical(const RngPtr& rng) {
  const FiniteRng& r = *rng;
  std::vector<Elem> left_set, right_set;
  for (Elem i = 0; i < r.order(); ++i) {
    bool in = true;
    for (Elem j = 0; j < r.order() && in; ++j)
      in = is_left_quasi_regular(r, r.mul(j, i)).regular;
    if (in) left_set.push_back(i);
  }
  for (Elem i = 0; i < r.order(); ++i) {
    bool in = true;
    for (Elem j = 0; j < r.order() && in; ++j)
      in = is_right_quasi_regular(r, r.mul(i, j)).regular;
    if (in) right_set.push_back(i);
  }
  if (left_set != right_set)
    throw CheckFailure("left and right Jacobson radical sets differ");

  RadicalReport out;
  out.radical = IdealSubset(rng, left_set);
  out.method = RadicalReport::Method::definition;
  for (Elem i : left_set) {
    auto lq = is_left_quasi_regular(r, i);
    auto rq = is_right_quasi_regular(r, i);
    if (!lq.regular || !rq.regular)
      throw CheckFailure("radical member not quasi-regular on both sides");
    out.witnesses.push_back({lq.witness, rq.witness, 0});
  }
  if (!is_two_sided_ideal(out.radical))
    throw CheckFailure("Jacobson radical failed the ideal test");
  out.radical.flags.additive_subgroup = true;
  out.radical.flags.left_ideal = out.radical.flags.right_ideal = true;
  out.radical.flags.two_sided_ideal = true;
  return out;
}

RadicalReport upper_nil_radical(const RngPtr& rng, bool cross_check,
                                const Config& cfg) {
  const FiniteRng& r = *rng;
  RadicalReport out;
  out.method = RadicalReport::Method::definition;
  std::vector<Elem> members;
  std::vector<int> exps;
  for (Elem i = 0; i < r.order(); ++i) {
    Elem seed[1] = {i};
    auto gen = generated_two_sided_ideal(rng, seed);
    auto nil = is_nil_ideal(gen);
    if (nil.nil) {
      members.push_back(i);
      // the element's own nilpotency exponent
      Elem p = i;
      int n = 1;
      while (p != 0) {
        p = r.mul(p, i);
        ++n;
      }
      exps.push_back(n);
    }
  }
  out.radical = IdealSubset(rng, members);
  for (size_t k = 0; k < members.size(); ++k)
    out.witnesses.push_back({-1, -1, exps[k]});

  if (!is_two_sided_ideal(out.radical))
    throw CheckFailure("upper nil radical failed the ideal test");
  if (!is_nil_ideal(out.radical).nil)
    throw CheckFailure("upper nil radical is not nil");
  out.radical.flags.additive_subgroup = true;
  out.radical.flags.left_ideal = out.radical.flags.right_ideal = true;
  out.radical.flags.two_sided_ideal = true;

  if (cross_check) {
    if (r.order() > cfg.enum_cap)
      throw OrderCapExceeded("nil radical cross-check beyond enumeration cap");
    for (const auto& ideal : enumerate_ideals(rng, false, cfg)) {
      if (!is_nil_ideal(ideal).nil) continue;
      for (Elem v : ideal.members())
        if (!out.radical.contains(v))
          throw CheckFailure("a nil ideal escapes the upper nil radical");
    }
  }
  return out;
}

bool rad_membership_theorem(const DorrohRing& e, const IdealSubset& rad_r,
                            const IdealSubset& rad_i, Elem r, Elem i) {
  const RRngStructure& x = *e.source;
  const FiniteRng& irng = *x.rng;
  bool c2 = rad_r.contains(r);
  for (Elem j = 0; j < irng.order() && c2; ++j)
    c2 = rad_i.contains(irng.add(x.ract(j, r), irng.mul(j, i)));
  bool c3 = rad_r.contains(r);
  for (Elem j = 0; j < irng.order() && c3; ++j)
    c3 = rad_i.contains(irng.add(x.lact(r, j), irng.mul(i, j)));
  if (c2 != c3)
    throw CheckFailure("radical membership conditions (2) and (3) disagree");
  return c2;
}

bool nil_membership_theorem(const DorrohRing& e, const IdealSubset& nil_r,
                            const IdealSubset& nil_i, Elem r, Elem i) {
  const RRngStructure& x = *e.source;
  const FiniteRng& irng = *x.rng;
  bool c2 = nil_r.contains(r);
  for (Elem j = 0; j < irng.order() && c2; ++j)
    c2 = nil_i.contains(irng.add(x.ract(j, r), irng.mul(j, i)));
  bool c3 = nil_r.contains(r);
  for (Elem j = 0; j < irng.order() && c3; ++j)
    c3 = nil_i.contains(irng.add(x.lact(r, j), irng.mul(i, j)));
  if (c2 != c3)
    throw CheckFailure("nil membership conditions (2) and (3) disagree");
  return c2;
}

namespace {

bool direct_sum_criterion(const DorrohRing& e, const IdealSubset& rad_e,
                          const IdealSubset& rad_r, const IdealSubset& rad_i,
                          const char* what) {
  const RRngStructure& x = *e.source;
  const FiniteRng& irng = *x.rng;

  std::vector<Elem> sum;
  for (Elem r : rad_r.members())
    for (Elem i : rad_i.members()) sum.push_back(e.encode(r, i));
  std::sort(sum.begin(), sum.end());
  bool c1 = sum == rad_e.members();

  bool c2 = true;
  for (Elem i = 0; i < irng.order() && c2; ++i)
    for (Elem r : rad_r.members())
      if (!rad_i.contains(x.ract(i, r))) {
        c2 = false;
        break;
      }
  bool c3 = true;
  for (Elem r : rad_r.members()) {
    for (Elem i = 0; i < irng.order(); ++i)
      if (!rad_i.contains(x.lact(r, i))) {
        c3 = false;
        break;
      }
    if (!c3) break;
  }
  if (c1 != c2 || c2 != c3)
    throw CheckFailure(std::string(what) +
                       " direct-sum criterion legs disagree");
  return c1;
}

}  // namespace

bool rad_direct_sum_criterion(const DorrohRing& e) {
  auto rad_e = jacobson_radical(e.ext);
  auto rad_r = jacobson_radical(e.source->ring);
  auto rad_i = jacobson_radical(e.source->rng);
  return direct_sum_criterion(e, rad_e.radical, rad_r.radical, rad_i.radical,
                              "radical");
}

bool nil_direct_sum_criterion(const DorrohRing& e) {
  auto nil_e = upper_nil_radical(e.ext, false);
  auto nil_r = upper_nil_radical(e.source->ring, false);
  auto nil_i = upper_nil_radical(e.source->rng, false);
  return direct_sum_criterion(e, nil_e.radical, nil_r.radical, nil_i.radical,
                              "nil");
}

PowerFormResult power_form_check(const DorrohRing& e, Elem r, Elem i, int n) {
  if (n < 1) throw Error(ErrorClass::input, "power form needs n >= 1");
  const RRngStructure& x = *e.source;
  const FiniteRng& rring = *x.ring;
  const FiniteRng& irng = *x.rng;

  Elem p = e.ext->pow(e.encode(r, i), n);
  auto [pr, pi] = e.decode(p);
  if (pr != rring.pow(r, n)) return {};

  Elem rn1 = rring.pow(r, n - 1);  // r^0 is the unit of R
  for (Elem j = 0; j < irng.order(); ++j) {
    Elem second =
        irng.add(irng.add(x.ract(j, r), irng.mul(j, i)), x.lact(rn1, i));
    if (second == pi) return {true, j};
  }
  return {};
}

}  // namespace ringlab
