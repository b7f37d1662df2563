#include "ringlab/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ringlab {

IdealSubset subset_predicates(const RngPtr& ambient, std::vector<Elem> members,
                              const RRngStructure* ctx) {
  IdealSubset s(ambient, std::move(members));
  s.flags.additive_subgroup = is_additive_subgroup(s);
  s.flags.left_ideal = is_left_ideal(s);
  s.flags.right_ideal = is_right_ideal(s);
  s.flags.two_sided_ideal = s.flags.left_ideal && s.flags.right_ideal;
  if (ctx) {
    if (ctx->rng.get() != ambient.get())
      throw Error(ErrorClass::input,
                  "subset_predicates: context rng differs from ambient");
    bool lmod = s.flags.additive_subgroup, rmod = s.flags.additive_subgroup;
    for (Elem r = 0; r < ctx->ring->order() && (lmod || rmod); ++r)
      for (Elem x : s.members()) {
        if (lmod && !s.contains(ctx->lact(r, x))) lmod = false;
        if (rmod && !s.contains(ctx->ract(x, r))) rmod = false;
        if (!lmod && !rmod) break;
      }
    bool mult_closed = true;
    for (Elem a : s.members()) {
      for (Elem b : s.members())
        if (!s.contains(ambient->mul(a, b))) {
          mult_closed = false;
          break;
        }
      if (!mult_closed) break;
    }
    s.flags.sub_bimodule = lmod && rmod;
    s.flags.r_subrng = s.flags.sub_bimodule && mult_closed;
    s.flags.r_ideal = s.flags.sub_bimodule && s.flags.two_sided_ideal;
    s.flags.left_r_submodule = lmod;
    s.flags.left_r_ideal = lmod && s.flags.left_ideal;
  }
  return s;
}

IdealSubset generated_subset(const RngPtr& ambient, std::span<const Elem> seed,
                             SubsetKind kind, const RRngStructure* ctx) {
  if (kind == SubsetKind::two_sided_ideal)
    return generated_two_sided_ideal(ambient, seed);
  if (kind == SubsetKind::left_ideal)
    return generated_left_ideal(ambient, seed);
  if (!ctx || ctx->rng.get() != ambient.get())
    throw Error(ErrorClass::input, "R-closure needs the R-rng context");

  const FiniteRng& i = *ambient;
  std::vector<char> in(i.order(), 0);
  std::vector<Elem> stack, members;
  auto push = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      stack.push_back(x);
    }
  };
  push(0);
  for (Elem x : seed) push(x);
  while (!stack.empty()) {
    Elem x = stack.back();
    stack.pop_back();
    members.push_back(x);
    push(i.neg(x));
    for (Elem y : members) push(i.add(x, y));
    for (Elem r = 0; r < ctx->ring->order(); ++r) {
      push(ctx->lact(r, x));
      push(ctx->ract(x, r));
    }
    if (kind == SubsetKind::r_ideal) {
      for (Elem y = 0; y < i.order(); ++y) {
        push(i.mul(x, y));
        push(i.mul(y, x));
      }
    } else {  // r_subrng: products of members only
      for (Elem y : members) {
        push(i.mul(x, y));
        push(i.mul(y, x));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return subset_predicates(ambient, std::move(members), ctx);
}

namespace {

std::vector<IdealSubset> enumerate_closed(const RRngStructure& x,
                                          SubsetKind kind, const Config& cfg) {
  const RngPtr& ambient = x.rng;
  if (ambient->order() > cfg.enum_cap)
    throw OrderCapExceeded("subset enumeration beyond cap");
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> list;
  auto insert = [&](std::vector<Elem> m) {
    if (seen.insert(m).second) {
      list.push_back(std::move(m));
      if (list.size() > 4096)
        throw SearchBudgetExceeded("subset lattice too large");
    }
  };
  for (Elem v = 0; v < ambient->order(); ++v) {
    Elem seed[1] = {v};
    insert(generated_subset(ambient, seed, kind, &x).members());
  }
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<Elem> u = list[i];
      u.insert(u.end(), list[j].begin(), list[j].end());
      insert(generated_subset(ambient, u, kind, &x).members());
    }
  std::sort(list.begin(), list.end(),
            [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<IdealSubset> out;
  for (auto& m : list) out.push_back(subset_predicates(ambient, m, &x));
  return out;
}

}  // namespace

std::vector<IdealSubset> enumerate_r_subrngs(const RRngStructure& x,
                                             const Config& cfg) {
  return enumerate_closed(x, SubsetKind::r_subrng, cfg);
}

std::vector<IdealSubset> enumerate_r_ideals(const RRngStructure& x,
                                            const Config& cfg) {
  return enumerate_closed(x, SubsetKind::r_ideal, cfg);
}

Elem IdealDecomposition::phi_of(Elem j_elem) const {
  const auto& mem = j.members();
  auto it = std::lower_bound(mem.begin(), mem.end(), j_elem);
  if (it == mem.end() || *it != j_elem)
    throw Error(ErrorClass::input, "phi applied outside J");
  return phi[it - mem.begin()];
}

IdealDecomposition decompose_ideal(const DorrohRing& e, const IdealSubset& k,
                                   IdealKind kind) {
  if (k.ambient().get() != e.ext.get())
    throw Error(ErrorClass::input, "decompose: subset of a different ring");
  bool ok = kind == IdealKind::two_sided
                ? is_two_sided_ideal(k)
                : is_left_ideal(k);
  if (!ok) throw NotAnIdeal("decompose: subset fails the ideal test");

  const RRngStructure& x = *e.source;
  const FiniteRng& i = *x.rng;
  std::vector<char> in_a(x.ring->order(), 0), in_j(i.order(), 0),
      in_z(x.ring->order(), 0);
  for (Elem m : k.members()) {
    auto [r, v] = e.decode(m);
    in_a[r] = 1;
    in_j[v] = 1;
    if (v == 0) in_z[r] = 1;
  }
  std::vector<Elem> am, jm, zm;
  for (Elem r = 0; r < x.ring->order(); ++r) {
    if (in_a[r]) am.push_back(r);
    if (in_z[r]) zm.push_back(r);
  }
  for (Elem v = 0; v < i.order(); ++v)
    if (in_j[v]) jm.push_back(v);

  IdealDecomposition d;
  d.kind = kind;
  d.a = subset_predicates(x.ring, std::move(am));
  d.z = subset_predicates(x.ring, std::move(zm));
  d.j = subset_predicates(x.rng, std::move(jm), &x);
  d.phi.resize(d.j.members().size());
  for (size_t p = 0; p < d.j.members().size(); ++p) {
    Elem j_elem = d.j.members()[p];
    Elem best = -1;
    for (Elem a : d.a.members())
      if (k.contains(e.encode(a, i.neg(j_elem)))) {
        best = a;
        break;  // members ascend, so the first hit is the minimal rep
      }
    d.phi[p] = best;
  }
  return d;
}

namespace {

// Coset of z through `a`, as its minimal element.
Elem coset_rep(const FiniteRng& r, const IdealSubset& z, Elem a) {
  Elem m = a;
  for (Elem v : z.members()) m = std::min(m, r.add(a, v));
  return m;
}

}  // namespace

DecompositionCheck check_decomposition(const DorrohRing& e,
                                       const IdealDecomposition& d) {
  const RRngStructure& x = *e.source;
  const FiniteRng& r = *x.ring;
  const FiniteRng& i = *x.rng;
  auto fail = [](std::string cond, std::vector<Elem> w) {
    return DecompositionCheck{false, std::move(cond), std::move(w)};
  };

  bool two_sided = d.kind == IdealKind::two_sided;
  if (d.a.ambient().get() != x.ring.get() ||
      d.z.ambient().get() != x.ring.get() ||
      d.j.ambient().get() != x.rng.get())
    return fail("ambient-mismatch", {});
  if (two_sided ? !is_two_sided_ideal(d.a) : !is_left_ideal(d.a))
    return fail("A-not-ideal", {});
  if (two_sided ? !is_two_sided_ideal(d.z) : !is_left_ideal(d.z))
    return fail("Z-not-ideal", {});
  for (Elem v : d.z.members())
    if (!d.a.contains(v)) return fail("Z-not-inside-A", {v});

  IdealSubset j = subset_predicates(x.rng, d.j.members(), &x);
  if (two_sided) {
    if (!j.flags.r_subrng) return fail("J-not-r-subrng", {});
  } else {
    if (!j.flags.left_r_submodule || !j.flags.additive_subgroup)
      return fail("J-not-left-r-submodule", {});
  }

  if (d.phi.size() != j.members().size()) return fail("phi-size", {});
  for (size_t p = 0; p < d.phi.size(); ++p)
    if (d.phi[p] < 0 || !d.a.contains(d.phi[p]))
      return fail("phi-not-into-A", {j.members()[p]});

  // phi as a map to cosets of Z; compare modulo Z throughout.
  auto phi_rep = [&](Elem j_elem) {
    return coset_rep(r, d.z, d.phi_of(j_elem));
  };
  // j in ker(phi) iff phi(j) lands in the coset Z itself.
  std::vector<char> kernel(i.order(), 0);
  for (Elem j_elem : j.members())
    if (d.z.contains(phi_rep(j_elem))) kernel[j_elem] = 1;

  for (Elem a : j.members())
    for (Elem b : j.members())
      if (phi_rep(i.add(a, b)) !=
          coset_rep(r, d.z, r.add(d.phi_of(a), d.phi_of(b))))
        return fail("phi-not-additive", {a, b});
  for (Elem rr = 0; rr < r.order(); ++rr)
    for (Elem a : j.members()) {
      if (phi_rep(x.lact(rr, a)) !=
          coset_rep(r, d.z, r.mul(rr, d.phi_of(a))))
        return fail("phi-not-left-equivariant", {rr, a});
      if (two_sided &&
          phi_rep(x.ract(a, rr)) !=
              coset_rep(r, d.z, r.mul(d.phi_of(a), rr)))
        return fail("phi-not-right-equivariant", {rr, a});
    }
  if (two_sided) {
    for (Elem a : j.members())
      for (Elem b : j.members())
        if (phi_rep(i.mul(a, b)) !=
            coset_rep(r, d.z, r.mul(d.phi_of(a), d.phi_of(b))))
          return fail("phi-not-multiplicative", {a, b});
  }
  // Surjectivity onto A/Z.
  {
    std::set<Elem> image_cosets, a_cosets;
    for (Elem j_elem : j.members()) image_cosets.insert(phi_rep(j_elem));
    for (Elem a : d.a.members()) a_cosets.insert(coset_rep(r, d.z, a));
    if (image_cosets != a_cosets) return fail("phi-not-surjective", {});
  }

  // Side conditions over every (a, -j) in K and every i in I.
  for (Elem j_elem : j.members()) {
    Elem rep = phi_rep(j_elem);
    for (Elem z : d.z.members()) {
      Elem a = r.add(rep, z);
      for (Elem v = 0; v < i.order(); ++v) {
        if (two_sided) {
          Elem diff = i.sub(x.lact(a, v), i.mul(j_elem, v));
          if (!kernel[diff]) return fail("condition-a", {a, j_elem, v});
        }
        Elem diff2 = i.sub(x.ract(v, a), i.mul(v, j_elem));
        if (!kernel[diff2])
          return fail(two_sided ? "condition-b" : "condition-left",
                      {a, j_elem, v});
      }
    }
  }
  return {};
}

IdealSubset reconstruct_ideal(const DorrohRing& e,
                              const IdealDecomposition& d) {
  auto check = check_decomposition(e, d);
  if (!check.ok) throw InvalidDecomposition(check.condition, check.witness);

  const RRngStructure& x = *e.source;
  const FiniteRng& r = *x.ring;
  const FiniteRng& i = *x.rng;
  std::vector<Elem> members;
  for (size_t p = 0; p < d.j.members().size(); ++p) {
    Elem j_elem = d.j.members()[p];
    for (Elem z : d.z.members())
      members.push_back(e.encode(r.add(d.phi[p], z), i.neg(j_elem)));
  }
  IdealSubset k = subset_predicates(e.ext, std::move(members));
  bool ok = d.kind == IdealKind::two_sided ? k.flags.two_sided_ideal
                                           : k.flags.left_ideal;
  if (!ok)
    throw CheckFailure("reconstructed set failed the ideal test");
  return k;
}

IdealSubset reconstruct_from_total_hom(const DorrohRing& e,
                                       const IdealSubset& z,
                                       const IdealSubset& j,
                                       const RHomomorphism& phi) {
  const RRngStructure& x = *e.source;
  const FiniteRng& i = *x.rng;
  if (!phi.total())
    throw Error(ErrorClass::input, "corollary reconstruction needs a total phi");
  if (!check_r_homomorphism(phi).empty())
    throw Error(ErrorClass::input, "corollary reconstruction: phi not an R-hom");
  // J must absorb the kernel of phi: products like ai - ji land in ker(phi),
  // and K can only swallow them when they lie in J.
  for (Elem v = 0; v < i.order(); ++v)
    if (phi.dense[v] == 0 && !j.contains(v))
      throw Error(ErrorClass::input,
                  "corollary reconstruction: J must contain ker(phi)");
  std::vector<Elem> members;
  for (Elem j_elem : j.members()) {
    Elem target_value = phi.dense[j_elem];
    for (Elem a = 0; a < x.ring->order(); ++a)
      if (phi.target.proj[a] == target_value)
        members.push_back(e.encode(a, i.neg(j_elem)));
  }
  (void)z;
  return subset_predicates(e.ext, std::move(members));
}

IdealSubset direct_sum_subset(const DorrohRing& e, const IdealSubset& a,
                              const IdealSubset& j) {
  std::vector<Elem> members;
  for (Elem r : a.members())
    for (Elem v : j.members()) members.push_back(e.encode(r, v));
  return subset_predicates(e.ext, std::move(members));
}

DirectSumCase dirsum_j_case(const DorrohRing& e, const IdealSubset& j) {
  IdealSubset jj = subset_predicates(e.source->rng, j.members(), e.source.get());
  IdealSubset zero(e.source->ring, {0});
  DirectSumCase out;
  out.hypothesis = jj.flags.r_ideal;
  out.conclusion = direct_sum_subset(e, zero, jj).flags.two_sided_ideal;
  return out;
}

DirectSumCase dirsum_a_case(const DorrohRing& e, const IdealSubset& a) {
  IdealSubset ann = annihilator(*e.source);
  DirectSumCase out;
  out.hypothesis = is_two_sided_ideal(a) &&
                   std::all_of(a.members().begin(), a.members().end(),
                               [&](Elem r) { return ann.contains(r); });
  IdealSubset zero(e.source->rng, {0});
  out.conclusion = direct_sum_subset(e, a, zero).flags.two_sided_ideal;
  return out;
}

DirectSumCase dirsum_aj_case(const DorrohRing& e, const IdealSubset& a,
                             const IdealSubset& j) {
  const RRngStructure& x = *e.source;
  IdealSubset jj = subset_predicates(x.rng, j.members(), &x);
  DirectSumCase out;
  out.hypothesis = is_two_sided_ideal(a) && jj.flags.r_ideal;
  if (out.hypothesis) {
    for (Elem r : a.members())
      for (Elem v = 0; v < x.rng->order() && out.hypothesis; ++v)
        out.hypothesis =
            jj.contains(x.lact(r, v)) && jj.contains(x.ract(v, r));
  }
  out.conclusion = direct_sum_subset(e, a, jj).flags.two_sided_ideal;
  return out;
}

IdealSubset rjr_span(const RRngStructure& x, const IdealSubset& j) {
  const FiniteRng& i = *x.rng;
  std::vector<char> in(i.order(), 0);
  std::vector<Elem> gens;
  for (Elem r = 0; r < x.ring->order(); ++r)
    for (Elem v : j.members())
      for (Elem s = 0; s < x.ring->order(); ++s) {
        Elem w = x.ract(x.lact(r, v), s);
        if (!in[w]) {
          in[w] = 1;
          gens.push_back(w);
        }
      }
  // additive span of the generators
  std::vector<char> span(i.order(), 0);
  std::vector<Elem> stack, members;
  auto push = [&](Elem v) {
    if (!span[v]) {
      span[v] = 1;
      stack.push_back(v);
    }
  };
  push(0);
  for (Elem g : gens) push(g);
  while (!stack.empty()) {
    Elem v = stack.back();
    stack.pop_back();
    members.push_back(v);
    for (Elem w : members) push(i.add(v, w));
  }
  std::sort(members.begin(), members.end());
  return subset_predicates(x.rng, std::move(members), &x);
}

}  // namespace ringlab
