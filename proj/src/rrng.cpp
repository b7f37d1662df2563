#include "ringlab/rrng.hpp"

#include <algorithm>
#include <map>

namespace ringlab {

std::vector<AxiomViolation> check_rrng_axioms(const RngPtr& ring,
                                              const RngPtr& rng,
                                              std::span<const Elem> left,
                                              std::span<const Elem> right) {
  const FiniteRng& r = *ring;
  const FiniteRng& i = *rng;
  int nr = r.order(), ni = i.order();
  if (!r.unital())
    throw Error(ErrorClass::input, "R-rng structure needs a unital R");
  if (left.size() != static_cast<size_t>(nr) * ni ||
      right.size() != static_cast<size_t>(ni) * nr)
    throw DimensionMismatch("action tables must be |R| x |I| and |I| x |R|");
  for (Elem x : left)
    if (x < 0 || x >= ni) throw DimensionMismatch("left action out of range");
  for (Elem x : right)
    if (x < 0 || x >= ni) throw DimensionMismatch("right action out of range");

  auto l = [&](Elem a, Elem x) { return left[a * ni + x]; };
  auto rt = [&](Elem x, Elem a) { return right[x * nr + a]; };
  std::vector<AxiomViolation> out;
  auto report = [&out](const std::string& axiom, std::vector<int> w) {
    out.push_back({axiom, std::move(w), ""});
  };

  Elem one = *r.unit();
  for (Elem x = 0; x < ni; ++x)
    if (l(one, x) != x || rt(x, one) != x) {
      report("action-unitality", {x});
      break;
    }
  [&] {
    for (Elem a = 0; a < nr; ++a)
      for (Elem x = 0; x < ni; ++x)
        for (Elem y = 0; y < ni; ++y)
          if (l(a, i.add(x, y)) != i.add(l(a, x), l(a, y)) ||
              rt(i.add(x, y), a) != i.add(rt(x, a), rt(y, a))) {
            report("action-additive-in-rng", {a, x, y});
            return;
          }
  }();
  [&] {
    for (Elem a = 0; a < nr; ++a)
      for (Elem b = 0; b < nr; ++b)
        for (Elem x = 0; x < ni; ++x)
          if (l(r.add(a, b), x) != i.add(l(a, x), l(b, x)) ||
              rt(x, r.add(a, b)) != i.add(rt(x, a), rt(x, b))) {
            report("action-additive-in-ring", {a, b, x});
            return;
          }
  }();
  [&] {
    for (Elem a = 0; a < nr; ++a)
      for (Elem b = 0; b < nr; ++b)
        for (Elem x = 0; x < ni; ++x)
          if (l(r.mul(a, b), x) != l(a, l(b, x)) ||
              rt(x, r.mul(a, b)) != rt(rt(x, a), b) ||
              rt(l(a, x), b) != l(a, rt(x, b))) {
            report("module-associativity", {a, b, x});
            return;
          }
  }();
  [&] {
    for (Elem a = 0; a < nr; ++a)
      for (Elem x = 0; x < ni; ++x)
        for (Elem y = 0; y < ni; ++y)
          if (l(a, i.mul(x, y)) != i.mul(l(a, x), y) ||
              i.mul(x, l(a, y)) != i.mul(rt(x, a), y) ||
              rt(i.mul(x, y), a) != i.mul(x, rt(y, a))) {
            report("action-compatibility", {a, x, y});
            return;
          }
  }();
  return out;
}

RRngPtr validate_rrng(const RngPtr& ring, const RngPtr& rng,
                      std::vector<Elem> left, std::vector<Elem> right) {
  auto violations = check_rrng_axioms(ring, rng, left, right);
  if (!violations.empty()) throw AxiomError(std::move(violations));
  auto x = std::make_shared<RRngStructure>();
  x->ring = ring;
  x->rng = rng;
  x->left = std::move(left);
  x->right = std::move(right);
  return x;
}

RRngPtr ideal_as_rrng(const RngPtr& ring, const IdealSubset& k) {
  if (k.ambient().get() != ring.get())
    throw Error(ErrorClass::input, "ideal_as_rrng: subset of a different ring");
  if (!is_two_sided_ideal(k)) throw NotAnIdeal("ideal_as_rrng: not an ideal");

  const FiniteRng& r = *ring;
  const auto& mem = k.members();
  int ni = static_cast<int>(mem.size());
  std::vector<Elem> index_of(r.order(), -1);
  for (int p = 0; p < ni; ++p) index_of[mem[p]] = p;

  std::vector<Elem> add(static_cast<size_t>(ni) * ni), mul(add.size());
  for (int a = 0; a < ni; ++a)
    for (int b = 0; b < ni; ++b) {
      add[a * ni + b] = index_of[r.add(mem[a], mem[b])];
      mul[a * ni + b] = index_of[r.mul(mem[a], mem[b])];
    }
  Notation nota;
  nota.kind = Notation::Kind::subset;
  nota.base = ring;
  nota.reps = mem;
  std::optional<Elem> unit;
  for (Elem u = 0; u < ni && !unit; ++u) {
    bool ok = true;
    for (Elem a = 0; a < ni && ok; ++a)
      ok = mul[u * ni + a] == a && mul[a * ni + u] == a;
    if (ok) unit = u;
  }
  auto rng = std::make_shared<FiniteRng>(ni, std::move(add), std::move(mul),
                                         unit, std::move(nota));

  auto x = std::make_shared<RRngStructure>();
  x->ring = ring;
  x->rng = rng;
  x->left.resize(static_cast<size_t>(r.order()) * ni);
  x->right.resize(x->left.size());
  for (Elem a = 0; a < r.order(); ++a)
    for (int p = 0; p < ni; ++p) {
      x->left[a * ni + p] = index_of[r.mul(a, mem[p])];
      x->right[p * r.order() + a] = index_of[r.mul(mem[p], a)];
    }
  x->embed = mem;
  return x;
}

RRngPtr cyclic_scalar_action(const RngPtr& cyclic, const RngPtr& rng) {
  if (cyclic->notation().kind != Notation::Kind::cyclic)
    throw Error(ErrorClass::input, "cyclic_action needs a Z(n) ring");
  int nr = cyclic->order(), ni = rng->order();
  std::vector<Elem> left(static_cast<size_t>(nr) * ni),
      right(static_cast<size_t>(ni) * nr);
  for (Elem a = 0; a < nr; ++a)
    for (Elem x = 0; x < ni; ++x) {
      Elem v = rng->times(a, x);
      left[a * ni + x] = v;
      right[x * nr + a] = v;
    }
  return validate_rrng(cyclic, rng, std::move(left), std::move(right));
}

RRngPtr matrix_mult_action(const RngPtr& ring, const RngPtr& rng) {
  const Notation& rn = ring->notation();
  // The coefficient rng may be the full matrix ring itself or a
  // trivial-multiplication wrap of it; the action multiplies in the full ring.
  const RngPtr carrier = rng->notation().kind == Notation::Kind::trivial
                             ? rng->notation().base
                             : rng;
  const Notation& in = carrier->notation();
  if (rn.kind != Notation::Kind::matrix || in.kind != Notation::Kind::matrix)
    throw Error(ErrorClass::input, "matmul_action needs matrix rings");
  if (rn.base.get() != in.base.get() || rn.dim != in.dim)
    throw Error(ErrorClass::input,
                "matmul_action needs the same base and dimension");
  if (in.positions.size() != static_cast<size_t>(in.dim) * in.dim)
    throw Error(ErrorClass::input, "matmul_action: I must be a full matrix ring");

  // Embed an R element into the full matrix ring by placing its entries.
  int base_order = rn.base->order();
  auto embed = [&](Elem a) {
    std::vector<Elem> grid(static_cast<size_t>(in.dim) * in.dim, 0);
    Elem rest = a;
    for (int p = static_cast<int>(rn.positions.size()) - 1; p >= 0; --p) {
      auto [row, col] = rn.positions[p];
      grid[row * in.dim + col] = rest % base_order;
      rest /= base_order;
    }
    Elem e = 0;
    for (const auto& [row, col] : in.positions)
      e = e * base_order + grid[row * in.dim + col];
    return e;
  };

  int nr = ring->order(), ni = rng->order();
  std::vector<Elem> left(static_cast<size_t>(nr) * ni),
      right(static_cast<size_t>(ni) * nr);
  for (Elem a = 0; a < nr; ++a) {
    Elem ea = embed(a);
    for (Elem x = 0; x < ni; ++x) {
      left[a * ni + x] = carrier->mul(ea, x);
      right[x * nr + a] = carrier->mul(x, ea);
    }
  }
  return validate_rrng(ring, rng, std::move(left), std::move(right));
}

RRngPtr direct_sum_rrng(const std::vector<RRngPtr>& parts, const Config& cfg) {
  if (parts.empty())
    throw Error(ErrorClass::input, "direct sum needs at least one summand");
  const RngPtr& ring = parts[0]->ring;
  for (const auto& p : parts)
    if (p->ring.get() != ring.get())
      throw Error(ErrorClass::input, "direct sum needs one shared ring R");

  std::vector<RngPtr> factors;
  for (const auto& p : parts) factors.push_back(p->rng);
  RngPtr sum = direct_product(factors, cfg);

  int nf = static_cast<int>(parts.size());
  int nr = ring->order(), ni = sum->order();
  std::vector<Elem> digits(nf);
  auto decode = [&](Elem e) {
    for (int k = nf - 1; k >= 0; --k) {
      digits[k] = e % factors[k]->order();
      e /= factors[k]->order();
    }
  };
  auto encode = [&]() {
    Elem e = 0;
    for (int k = 0; k < nf; ++k) e = e * factors[k]->order() + digits[k];
    return e;
  };
  std::vector<Elem> left(static_cast<size_t>(nr) * ni),
      right(static_cast<size_t>(ni) * nr);
  for (Elem x = 0; x < ni; ++x)
    for (Elem a = 0; a < nr; ++a) {
      decode(x);
      for (int k = 0; k < nf; ++k) digits[k] = parts[k]->lact(a, digits[k]);
      left[a * ni + x] = encode();
      decode(x);
      for (int k = 0; k < nf; ++k) digits[k] = parts[k]->ract(digits[k], a);
      right[x * nr + a] = encode();
    }
  auto violations = check_rrng_axioms(ring, sum, left, right);
  if (!violations.empty()) throw AxiomError(std::move(violations));
  auto out = std::make_shared<RRngStructure>();
  out->ring = ring;
  out->rng = sum;
  out->left = std::move(left);
  out->right = std::move(right);
  out->summands = parts;
  return out;
}

QuotientRRng quotient_rrng(const RRngStructure& x, const IdealSubset& a,
                           const IdealSubset& j) {
  if (a.ambient().get() != x.ring.get() || j.ambient().get() != x.rng.get())
    throw Error(ErrorClass::input, "quotient_rrng: ambient mismatch");
  if (!is_two_sided_ideal(a)) throw NotAnIdeal("quotient_rrng: A not an ideal");
  if (!is_two_sided_ideal(j))
    throw NotAnIdeal("quotient_rrng: J not an ideal of I");
  for (Elem r : a.members())
    for (Elem i = 0; i < x.rng->order(); ++i)
      if (!j.contains(x.lact(r, i)) || !j.contains(x.ract(i, r)))
        throw HypothesisViolated("quotient_rrng: AI + IA not inside J");
  for (Elem r = 0; r < x.ring->order(); ++r)
    for (Elem i : j.members())
      if (!j.contains(x.lact(r, i)) || !j.contains(x.ract(i, r)))
        throw HypothesisViolated("quotient_rrng: J is not an R-ideal");

  auto rq = quotient_rng(x.ring, a);
  auto iq = quotient_rng(x.rng, j);
  int nr = rq.quotient->order(), ni = iq.quotient->order();
  const auto& rreps = rq.quotient->notation().reps;
  const auto& ireps = iq.quotient->notation().reps;
  std::vector<Elem> left(static_cast<size_t>(nr) * ni),
      right(static_cast<size_t>(ni) * nr);
  for (Elem r = 0; r < nr; ++r)
    for (Elem i = 0; i < ni; ++i) {
      left[r * ni + i] = iq.projection(x.lact(rreps[r], ireps[i]));
      right[i * nr + r] = iq.projection(x.ract(ireps[i], rreps[r]));
    }
  QuotientRRng out;
  out.structure =
      validate_rrng(rq.quotient, iq.quotient, std::move(left), std::move(right));
  out.ring_proj = std::move(rq.projection);
  out.rng_proj = std::move(iq.projection);
  return out;
}

IdealSubset annihilator(const RRngStructure& x) {
  std::vector<Elem> members;
  for (Elem r = 0; r < x.ring->order(); ++r) {
    bool ann = true;
    for (Elem i = 0; i < x.rng->order() && ann; ++i)
      ann = x.lact(r, i) == 0 && x.ract(i, r) == 0;
    if (ann) members.push_back(r);
  }
  IdealSubset out(x.ring, std::move(members));
  out.flags.additive_subgroup = is_additive_subgroup(out);
  out.flags.left_ideal = is_left_ideal(out);
  out.flags.right_ideal = is_right_ideal(out);
  out.flags.two_sided_ideal = out.flags.left_ideal && out.flags.right_ideal;
  if (!out.flags.two_sided_ideal)
    throw CheckFailure("annihilator failed the ideal test");
  return out;
}

CentralGeneration is_centrally_generated(const RRngStructure& x) {
  CentralGeneration out;
  const FiniteRng& i = *x.rng;
  for (Elem v = 0; v < i.order(); ++v) {
    bool central = true;
    for (Elem r = 0; r < x.ring->order() && central; ++r)
      central = x.lact(r, v) == x.ract(v, r);
    if (central) out.central_elements.push_back(v);
  }
  // Left R-module closure of the central elements.
  std::vector<char> in(i.order(), 0);
  std::vector<Elem> stack, members;
  auto push = [&](Elem v) {
    if (!in[v]) {
      in[v] = 1;
      stack.push_back(v);
    }
  };
  push(0);
  for (Elem v : out.central_elements) push(v);
  while (!stack.empty()) {
    Elem v = stack.back();
    stack.pop_back();
    members.push_back(v);
    for (Elem w : members) push(i.add(v, w));
    for (Elem r = 0; r < x.ring->order(); ++r) push(x.lact(r, v));
  }
  out.centrally_generated = members.size() == static_cast<size_t>(i.order());
  return out;
}

DorrohRing dorroh_extend(const RRngPtr& x, const Config& cfg) {
  const FiniteRng& r = *x->ring;
  const FiniteRng& i = *x->rng;
  long long order = static_cast<long long>(r.order()) * i.order();
  if (order > cfg.order_cap)
    throw OrderCapExceeded("Dorroh extension order exceeds cap");
  int n = static_cast<int>(order);
  int ni = i.order();

  std::vector<Elem> add(static_cast<size_t>(n) * n), mul(add.size());
  for (Elem e = 0; e < n; ++e) {
    Elem er = e / ni, ei = e % ni;
    for (Elem f = 0; f < n; ++f) {
      Elem fr = f / ni, fi = f % ni;
      add[e * n + f] = r.add(er, fr) * ni + i.add(ei, fi);
      // (r,i)(p,j) = (rp, ip + rj + ij)
      Elem second = i.add(i.add(x->ract(ei, fr), x->lact(er, fi)),
                          i.mul(ei, fi));
      mul[e * n + f] = r.mul(er, fr) * ni + second;
    }
  }
  Notation nota;
  nota.kind = Notation::Kind::pair;
  nota.pair_ring = x->ring;
  nota.pair_rng = x->rng;
  Elem unit = *r.unit() * ni + 0;
  DorrohRing out;
  out.source = x;
  out.ext = std::make_shared<FiniteRng>(n, std::move(add), std::move(mul),
                                        unit, std::move(nota));
  return out;
}

IdealSubset embedded_rng_ideal(const DorrohRing& e) {
  std::vector<Elem> members;
  for (Elem i = 0; i < e.source->rng->order(); ++i)
    members.push_back(e.encode(0, i));
  return IdealSubset(e.ext, std::move(members));
}

IdealSubset embedded_ring_subring(const DorrohRing& e) {
  std::vector<Elem> members;
  for (Elem r = 0; r < e.source->ring->order(); ++r)
    members.push_back(e.encode(r, 0));
  return IdealSubset(e.ext, std::move(members));
}

// ---- R-homomorphisms -------------------------------------------------------

ActionTarget target_ring(const RngPtr& ring) {
  ActionTarget t;
  t.ring = ring;
  t.t = ring;
  int n = ring->order();
  t.left.resize(static_cast<size_t>(n) * n);
  t.right.resize(t.left.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x) {
      t.left[a * n + x] = ring->mul(a, x);
      t.right[x * n + a] = ring->mul(x, a);
    }
  t.proj.resize(n);
  for (Elem a = 0; a < n; ++a) t.proj[a] = a;
  return t;
}

ActionTarget target_quotient(const RngPtr& ring, const IdealSubset& z) {
  auto q = quotient_rng(ring, z);
  ActionTarget t;
  t.ring = ring;
  t.t = q.quotient;
  int nr = ring->order(), nt = q.quotient->order();
  const auto& reps = q.quotient->notation().reps;
  t.left.resize(static_cast<size_t>(nr) * nt);
  t.right.resize(static_cast<size_t>(nt) * nr);
  for (Elem a = 0; a < nr; ++a)
    for (Elem x = 0; x < nt; ++x) {
      t.left[a * nt + x] = q.projection(ring->mul(a, reps[x]));
      t.right[x * nr + a] = q.projection(ring->mul(reps[x], a));
    }
  t.proj = q.projection.map;
  return t;
}

bool RHomomorphism::total() const {
  return domain.size() == structure->rng->order();
}

bool RHomomorphism::injective() const {
  std::vector<char> hit(target.t->order(), 0);
  for (Elem j : domain.members()) {
    if (hit[dense[j]]) return false;
    hit[dense[j]] = 1;
  }
  return true;
}

std::vector<Elem> RHomomorphism::image_tuple() const {
  std::vector<Elem> out;
  out.reserve(domain.members().size());
  for (Elem j : domain.members()) out.push_back(dense[j]);
  return out;
}

std::vector<AxiomViolation> check_r_homomorphism(const RHomomorphism& h) {
  std::vector<AxiomViolation> out;
  const RRngStructure& x = *h.structure;
  const FiniteRng& i = *x.rng;
  const FiniteRng& t = *h.target.t;
  const auto& mem = h.domain.members();
  for (Elem a : mem)
    for (Elem b : mem) {
      if (h.dense[i.add(a, b)] != t.add(h.dense[a], h.dense[b])) {
        out.push_back({"hom-additive", {a, b}, ""});
        goto mult;
      }
    }
mult:
  for (Elem a : mem)
    for (Elem b : mem) {
      if (h.dense[i.mul(a, b)] != t.mul(h.dense[a], h.dense[b])) {
        out.push_back({"hom-multiplicative", {a, b}, ""});
        goto equiv;
      }
    }
equiv:
  for (Elem r = 0; r < x.ring->order(); ++r)
    for (Elem a : mem) {
      if (h.dense[x.lact(r, a)] != h.target.lact(r, h.dense[a]) ||
          h.dense[x.ract(a, r)] != h.target.ract(h.dense[a], r)) {
        out.push_back({"hom-equivariant", {r, a}, ""});
        return out;
      }
    }
  return out;
}

namespace {

struct HomSearch {
  const RRngStructure& x;
  const FiniteRng& i;
  const ActionTarget& tgt;
  const FiniteRng& t;
  const std::vector<Elem>& members;
  long long budget;
  long long nodes = 0;

  std::vector<Elem> gens;
  std::vector<Elem> img;     // dense over I, -1 unknown
  std::vector<Elem> known;   // assigned domain elements, in assignment order
  std::vector<std::vector<Elem>> found;

  HomSearch(const RRngStructure& xs, const ActionTarget& target,
            const IdealSubset& j, long long b)
      : x(xs), i(*xs.rng), tgt(target), t(*target.t), members(j.members()),
        budget(b), img(i.order(), -1) {
    // Greedy minimal additive generating set, by element index.
    std::vector<char> span(i.order(), 0);
    span[0] = 1;
    std::vector<Elem> span_list = {0};
    for (Elem m : members) {
      if (span[m]) continue;
      gens.push_back(m);
      std::vector<Elem> stack = {m};
      span[m] = 1;
      span_list.push_back(m);
      while (!stack.empty()) {
        Elem v = stack.back();
        stack.pop_back();
        for (size_t k = 0; k < span_list.size(); ++k) {
          Elem s = i.add(v, span_list[k]);
          if (!span[s]) {
            span[s] = 1;
            span_list.push_back(s);
            stack.push_back(s);
          }
        }
      }
    }
  }

  bool extend(Elem g, Elem value, size_t& trail_mark) {
    trail_mark = known.size();
    std::vector<std::pair<Elem, Elem>> queue = {{g, value}};
    while (!queue.empty()) {
      auto [a, v] = queue.back();
      queue.pop_back();
      if (img[a] != -1) {
        if (img[a] != v) return false;
        continue;
      }
      img[a] = v;
      known.push_back(a);
      for (size_t k = 0; k < known.size(); ++k) {
        Elem b = known[k];
        queue.push_back({i.add(a, b), t.add(v, img[b])});
      }
    }
    return true;
  }

  void rollback(size_t trail_mark) {
    while (known.size() > trail_mark) {
      img[known.back()] = -1;
      known.pop_back();
    }
  }

  void finalize() {
    for (Elem a : members)
      for (Elem b : members)
        if (img[i.mul(a, b)] != t.mul(img[a], img[b])) return;
    for (Elem r = 0; r < x.ring->order(); ++r)
      for (Elem a : members)
        if (img[x.lact(r, a)] != tgt.lact(r, img[a]) ||
            img[x.ract(a, r)] != tgt.ract(img[a], r))
          return;
    found.push_back(img);
  }

  void rec(size_t k) {
    if (k == gens.size()) {
      finalize();
      return;
    }
    for (Elem v = 0; v < t.order(); ++v) {
      if (++nodes > budget)
        throw SearchBudgetExceeded("homomorphism search budget exhausted");
      size_t mark = 0;
      if (extend(gens[k], v, mark)) rec(k + 1);
      rollback(mark);
    }
  }

  void run() {
    size_t mark = 0;
    extend(0, 0, mark);  // zero maps to zero
    rec(0);
  }
};

}  // namespace

std::vector<RHomomorphism> enumerate_r_homs(const RRngPtr& x,
                                            const IdealSubset& j,
                                            const ActionTarget& target,
                                            const Config& cfg) {
  if (j.ambient().get() != x->rng.get())
    throw Error(ErrorClass::input, "hom search: domain has a different ambient");
  // The domain must be an R-subrng: additive subgroup closed under both
  // actions and its own multiplication.
  const FiniteRng& irng = *x->rng;
  if (!is_additive_subgroup(j))
    throw Error(ErrorClass::input, "hom search: domain not a subgroup");
  for (Elem a : j.members()) {
    for (Elem b : j.members())
      if (!j.contains(irng.mul(a, b)))
        throw Error(ErrorClass::input, "hom search: domain not a subrng");
    for (Elem r = 0; r < x->ring->order(); ++r)
      if (!j.contains(x->lact(r, a)) || !j.contains(x->ract(a, r)))
        throw Error(ErrorClass::input, "hom search: domain not a subbimodule");
  }
  HomSearch search(*x, target, j, cfg.search_budget);
  search.run();

  std::vector<RHomomorphism> out;
  out.reserve(search.found.size());
  for (auto& dense : search.found) {
    RHomomorphism h;
    h.structure = x;
    h.domain = j;
    h.target = target;
    h.dense = std::move(dense);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(),
            [](const RHomomorphism& a, const RHomomorphism& b) {
              return a.image_tuple() < b.image_tuple();
            });
  return out;
}

bool is_multiplicative_retraction(const RRngStructure& x,
                                  const RHomomorphism& phi) {
  if (!phi.total() || phi.target.t.get() != x.ring.get()) return false;
  const FiniteRng& i = *x.rng;
  for (Elem a = 0; a < i.order(); ++a)
    for (Elem b = 0; b < i.order(); ++b) {
      Elem ab = i.mul(a, b);
      if (x.ract(a, phi.dense[b]) != ab) return false;
      if (x.lact(phi.dense[a], b) != ab) return false;
    }
  return true;
}

std::vector<RHomomorphism> find_retractions(const RRngPtr& x,
                                            const Config& cfg) {
  std::vector<Elem> all(x->rng->order());
  for (Elem v = 0; v < x->rng->order(); ++v) all[v] = v;
  IdealSubset full(x->rng, std::move(all));
  auto homs = enumerate_r_homs(x, full, target_ring(x->ring), cfg);
  std::vector<RHomomorphism> out;
  for (auto& h : homs)
    if (is_multiplicative_retraction(*x, h)) out.push_back(std::move(h));
  return out;
}

RngMorphism psi_automorphism(const DorrohRing& e, const RHomomorphism& phi) {
  if (!is_multiplicative_retraction(*e.source, phi))
    throw NotARetraction("psi needs a multiplicative retraction");
  const FiniteRng& r = *e.source->ring;
  const FiniteRng& i = *e.source->rng;
  RngMorphism psi;
  psi.source = e.ext;
  psi.target = e.ext;
  psi.map.resize(e.ext->order());
  for (Elem x = 0; x < e.ext->order(); ++x) {
    auto [er, ei] = e.decode(x);
    psi.map[x] = e.encode(r.add(er, phi.dense[ei]), i.neg(ei));
  }
  return psi;
}

IdealSubset graph_subset(const DorrohRing& e, const RHomomorphism& phi,
                         const IdealSubset& j) {
  const FiniteRng& i = *e.source->rng;
  std::vector<Elem> members;
  for (Elem v : j.members())
    members.push_back(e.encode(phi.dense[v], i.neg(v)));
  return IdealSubset(e.ext, std::move(members));
}

}  // namespace ringlab
