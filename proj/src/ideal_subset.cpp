#include "ringlab/ideal_subset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ringlab {

IdealSubset::IdealSubset(RngPtr ambient, std::vector<Elem> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  mask_.assign(ambient_->order(), 0);
  for (Elem x : members_) {
    if (x < 0 || x >= ambient_->order())
      throw DimensionMismatch("subset member out of range");
    mask_[x] = 1;
  }
}

bool IdealSubset::is_all() const { return size() == ambient_->order(); }

std::string show_subset(const IdealSubset& s) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < s.members().size(); ++i) {
    if (i) out << ", ";
    out << s.members()[i];
  }
  out << "}";
  return out.str();
}

std::string show_subset_rendered(const IdealSubset& s) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < s.members().size(); ++i) {
    if (i) out << ", ";
    out << s.ambient()->show(s.members()[i]);
  }
  out << "}";
  return out.str();
}

bool is_additive_subgroup(const IdealSubset& s) {
  const FiniteRng& r = *s.ambient();
  if (!s.contains(0)) return false;
  for (Elem a : s.members()) {
    if (!s.contains(r.neg(a))) return false;
    for (Elem b : s.members())
      if (!s.contains(r.add(a, b))) return false;
  }
  return true;
}

bool is_left_ideal(const IdealSubset& s) {
  if (!is_additive_subgroup(s)) return false;
  const FiniteRng& r = *s.ambient();
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem x : s.members())
      if (!s.contains(r.mul(a, x))) return false;
  return true;
}

bool is_right_ideal(const IdealSubset& s) {
  if (!is_additive_subgroup(s)) return false;
  const FiniteRng& r = *s.ambient();
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem x : s.members())
      if (!s.contains(r.mul(x, a))) return false;
  return true;
}

bool is_two_sided_ideal(const IdealSubset& s) {
  return is_left_ideal(s) && is_right_ideal(s);
}

namespace {

// Worklist closure helper: start from seed + 0, close under addition among
// members and whatever `expand` pushes per element.
template <typename Expand>
std::vector<Elem> close_set(const FiniteRng& r, std::span<const Elem> seed,
                            Expand expand) {
  std::vector<char> in(r.order(), 0);
  std::vector<Elem> members, stack;
  auto push = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      stack.push_back(x);
    }
  };
  push(0);
  for (Elem x : seed) {
    if (x < 0 || x >= r.order())
      throw DimensionMismatch("seed element out of range");
    push(x);
  }
  while (!stack.empty()) {
    Elem x = stack.back();
    stack.pop_back();
    members.push_back(x);
    push(r.neg(x));
    for (Elem y : members) {
      push(r.add(x, y));
    }
    expand(x, push);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

IdealSubset generated_two_sided_ideal(const RngPtr& ambient,
                                      std::span<const Elem> seed) {
  const FiniteRng& r = *ambient;
  auto members = close_set(r, seed, [&](Elem x, auto push) {
    for (Elem a = 0; a < r.order(); ++a) {
      push(r.mul(a, x));
      push(r.mul(x, a));
    }
  });
  IdealSubset out(ambient, std::move(members));
  out.flags.additive_subgroup = true;
  out.flags.left_ideal = out.flags.right_ideal = out.flags.two_sided_ideal =
      true;
  return out;
}

IdealSubset generated_left_ideal(const RngPtr& ambient,
                                 std::span<const Elem> seed) {
  const FiniteRng& r = *ambient;
  auto members = close_set(r, seed, [&](Elem x, auto push) {
    for (Elem a = 0; a < r.order(); ++a) push(r.mul(a, x));
  });
  IdealSubset out(ambient, std::move(members));
  out.flags.additive_subgroup = true;
  out.flags.left_ideal = true;
  return out;
}

std::vector<IdealSubset> enumerate_ideals(const RngPtr& ambient,
                                          bool left_only, const Config& cfg) {
  const FiniteRng& r = *ambient;
  if (r.order() > cfg.enum_cap)
    throw OrderCapExceeded("ideal enumeration beyond cap: order " +
                           std::to_string(r.order()));

  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> list;
  auto insert = [&](std::vector<Elem> m) {
    if (seen.insert(m).second) {
      list.push_back(std::move(m));
      if (list.size() > 65536)
        throw SearchBudgetExceeded("ideal lattice too large");
      return true;
    }
    return false;
  };

  for (Elem x = 0; x < r.order(); ++x) {
    Elem seed[1] = {x};
    auto p = left_only ? generated_left_ideal(ambient, seed)
                       : generated_two_sided_ideal(ambient, seed);
    insert(p.members());
  }
  // Join of two ideals is the elementwise sum-set.
  auto join = [&](const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::vector<char> in(r.order(), 0);
    for (Elem x : a)
      for (Elem y : b) in[r.add(x, y)] = 1;
    std::vector<Elem> out;
    for (Elem e = 0; e < r.order(); ++e)
      if (in[e]) out.push_back(e);
    return out;
  };
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j < i; ++j) insert(join(list[i], list[j]));

  std::sort(list.begin(), list.end(),
            [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<IdealSubset> out;
  out.reserve(list.size());
  for (auto& m : list) {
    IdealSubset s(ambient, std::move(m));
    s.flags.additive_subgroup = true;
    s.flags.left_ideal = true;
    if (!left_only) {
      s.flags.right_ideal = true;
      s.flags.two_sided_ideal = true;
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Additive span of a set of elements.
std::vector<Elem> additive_span(const FiniteRng& r, std::span<const Elem> xs) {
  return close_set(r, xs, [](Elem, auto) {});
}

}  // namespace

NilpotencyResult is_nilpotent_ideal(const IdealSubset& k) {
  const FiniteRng& r = *k.ambient();
  std::vector<Elem> cur = additive_span(r, k.members());
  // span(K) = 0 iff K = {0}; from then on iterate span(P * K).
  for (int n = 1; n <= r.order() + 1; ++n) {
    if (cur.size() == 1 && cur[0] == 0) return {true, n};
    std::vector<Elem> products;
    products.reserve(cur.size() * k.members().size());
    for (Elem a : cur)
      for (Elem b : k.members()) products.push_back(r.mul(a, b));
    std::vector<Elem> next = additive_span(r, products);
    if (next == cur) return {false, 0};  // stabilized above zero
    cur = std::move(next);
  }
  return {false, 0};
}

NilResult is_nil_ideal(const IdealSubset& k) {
  const FiniteRng& r = *k.ambient();
  NilResult out;
  out.nil = true;
  for (Elem x : k.members()) {
    Elem p = x;
    int n = 1;
    std::vector<char> seen(r.order(), 0);
    while (p != 0 && !seen[p]) {
      seen[p] = 1;
      p = r.mul(p, x);
      ++n;
    }
    if (p != 0) {
      out.nil = false;
      out.witness = x;
      return out;
    }
    out.max_exponent = std::max(out.max_exponent, n);
  }
  return out;
}

IdealSubset rng_annihilator(const RngPtr& rng) {
  const FiniteRng& r = *rng;
  std::vector<Elem> members;
  for (Elem x = 0; x < r.order(); ++x) {
    bool ann = true;
    for (Elem y = 0; y < r.order() && ann; ++y)
      ann = r.mul(x, y) == 0 && r.mul(y, x) == 0;
    if (ann) members.push_back(x);
  }
  IdealSubset out(rng, std::move(members));
  out.flags.additive_subgroup = is_additive_subgroup(out);
  out.flags.left_ideal = is_left_ideal(out);
  out.flags.right_ideal = is_right_ideal(out);
  out.flags.two_sided_ideal = out.flags.left_ideal && out.flags.right_ideal;
  if (!out.flags.two_sided_ideal)
    throw CheckFailure("rng annihilator failed the ideal test");
  return out;
}

QuotientResult quotient_rng(const RngPtr& r, const IdealSubset& k) {
  if (k.ambient().get() != r.get())
    throw Error(ErrorClass::input, "quotient: subset has a different ambient");
  if (!is_two_sided_ideal(k))
    throw NotAnIdeal("quotient by a subset that is not a two-sided ideal");

  const FiniteRng& ring = *r;
  int n = ring.order();
  std::vector<Elem> rep(n, -1);
  for (Elem x = 0; x < n; ++x) {
    Elem m = x;
    for (Elem z : k.members()) m = std::min(m, ring.add(x, z));
    rep[x] = m;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::map<Elem, Elem> index_of;
  for (size_t i = 0; i < reps.size(); ++i)
    index_of[reps[i]] = static_cast<Elem>(i);

  int q = static_cast<int>(reps.size());
  std::vector<Elem> add(static_cast<size_t>(q) * q), mul(add.size());
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b) {
      add[a * q + b] = index_of[rep[ring.add(reps[a], reps[b])]];
      mul[a * q + b] = index_of[rep[ring.mul(reps[a], reps[b])]];
    }
  std::optional<Elem> unit;
  if (ring.unital()) {
    unit = index_of[rep[*ring.unit()]];
  } else {
    for (Elem u = 0; u < q && !unit; ++u) {
      bool ok = true;
      for (Elem a = 0; a < q && ok; ++a)
        ok = mul[u * q + a] == a && mul[a * q + u] == a;
      if (ok) unit = u;
    }
  }
  Notation nota;
  nota.kind = Notation::Kind::quotient;
  nota.base = r;
  nota.reps = reps;
  auto quot = std::make_shared<FiniteRng>(q, std::move(add), std::move(mul),
                                          unit, std::move(nota));
  RngMorphism proj;
  proj.source = r;
  proj.target = quot;
  proj.map.resize(n);
  for (Elem x = 0; x < n; ++x) proj.map[x] = index_of[rep[x]];
  return {std::move(quot), std::move(proj)};
}

}  // namespace ringlab
