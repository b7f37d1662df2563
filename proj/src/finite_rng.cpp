#include "ringlab/finite_rng.hpp"

#include <algorithm>
#include <sstream>

namespace ringlab {

std::string describe_violations(const std::vector<AxiomViolation>& vs) {
  std::ostringstream out;
  out << vs.size() << " axiom violation(s)";
  for (const auto& v : vs) {
    out << "; " << v.axiom << " at (";
    for (size_t i = 0; i < v.witnesses.size(); ++i) {
      if (i) out << ",";
      out << v.witnesses[i];
    }
    out << ")";
  }
  return out.str();
}

InvalidDecomposition::InvalidDecomposition(std::string condition,
                                           std::vector<int> witness)
    : Error(ErrorClass::input, "invalid decomposition: " + condition),
      condition_(std::move(condition)),
      witness_(std::move(witness)) {}

FiniteRng::FiniteRng(int order, std::vector<Elem> add, std::vector<Elem> mul,
                     std::optional<Elem> unit, Notation notation)
    : order_(order),
      add_(std::move(add)),
      mul_(std::move(mul)),
      unit_(unit),
      notation_(std::move(notation)) {
  if (order_ < 1 ||
      add_.size() != static_cast<size_t>(order_) * order_ ||
      mul_.size() != add_.size()) {
    throw DimensionMismatch("operation tables must be order x order");
  }
  neg_.assign(order_, -1);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (add_[a * order_ + b] == 0) {
        neg_[a] = b;
        break;
      }
    }
    if (neg_[a] < 0)
      throw DimensionMismatch("additive inverse missing; tables not a group");
  }
  commutative_ = true;
  for (Elem a = 0; a < order_ && commutative_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul_[a * order_ + b] != mul_[b * order_ + a]) {
        commutative_ = false;
        break;
      }
}

Elem FiniteRng::pow(Elem a, int n) const {
  if (n == 0) {
    if (!unit_) throw Error(ErrorClass::input, "x^0 needs a unit");
    return *unit_;
  }
  Elem acc = a;
  for (int i = 1; i < n; ++i) acc = mul(acc, a);
  return acc;
}

Elem FiniteRng::times(int n, Elem a) const {
  Elem x = n < 0 ? neg(a) : a;
  int m = n < 0 ? -n : n;
  Elem acc = 0;
  for (int i = 0; i < m; ++i) acc = add(acc, x);
  return acc;
}

namespace {

std::string show_matrix(const FiniteRng& rng, const Notation& n, Elem a) {
  int p = static_cast<int>(n.positions.size());
  int base_order = n.base->order();
  std::vector<Elem> digit(p, 0);
  Elem rest = a;
  for (int i = p - 1; i >= 0; --i) {
    digit[i] = rest % base_order;
    rest /= base_order;
  }
  std::vector<std::vector<Elem>> grid(n.dim, std::vector<Elem>(n.dim, 0));
  for (int i = 0; i < p; ++i)
    grid[n.positions[i].first][n.positions[i].second] = digit[i];
  (void)rng;
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < n.dim; ++r) {
    if (r) out << "; ";
    for (int c = 0; c < n.dim; ++c) {
      if (c) out << " ";
      out << n.base->show(grid[r][c]);
    }
  }
  out << "]";
  return out.str();
}

}  // namespace

std::string FiniteRng::show(Elem a) const {
  const Notation& n = notation_;
  switch (n.kind) {
    case Notation::Kind::cyclic:
      return std::to_string(a);
    case Notation::Kind::matrix:
      return show_matrix(*this, n, a);
    case Notation::Kind::product: {
      std::vector<Elem> parts(n.factors.size());
      Elem rest = a;
      for (int i = static_cast<int>(n.factors.size()) - 1; i >= 0; --i) {
        parts[i] = rest % n.factors[i]->order();
        rest /= n.factors[i]->order();
      }
      std::ostringstream out;
      out << "(";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ", ";
        out << n.factors[i]->show(parts[i]);
      }
      out << ")";
      return out.str();
    }
    case Notation::Kind::trivial:
      return n.base->show(a);
    case Notation::Kind::subset:
    case Notation::Kind::quotient:
      return n.base->show(n.reps[a]);
    case Notation::Kind::pair: {
      int ni = n.pair_rng->order();
      return "(" + n.pair_ring->show(a / ni) + ", " +
             n.pair_rng->show(a % ni) + ")";
    }
    case Notation::Kind::opaque:
    default:
      return std::to_string(a);
  }
}

std::vector<AxiomViolation> check_rng_axioms(
    int order, std::span<const Elem> add, std::span<const Elem> mul,
    std::optional<Elem> unit, std::optional<Elem>* detected_unit) {
  if (order < 1) throw DimensionMismatch("order must be positive");
  size_t n2 = static_cast<size_t>(order) * order;
  if (add.size() != n2 || mul.size() != n2)
    throw DimensionMismatch("operation tables must be order x order");
  for (Elem x : add)
    if (x < 0 || x >= order)
      throw DimensionMismatch("addition table entry out of range");
  for (Elem x : mul)
    if (x < 0 || x >= order)
      throw DimensionMismatch("multiplication table entry out of range");
  if (unit && (*unit < 0 || *unit >= order))
    throw DimensionMismatch("unit index out of range");

  auto at = [order](std::span<const Elem> t, Elem a, Elem b) {
    return t[a * order + b];
  };
  std::vector<AxiomViolation> out;
  auto report = [&out](const std::string& axiom, std::vector<int> w) {
    out.push_back({axiom, std::move(w), ""});
  };

  // abelian group axioms
  for (Elem a = 0; a < order; ++a)
    if (at(add, 0, a) != a || at(add, a, 0) != a) {
      report("add-identity", {a});
      break;
    }
  [&] {
    for (Elem a = 0; a < order; ++a)
      for (Elem b = a + 1; b < order; ++b)
        if (at(add, a, b) != at(add, b, a)) {
          report("add-commutativity", {a, b});
          return;
        }
  }();
  [&] {
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b)
        for (Elem c = 0; c < order; ++c)
          if (at(add, at(add, a, b), c) != at(add, a, at(add, b, c))) {
            report("add-associativity", {a, b, c});
            return;
          }
  }();
  for (Elem a = 0; a < order; ++a) {
    bool has = false;
    for (Elem b = 0; b < order && !has; ++b)
      if (at(add, a, b) == 0) has = true;
    if (!has) {
      report("add-inverses", {a});
      break;
    }
  }

  [&] {
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b)
        for (Elem c = 0; c < order; ++c)
          if (at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c))) {
            report("mul-associativity", {a, b, c});
            return;
          }
  }();
  [&] {
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b)
        for (Elem c = 0; c < order; ++c)
          if (at(mul, a, at(add, b, c)) !=
              at(add, at(mul, a, b), at(mul, a, c))) {
            report("left-distributivity", {a, b, c});
            return;
          }
  }();
  [&] {
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b)
        for (Elem c = 0; c < order; ++c)
          if (at(mul, at(add, a, b), c) !=
              at(add, at(mul, a, c), at(mul, b, c))) {
            report("right-distributivity", {a, b, c});
            return;
          }
  }();
  for (Elem a = 0; a < order; ++a)
    if (at(mul, 0, a) != 0 || at(mul, a, 0) != 0) {
      report("zero-annihilation", {a});
      break;
    }
  if (unit) {
    for (Elem a = 0; a < order; ++a)
      if (at(mul, *unit, a) != a || at(mul, a, *unit) != a) {
        report("unitality", {*unit, a});
        break;
      }
  } else if (detected_unit) {
    *detected_unit = std::nullopt;
    for (Elem u = 0; u < order; ++u) {
      bool ok = true;
      for (Elem a = 0; a < order && ok; ++a)
        ok = at(mul, u, a) == a && at(mul, a, u) == a;
      if (ok) {
        *detected_unit = u;
        break;
      }
    }
  }
  return out;
}

RngPtr validate_rng(int order, std::vector<Elem> add, std::vector<Elem> mul,
                    std::optional<Elem> unit, Notation notation) {
  std::optional<Elem> detected;
  auto violations = check_rng_axioms(order, add, mul, unit, &detected);
  if (!violations.empty()) throw AxiomError(std::move(violations));
  if (!unit) unit = detected;
  return std::make_shared<FiniteRng>(order, std::move(add), std::move(mul),
                                     unit, std::move(notation));
}

std::vector<AxiomViolation> check_morphism(const RngMorphism& m) {
  std::vector<AxiomViolation> out;
  const FiniteRng& s = *m.source;
  const FiniteRng& t = *m.target;
  if (m.map.size() != static_cast<size_t>(s.order()))
    throw DimensionMismatch("morphism table size mismatch");
  for (Elem a = 0; a < s.order(); ++a)
    for (Elem b = 0; b < s.order(); ++b) {
      if (m.map[s.add(a, b)] != t.add(m.map[a], m.map[b])) {
        out.push_back({"morphism-additive", {a, b}, ""});
        goto mult;
      }
    }
mult:
  for (Elem a = 0; a < s.order(); ++a)
    for (Elem b = 0; b < s.order(); ++b) {
      if (m.map[s.mul(a, b)] != t.mul(m.map[a], m.map[b])) {
        out.push_back({"morphism-multiplicative", {a, b}, ""});
        return out;
      }
    }
  return out;
}

bool morphism_surjective(const RngMorphism& m) {
  std::vector<char> hit(m.target->order(), 0);
  for (Elem v : m.map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<Elem> morphism_kernel(const RngMorphism& m) {
  std::vector<Elem> out;
  for (Elem a = 0; a < m.source->order(); ++a)
    if (m.map[a] == 0) out.push_back(a);
  return out;
}

// ---- builders -------------------------------------------------------------

RngPtr cyclic_ring(int n, const Config& cfg) {
  if (n < 1) throw Error(ErrorClass::input, "cyclic ring needs n >= 1");
  if (n > cfg.order_cap)
    throw OrderCapExceeded("cyclic ring of order " + std::to_string(n));
  std::vector<Elem> add(static_cast<size_t>(n) * n), mul(add.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = static_cast<Elem>((static_cast<long long>(a) * b) % n);
    }
  Notation nota;
  nota.kind = Notation::Kind::cyclic;
  nota.modulus = n;
  return std::make_shared<FiniteRng>(n, std::move(add), std::move(mul),
                                     Elem{1 % n}, std::move(nota));
}

namespace {

RngPtr build_matrix_like(const RngPtr& base, int k, bool upper_only,
                         const Config& cfg) {
  if (!base->unital())
    throw Error(ErrorClass::input, "matrix ring needs a unital base");
  if (k < 1) throw Error(ErrorClass::input, "matrix ring needs k >= 1");
  std::vector<std::pair<int, int>> positions;
  for (int r = 0; r < k; ++r)
    for (int c = upper_only ? r : 0; c < k; ++c) positions.push_back({r, c});
  int p = static_cast<int>(positions.size());

  long long order = 1;
  for (int i = 0; i < p; ++i) {
    order *= base->order();
    if (order > cfg.order_cap)
      throw OrderCapExceeded("matrix ring order exceeds cap");
  }
  int n = static_cast<int>(order);

  auto decode = [&](Elem e, std::vector<std::vector<Elem>>& grid) {
    for (auto& row : grid) std::fill(row.begin(), row.end(), 0);
    for (int i = p - 1; i >= 0; --i) {
      grid[positions[i].first][positions[i].second] = e % base->order();
      e /= base->order();
    }
  };
  auto encode = [&](const std::vector<std::vector<Elem>>& grid) {
    Elem e = 0;
    for (int i = 0; i < p; ++i)
      e = e * base->order() + grid[positions[i].first][positions[i].second];
    return e;
  };

  std::vector<Elem> add(static_cast<size_t>(n) * n), mul(add.size());
  std::vector<std::vector<Elem>> ga(k, std::vector<Elem>(k)), gb = ga, gc = ga;
  for (Elem a = 0; a < n; ++a) {
    decode(a, ga);
    for (Elem b = 0; b < n; ++b) {
      decode(b, gb);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) gc[r][c] = base->add(ga[r][c], gb[r][c]);
      add[a * n + b] = encode(gc);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
          Elem acc = 0;
          for (int m = 0; m < k; ++m)
            acc = base->add(acc, base->mul(ga[r][m], gb[m][c]));
          gc[r][c] = acc;
        }
      mul[a * n + b] = encode(gc);
    }
  }
  std::vector<std::vector<Elem>> id(k, std::vector<Elem>(k, 0));
  for (int r = 0; r < k; ++r) id[r][r] = *base->unit();
  Elem unit = encode(id);

  Notation nota;
  nota.kind = Notation::Kind::matrix;
  nota.dim = k;
  nota.positions = positions;
  nota.base = base;
  return std::make_shared<FiniteRng>(n, std::move(add), std::move(mul), unit,
                                     std::move(nota));
}

}  // namespace

RngPtr matrix_ring(const RngPtr& base, int k, const Config& cfg) {
  return build_matrix_like(base, k, false, cfg);
}

RngPtr upper_triangular_ring(const RngPtr& base, int k, const Config& cfg) {
  return build_matrix_like(base, k, true, cfg);
}

RngPtr direct_product(const std::vector<RngPtr>& factors, const Config& cfg) {
  if (factors.empty())
    throw Error(ErrorClass::input, "direct product needs at least one factor");
  long long order = 1;
  for (const auto& f : factors) {
    order *= f->order();
    if (order > cfg.order_cap)
      throw OrderCapExceeded("product order exceeds cap");
  }
  int n = static_cast<int>(order);
  int nf = static_cast<int>(factors.size());

  std::vector<Elem> parts_a(nf), parts_b(nf), parts_c(nf);
  auto decode = [&](Elem e, std::vector<Elem>& parts) {
    for (int i = nf - 1; i >= 0; --i) {
      parts[i] = e % factors[i]->order();
      e /= factors[i]->order();
    }
  };
  auto encode = [&](const std::vector<Elem>& parts) {
    Elem e = 0;
    for (int i = 0; i < nf; ++i) e = e * factors[i]->order() + parts[i];
    return e;
  };

  std::vector<Elem> add(static_cast<size_t>(n) * n), mul(add.size());
  for (Elem a = 0; a < n; ++a) {
    decode(a, parts_a);
    for (Elem b = 0; b < n; ++b) {
      decode(b, parts_b);
      for (int i = 0; i < nf; ++i)
        parts_c[i] = factors[i]->add(parts_a[i], parts_b[i]);
      add[a * n + b] = encode(parts_c);
      for (int i = 0; i < nf; ++i)
        parts_c[i] = factors[i]->mul(parts_a[i], parts_b[i]);
      mul[a * n + b] = encode(parts_c);
    }
  }
  std::optional<Elem> unit;
  if (std::all_of(factors.begin(), factors.end(),
                  [](const RngPtr& f) { return f->unital(); })) {
    std::vector<Elem> u(nf);
    for (int i = 0; i < nf; ++i) u[i] = *factors[i]->unit();
    unit = encode(u);
  }
  Notation nota;
  nota.kind = Notation::Kind::product;
  nota.factors = factors;
  return std::make_shared<FiniteRng>(n, std::move(add), std::move(mul), unit,
                                     std::move(nota));
}

RngPtr trivial_mult_rng(const RngPtr& carrier) {
  int n = carrier->order();
  std::vector<Elem> add(static_cast<size_t>(n) * n), mul(add.size(), 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) add[a * n + b] = carrier->add(a, b);
  std::optional<Elem> unit;
  if (n == 1) unit = 0;
  Notation nota;
  nota.kind = Notation::Kind::trivial;
  nota.base = carrier;
  return std::make_shared<FiniteRng>(n, std::move(add), std::move(mul), unit,
                                     std::move(nota));
}

}  // namespace ringlab
