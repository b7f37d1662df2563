#include "ringlab/eval.hpp"

#include <algorithm>

namespace ringlab {

const BoundObject* Session::find(const std::string& name) const {
  for (const auto& o : objects)
    if (o.name == name) return &o;
  return nullptr;
}

RngPtr value_rng(const Value& v) {
  if (const auto* p = std::get_if<RngPtr>(&v)) return *p;
  if (const auto* x = std::get_if<RRngPtr>(&v)) return (*x)->rng;
  if (const auto* e = std::get_if<DorrohRing>(&v)) return e->ext;
  throw Error(ErrorClass::input, "a phi value is not a rng");
}

namespace {

[[noreturn]] void kind_error(const Expr& e, const std::string& what) {
  throw Error(ErrorClass::input,
              "at " + std::to_string(e.loc.line) + ":" +
                  std::to_string(e.loc.col) + ": " + what);
}

long long arg_number(const Expr& call, size_t idx) {
  const Expr& a = *call.args[idx];
  if (a.kind != Expr::Kind::number)
    kind_error(a, "'" + call.name + "' expects a number here");
  return a.number;
}

std::vector<Elem> arg_set(const Expr& call, size_t idx) {
  const Expr& a = *call.args[idx];
  if (a.kind != Expr::Kind::set)
    kind_error(a, "'" + call.name + "' expects a set literal here");
  return a.set_values;
}

// Flattens a kwarg table literal into row-major form, checking the shape.
std::vector<Elem> kwarg_table(const Expr& call, const std::string& name,
                              int rows, int cols) {
  for (const auto& a : call.args) {
    if (a->kind != Expr::Kind::kwarg || a->name != name) continue;
    const Expr& t = *a->args[0];
    if (t.kind != Expr::Kind::table)
      kind_error(t, "'" + name + "' must be a table literal");
    if (static_cast<int>(t.table_rows.size()) != rows)
      throw DimensionMismatch("'" + name + "' needs " + std::to_string(rows) +
                              " rows");
    std::vector<Elem> flat;
    for (const auto& row : t.table_rows) {
      if (static_cast<int>(row.size()) != cols)
        throw DimensionMismatch("'" + name + "' needs " +
                                std::to_string(cols) + " columns per row");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  }
  throw Error(ErrorClass::input, "missing table argument '" + name + "'");
}

bool has_kwarg(const Expr& call, const std::string& name) {
  return std::any_of(call.args.begin(), call.args.end(), [&](const ExprPtr& a) {
    return a->kind == Expr::Kind::kwarg && a->name == name;
  });
}

long long kwarg_number(const Expr& call, const std::string& name) {
  for (const auto& a : call.args)
    if (a->kind == Expr::Kind::kwarg && a->name == name &&
        a->args[0]->kind == Expr::Kind::number)
      return a->args[0]->number;
  throw Error(ErrorClass::input, "missing numeric argument '" + name + "'");
}

}  // namespace

Value Evaluator::eval_expr(const Expr& e) {
  if (e.kind == Expr::Kind::ref) {
    const BoundObject* o = session_.find(e.name);
    if (!o) throw Error(ErrorClass::input, "unbound name " + e.name);
    return o->value;
  }
  if (e.kind != Expr::Kind::call)
    kind_error(e, "expected an expression");

  auto rng_arg = [&](size_t idx) {
    const Expr& a = *e.args[idx];
    if (a.kind != Expr::Kind::ref && a.kind != Expr::Kind::call)
      kind_error(a, "'" + e.name + "' expects a rng-valued argument here");
    return eval_expr(a);
  };
  auto ring_of = [&](const Value& v, const char* who) {
    RngPtr r = value_rng(v);
    if (!r->unital())
      throw Error(ErrorClass::input,
                  std::string(who) + " needs a unital ring argument");
    return r;
  };
  auto structure_of = [&](const Value& v) -> RRngPtr {
    if (const auto* x = std::get_if<RRngPtr>(&v)) return *x;
    if (const auto* d = std::get_if<DorrohRing>(&v)) return d->source;
    throw Error(ErrorClass::input,
                "'" + e.name + "' needs an rrng or ext argument");
  };

  if (e.name == "Z") return cyclic_ring(static_cast<int>(arg_number(e, 0)), cfg_);
  if (e.name == "Mat")
    return matrix_ring(ring_of(rng_arg(0), "Mat"),
                       static_cast<int>(arg_number(e, 1)), cfg_);
  if (e.name == "UT")
    return upper_triangular_ring(ring_of(rng_arg(0), "UT"),
                                 static_cast<int>(arg_number(e, 1)), cfg_);
  if (e.name == "product") {
    std::vector<Value> vals;
    for (size_t i = 0; i < e.args.size(); ++i) vals.push_back(rng_arg(i));
    bool all_rrng = std::all_of(vals.begin(), vals.end(), [](const Value& v) {
      return std::holds_alternative<RRngPtr>(v);
    });
    if (all_rrng) {
      std::vector<RRngPtr> parts;
      for (auto& v : vals) parts.push_back(std::get<RRngPtr>(v));
      return direct_sum_rrng(parts, cfg_);
    }
    std::vector<RngPtr> factors;
    for (auto& v : vals) factors.push_back(value_rng(v));
    return direct_product(factors, cfg_);
  }
  if (e.name == "trivial") return trivial_mult_rng(value_rng(rng_arg(0)));
  if (e.name == "ideal_of") {
    RngPtr r = ring_of(rng_arg(0), "ideal_of");
    auto subset = subset_predicates(r, arg_set(e, 1));
    return ideal_as_rrng(r, subset);
  }
  if (e.name == "quotient") {
    RngPtr r = value_rng(rng_arg(0));
    auto subset = subset_predicates(r, arg_set(e, 1));
    return quotient_rng(r, subset).quotient;
  }
  if (e.name == "dorroh") {
    Value v = rng_arg(0);
    const auto* x = std::get_if<RRngPtr>(&v);
    if (!x) throw Error(ErrorClass::input, "dorroh needs an rrng argument");
    return dorroh_extend(*x, cfg_);
  }
  if (e.name == "tables") {
    int n = static_cast<int>(arg_number(e, 0));
    auto add = kwarg_table(e, "add", n, n);
    auto mul = kwarg_table(e, "mul", n, n);
    std::optional<Elem> unit;
    if (has_kwarg(e, "unit")) unit = static_cast<Elem>(kwarg_number(e, "unit"));
    return validate_rng(n, std::move(add), std::move(mul), unit);
  }
  if (e.name == "rrng") {
    RngPtr r = ring_of(rng_arg(0), "rrng");
    RngPtr i = value_rng(rng_arg(1));
    auto left = kwarg_table(e, "left", r->order(), i->order());
    auto right = kwarg_table(e, "right", i->order(), r->order());
    return validate_rrng(r, i, std::move(left), std::move(right));
  }
  if (e.name == "cyclic_action")
    return cyclic_scalar_action(ring_of(rng_arg(0), "cyclic_action"),
                                value_rng(rng_arg(1)));
  if (e.name == "matmul_action")
    return matrix_mult_action(ring_of(rng_arg(0), "matmul_action"),
                              value_rng(rng_arg(1)));

  if (e.name == "inclusion" || e.name == "zero_phi" ||
      e.name == "retraction") {
    RRngPtr x = structure_of(rng_arg(0));
    PhiValue phi;
    phi.structure = x;
    std::vector<Elem> all(x->rng->order());
    for (Elem v = 0; v < x->rng->order(); ++v) all[v] = v;
    IdealSubset full(x->rng, std::move(all));

    if (e.name == "inclusion") {
      if (x->embed.empty())
        throw Error(ErrorClass::input,
                    "inclusion needs an ideal_of-built structure");
      phi.hom.structure = x;
      phi.hom.domain = full;
      phi.hom.target = target_ring(x->ring);
      phi.hom.dense = x->embed;
      phi.origin = "inclusion";
      if (!check_r_homomorphism(phi.hom).empty())
        throw Error(ErrorClass::input, "inclusion is not an R-homomorphism");
      return phi;
    }
    if (e.name == "zero_phi") {
      phi.hom.structure = x;
      phi.hom.domain = full;
      phi.hom.target = target_ring(x->ring);
      phi.hom.dense.assign(x->rng->order(), 0);
      phi.origin = "zero";
      return phi;
    }
    int k = static_cast<int>(arg_number(e, 1));
    auto retractions = find_retractions(x, cfg_);
    if (k < 0 || k >= static_cast<int>(retractions.size()))
      throw Error(ErrorClass::input,
                  "retraction index " + std::to_string(k) + " out of range (" +
                      std::to_string(retractions.size()) + " found)");
    phi.hom = retractions[k];
    phi.origin = "retraction " + std::to_string(k);
    return phi;
  }
  kind_error(e, "unknown builder '" + e.name + "'");
}

BoundObject Evaluator::eval_binding(const Binding& b) {
  Value v = eval_expr(*b.expr);
  switch (b.kind) {
    case BindingKind::ring: {
      const auto* r = std::get_if<RngPtr>(&v);
      if (!r || !(*r)->unital())
        throw Error(ErrorClass::input,
                    "binding '" + b.name + "': ring needs a unital rng value");
      break;
    }
    case BindingKind::rng:
      if (!std::holds_alternative<RngPtr>(v) &&
          !std::holds_alternative<RRngPtr>(v))
        throw Error(ErrorClass::input,
                    "binding '" + b.name + "': rng needs a rng value");
      break;
    case BindingKind::rrng:
      if (!std::holds_alternative<RRngPtr>(v))
        throw Error(ErrorClass::input,
                    "binding '" + b.name + "': rrng needs an rrng value");
      break;
    case BindingKind::ext:
      if (!std::holds_alternative<DorrohRing>(v))
        throw Error(ErrorClass::input,
                    "binding '" + b.name + "': ext needs a dorroh value");
      break;
    case BindingKind::phi:
      if (!std::holds_alternative<PhiValue>(v))
        throw Error(ErrorClass::input,
                    "binding '" + b.name + "': phi needs a phi value");
      break;
  }
  BoundObject obj{b.name, b.kind, std::move(v)};
  session_.objects.push_back(obj);
  return obj;
}

Session evaluate_document(const SpecDocument& doc, const Config& cfg) {
  Evaluator ev(cfg);
  for (const auto& b : doc.bindings) ev.eval_binding(b);
  return std::move(ev.session());
}

}  // namespace ringlab
