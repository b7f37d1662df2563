#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ringlab/parser.hpp"
#include "ringlab/prime.hpp"

namespace ringlab {

struct PhiValue {
  RRngPtr structure;
  RHomomorphism hom;  // total map I -> R
  std::string origin; // "inclusion" | "retraction k" | "zero"
};

using Value = std::variant<RngPtr, RRngPtr, DorrohRing, PhiValue>;

struct BoundObject {
  std::string name;
  BindingKind kind = BindingKind::rng;
  Value value;
};

struct Session {
  std::vector<BoundObject> objects;
  const BoundObject* find(const std::string& name) const;
};

// The plain rng behind any rng-like value; throws for phi values.
RngPtr value_rng(const Value& v);

class Evaluator {
 public:
  explicit Evaluator(Config cfg) : cfg_(cfg) {}

  // Evaluates one binding against everything bound so far; throws ringlab
  // errors (kind mismatches and table problems are input errors).
  BoundObject eval_binding(const Binding& b);

  Session& session() { return session_; }
  const Config& config() const { return cfg_; }

 private:
  Value eval_expr(const Expr& e);

  Config cfg_;
  Session session_;
};

// Evaluates a whole document, throwing on the first problem.
Session evaluate_document(const SpecDocument& doc, const Config& cfg);

}  // namespace ringlab
