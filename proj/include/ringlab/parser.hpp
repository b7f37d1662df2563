#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ringlab/finite_rng.hpp"

namespace ringlab {

struct SourceLoc {
  int line = 0, col = 0;  // 1-based
};

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
  enum class Kind { ref, call, number, set, table, kwarg };
  Kind kind = Kind::ref;
  SourceLoc loc;
  std::string name;                          // ref / call / kwarg
  std::vector<ExprPtr> args;                 // call arguments; kwarg value
  long long number = 0;                      // number
  std::vector<Elem> set_values;              // set literal {0, 2}
  std::vector<std::vector<Elem>> table_rows; // table literal [0 1; 1 0]
};

enum class BindingKind { ring, rng, rrng, ext, phi };

const char* binding_kind_name(BindingKind k);

struct Binding {
  BindingKind kind = BindingKind::rng;
  std::string name;
  ExprPtr expr;
  SourceLoc loc;
};

struct SpecDocument {
  std::vector<Binding> bindings;
};

class ParseError : public Error {
 public:
  ParseError(std::string kind, SourceLoc loc, const std::string& msg)
      : Error(ErrorClass::input, kind + " at " + std::to_string(loc.line) +
                                     ":" + std::to_string(loc.col) + ": " +
                                     msg),
        kind_(std::move(kind)),
        loc_(loc) {}
  const std::string& kind() const { return kind_; }  // syntax | unknown-name |
                                                     // arity | duplicate-name
  SourceLoc loc() const { return loc_; }

 private:
  std::string kind_;
  SourceLoc loc_;
};

// Parses a document; all references are resolved against earlier bindings and
// builder names/arities are checked, so a returned document is name-closed.
SpecDocument parse_spec(const std::string& text);

// Canonical printer; parse(print(parse(t))) equals parse(t) structurally.
std::string print_spec(const SpecDocument& doc);

bool ast_equal(const SpecDocument& a, const SpecDocument& b);

}  // namespace ringlab
