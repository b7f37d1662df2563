#include "ringlab/parser.hpp"

#include <map>
#include <sstream>

namespace ringlab {

const char* binding_kind_name(BindingKind k) {
  switch (k) {
    case BindingKind::ring: return "ring";
    case BindingKind::rng: return "rng";
    case BindingKind::rrng: return "rrng";
    case BindingKind::ext: return "ext";
    case BindingKind::phi: return "phi";
  }
  return "?";
}

namespace {

struct Token {
  enum class Kind { ident, number, punct, newline, eof };
  Kind kind = Kind::eof;
  std::string text;
  long long number = 0;
  SourceLoc loc;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;
  int depth = 0;  // newlines are separators only at depth 0

  explicit Lexer(const std::string& s) : src(s) {}

  Token next() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '#') {
        while (pos < src.size() && src[pos] != '\n') advance();
        continue;
      }
      if (c == '\n') {
        Token t{Token::Kind::newline, "\n", 0, {line, col}};
        advance();
        if (depth == 0) return t;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
        continue;
      }
      break;
    }
    if (pos >= src.size()) return {Token::Kind::eof, "", 0, {line, col}};

    SourceLoc loc{line, col};
    char c = src[pos];
    if (isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      std::string text;
      while (pos < src.size() &&
             isdigit(static_cast<unsigned char>(src[pos]))) {
        v = v * 10 + (src[pos] - '0');
        if (v > 1'000'000'000)
          throw ParseError("syntax", loc, "number literal too large");
        text += src[pos];
        advance();
      }
      return {Token::Kind::number, text, v, loc};
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos < src.size() &&
             (isalnum(static_cast<unsigned char>(src[pos])) ||
              src[pos] == '_')) {
        text += src[pos];
        advance();
      }
      return {Token::Kind::ident, text, 0, loc};
    }
    if (std::string("=(){}[],;").find(c) != std::string::npos) {
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      advance();
      return {Token::Kind::punct, std::string(1, c), 0, loc};
    }
    throw ParseError("syntax", loc,
                     "unexpected character '" + std::string(1, c) + "'");
  }

  void advance() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
};

struct BuilderSig {
  int min_args, max_args;  // max_args < 0 means unbounded
};

const std::map<std::string, BuilderSig>& builders() {
  static const std::map<std::string, BuilderSig> table = {
      {"Z", {1, 1}},
      {"Mat", {2, 2}},
      {"UT", {2, 2}},
      {"product", {1, -1}},
      {"trivial", {1, 1}},
      {"ideal_of", {2, 2}},
      {"quotient", {2, 2}},
      {"dorroh", {1, 1}},
      {"tables", {3, 4}},
      {"rrng", {4, 4}},
      {"cyclic_action", {2, 2}},
      {"matmul_action", {2, 2}},
      {"inclusion", {1, 1}},
      {"retraction", {2, 2}},
      {"zero_phi", {1, 1}},
  };
  return table;
}

struct Parser {
  Lexer lex;
  Token tok;
  std::vector<std::string> bound;

  explicit Parser(const std::string& text) : lex(text) { tok = lex.next(); }

  void bump() { tok = lex.next(); }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("syntax", tok.loc,
                     "expected " + expected + ", found " +
                         (tok.kind == Token::Kind::eof ? "end of input"
                          : tok.kind == Token::Kind::newline
                              ? "end of line"
                              : "'" + tok.text + "'"));
  }

  bool is_punct(const char* p) const {
    return tok.kind == Token::Kind::punct && tok.text == p;
  }

  void expect_punct(const char* p) {
    if (!is_punct(p)) fail(std::string("'") + p + "'");
    bump();
  }

  bool is_bound(const std::string& name) const {
    for (const auto& n : bound)
      if (n == name) return true;
    return false;
  }

  SpecDocument parse() {
    SpecDocument doc;
    while (true) {
      while (tok.kind == Token::Kind::newline ||
             (tok.kind == Token::Kind::punct && tok.text == ";"))
        bump();
      if (tok.kind == Token::Kind::eof) break;
      doc.bindings.push_back(parse_binding());
      if (tok.kind != Token::Kind::eof &&
          tok.kind != Token::Kind::newline && !is_punct(";"))
        fail("end of line");
    }
    return doc;
  }

  Binding parse_binding() {
    if (tok.kind != Token::Kind::ident) fail("a binding kind");
    Binding b;
    b.loc = tok.loc;
    if (tok.text == "ring") b.kind = BindingKind::ring;
    else if (tok.text == "rng") b.kind = BindingKind::rng;
    else if (tok.text == "rrng") b.kind = BindingKind::rrng;
    else if (tok.text == "ext") b.kind = BindingKind::ext;
    else if (tok.text == "phi") b.kind = BindingKind::phi;
    else fail("one of ring/rng/rrng/ext/phi");
    bump();

    if (tok.kind != Token::Kind::ident) fail("a name");
    b.name = tok.text;
    if (is_bound(b.name))
      throw ParseError("duplicate-name", tok.loc,
                       "name '" + b.name + "' is already bound");
    bump();
    expect_punct("=");
    b.expr = parse_expr();
    bound.push_back(b.name);
    return b;
  }

  // An identifier was consumed: finish it off as a call or a reference.
  ExprPtr parse_ident_tail(std::string name, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->loc = loc;
    e->name = std::move(name);
    if (!is_punct("(")) {
      e->kind = Expr::Kind::ref;
      if (!is_bound(e->name))
        throw ParseError("unknown-name", e->loc,
                         "'" + e->name + "' is not bound");
      return e;
    }
    e->kind = Expr::Kind::call;
    auto it = builders().find(e->name);
    if (it == builders().end())
      throw ParseError("unknown-name", e->loc,
                       "'" + e->name + "' is not a builder");
    bump();  // '('
    if (!is_punct(")")) {
      e->args.push_back(parse_arg());
      while (is_punct(",")) {
        bump();
        e->args.push_back(parse_arg());
      }
    }
    expect_punct(")");
    int n = static_cast<int>(e->args.size());
    if (n < it->second.min_args ||
        (it->second.max_args >= 0 && n > it->second.max_args))
      throw ParseError("arity", e->loc,
                       "'" + e->name + "' takes " +
                           std::to_string(it->second.min_args) +
                           (it->second.max_args < 0
                                ? "+"
                                : it->second.max_args == it->second.min_args
                                      ? ""
                                      : ".." + std::to_string(
                                                   it->second.max_args)) +
                           " argument(s), got " + std::to_string(n));
    return e;
  }

  ExprPtr parse_expr() {
    if (tok.kind != Token::Kind::ident) fail("an expression");
    std::string name = tok.text;
    SourceLoc loc = tok.loc;
    bump();
    return parse_ident_tail(std::move(name), loc);
  }

  ExprPtr parse_arg() {
    if (tok.kind == Token::Kind::number) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::number;
      e->loc = tok.loc;
      e->number = tok.number;
      bump();
      return e;
    }
    if (is_punct("{")) return parse_set();
    if (is_punct("[")) return parse_table();
    if (tok.kind == Token::Kind::ident) {
      std::string name = tok.text;
      SourceLoc loc = tok.loc;
      bump();
      if (is_punct("=")) {  // kwarg: name = number | table
        bump();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::kwarg;
        e->loc = loc;
        e->name = name;
        if (tok.kind == Token::Kind::number) {
          auto v = std::make_shared<Expr>();
          v->kind = Expr::Kind::number;
          v->loc = tok.loc;
          v->number = tok.number;
          bump();
          e->args.push_back(v);
        } else if (is_punct("[")) {
          e->args.push_back(parse_table());
        } else {
          fail("a number or table after '='");
        }
        return e;
      }
      return parse_ident_tail(std::move(name), loc);
    }
    fail("an argument");
  }

  ExprPtr parse_set() {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::set;
    e->loc = tok.loc;
    bump();  // '{'
    if (!is_punct("}")) {
      while (true) {
        if (tok.kind != Token::Kind::number) fail("a number");
        e->set_values.push_back(static_cast<Elem>(tok.number));
        bump();
        if (is_punct(",")) {
          bump();
          continue;
        }
        break;
      }
    }
    expect_punct("}");
    return e;
  }

  ExprPtr parse_table() {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::table;
    e->loc = tok.loc;
    bump();  // '['
    std::vector<Elem> row;
    while (!is_punct("]")) {
      if (tok.kind == Token::Kind::number) {
        row.push_back(static_cast<Elem>(tok.number));
        bump();
      } else if (is_punct(";")) {
        e->table_rows.push_back(std::move(row));
        row.clear();
        bump();
      } else {
        fail("a number, ';' or ']'");
      }
    }
    e->table_rows.push_back(std::move(row));
    expect_punct("]");
    return e;
  }
};

void print_expr(std::ostringstream& out, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::ref:
      out << e.name;
      break;
    case Expr::Kind::call:
      out << e.name << "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out << ", ";
        print_expr(out, *e.args[i]);
      }
      out << ")";
      break;
    case Expr::Kind::number:
      out << e.number;
      break;
    case Expr::Kind::set:
      out << "{";
      for (size_t i = 0; i < e.set_values.size(); ++i) {
        if (i) out << ", ";
        out << e.set_values[i];
      }
      out << "}";
      break;
    case Expr::Kind::table:
      out << "[";
      for (size_t r = 0; r < e.table_rows.size(); ++r) {
        if (r) out << "; ";
        for (size_t c = 0; c < e.table_rows[r].size(); ++c) {
          if (c) out << " ";
          out << e.table_rows[r][c];
        }
      }
      out << "]";
      break;
    case Expr::Kind::kwarg:
      out << e.name << "=";
      print_expr(out, *e.args[0]);
      break;
  }
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.number != b.number ||
      a.set_values != b.set_values || a.table_rows != b.table_rows ||
      a.args.size() != b.args.size())
    return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!expr_equal(*a.args[i], *b.args[i])) return false;
  return true;
}

}  // namespace

SpecDocument parse_spec(const std::string& text) {
  Parser p(text);
  return p.parse();
}

std::string print_spec(const SpecDocument& doc) {
  std::ostringstream out;
  for (const auto& b : doc.bindings) {
    out << binding_kind_name(b.kind) << " " << b.name << " = ";
    print_expr(out, *b.expr);
    out << "\n";
  }
  return out.str();
}

bool ast_equal(const SpecDocument& a, const SpecDocument& b) {
  if (a.bindings.size() != b.bindings.size()) return false;
  for (size_t i = 0; i < a.bindings.size(); ++i) {
    const auto& x = a.bindings[i];
    const auto& y = b.bindings[i];
    if (x.kind != y.kind || x.name != y.name) return false;
    if (!expr_equal(*x.expr, *y.expr)) return false;
  }
  return true;
}

}  // namespace ringlab
