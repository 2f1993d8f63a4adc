#pragma once

#include "traced/errors.hpp"
#include "traced/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace traced::dsl {

struct Span {
  int line = 1;
  int col = 1;
};

std::string to_string(Span span);

// Base of all language errors. what() starts with "line:col: ".
class DslError : public Error {
 public:
  DslError(const std::string& kind, Span span, const std::string& message);
  Span span() const { return span_; }
  const std::string& message() const { return message_; }

 private:
  Span span_;
  std::string message_;
};

class LexError : public DslError {
 public:
  LexError(Span span, const std::string& message) : DslError("lex error", span, message) {}
};

class ParseError : public DslError {
 public:
  ParseError(Span span, std::vector<std::string> expected, const std::string& found);
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

class TypeError : public DslError {
 public:
  TypeError(Span span, const std::string& message) : DslError("type error", span, message) {}
};

class CapabilityError : public DslError {
 public:
  CapabilityError(Span span, const std::string& message)
      : DslError("capability error", span, message) {}
};

// Failure raised by the instance while evaluating a well-typed program.
class EvalError : public DslError {
 public:
  EvalError(Span span, const std::string& message) : DslError("evaluation error", span, message) {}
};

// Objects: names, I, dual(X), X * Y, and one literal form per instance:
// 3 (finvect), super(2|1), graded{0: 2, 1: 1}, pts{a, b}.
struct ObjExpr {
  enum class Kind { Name, Unit, Dual, Tensor, Dim, Super, Graded, Points };
  Kind kind = Kind::Unit;
  Span span;
  std::string name;
  std::vector<ObjExpr> args;                   // Dual: 1, Tensor: 2
  long dim = 0;                                // Dim
  long even = 0, odd = 0;                      // Super
  std::vector<std::pair<long, long>> degrees;  // Graded: (degree, dim)
  std::vector<std::string> labels;             // Points

  bool operator==(const ObjExpr&) const;
};

struct TripleExpr;

// Morphism terms. Compose keeps its operands in diagrammatic order:
// terms[0] runs first.
struct Term {
  enum class Kind {
    Gen, Id, Compose, Tensor, S, C, Theta, Ev, Coev, TraceHat, Pairing, Psi, Scalar
  };
  Kind kind = Kind::Gen;
  Span span;
  std::string name;              // Gen
  std::vector<ObjExpr> objs;     // Id, S, C, Theta, Ev, Coev
  std::vector<Term> terms;       // Compose, Tensor: 2; Pairing: the morphism
  std::vector<TripleExpr> triples;  // TraceHat, Pairing, Psi
  Rational value;                // Scalar

  bool operator==(const Term&) const;
};

// Thickened morphisms: a name, an explicit (Z, t, b) with signature,
// cut(sigma, r), thicken(f), pre(T, g) = T∘g and post(g, T) = g∘T.
struct TripleExpr {
  enum class Kind { Name, Tuple, Cut, Thicken, Pre, Post };
  Kind kind = Kind::Name;
  Span span;
  std::string name;
  std::vector<ObjExpr> objs;        // Tuple: dom, cod, Z
  std::vector<Term> terms;          // Tuple: t, b; Cut, Thicken, Pre, Post: the morphism
  std::vector<TripleExpr> inner;    // Pre, Post
  Rational fraction;                // Cut

  bool operator==(const TripleExpr&) const;
};

// Arc of a bord{...} or iso{...} literal.
struct ArcLit {
  enum class Kind { Through, Cup, Cap, Loop };
  Kind kind = Kind::Through;
  std::vector<std::string> labels;  // Through: in, out; Cup: two out; Cap: two in
  Rational length;                  // unused for iso arcs

  bool operator==(const ArcLit&) const = default;
};

struct MorLiteral {
  enum class Kind { Matrix, Bord, Iso };
  Kind kind = Kind::Matrix;
  std::vector<std::vector<Rational>> rows;
  std::vector<ArcLit> arcs;

  bool operator==(const MorLiteral&) const = default;
};

struct Decl {
  enum class Kind { Obj, Mor, Triple };
  Kind kind = Kind::Obj;
  Span span;
  std::string name;
  std::vector<ObjExpr> sig;  // empty or {dom, cod}
  ObjExpr obj;               // Obj
  std::optional<MorLiteral> literal;  // Mor with a literal body
  std::vector<Term> term;             // Mor with a term body (one element)
  std::vector<TripleExpr> triple;     // Triple (one element)

  bool operator==(const Decl&) const;
};

struct Command {
  enum class Kind { Print, AssertEqual };
  Kind kind = Kind::Print;
  Span span;
  std::vector<Term> terms;

  bool operator==(const Command&) const;
};

struct Header {
  std::string instance;  // finvect, supervect, graded, rbord1
  std::optional<Rational> q;
  Span span;

  bool operator==(const Header& o) const { return instance == o.instance && q == o.q; }
};

struct Program {
  Header header;
  std::vector<Decl> decls;
  std::vector<Command> commands;

  bool operator==(const Program&) const = default;
};

}  // namespace traced::dsl
