#pragma once

#include "traced/dsl/ast.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace traced::dsl {

// Inferred signature of one binding, e.g. {"f", "mor", "X → X⊗X∨"}.
struct BindingType {
  std::string name;
  std::string kind;  // obj, mor, triple
  std::string type;
};

struct TypedProgram {
  Program program;
  std::vector<BindingType> bindings;
};

// Checks names, composability and instance capabilities without evaluating
// any morphism. Throws TypeError or CapabilityError.
TypedProgram typecheck(const Program& program);

struct Printed {
  std::string term;   // canonical text of the printed term
  std::string type;   // "dom → cod"
  std::string value;  // instance rendering of the value
};

struct AssertResult {
  Span span;
  bool passed = false;
  std::string lhs;
  std::string rhs;
};

struct EvalResult {
  std::vector<Printed> printed;
  std::vector<AssertResult> asserts;

  bool all_passed() const;
  // Human-readable transcript: one line per print and per failed assert.
  std::string transcript() const;
};

// Throws EvalError when the instance rejects a value (e.g. a matrix that
// does not preserve the grading).
EvalResult evaluate(const TypedProgram& program);

// Exit status of `traced eval`: 0 all asserts pass, 1 an assert failed,
// 2 the program did not lex, parse, typecheck or evaluate.
struct RunOutcome {
  int exit_code = 0;
  EvalResult result;
  std::string error;
};
RunOutcome run(std::string_view text);

}  // namespace traced::dsl
