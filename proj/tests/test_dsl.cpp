#include "corpus_oracle.hpp"

#include "traced/balanced.hpp"
#include "traced/bordism.hpp"
#include "traced/dsl/interpreter.hpp"
#include "traced/dsl/lexer.hpp"
#include "traced/dsl/parser.hpp"
#include "traced/dsl/printer.hpp"
#include "traced/thickened.hpp"
#include "traced/vect.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace traced;
using namespace traced::dsl;
using namespace traced::test;

TEST_CASE("corpus has 50 programs, all listed in the manifest") {
  auto m = manifest();
  CHECK(m.size() == 50);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(kCorpus))
    if (e.path().extension() == ".diag") ++files;
  CHECK(files == m.size());
}

TEST_CASE("corpus programs round-trip through the printer") {
  for (const auto& entry : manifest()) {
    std::string file = entry["file"];
    CAPTURE(file);
    std::string src = slurp(kCorpus / file);
    Program p = parse(src);
    CHECK(print(p) == src);
    CHECK(parse(print(p)) == p);
  }
}

TEST_CASE("corpus programs evaluate to oracle values with the expected exit code") {
  for (const auto& entry : manifest()) {
    std::string file = entry["file"];
    std::string family = entry["family"];
    CAPTURE(file);
    RunOutcome got = run(slurp(kCorpus / file));
    CHECK(got.exit_code == entry["exit"].get<int>());
    if (family == "error") {
      CHECK(got.error.rfind(entry["error"].get<std::string>(), 0) == 0);
      continue;
    }
    if (family == "asserts") {
      auto want = entry["params"]["passed"];
      REQUIRE(got.result.asserts.size() == want.size());
      for (std::size_t i = 0; i < want.size(); ++i)
        CHECK(got.result.asserts[i].passed == want[i].get<bool>());
      continue;
    }
    auto want = oracle(family, entry["params"], file);
    REQUIRE(got.result.printed.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(got.result.printed[i].value == want[i]);
    for (const auto& a : got.result.asserts) CHECK(a.passed);
  }
}

TEST_CASE("lexer spans point at the token start") {
  auto toks = tokenize("obj X = dual(Y)  # X∨ in a comment\nprint id(X) ; f");
  REQUIRE(toks.size() >= 4);
  CHECK(toks[0].kind == Tok::Word);
  CHECK(toks[0].span.line == 1);
  CHECK(toks[2].kind == Tok::Eq);
  CHECK(toks[2].span.col == 7);
  CHECK(toks.back().kind == Tok::End);
  CHECK_THROWS_AS(tokenize("print f @ g"), LexError);
  try {
    tokenize("obj X = 2\nprint f @ g");
  } catch (const LexError& e) {
    CHECK(e.span().line == 2);
    CHECK(e.span().col == 9);
  }
}

TEST_CASE("semicolon composes diagrammatically and star binds tighter") {
  Program p = parse("instance finvect\n\nprint id(X) ; f\nprint f * g ; h\n");
  REQUIRE(p.commands.size() == 2);
  const Term& a = p.commands[0].terms[0];
  REQUIRE(a.kind == Term::Kind::Compose);
  CHECK(a.terms[0].kind == Term::Kind::Id);
  CHECK(a.terms[1].kind == Term::Kind::Gen);
  CHECK(a.terms[1].name == "f");
  const Term& b = p.commands[1].terms[0];
  REQUIRE(b.kind == Term::Kind::Compose);
  CHECK(b.terms[0].kind == Term::Kind::Tensor);
  CHECK(b.terms[1].name == "h");
  CHECK(print(b) == "f * g ; h");
  CHECK(print(parse("instance finvect\n\nprint f * (g ; h)\n").commands[0].terms[0]) ==
        "f * (g ; h)");
}

TEST_CASE("parse errors report position and what was expected") {
  try {
    parse("instance finvect\n\nobj X = 2\nprint (coev(X) ; ev(X)\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 5);
    CHECK(e.span().col == 1);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse("instance hilbert\n"), ParseError);
  CHECK_THROWS_AS(parse("instance finvect\n\nobj print = 2\n"), ParseError);
}

TEST_CASE("type errors name both ends of a bad composite") {
  auto out = run("instance finvect\n\nobj X = 2\n\nprint coev(X) ; coev(X)\n");
  CHECK(out.exit_code == 2);
  CHECK(out.error.find("type error") != std::string::npos);
  CHECK(out.error.find("X⊗X∨") != std::string::npos);
  CHECK(out.error.find(" I") != std::string::npos);
}

TEST_CASE("rbord1 rejects braidings, twists and duals") {
  for (std::string term : {"c(X, X)", "theta(X)", "ev(X)", "coev(X)"}) {
    CAPTURE(term);
    auto out = run("instance rbord1\n\nobj X = pts{a}\n\nprint " + term + "\n");
    CHECK(out.exit_code == 2);
    CHECK(out.error.find("capability error") != std::string::npos);
  }
  auto ok = run("instance rbord1\n\nobj X = pts{a}\n\nprint s(X, X)\n");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("typecheck infers binding signatures") {
  auto typed = typecheck(parse(
      "instance finvect\n\nobj X = 2\nmor u = coev(X) ; s(X, dual(X))\ntriple T = thicken(u)\n"));
  REQUIRE(typed.bindings.size() == 3);
  CHECK(typed.bindings[0].kind == "obj");
  CHECK(typed.bindings[1].type == "I → X∨⊗X");
  CHECK(typed.bindings[2].kind == "triple");
}

TEST_CASE("graded literal must preserve degree") {
  auto ok = run("instance graded(q=2)\n\nobj X = graded{0: 1, 1: 1}\nmor f : X -> X = [[2, 0], [0, 3]]\n\nprint f\n");
  CHECK(ok.exit_code == 0);
  CHECK(ok.result.printed[0].value == "[[2, 0], [0, 3]]");
  auto bad = run("instance graded(q=2)\n\nobj X = graded{0: 1, 1: 1}\nmor f : X -> X = [[0, 1], [0, 0]]\n\nprint f\n");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("failed assertion yields exit code 1 and a transcript line") {
  auto out = run("instance finvect\n\nobj X = 2\n\nassert_equal scalar(3), coev(X) ; ev(X)\n");
  CHECK(out.exit_code == 1);
  CHECK(out.result.transcript().find("5:1: assertion failed") != std::string::npos);
}

TEST_CASE("printer output reparses for hand-built programs") {
  Program p = parse(
      "instance graded( q = 1/2 )\nobj X=graded{1:2}   mor f:X->X=[[1,0],[0,-3/6]]\n"
      "triple T=pre(thicken(f),f)\nprint trace_hat(T);scalar(2)\n");
  std::string canon = print(p);
  CHECK(parse(canon) == p);
  CHECK(print(parse(canon)) == canon);
  CHECK(canon.find("-1/2") != std::string::npos);
}
