#include "traced/dsl/parser.hpp"

#include "traced/dsl/lexer.hpp"

#include <algorithm>
#include <array>

namespace traced::dsl {

namespace {

constexpr std::array kReserved = {
    "instance", "obj",   "mor",     "triple", "print", "assert_equal", "I",       "id",
    "s",        "c",     "theta",   "ev",     "coev",  "dual",         "trace_hat", "pairing",
    "psi",      "scalar", "cut",    "thicken", "pre",  "post",         "super",   "graded",
    "pts",      "bord",  "iso",     "loop"};

bool reserved(const std::string& w) {
  return std::find(kReserved.begin(), kReserved.end(), w) != kReserved.end();
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program program() {
    Program p;
    p.header = header();
    while (at_word("obj") || at_word("mor") || at_word("triple")) p.decls.push_back(decl());
    while (at_word("print") || at_word("assert_equal")) p.commands.push_back(command());
    if (!at(Tok::End)) {
      if (p.commands.empty()) fail({"obj", "mor", "triple", "print", "assert_equal", "end of input"});
      fail({"print", "assert_equal", "end of input"});
    }
    return p;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& next() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_word(const char* w) const { return at(Tok::Word) && cur().text == w; }

  std::string found() const {
    if (at(Tok::End)) return "end of input";
    return "'" + cur().text + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(cur().span, std::move(expected), found());
  }

  const Token& take() { return toks_[pos_++]; }

  const Token& expect(Tok k) {
    if (!at(k)) fail({describe(k)});
    return take();
  }

  void expect_word(const char* w) {
    if (!at_word(w)) fail({std::string("'") + w + "'"});
    take();
  }

  std::string name() {
    if (!at(Tok::Word) || reserved(cur().text)) fail({"name"});
    return take().text;
  }

  // Point labels may be any word.
  std::string label() { return expect(Tok::Word).text; }

  long integer() {
    bool neg = false;
    if (at(Tok::Minus)) {
      take();
      neg = true;
    }
    const Token& t = expect(Tok::Number);
    if (t.text.size() > 9) throw ParseError(t.span, {"a number below 10^9"}, "'" + t.text + "'");
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  long natural() {
    const Token& t = expect(Tok::Number);
    if (t.text.size() > 9) throw ParseError(t.span, {"a number below 10^9"}, "'" + t.text + "'");
    return std::stol(t.text);
  }

  Rational rational() {
    bool neg = false;
    if (at(Tok::Minus)) {
      take();
      neg = true;
    }
    std::string text = expect(Tok::Number).text;
    if (at(Tok::Slash)) {
      take();
      if (at(Tok::Number) && cur().text.find_first_not_of('0') == std::string::npos)
        fail({"nonzero denominator"});
      text += "/" + expect(Tok::Number).text;
    }
    Rational r = parse_rational(text);
    return neg ? Rational(-r) : r;
  }

  Header header() {
    Header h;
    h.span = cur().span;
    expect_word("instance");
    if (!(at_word("finvect") || at_word("supervect") || at_word("graded") || at_word("rbord1")))
      fail({"finvect", "supervect", "graded", "rbord1"});
    h.instance = take().text;
    if (h.instance == "graded" && at(Tok::LParen)) {
      take();
      expect_word("q");
      expect(Tok::Eq);
      h.q = rational();
      expect(Tok::RParen);
    }
    return h;
  }

  Decl decl() {
    Decl d;
    d.span = cur().span;
    std::string kw = take().text;
    d.name = name();
    if (kw == "obj") {
      d.kind = Decl::Kind::Obj;
      expect(Tok::Eq);
      d.obj = obj();
      return d;
    }
    d.kind = kw == "mor" ? Decl::Kind::Mor : Decl::Kind::Triple;
    if (at(Tok::Colon)) {
      take();
      d.sig.push_back(obj());
      expect(Tok::Arrow);
      d.sig.push_back(obj());
    } else if (!at(Tok::Eq)) {
      fail({"':'", "'='"});
    }
    expect(Tok::Eq);
    if (d.kind == Decl::Kind::Triple) {
      d.triple.push_back(triple(true));
    } else if (at(Tok::LBrack) || ((at_word("bord") || at_word("iso")) && next().kind == Tok::LBrace)) {
      d.literal = literal();
    } else {
      d.term.push_back(term());
    }
    return d;
  }

  Command command() {
    Command c;
    c.span = cur().span;
    if (take().text == "print") {
      c.kind = Command::Kind::Print;
      c.terms.push_back(term());
    } else {
      c.kind = Command::Kind::AssertEqual;
      c.terms.push_back(term());
      expect(Tok::Comma);
      c.terms.push_back(term());
    }
    return c;
  }

  // objects

  ObjExpr obj() {
    ObjExpr left = obj_atom();
    while (at(Tok::Star)) {
      Span span = take().span;
      ObjExpr t;
      t.kind = ObjExpr::Kind::Tensor;
      t.span = span;
      t.args.push_back(std::move(left));
      t.args.push_back(obj_atom());
      left = std::move(t);
    }
    return left;
  }

  ObjExpr obj_atom() {
    ObjExpr o;
    o.span = cur().span;
    if (at(Tok::LParen)) {
      take();
      o = obj();
      expect(Tok::RParen);
      return o;
    }
    if (at(Tok::Number)) {
      o.kind = ObjExpr::Kind::Dim;
      o.dim = natural();
      return o;
    }
    if (!at(Tok::Word)) fail({"object"});
    const std::string& w = cur().text;
    if (w == "I") {
      take();
      o.kind = ObjExpr::Kind::Unit;
    } else if (w == "dual") {
      take();
      o.kind = ObjExpr::Kind::Dual;
      expect(Tok::LParen);
      o.args.push_back(obj());
      expect(Tok::RParen);
    } else if (w == "super") {
      take();
      o.kind = ObjExpr::Kind::Super;
      expect(Tok::LParen);
      o.even = natural();
      expect(Tok::Bar);
      o.odd = natural();
      expect(Tok::RParen);
    } else if (w == "graded") {
      take();
      o.kind = ObjExpr::Kind::Graded;
      expect(Tok::LBrace);
      if (!at(Tok::RBrace)) {
        do {
          long degree = integer();
          expect(Tok::Colon);
          o.degrees.emplace_back(degree, natural());
        } while (at(Tok::Comma) && (take(), true));
      }
      expect(Tok::RBrace);
    } else if (w == "pts") {
      take();
      o.kind = ObjExpr::Kind::Points;
      expect(Tok::LBrace);
      if (!at(Tok::RBrace)) {
        do o.labels.push_back(label());
        while (at(Tok::Comma) && (take(), true));
      }
      expect(Tok::RBrace);
    } else {
      o.kind = ObjExpr::Kind::Name;
      o.name = name();
    }
    return o;
  }

  // terms

  Term term() {
    Term left = tensor_term();
    while (at(Tok::Semi)) {
      Span span = take().span;
      Term c;
      c.kind = Term::Kind::Compose;
      c.span = span;
      c.terms.push_back(std::move(left));
      c.terms.push_back(tensor_term());
      left = std::move(c);
    }
    return left;
  }

  Term tensor_term() {
    Term left = atom();
    while (at(Tok::Star)) {
      Span span = take().span;
      Term t;
      t.kind = Term::Kind::Tensor;
      t.span = span;
      t.terms.push_back(std::move(left));
      t.terms.push_back(atom());
      left = std::move(t);
    }
    return left;
  }

  Term atom() {
    Term t;
    t.span = cur().span;
    if (at(Tok::LParen)) {
      take();
      t = term();
      expect(Tok::RParen);
      return t;
    }
    if (!at(Tok::Word)) fail({"term"});
    std::string w = cur().text;
    auto objs = [&](int n) {
      take();
      expect(Tok::LParen);
      for (int i = 0; i < n; ++i) {
        if (i) expect(Tok::Comma);
        t.objs.push_back(obj());
      }
      expect(Tok::RParen);
    };
    if (w == "id") {
      t.kind = Term::Kind::Id;
      objs(1);
    } else if (w == "s") {
      t.kind = Term::Kind::S;
      objs(2);
    } else if (w == "c") {
      t.kind = Term::Kind::C;
      objs(2);
    } else if (w == "theta") {
      t.kind = Term::Kind::Theta;
      objs(1);
    } else if (w == "ev") {
      t.kind = Term::Kind::Ev;
      objs(1);
    } else if (w == "coev") {
      t.kind = Term::Kind::Coev;
      objs(1);
    } else if (w == "trace_hat" || w == "psi") {
      t.kind = w == "psi" ? Term::Kind::Psi : Term::Kind::TraceHat;
      take();
      expect(Tok::LParen);
      t.triples.push_back(triple(false));
      expect(Tok::RParen);
    } else if (w == "pairing") {
      t.kind = Term::Kind::Pairing;
      take();
      expect(Tok::LParen);
      t.triples.push_back(triple(false));
      expect(Tok::Comma);
      t.terms.push_back(term());
      expect(Tok::RParen);
    } else if (w == "scalar") {
      t.kind = Term::Kind::Scalar;
      take();
      expect(Tok::LParen);
      t.value = rational();
      expect(Tok::RParen);
    } else {
      t.kind = Term::Kind::Gen;
      t.name = name();
    }
    return t;
  }

  // thickened morphisms

  TripleExpr triple(bool allow_tuple) {
    TripleExpr tr;
    tr.span = cur().span;
    if (allow_tuple && at(Tok::LParen)) {
      take();
      tr.kind = TripleExpr::Kind::Tuple;
      tr.objs.push_back(obj());
      expect(Tok::Comma);
      tr.terms.push_back(term());
      expect(Tok::Comma);
      tr.terms.push_back(term());
      expect(Tok::RParen);
      return tr;
    }
    if (!at(Tok::Word)) {
      if (allow_tuple) fail({"'('", "cut", "thicken", "pre", "post", "name"});
      fail({"cut", "thicken", "pre", "post", "name"});
    }
    std::string w = cur().text;
    if (w == "cut") {
      take();
      tr.kind = TripleExpr::Kind::Cut;
      expect(Tok::LParen);
      tr.terms.push_back(term());
      expect(Tok::Comma);
      tr.fraction = rational();
      expect(Tok::RParen);
    } else if (w == "thicken") {
      take();
      tr.kind = TripleExpr::Kind::Thicken;
      expect(Tok::LParen);
      tr.terms.push_back(term());
      expect(Tok::RParen);
    } else if (w == "pre") {
      take();
      tr.kind = TripleExpr::Kind::Pre;
      expect(Tok::LParen);
      tr.inner.push_back(triple(false));
      expect(Tok::Comma);
      tr.terms.push_back(term());
      expect(Tok::RParen);
    } else if (w == "post") {
      take();
      tr.kind = TripleExpr::Kind::Post;
      expect(Tok::LParen);
      tr.terms.push_back(term());
      expect(Tok::Comma);
      tr.inner.push_back(triple(false));
      expect(Tok::RParen);
    } else {
      tr.kind = TripleExpr::Kind::Name;
      tr.name = name();
    }
    return tr;
  }

  // morphism literals

  MorLiteral literal() {
    MorLiteral lit;
    if (at(Tok::LBrack)) {
      lit.kind = MorLiteral::Kind::Matrix;
      take();
      if (!at(Tok::RBrack)) {
        do {
          expect(Tok::LBrack);
          std::vector<Rational> row;
          if (!at(Tok::RBrack)) {
            do row.push_back(rational());
            while (at(Tok::Comma) && (take(), true));
          }
          expect(Tok::RBrack);
          lit.rows.push_back(std::move(row));
        } while (at(Tok::Comma) && (take(), true));
      }
      expect(Tok::RBrack);
      return lit;
    }
    bool iso = take().text == "iso";
    lit.kind = iso ? MorLiteral::Kind::Iso : MorLiteral::Kind::Bord;
    expect(Tok::LBrace);
    if (!at(Tok::RBrace)) {
      do lit.arcs.push_back(iso ? iso_arc() : bord_arc());
      while (at(Tok::Comma) && (take(), true));
    }
    expect(Tok::RBrace);
    return lit;
  }

  ArcLit iso_arc() {
    ArcLit a;
    a.kind = ArcLit::Kind::Through;
    a.labels.push_back(label());
    expect(Tok::Arrow);
    a.labels.push_back(label());
    return a;
  }

  ArcLit bord_arc() {
    ArcLit a;
    if (at_word("loop") && next().kind == Tok::Colon) {
      take();
      a.kind = ArcLit::Kind::Loop;
    } else if (at(Tok::Arrow)) {
      take();
      a.kind = ArcLit::Kind::Cup;
      a.labels.push_back(label());
      a.labels.push_back(label());
    } else {
      if (!at(Tok::Word)) fail({"label", "'->'", "loop"});
      a.labels.push_back(label());
      if (at(Tok::Arrow)) {
        take();
        a.kind = ArcLit::Kind::Through;
        a.labels.push_back(label());
      } else {
        a.kind = ArcLit::Kind::Cap;
        a.labels.push_back(label());
        expect(Tok::Arrow);
      }
    }
    expect(Tok::Colon);
    a.length = rational();
    return a;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::string_view text) { return Parser(tokenize(text)).program(); }

}  // namespace traced::dsl
