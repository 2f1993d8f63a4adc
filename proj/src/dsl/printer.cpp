#include "traced/dsl/printer.hpp"

namespace traced::dsl {

namespace {

std::string rat(const Rational& r) { return traced::to_string(r); }

std::string obj_arg(const ObjExpr& o) {
  return o.kind == ObjExpr::Kind::Tensor ? "(" + print(o) + ")" : print(o);
}

std::string join_objs(const std::vector<ObjExpr>& objs) {
  std::string s;
  for (std::size_t i = 0; i < objs.size(); ++i) s += (i ? ", " : "") + print(objs[i]);
  return s;
}

// Operands that bind looser than their context get parentheses. Both
// operators associate to the left, so a right operand of the same kind is
// parenthesized too.
std::string operand(const Term& t, Term::Kind parent, bool right) {
  bool wrap = false;
  if (t.kind == Term::Kind::Compose) wrap = parent == Term::Kind::Tensor || right;
  if (t.kind == Term::Kind::Tensor) wrap = parent == Term::Kind::Tensor && right;
  return wrap ? "(" + print(t) + ")" : print(t);
}

}  // namespace

std::string print(const ObjExpr& o) {
  switch (o.kind) {
    case ObjExpr::Kind::Name: return o.name;
    case ObjExpr::Kind::Unit: return "I";
    case ObjExpr::Kind::Dual: return "dual(" + print(o.args[0]) + ")";
    case ObjExpr::Kind::Tensor: {
      const ObjExpr& r = o.args[1];
      return print(o.args[0]) + " * " + obj_arg(r);
    }
    case ObjExpr::Kind::Dim: return std::to_string(o.dim);
    case ObjExpr::Kind::Super:
      return "super(" + std::to_string(o.even) + "|" + std::to_string(o.odd) + ")";
    case ObjExpr::Kind::Graded: {
      std::string s = "graded{";
      for (std::size_t i = 0; i < o.degrees.size(); ++i)
        s += (i ? ", " : "") + std::to_string(o.degrees[i].first) + ": " +
             std::to_string(o.degrees[i].second);
      return s + "}";
    }
    case ObjExpr::Kind::Points: {
      std::string s = "pts{";
      for (std::size_t i = 0; i < o.labels.size(); ++i) s += (i ? ", " : "") + o.labels[i];
      return s + "}";
    }
  }
  return "";
}

std::string print(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Gen: return t.name;
    case Term::Kind::Id: return "id(" + join_objs(t.objs) + ")";
    case Term::Kind::Compose:
      return operand(t.terms[0], t.kind, false) + " ; " + operand(t.terms[1], t.kind, true);
    case Term::Kind::Tensor:
      return operand(t.terms[0], t.kind, false) + " * " + operand(t.terms[1], t.kind, true);
    case Term::Kind::S: return "s(" + join_objs(t.objs) + ")";
    case Term::Kind::C: return "c(" + join_objs(t.objs) + ")";
    case Term::Kind::Theta: return "theta(" + join_objs(t.objs) + ")";
    case Term::Kind::Ev: return "ev(" + join_objs(t.objs) + ")";
    case Term::Kind::Coev: return "coev(" + join_objs(t.objs) + ")";
    case Term::Kind::TraceHat: return "trace_hat(" + print(t.triples[0]) + ")";
    case Term::Kind::Psi: return "psi(" + print(t.triples[0]) + ")";
    case Term::Kind::Pairing:
      return "pairing(" + print(t.triples[0]) + ", " + print(t.terms[0]) + ")";
    case Term::Kind::Scalar: return "scalar(" + rat(t.value) + ")";
  }
  return "";
}

std::string print(const TripleExpr& tr) {
  switch (tr.kind) {
    case TripleExpr::Kind::Name: return tr.name;
    case TripleExpr::Kind::Tuple:
      return "(" + print(tr.objs[0]) + ", " + print(tr.terms[0]) + ", " + print(tr.terms[1]) + ")";
    case TripleExpr::Kind::Cut: return "cut(" + print(tr.terms[0]) + ", " + rat(tr.fraction) + ")";
    case TripleExpr::Kind::Thicken: return "thicken(" + print(tr.terms[0]) + ")";
    case TripleExpr::Kind::Pre: return "pre(" + print(tr.inner[0]) + ", " + print(tr.terms[0]) + ")";
    case TripleExpr::Kind::Post:
      return "post(" + print(tr.terms[0]) + ", " + print(tr.inner[0]) + ")";
  }
  return "";
}

// Bordism literals use the same layout as RBord::describe, so printed
// values can be pasted back into programs.
std::string print(const MorLiteral& lit) {
  if (lit.kind == MorLiteral::Kind::Matrix) {
    std::string s = "[";
    for (std::size_t r = 0; r < lit.rows.size(); ++r) {
      s += r ? ", [" : "[";
      for (std::size_t c = 0; c < lit.rows[r].size(); ++c) s += (c ? ", " : "") + rat(lit.rows[r][c]);
      s += "]";
    }
    return s + "]";
  }
  bool iso = lit.kind == MorLiteral::Kind::Iso;
  std::string s = iso ? "iso{" : "bord{";
  for (std::size_t i = 0; i < lit.arcs.size(); ++i) {
    const ArcLit& a = lit.arcs[i];
    s += i ? ", " : " ";
    switch (a.kind) {
      case ArcLit::Kind::Through: s += a.labels[0] + "->" + a.labels[1]; break;
      case ArcLit::Kind::Cup: s += "-> " + a.labels[0] + " " + a.labels[1]; break;
      case ArcLit::Kind::Cap: s += a.labels[0] + " " + a.labels[1] + " ->"; break;
      case ArcLit::Kind::Loop: s += "loop"; break;
    }
    if (a.kind == ArcLit::Kind::Loop) s += ": " + rat(a.length);
    else if (!iso) s += " : " + rat(a.length);
  }
  return s + (lit.arcs.empty() ? "}" : " }");
}

std::string print(const Program& p) {
  std::string s = "instance " + p.header.instance;
  if (p.header.q) s += "(q=" + rat(*p.header.q) + ")";
  s += "\n";
  if (!p.decls.empty()) s += "\n";
  for (const auto& d : p.decls) {
    switch (d.kind) {
      case Decl::Kind::Obj: s += "obj " + d.name + " = " + print(d.obj); break;
      case Decl::Kind::Mor:
      case Decl::Kind::Triple:
        s += (d.kind == Decl::Kind::Mor ? "mor " : "triple ") + d.name;
        if (!d.sig.empty()) s += " : " + print(d.sig[0]) + " -> " + print(d.sig[1]);
        s += " = ";
        if (d.literal) s += print(*d.literal);
        else if (!d.term.empty()) s += print(d.term[0]);
        else s += print(d.triple[0]);
        break;
    }
    s += "\n";
  }
  if (!p.commands.empty()) s += "\n";
  for (const auto& c : p.commands) {
    if (c.kind == Command::Kind::Print) s += "print " + print(c.terms[0]);
    else s += "assert_equal " + print(c.terms[0]) + ", " + print(c.terms[1]);
    s += "\n";
  }
  return s;
}

}  // namespace traced::dsl
