#include "traced/dsl/interpreter.hpp"

#include "traced/balanced.hpp"
#include "traced/bordism.hpp"
#include "traced/dsl/parser.hpp"
#include "traced/dsl/printer.hpp"
#include "traced/thickened.hpp"
#include "traced/vect.hpp"

#include <map>
#include <sstream>
#include <type_traits>

namespace traced::dsl {

bool EvalResult::all_passed() const {
  for (const auto& a : asserts)
    if (!a.passed) return false;
  return true;
}

std::string EvalResult::transcript() const {
  std::ostringstream out;
  for (const auto& p : printed) out << p.term << " : " << p.type << " = " << p.value << "\n";
  for (const auto& a : asserts)
    if (!a.passed)
      out << to_string(a.span) << ": assertion failed: " << a.lhs << " != " << a.rhs << "\n";
  std::size_t passed = 0;
  for (const auto& a : asserts) passed += a.passed;
  out << passed << "/" << asserts.size() << " assertions passed\n";
  return out.str();
}

namespace {

template <class C>
constexpr bool is_rbord = std::is_same_v<C, RBord>;

template <class C>
class Interp {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  struct ObjVal {
    Object value;
    std::string sym;  // e.g. "X⊗X∨"
    bool compound = false;
  };

  struct MorType {
    ObjVal dom, cod;
    std::string str() const { return dom.sym + " → " + cod.sym; }
  };

  Interp(const Program& prog, C cat) : prog_(prog), cat_(std::move(cat)) {}

  // Type pass; fills bindings_.
  void check() {
    for (const auto& d : prog_.decls) declare(d);
    for (const auto& c : prog_.commands) {
      if (c.kind == Command::Kind::Print) {
        type_of(c.terms[0]);
      } else {
        auto a = type_of(c.terms[0]), b = type_of(c.terms[1]);
        if (!(a.dom.value == b.dom.value) || !(a.cod.value == b.cod.value))
          throw TypeError(c.span, "assert_equal compares " + a.str() + " with " + b.str());
      }
    }
  }

  EvalResult run() {
    EvalResult out;
    for (const auto& d : prog_.decls) {
      if (d.kind == Decl::Kind::Mor && !d.literal) mors_.insert_or_assign(d.name, value(d.term[0]));
      if (d.kind == Decl::Kind::Triple) triples_.insert_or_assign(d.name, value(d.triple[0], &d));
    }
    for (const auto& c : prog_.commands) {
      if (c.kind == Command::Kind::Print) {
        out.printed.push_back({print(c.terms[0]), type_of(c.terms[0]).str(), render(value(c.terms[0]))});
      } else {
        auto a = value(c.terms[0]), b = value(c.terms[1]);
        out.asserts.push_back({c.span, cat_.mor_equal(a, b), render(a), render(b)});
      }
    }
    return out;
  }

  const std::vector<BindingType>& bindings() const { return bindings_; }

 private:
  // ------------------------------------------------------------ helpers

  template <class F>
  auto guarded(Span span, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const DslError&) {
      throw;
    } catch (const Error& e) {
      throw EvalError(span, e.what());
    }
  }

  void need(bool capability, Span span, const std::string& what) {
    if (!capability)
      throw CapabilityError(span, what + " is not available in instance " + prog_.header.instance);
  }

  static std::string wrap(const ObjVal& o) { return o.compound ? "(" + o.sym + ")" : o.sym; }

  ObjVal tensor(const ObjVal& a, const ObjVal& b) const {
    return {cat_.tensor_obj(a.value, b.value), a.sym + "⊗" + b.sym, true};
  }

  ObjVal unit() const { return {cat_.unit_object(), "I", false}; }

  ObjVal dual(const ObjVal& x, Span span) {
    need(C::capabilities.duals, span, "dual");
    if constexpr (DualizingCategory<C>) return {cat_.dual(x.value), wrap(x) + "∨", false};
    else throw CapabilityError(span, "dual is not available");
  }

  void bind(const Decl& d, const std::string& kind, const std::string& type) {
    if (kinds_.count(d.name)) throw TypeError(d.span, "'" + d.name + "' is already bound");
    kinds_[d.name] = kind;
    bindings_.push_back({d.name, kind, type});
  }

  [[noreturn]] void unbound(Span span, const std::string& name, const std::string& want) {
    auto it = kinds_.find(name);
    if (it == kinds_.end()) throw TypeError(span, "unknown name '" + name + "'");
    throw TypeError(span, "'" + name + "' is " + (it->second == "obj" ? "an object" : it->second == "mor" ? "a morphism" : "a thickened morphism") + ", expected " + want);
  }

  void require_equal(const ObjVal& have, const ObjVal& want, Span span, const std::string& what) {
    if (!(have.value == want.value))
      throw TypeError(span, what + ": " + have.sym + " vs " + want.sym);
  }

  // ------------------------------------------------------------ objects

  ObjVal obj(const ObjExpr& o) {
    switch (o.kind) {
      case ObjExpr::Kind::Name: {
        auto it = objs_.find(o.name);
        if (it == objs_.end()) unbound(o.span, o.name, "an object");
        return it->second;
      }
      case ObjExpr::Kind::Unit: return unit();
      case ObjExpr::Kind::Dual: return dual(obj(o.args[0]), o.span);
      case ObjExpr::Kind::Tensor: return tensor(obj(o.args[0]), obj(o.args[1]));
      default: break;
    }
    return {literal_obj(o), print(o), false};
  }

  Object literal_obj(const ObjExpr& o) {
    auto wrong = [&]() -> Object {
      throw TypeError(o.span, "'" + print(o) + "' is not an object of instance " + prog_.header.instance);
    };
    if constexpr (std::is_same_v<C, FinVect>) {
      if (o.kind == ObjExpr::Kind::Dim) return cat_.space(std::size_t(o.dim));
    } else if constexpr (std::is_same_v<C, SuperVect>) {
      if (o.kind == ObjExpr::Kind::Super) return cat_.space(std::size_t(o.even), std::size_t(o.odd));
    } else if constexpr (std::is_same_v<C, GradedVect>) {
      if (o.kind == ObjExpr::Kind::Graded) {
        std::map<int, std::size_t> dims;
        for (auto [deg, n] : o.degrees) {
          if (dims.count(int(deg))) throw TypeError(o.span, "degree " + std::to_string(deg) + " listed twice");
          dims[int(deg)] = std::size_t(n);
        }
        return cat_.space(dims);
      }
    } else if constexpr (is_rbord<C>) {
      if (o.kind == ObjExpr::Kind::Points) return PointSet{o.labels};
    }
    return wrong();
  }

  // ------------------------------------------------------------ declarations

  void declare(const Decl& d) {
    switch (d.kind) {
      case Decl::Kind::Obj: {
        auto v = obj(d.obj);
        bind(d, "obj", v.sym);
        // A name stands for its value from here on.
        objs_.insert_or_assign(d.name, ObjVal{v.value, d.name, false});
        return;
      }
      case Decl::Kind::Mor: {
        std::optional<MorType> sig;
        if (!d.sig.empty()) sig = MorType{obj(d.sig[0]), obj(d.sig[1])};
        MorType type;
        if (d.literal) {
          if (!sig) throw TypeError(d.span, "a literal morphism needs a signature 'mor " + d.name + " : X -> Y'");
          type = *sig;
          mors_.insert_or_assign(d.name, literal(*d.literal, type, d.span));
        } else {
          type = type_of(d.term[0]);
          if (sig) {
            require_equal(type.dom, sig->dom, d.span, "declared domain differs from the term's");
            require_equal(type.cod, sig->cod, d.span, "declared codomain differs from the term's");
            type = *sig;
          }
        }
        bind(d, "mor", type.str());
        mor_types_.insert_or_assign(d.name, type);
        return;
      }
      case Decl::Kind::Triple: {
        auto type = type_of(d.triple[0], &d);
        if (!d.sig.empty()) {
          MorType sig{obj(d.sig[0]), obj(d.sig[1])};
          require_equal(type.dom, sig.dom, d.span, "declared domain differs");
          require_equal(type.cod, sig.cod, d.span, "declared codomain differs");
          type = sig;
        }
        bind(d, "triple", type.str());
        triple_types_.insert_or_assign(d.name, type);
        return;
      }
    }
  }

  Morphism literal(const MorLiteral& lit, const MorType& type, Span span) {
    if constexpr (is_rbord<C>) {
      if (lit.kind == MorLiteral::Kind::Matrix)
        throw TypeError(span, "matrix literals need a linear instance");
      return bord_literal(lit, type, span);
    } else {
      if (lit.kind != MorLiteral::Kind::Matrix)
        throw TypeError(span, "bordism literals need the rbord1 instance");
      std::size_t rows = type.cod.value.dim(), cols = type.dom.value.dim();
      if (lit.rows.size() != rows)
        throw TypeError(span, "matrix has " + std::to_string(lit.rows.size()) + " rows, " +
                                  type.cod.sym + " has dimension " + std::to_string(rows));
      for (const auto& r : lit.rows)
        if (r.size() != cols)
          throw TypeError(span, "matrix row has " + std::to_string(r.size()) + " entries, " +
                                    type.dom.sym + " has dimension " + std::to_string(cols));
      RatMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, lit.rows[r][c]);
      try {
        return cat_.from_matrix(type.dom.value, type.cod.value, std::move(m));
      } catch (const InvalidArgument& e) {
        throw TypeError(span, e.what());
      }
    }
  }

  Morphism bord_literal(const MorLiteral& lit, const MorType& type, Span span)
    requires is_rbord<C>
  {
    const PointSet& src = type.dom.value;
    const PointSet& dst = type.cod.value;
    auto find = [&](const PointSet& set, const std::string& label, Side side) -> Endpoint {
      std::optional<std::size_t> at;
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (set.labels[i] != label) continue;
        if (at) throw TypeError(span, "label '" + label + "' occurs twice in " + cat_.describe(set));
        at = i;
      }
      if (!at)
        throw TypeError(span, std::string("no point '") + label + "' in " +
                                  (side == Side::In ? "source " : "target ") + cat_.describe(set));
      return {side, *at};
    };
    std::vector<Arc> arcs;
    std::vector<Rational> circles;
    for (const auto& a : lit.arcs) {
      Rational len = lit.kind == MorLiteral::Kind::Iso ? Rational(0) : a.length;
      switch (a.kind) {
        case ArcLit::Kind::Through:
          arcs.push_back({find(src, a.labels[0], Side::In), find(dst, a.labels[1], Side::Out), len});
          break;
        case ArcLit::Kind::Cup:
          arcs.push_back({find(dst, a.labels[0], Side::Out), find(dst, a.labels[1], Side::Out), len});
          break;
        case ArcLit::Kind::Cap:
          arcs.push_back({find(src, a.labels[0], Side::In), find(src, a.labels[1], Side::In), len});
          break;
        case ArcLit::Kind::Loop: circles.push_back(a.length); break;
      }
    }
    try {
      return cat_.make(src, dst, std::move(arcs), std::move(circles));
    } catch (const InvalidArgument& e) {
      throw TypeError(span, e.what());
    }
  }

  // ------------------------------------------------------------ typing

  MorType type_of(const Term& t) {
    switch (t.kind) {
      case Term::Kind::Gen: {
        auto it = mor_types_.find(t.name);
        if (it == mor_types_.end()) unbound(t.span, t.name, "a morphism");
        return it->second;
      }
      case Term::Kind::Id: {
        auto x = obj(t.objs[0]);
        return {x, x};
      }
      case Term::Kind::Compose: {
        auto a = type_of(t.terms[0]), b = type_of(t.terms[1]);
        if (!(a.cod.value == b.dom.value))
          throw TypeError(t.span, "cannot compose: '" + print(t.terms[0]) + "' ends at " + a.cod.sym +
                                      " but '" + print(t.terms[1]) + "' starts at " + b.dom.sym +
                                      " (" + a.cod.sym + " vs " + b.dom.sym + ")");
        return {a.dom, b.cod};
      }
      case Term::Kind::Tensor: {
        auto a = type_of(t.terms[0]), b = type_of(t.terms[1]);
        return {tensor(a.dom, b.dom), tensor(a.cod, b.cod)};
      }
      case Term::Kind::S:
      case Term::Kind::C: {
        if (t.kind == Term::Kind::C) need(C::capabilities.braided, t.span, "braiding c");
        auto x = obj(t.objs[0]), y = obj(t.objs[1]);
        return {tensor(x, y), tensor(y, x)};
      }
      case Term::Kind::Theta: {
        need(C::capabilities.balanced, t.span, "twist theta");
        auto x = obj(t.objs[0]);
        return {x, x};
      }
      case Term::Kind::Ev: {
        need(C::capabilities.duals, t.span, "ev");
        auto x = obj(t.objs[0]);
        return {tensor(dual(x, t.span), x), unit()};
      }
      case Term::Kind::Coev: {
        need(C::capabilities.duals, t.span, "coev");
        auto x = obj(t.objs[0]);
        return {unit(), tensor(x, dual(x, t.span))};
      }
      case Term::Kind::TraceHat: {
        auto tr = type_of(t.triples[0], nullptr);
        if (!(tr.dom.value == tr.cod.value))
          throw TypeError(t.span, "trace_hat needs an endomorphism, got " + tr.str());
        return {unit(), unit()};
      }
      case Term::Kind::Psi: return type_of(t.triples[0], nullptr);
      case Term::Kind::Pairing: {
        auto f = type_of(t.triples[0], nullptr);
        auto g = type_of(t.terms[0]);
        require_equal(g.dom, f.cod, t.span, "pairing: g must start where f ends");
        require_equal(g.cod, f.dom, t.span, "pairing: g must end where f starts");
        return {unit(), unit()};
      }
      case Term::Kind::Scalar:
        need(C::capabilities.additive, t.span, "scalar");
        return {unit(), unit()};
    }
    throw TypeError(t.span, "unhandled term");
  }

  MorType type_of(const TripleExpr& tr, const Decl* decl) {
    switch (tr.kind) {
      case TripleExpr::Kind::Name: {
        auto it = triple_types_.find(tr.name);
        if (it == triple_types_.end()) unbound(tr.span, tr.name, "a thickened morphism");
        return it->second;
      }
      case TripleExpr::Kind::Tuple: {
        if (!decl || decl->sig.empty())
          throw TypeError(tr.span, "(Z, t, b) needs a signature 'triple T : X -> Y'");
        MorType sig{obj(decl->sig[0]), obj(decl->sig[1])};
        auto z = obj(tr.objs[0]);
        auto t = type_of(tr.terms[0]), b = type_of(tr.terms[1]);
        require_equal(t.dom, unit(), tr.terms[0].span, "t must start at I");
        require_equal(t.cod, tensor(sig.cod, z), tr.terms[0].span, "t must end at Y⊗Z");
        require_equal(b.dom, tensor(z, sig.dom), tr.terms[1].span, "b must start at Z⊗X");
        require_equal(b.cod, unit(), tr.terms[1].span, "b must end at I");
        return sig;
      }
      case TripleExpr::Kind::Cut: {
        need(is_rbord<C>, tr.span, "cut");
        if (tr.fraction <= 0 || tr.fraction >= 1)
          throw TypeError(tr.span, "cut fraction must lie strictly between 0 and 1");
        return type_of(tr.terms[0]);
      }
      case TripleExpr::Kind::Thicken:
        need(C::capabilities.duals, tr.span, "thicken");
        return type_of(tr.terms[0]);
      case TripleExpr::Kind::Pre: {
        auto f = type_of(tr.inner[0], nullptr);
        auto g = type_of(tr.terms[0]);
        require_equal(g.cod, f.dom, tr.span, "pre: g must end where the triple starts");
        return {g.dom, f.cod};
      }
      case TripleExpr::Kind::Post: {
        auto f = type_of(tr.inner[0], nullptr);
        auto g = type_of(tr.terms[0]);
        require_equal(g.dom, f.cod, tr.span, "post: g must start where the triple ends");
        return {f.dom, g.cod};
      }
    }
    throw TypeError(tr.span, "unhandled triple");
  }

  // ------------------------------------------------------------ evaluation

  Morphism value(const Term& t) {
    return guarded(t.span, [&]() -> Morphism {
      switch (t.kind) {
        case Term::Kind::Gen: return mors_.at(t.name);
        case Term::Kind::Id: return cat_.identity(obj(t.objs[0]).value);
        case Term::Kind::Compose: return cat_.compose(value(t.terms[1]), value(t.terms[0]));
        case Term::Kind::Tensor: return cat_.tensor(value(t.terms[0]), value(t.terms[1]));
        case Term::Kind::S: return cat_.switching(obj(t.objs[0]).value, obj(t.objs[1]).value);
        case Term::Kind::C:
          if constexpr (BraidedCategory<C>) return cat_.braiding(obj(t.objs[0]).value, obj(t.objs[1]).value);
          break;
        case Term::Kind::Theta:
          if constexpr (BalancedCategory<C>) return cat_.twist(obj(t.objs[0]).value);
          break;
        case Term::Kind::Ev:
          if constexpr (DualizingCategory<C>) return cat_.ev(obj(t.objs[0]).value);
          break;
        case Term::Kind::Coev:
          if constexpr (DualizingCategory<C>) return cat_.coev(obj(t.objs[0]).value);
          break;
        case Term::Kind::TraceHat: return tr_hat(cat_, value(t.triples[0], nullptr));
        case Term::Kind::Psi: return psi(cat_, value(t.triples[0], nullptr));
        case Term::Kind::Pairing:
          return trace_pairing(cat_, value(t.triples[0], nullptr), value(t.terms[0]));
        case Term::Kind::Scalar:
          if constexpr (!is_rbord<C>) return cat_.scalar(t.value);
          break;
      }
      throw CapabilityError(t.span, "not available in instance " + prog_.header.instance);
    });
  }

  ThickTriple<C> value(const TripleExpr& tr, const Decl* decl) {
    return guarded(tr.span, [&]() -> ThickTriple<C> {
      switch (tr.kind) {
        case TripleExpr::Kind::Name: return triples_.at(tr.name);
        case TripleExpr::Kind::Tuple:
          return make_triple(cat_, obj(decl->sig[0]).value, obj(decl->sig[1]).value,
                             obj(tr.objs[0]).value, value(tr.terms[0]), value(tr.terms[1]));
        case TripleExpr::Kind::Cut:
          if constexpr (is_rbord<C>) return cut_thickener(cat_, value(tr.terms[0]), tr.fraction);
          break;
        case TripleExpr::Kind::Thicken:
          if constexpr (DualizingCategory<C>) return canonical_thickener(cat_, value(tr.terms[0]));
          break;
        case TripleExpr::Kind::Pre: return pre_compose(cat_, value(tr.inner[0], nullptr), value(tr.terms[0]));
        case TripleExpr::Kind::Post: return post_compose(cat_, value(tr.terms[0]), value(tr.inner[0], nullptr));
      }
      throw CapabilityError(tr.span, "not available in instance " + prog_.header.instance);
    });
  }

  std::string render(const Morphism& f) const {
    if constexpr (is_rbord<C>) {
      return cat_.describe(f);
    } else {
      if (f.source() == cat_.unit_object() && f.target() == cat_.unit_object())
        return traced::to_string(cat_.scalar_value(f));
      return f.matrix().to_string();
    }
  }

  const Program& prog_;
  C cat_;
  std::map<std::string, std::string> kinds_;
  std::map<std::string, ObjVal> objs_;
  std::map<std::string, MorType> mor_types_;
  std::map<std::string, MorType> triple_types_;
  std::map<std::string, Morphism> mors_;
  std::map<std::string, ThickTriple<C>> triples_;
  std::vector<BindingType> bindings_;
};

template <class F>
auto with_instance(const Program& p, F&& f) {
  const Header& h = p.header;
  if (h.instance == "finvect") return f(Interp<FinVect>(p, FinVect{}));
  if (h.instance == "supervect") return f(Interp<SuperVect>(p, SuperVect{}));
  if (h.instance == "rbord1") return f(Interp<RBord>(p, RBord{}));
  Rational q = h.q.value_or(Rational(2));
  try {
    return f(Interp<GradedVect>(p, GradedVect(q)));
  } catch (const InvalidArgument& e) {
    throw TypeError(h.span, e.what());
  }
}

}  // namespace

TypedProgram typecheck(const Program& program) {
  return with_instance(program, [&](auto interp) {
    interp.check();
    return TypedProgram{program, interp.bindings()};
  });
}

EvalResult evaluate(const TypedProgram& typed) {
  return with_instance(typed.program, [&](auto interp) {
    interp.check();
    return interp.run();
  });
}

RunOutcome run(std::string_view text) {
  RunOutcome out;
  try {
    out.result = evaluate(typecheck(parse(text)));
    out.exit_code = out.result.all_passed() ? 0 : 1;
  } catch (const DslError& e) {
    out.exit_code = 2;
    out.error = e.what();
  }
  return out;
}

}  // namespace traced::dsl
