#include "traced/check/suites.hpp"

#include "traced/balanced.hpp"
#include "traced/bordism.hpp"
#include "traced/check/controls.hpp"
#include "traced/check/generators.hpp"
#include "traced/errors.hpp"
#include "traced/field_theory.hpp"
#include "traced/thickened.hpp"
#include "traced/vect.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <type_traits>

namespace traced::check {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- dumping

template <class Grading>
json dump(const MatrixCategory<Grading>&, const Space<Grading>& x) {
  return x.grades();
}

template <class Grading>
json dump(const MatrixCategory<Grading>&, const LinearMap<Grading>& f) {
  return {{"source", f.source().grades()},
          {"target", f.target().grades()},
          {"matrix", f.matrix().to_string()}};
}

json dump(const RBord& cat, const PointSet& x) { return cat.describe(x); }

json dump(const RBord& cat, const RBordMorphism& f) {
  return {{"source", cat.describe(f.source())},
          {"target", cat.describe(f.target())},
          {"value", cat.describe(f)}};
}

template <class C>
json dump(const C& cat, const ThickTriple<C>& tr) {
  return {{"dom", dump(cat, tr.dom)},
          {"cod", dump(cat, tr.cod)},
          {"z", dump(cat, tr.z)},
          {"t", dump(cat, tr.t)},
          {"b", dump(cat, tr.b)}};
}

// Collects named inputs as a trial goes, so a failure can report them.
template <class C>
class Inputs {
 public:
  explicit Inputs(const C& cat) : cat_(cat) {}

  template <class V>
  const V& operator()(const char* name, const V& value) {
    data_[name] = dump(cat_, value);
    return value;
  }

  TrialResult fail(const std::string& what) {
    json out = data_;
    out["violated"] = what;
    return out;
  }

 private:
  const C& cat_;
  json data_ = json::object();
};

// ---------------------------------------------------------------- sampling

template <class C>
C make_instance(const SuiteConfig&) {
  return C{};
}
template <>
GradedVect make_instance<GradedVect>(const SuiteConfig& cfg) {
  return GradedVect(cfg.q);
}
template <>
PlainSwapGraded make_instance<PlainSwapGraded>(const SuiteConfig& cfg) {
  return PlainSwapGraded(cfg.q);
}
template <>
UntwistedGraded make_instance<UntwistedGraded>(const SuiteConfig& cfg) {
  return UntwistedGraded(cfg.q);
}

GenBounds bounds(const SuiteConfig& cfg) { return {cfg.max_dim, cfg.max_degree}; }

// Uniform sampling surface over the four instances.
template <class C>
class Sampler {
 public:
  Sampler(const C& cat, Generator& gen) : cat_(cat), gen_(gen) {}
  typename C::Object object(std::size_t min_dim = 1, std::size_t max_dim = 0) {
    return gen_.object(cat_, min_dim, max_dim);
  }
  typename C::Object middle(const typename C::Object& x, const typename C::Object& y) {
    return gen_.middle_object(cat_, x, y);
  }
  typename C::Morphism morphism(const typename C::Object& x, const typename C::Object& y) {
    return gen_.morphism(cat_, x, y);
  }
  ThickTriple<C> triple(const typename C::Object& x, const typename C::Object& y) {
    return gen_.triple(cat_, x, y);
  }

 private:
  const C& cat_;
  Generator& gen_;
};

// Point sets of one parity per trial, so every pair of objects has morphisms.
template <>
class Sampler<RBord> {
 public:
  Sampler(const RBord& cat, Generator& gen)
      : cat_(cat), gen_(gen), parity_(static_cast<std::size_t>(gen.rng().uniform(0, 1))) {}
  PointSet object(std::size_t = 1, std::size_t = 0) {
    return gen_.points(parity_ + 2 * static_cast<std::size_t>(gen_.rng().uniform(0, 1)));
  }
  PointSet middle(const PointSet& x, const PointSet& y) { return gen_.middle_points(x, y); }
  RBordMorphism morphism(const PointSet& x, const PointSet& y) {
    return gen_.morphism(cat_, x, y);
  }
  ThickTriple<RBord> triple(const PointSet& x, const PointSet& y) {
    return gen_.triple(cat_, x, y);
  }

 private:
  const RBord& cat_;
  Generator& gen_;
  std::size_t parity_;
};

template <class C>
struct Trial {
  const SuiteConfig& cfg;
  C cat;
  Generator gen;
  Sampler<C> s;
  Inputs<C> in;

  Trial(const SuiteConfig& c, Rng& rng)
      : cfg(c), cat(make_instance<C>(c)), gen(rng, bounds(c)), s(cat, gen), in(cat) {}

  bool eq(const typename C::Morphism& a, const typename C::Morphism& b) const {
    return cat.mor_equal(a, b);
  }
};

// ---------------------------------------------------------------- oracles

// Diagonal sums read straight off the matrix entries.
Rational oracle_trace(const FinVect&, const FinVect::Morphism& f) {
  Rational sum = 0;
  for (std::size_t i = 0; i < f.source().dim(); ++i) sum += f.matrix().at(i, i);
  return sum;
}

Rational oracle_trace(const GradedVect&, const GradedVect::Morphism& f) {
  Rational sum = 0;
  for (std::size_t i = 0; i < f.source().dim(); ++i) sum += f.matrix().at(i, i);
  return sum;
}

Rational oracle_trace(const SuperVect&, const SuperVect::Morphism& f) {
  Rational sum = 0;
  for (std::size_t i = 0; i < f.source().dim(); ++i)
    sum += f.source().grade(i) ? Rational(-f.matrix().at(i, i)) : f.matrix().at(i, i);
  return sum;
}

// ---------------------------------------------------------------- core laws

template <class C>
TrialResult laws(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = T.s.object(), y = T.s.object(), w = T.s.object(), v = T.s.object();
  auto f = in("f", T.s.morphism(x, y));
  auto g = in("g", T.s.morphism(y, w));
  auto h = in("h", T.s.morphism(w, v));
  if (!T.eq(cat.compose(h, cat.compose(g, f)), cat.compose(cat.compose(h, g), f)))
    return in.fail("associativity");
  if (!T.eq(cat.compose(cat.identity(y), f), f) || !T.eq(cat.compose(f, cat.identity(x)), f))
    return in.fail("unit laws");
  auto unit = cat.unit_object();
  if (!(cat.tensor_obj(unit, x) == x) || !(cat.tensor_obj(x, unit) == x))
    return in.fail("strict unit on objects");
  if (!(cat.tensor_obj(cat.tensor_obj(x, y), w) == cat.tensor_obj(x, cat.tensor_obj(y, w))))
    return in.fail("tensor_obj associativity");
  if (!T.eq(cat.tensor(f, cat.identity(unit)), f) || !T.eq(cat.tensor(cat.identity(unit), f), f))
    return in.fail("strict unit on morphisms");
  if (!T.eq(cat.tensor(cat.tensor(f, g), h), cat.tensor(f, cat.tensor(g, h))))
    return in.fail("tensor associativity");
  auto x2 = T.s.object(), y2 = T.s.object(), w2 = T.s.object();
  auto g1 = in("g1", T.s.morphism(x2, y2));
  auto g2 = in("g2", T.s.morphism(y2, w2));
  if (!T.eq(cat.tensor(cat.compose(g, f), cat.compose(g2, g1)),
            cat.compose(cat.tensor(g, g2), cat.tensor(f, g1))))
    return in.fail("interchange law");
  return std::nullopt;
}

template <class C>
TrialResult naturality(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x1 = T.s.object(), x2 = T.s.object(), y1 = T.s.object(), y2 = T.s.object();
  auto g = in("g", T.s.morphism(x1, x2));
  auto h = in("h", T.s.morphism(y1, y2));
  if (!T.eq(cat.compose(cat.switching(x2, y2), cat.tensor(g, h)),
            cat.compose(cat.tensor(h, g), cat.switching(x1, y1))))
    return in.fail("naturality of switching");
  // Every shipped switching except the graded one is an involution.
  if constexpr (!std::is_same_v<C, GradedVect>) {
    if (!T.eq(cat.compose(cat.switching(y1, x1), cat.switching(x1, y1)),
              cat.identity(cat.tensor_obj(x1, y1))))
      return in.fail("switching is an involution");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- calculus

template <class C>
TrialResult slide_invariance(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto unit = cat.unit_object();
  auto x = T.s.object(), y = T.s.object();
  for (int endo = 0; endo < 2; ++endo) {
    auto cod = endo ? x : y;
    auto z = T.s.middle(x, cod), z2 = T.s.middle(x, cod);
    auto t = in("t", T.s.morphism(unit, cat.tensor_obj(cod, z)));
    auto g = in("g", T.s.morphism(z, z2));
    auto b2 = in("b_prime", T.s.morphism(cat.tensor_obj(z2, x), unit));
    auto w = slide(cat, x, cod, t, g, b2);
    if (!holds(cat, w)) return in.fail("slide equations");
    if (!T.eq(psi(cat, w.left), psi(cat, w.right))) return in.fail("psi invariant under slide");
    if (endo && !T.eq(tr_hat(cat, w.left), tr_hat(cat, w.right)))
      return in.fail("tr_hat invariant under slide");
  }
  return std::nullopt;
}

template <class C>
TrialResult composition(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto w = T.s.object(), x = T.s.object(), y = T.s.object(), v = T.s.object();
  auto tr = in("triple", T.s.triple(x, y));
  auto f = in("f", T.s.morphism(w, x));
  auto h = in("h", T.s.morphism(y, v));
  if (!T.eq(psi(cat, pre_compose(cat, tr, f)), cat.compose(psi(cat, tr), f)))
    return in.fail("psi(pre_compose(tr, f)) = psi(tr)∘f");
  if (!T.eq(psi(cat, post_compose(cat, h, tr)), cat.compose(h, psi(cat, tr))))
    return in.fail("psi(post_compose(h, tr)) = h∘psi(tr)");
  auto same = pre_compose(cat, tr, cat.identity(x));
  if (!T.eq(same.t, tr.t) || !T.eq(same.b, tr.b) || !(same.z == tr.z))
    return in.fail("pre_compose with identity keeps the representative");
  return std::nullopt;
}

template <class C>
TrialResult hat_composition(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto u = T.s.object(), x = T.s.object(), y = T.s.object();
  for (int endo = 0; endo < 2; ++endo) {
    auto start = endo ? y : u;
    auto tr1 = in("tr1", T.s.triple(x, y));
    auto tr2 = in("tr2", T.s.triple(start, x));
    auto w = hat_comp_witness(cat, tr1, tr2);
    if (!holds(cat, w)) return in.fail("witness slide equations");
    auto composite = cat.compose(psi(cat, tr1), psi(cat, tr2));
    if (!T.eq(psi(cat, w.left), composite) || !T.eq(psi(cat, w.right), composite))
      return in.fail("both sides thicken f1∘f2");
    if (endo && !T.eq(tr_hat(cat, w.left), tr_hat(cat, w.right)))
      return in.fail("tr_hat(f̂1∘f2) = tr_hat(f1∘f̂2)");
  }
  return std::nullopt;
}

template <class C>
TrialResult symmetry(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = T.s.object(), y = T.s.object();
  auto f_hat = in("f_hat", T.s.triple(x, y));
  auto g = in("g", T.s.morphism(y, x));
  if (!T.eq(tr_hat(cat, pre_compose(cat, f_hat, g)), tr_hat(cat, post_compose(cat, g, f_hat))))
    return in.fail("tr_hat(f̂∘g) = tr_hat(g∘f̂)");
  return std::nullopt;
}

template <class C>
TrialResult pairing_symmetry(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = T.s.object(), y = T.s.object();
  auto f_hat = in("f_hat", T.s.triple(x, y));
  auto g_hat = in("g_hat", T.s.triple(y, x));
  auto f = psi(cat, f_hat), g = psi(cat, g_hat);
  auto fg = trace_pairing(cat, f_hat, g);
  if (!T.eq(fg, trace_pairing(cat, g_hat, f))) return in.fail("tr(f,g) = tr(g,f)");
  if (!T.eq(fg, trace_pairing_right(cat, f, g_hat))) return in.fail("tr_hat(f̂∘g) = tr_hat(f∘ĝ)");
  return std::nullopt;
}

template <class C>
TrialResult trace_consistency(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = T.s.object(), y = T.s.object();
  auto f_hat = in("f_hat", T.s.triple(x, y));
  auto g = in("g", T.s.morphism(y, x));
  auto fg = cat.compose(psi(cat, f_hat), g);
  auto pairing = trace_pairing(cat, f_hat, g);
  if (!T.eq(pairing, categorical_trace(cat, fg))) return in.fail("tr(f,g) = tr(f∘g)");
  if (cat.scalar_value(pairing) != oracle_trace(cat, fg))
    return in.fail("tr(f,g) equals the diagonal-sum trace of f∘g");
  return std::nullopt;
}

template <class C>
TrialResult padding(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto unit = cat.unit_object();
  auto x = T.s.object();
  auto tr = in("triple", T.s.triple(x, x));
  auto w = T.s.middle(x, x);
  auto junk_b = in("junk_b", T.s.morphism(cat.tensor_obj(w, x), unit));
  auto junk_t = in("junk_t", T.s.morphism(unit, cat.tensor_obj(x, w)));
  ThickTriple<C> pad_b{x, x, w, cat.zero_mor(unit, cat.tensor_obj(x, w)), junk_b};
  ThickTriple<C> pad_t{x, x, w, junk_t, cat.zero_mor(cat.tensor_obj(w, x), unit)};
  for (const auto& pad : {pad_b, pad_t}) {
    auto padded = add_triples(cat, tr, pad);
    if (!T.eq(psi(cat, padded), psi(cat, tr))) return in.fail("padding keeps psi");
    if (!T.eq(tr_hat(cat, padded), tr_hat(cat, tr))) return in.fail("padding keeps tr_hat");
  }
  return std::nullopt;
}

template <class C>
TrialResult additivity(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = T.s.object(), y = T.s.object();
  auto tr1 = in("tr1", T.s.triple(x, y));
  auto tr2 = in("tr2", T.s.triple(x, y));
  auto sum = add_triples(cat, tr1, tr2);
  if (!T.eq(psi(cat, sum), cat.add_mor(psi(cat, tr1), psi(cat, tr2))))
    return in.fail("psi(f̂1+f̂2) = psi(f̂1)+psi(f̂2)");
  auto cancel = add_triples(cat, tr1, negate_triple(cat, tr1));
  if (!T.eq(psi(cat, cancel), cat.zero_mor(x, y))) return in.fail("psi(f̂-f̂) = 0");
  auto with_zero = add_triples(cat, tr1, zero_triple(cat, x, y));
  if (!T.eq(psi(cat, with_zero), psi(cat, tr1))) return in.fail("zero triple is neutral for psi");

  auto e1 = in("e1", T.s.triple(x, x));
  auto e2 = in("e2", T.s.triple(x, x));
  if (!T.eq(tr_hat(cat, add_triples(cat, e1, e2)), cat.add_mor(tr_hat(cat, e1), tr_hat(cat, e2))))
    return in.fail("tr_hat is additive");
  if (cat.scalar_value(tr_hat(cat, add_triples(cat, e1, negate_triple(cat, e1)))) != 0)
    return in.fail("tr_hat(f̂-f̂) = 0");
  if (!T.eq(tr_hat(cat, add_triples(cat, e1, zero_triple(cat, x, x))), tr_hat(cat, e1)))
    return in.fail("zero triple is neutral for tr_hat");

  auto g1 = in("g1", T.s.morphism(y, x));
  auto g2 = in("g2", T.s.morphism(y, x));
  auto lambda = T.gen.rng().small_rational();
  in("lambda", cat.scalar(lambda));
  if (!T.eq(trace_pairing(cat, sum, g1),
            cat.add_mor(trace_pairing(cat, tr1, g1), trace_pairing(cat, tr2, g1))))
    return in.fail("tr(f1+f2, g) = tr(f1,g)+tr(f2,g)");
  if (!T.eq(trace_pairing(cat, tr1, cat.add_mor(g1, g2)),
            cat.add_mor(trace_pairing(cat, tr1, g1), trace_pairing(cat, tr1, g2))))
    return in.fail("tr(f, g1+g2) = tr(f,g1)+tr(f,g2)");
  if (!T.eq(trace_pairing(cat, tr1, cat.scale(lambda, g1)),
            cat.scale(lambda, trace_pairing(cat, tr1, g1))))
    return in.fail("tr(f, λg) = λ tr(f,g)");
  return std::nullopt;
}

struct MultChecks {
  bool psi = true;
  bool tr_hat = true;
  bool pairing = true;
  CrossingConvention convention{};
};

template <class C>
TrialResult multiplicativity_with(const SuiteConfig& cfg, Rng& rng, MultChecks checks) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto conv = checks.convention;
  auto x1 = T.s.object(), y1 = T.s.object(), x2 = T.s.object(), y2 = T.s.object();
  if (checks.psi) {
    auto tr1 = in("tr1", T.s.triple(x1, y1));
    auto tr2 = in("tr2", T.s.triple(x2, y2));
    if (!T.eq(psi(cat, tensor_triples(cat, tr1, tr2, conv)),
              cat.tensor(psi(cat, tr1), psi(cat, tr2))))
      return in.fail("psi(f̂1⊗f̂2) = psi(f̂1)⊗psi(f̂2)");
  }
  if (checks.tr_hat) {
    auto e1 = in("e1", T.s.triple(x1, x1));
    auto e2 = in("e2", T.s.triple(x2, x2));
    if (!T.eq(tr_hat(cat, tensor_triples(cat, e1, e2, conv)),
              cat.tensor(tr_hat(cat, e1), tr_hat(cat, e2))))
      return in.fail("tr_hat(f̂1⊗f̂2) = tr_hat(f̂1)·tr_hat(f̂2)");
  }
  if (checks.pairing) {
    auto f1 = in("f1_hat", T.s.triple(x1, y1));
    auto f2 = in("f2_hat", T.s.triple(x2, y2));
    auto g1 = in("g1", T.s.morphism(y1, x1));
    auto g2 = in("g2", T.s.morphism(y2, x2));
    if (!T.eq(trace_pairing(cat, tensor_triples(cat, f1, f2, conv), cat.tensor(g1, g2)),
              cat.tensor(trace_pairing(cat, f1, g1), trace_pairing(cat, f2, g2))))
      return in.fail("tr(f1⊗f2, g1⊗g2) = tr(f1,g1)·tr(f2,g2)");
  }
  return std::nullopt;
}

template <class C>
TrialResult multiplicativity(const SuiteConfig& cfg, Rng& rng) {
  return multiplicativity_with<C>(cfg, rng, {});
}

// ---------------------------------------------------------------- duals

// phi agrees with the index contraction phi(t)[y][x] = t[y*dim X + x] and
// psi∘alpha = phi.
template <class C>
TrialResult phi_alpha(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = T.s.object(), y = T.s.object();
  auto t = in("t", T.s.morphism(cat.unit_object(), cat.tensor_obj(y, cat.dual(x))));
  auto f = phi(cat, x, y, t);
  for (std::size_t r = 0; r < y.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c)
      if (f.matrix().at(r, c) != t.matrix().at(r * x.dim() + c, 0))
        return in.fail("phi equals the contraction oracle");
  if (!T.eq(psi(cat, alpha(cat, x, y, t)), f)) return in.fail("psi∘alpha = phi");
  if (!T.eq(phi_inverse(cat, f), t)) return in.fail("phi_inverse∘phi = id");
  return std::nullopt;
}

// Injectivity of phi: basis vectors e_y⊗e^x go to distinct matrix units, and
// low-rank sums of pure tensors map to zero only when they vanish.
template <class C>
TrialResult phi_injective(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto unit = cat.unit_object();
  auto x = in("x", T.s.object(1, 5)), y = in("y", T.s.object(1, 5));
  auto target = cat.tensor_obj(y, cat.dual(x));
  for (std::size_t k = 0; k < target.dim(); ++k) {
    if (target.grade(k) != 0) continue;
    RatMatrix e(target.dim(), 1);
    e.set(k, 0, Rational(1));
    auto image = phi(cat, x, y, cat.from_matrix(unit, target, e)).matrix();
    if (image.nonzeros() != 1 || image.at(k / x.dim(), k % x.dim()) != 1)
      return in.fail("phi sends a basis tensor to its matrix unit");
  }
  // rank < min(dim X, dim Y): sum of r products y_k ⊗ g_k
  std::size_t max_rank = std::min(x.dim(), y.dim()) - 1;
  long rank = T.gen.rng().uniform(0, long(max_rank));
  auto t = cat.zero_mor(unit, target);
  for (long k = 0; k < rank; ++k) {
    auto yk = T.s.morphism(unit, y);
    auto gk = T.s.morphism(cat.dual(x), unit);
    // y_k ⊗ g_k viewed in Y⊗X∨ through the identification (X∨)∨ = X
    RatMatrix m(target.dim(), 1);
    for (std::size_t a = 0; a < y.dim(); ++a)
      for (std::size_t c = 0; c < x.dim(); ++c)
        m.set(a * x.dim() + c, 0, yk.matrix().at(a, 0) * gk.matrix().at(0, c));
    t = cat.add_mor(t, cat.from_matrix(unit, target, m));
  }
  in("t", t);
  auto f = phi(cat, x, y, t);
  if (f.matrix().is_zero() != t.matrix().is_zero()) return in.fail("phi(t) = 0 iff t = 0");
  if (!T.eq(phi_inverse(cat, f), t)) return in.fail("phi_inverse∘phi = id");
  return std::nullopt;
}

template <class C>
TrialResult alpha_trace(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = T.s.object();
  auto t = in("t", T.s.morphism(cat.unit_object(), cat.tensor_obj(x, cat.dual(x))));
  if (cat.scalar_value(tr_hat(cat, alpha(cat, x, x, t))) != oracle_trace(cat, phi(cat, x, x, t)))
    return in.fail("tr_hat(alpha(t)) = trace of phi(t)");
  return std::nullopt;
}

template <class C>
TrialResult dual_bijection(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = in("x", T.s.object(1, 5)), y = in("y", T.s.object(1, 5));
  auto ev = cat.ev(x), coev = cat.coev(x), xd = cat.dual(x);
  if (!T.eq(cat.compose(cat.tensor(cat.identity(x), ev), cat.tensor(coev, cat.identity(x))),
            cat.identity(x)))
    return in.fail("zigzag on X");
  if (!T.eq(cat.compose(cat.tensor(ev, cat.identity(xd)), cat.tensor(cat.identity(xd), coev)),
            cat.identity(xd)))
    return in.fail("zigzag on X∨");
  auto f = in("f", T.s.morphism(x, y));
  if (!T.eq(psi(cat, canonical_thickener(cat, f)), f)) return in.fail("psi(alpha(Φ⁻¹ f)) = f");
  auto t = in("t", T.s.morphism(cat.unit_object(), cat.tensor_obj(y, xd)));
  if (!T.eq(phi_inverse(cat, psi(cat, alpha(cat, x, y, t))), t))
    return in.fail("Φ⁻¹∘psi∘alpha = id");
  return std::nullopt;
}

template <class C>
TrialResult dual_trace(const SuiteConfig& cfg, Rng& rng) {
  Trial<C> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = T.s.object(1, 5);
  auto f = in("f", T.s.morphism(x, x));
  if (cat.scalar_value(tr_hat(cat, canonical_thickener(cat, f))) != oracle_trace(cat, f))
    return in.fail("tr_hat(alpha(Φ⁻¹ f)) = classical trace");
  return std::nullopt;
}

// ---------------------------------------------------------------- balanced

TrialResult balanced_relations(const SuiteConfig& cfg, Rng& rng) {
  Trial<GradedVect> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = in("x", T.s.object(1, 3)), y = in("y", T.s.object(1, 3)),
       w = in("w", T.s.object(1, 3));
  auto id = [&](const auto& o) { return cat.identity(o); };
  if (!T.eq(cat.braiding(x, cat.tensor_obj(y, w)),
            cat.compose(cat.tensor(id(y), cat.braiding(x, w)),
                        cat.tensor(cat.braiding(x, y), id(w)))))
    return in.fail("c_{X,Y⊗W} = (id_Y⊗c_{X,W})∘(c_{X,Y}⊗id_W)");
  if (!T.eq(cat.braiding(cat.tensor_obj(x, y), w),
            cat.compose(cat.tensor(cat.braiding(x, w), id(y)),
                        cat.tensor(id(x), cat.braiding(y, w)))))
    return in.fail("c_{X⊗Y,W} = (c_{X,W}⊗id_Y)∘(id_X⊗c_{Y,W})");
  auto xy = cat.tensor_obj(x, y);
  if (!T.eq(cat.compose(cat.braiding_inv(x, y), cat.braiding(x, y)), id(xy)) ||
      !T.eq(cat.compose(cat.braiding(x, y), cat.braiding_inv(x, y)), id(cat.tensor_obj(y, x))))
    return in.fail("c⁻¹ inverts c");
  if (!T.eq(cat.twist(xy),
            compose_all(cat, cat.braiding(y, x), cat.braiding(x, y),
                        cat.tensor(cat.twist(x), cat.twist(y)))))
    return in.fail("θ_{X⊗Y} = c_{Y,X}∘c_{X,Y}∘(θ_X⊗θ_Y)");
  if (!T.eq(cat.twist(cat.unit_object()), id(cat.unit_object()))) return in.fail("θ_I = id");
  // switching scalar q^{mn+m²} read off entrywise
  auto s = cat.switching(x, y);
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) {
      long m = x.grade(i), n = y.grade(j);
      if (s.matrix().at(j * x.dim() + i, i * y.dim() + j) != pow(cat.q(), m * n + m * m))
        return in.fail("s_{X,Y} scales e_i⊗f_j by q^{mn+m²}");
    }
  auto x2 = T.s.object(1, 3), y2 = T.s.object(1, 3);
  auto g = in("g", T.s.morphism(x, x2));
  auto h = in("h", T.s.morphism(y, y2));
  if (!T.eq(cat.compose(cat.braiding(x2, y2), cat.tensor(g, h)),
            cat.compose(cat.tensor(h, g), cat.braiding(x, y))))
    return in.fail("naturality of c");
  if (!T.eq(cat.compose(g, cat.twist(x)), cat.compose(cat.twist(x2), g)))
    return in.fail("naturality of θ");
  return std::nullopt;
}

TrialResult balanced_over_under(const SuiteConfig& cfg, Rng& rng) {
  Trial<GradedVect> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto unit = cat.unit_object();
  auto v = in("v", T.s.object(1, 3)), w = in("w", T.s.object(1, 3));
  // Let V carry some degree-0 part so that f and g can be nonzero.
  auto v0 = cat.direct_sum(v, cat.space({{0, 1}}));
  auto f = in("f", T.s.morphism(v0, unit));
  auto w0 = cat.direct_sum(w, cat.space({{0, 1}}));
  auto g = in("g", T.s.morphism(unit, w0));
  auto lhs_f = cat.tensor(f, cat.identity(w));
  if (!T.eq(cat.compose(cat.tensor(cat.identity(w), f), cat.braiding(v0, w)), lhs_f) ||
      !T.eq(cat.compose(cat.tensor(cat.identity(w), f), cat.braiding_inv(w, v0)), lhs_f))
    return in.fail("(id_W⊗f)∘c_{V,W} = f⊗id_W = (id_W⊗f)∘c⁻¹_{W,V}");
  auto lhs_g = cat.tensor(g, cat.identity(v));
  if (!T.eq(cat.compose(cat.braiding(v, w0), cat.tensor(cat.identity(v), g)), lhs_g) ||
      !T.eq(cat.compose(cat.braiding_inv(w0, v), cat.tensor(cat.identity(v), g)), lhs_g))
    return in.fail("c_{V,W}∘(id_V⊗g) = g⊗id_V = c⁻¹_{W,V}∘(id_V⊗g)");
  return std::nullopt;
}

// A flipped crossing in f̂1⊗f̂2 must break psi multiplicativity somewhere.
template <Crossing Top, Crossing Bottom>
TrialResult crossing_convention(const SuiteConfig& cfg, Rng& rng) {
  return multiplicativity_with<GradedVect>(cfg, rng, {true, false, false, {Top, Bottom}});
}

// ---------------------------------------------------------------- bordism

TrialResult bord_thick(const SuiteConfig& cfg, Rng& rng) {
  Trial<RBord> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = T.s.object(), y = T.s.object();
  auto tr = in("triple", T.s.triple(x, y));
  if (!psi(cat, tr).is_bordism()) return in.fail("psi of a triple is a bordism");
  auto sigma = in("sigma", T.gen.bordism(cat, x, y));
  auto fraction = make_rational(T.gen.rng().uniform(1, 5), 6);
  if (!T.eq(psi(cat, cut_thickener(cat, sigma, fraction)), sigma))
    return in.fail("psi(cut_thickener(σ)) = σ");
  if (!x.empty() && x.size() == y.size()) {
    auto iso = in("iso", T.gen.isometry(cat, x, y));
    try {
      cut_thickener(cat, iso, fraction);
      return in.fail("isometries cannot be cut");
    } catch (const NotBordism&) {
    }
  }
  return std::nullopt;
}

TrialResult bord_trace_property(const SuiteConfig& cfg, Rng& rng) {
  Trial<RBord> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = T.gen.points(1, 3);
  auto sigma = in("sigma", T.gen.bordism(cat, x, x));
  auto f1 = make_rational(T.gen.rng().uniform(1, 11), 12);
  auto f2 = make_rational(T.gen.rng().uniform(1, 11), 12);
  auto c1 = cut_thickener(cat, sigma, f1), c2 = cut_thickener(cat, sigma, f2);
  if (!T.eq(tr_hat(cat, c1), tr_hat(cat, c2))) return in.fail("two cuts give the same tr_hat");
  if (!T.eq(psi(cat, c1), psi(cat, c2))) return in.fail("two cuts give the same psi");
  auto limit = max_collar(sigma);
  if (limit) {
    auto w = collar_witness(cat, sigma, f1 * *limit, f2 * *limit);
    if (!holds(cat, w)) return in.fail("collar witness satisfies the slide equations");
  }
  return std::nullopt;
}

TrialResult bord_glue(const SuiteConfig& cfg, Rng& rng) {
  Trial<RBord> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  auto x = T.gen.points(0, 3);
  auto sigma = in("sigma", T.gen.bordism(cat, x, x));
  auto fraction = make_rational(T.gen.rng().uniform(1, 5), 6);
  if (!T.eq(glue_trace(cat, sigma), tr_hat(cat, cut_thickener(cat, sigma, fraction))))
    return in.fail("glue_trace(σ) = tr_hat(cut_thickener(σ))");
  return std::nullopt;
}

// E(glue(Σ1∘Σ2)) = tr(E(Σ2), E(Σ1)). Bordisms with caps or cups need a
// symmetric A; through-only pairs take an arbitrary A.
TrialResult partition(const SuiteConfig& cfg, Rng& rng) {
  Trial<RBord> T(cfg, rng);
  auto& cat = T.cat;
  auto& in = T.in;
  std::size_t n = T.gen.rng().chance(1, 2) ? 2 : 3;
  bool through = T.gen.rng().chance(1, 2);
  RatMatrix a = T.gen.square_matrix(n, !through);
  BordOptions opt{.integer_lengths = true, .max_length = 3, .through_only = through};
  PointSet x, y;
  if (through) {
    x = T.gen.points(1, n == 2 ? 3 : 2);
    y = T.gen.points(x.size());
  } else {
    x = T.gen.points(0, 2);
    y = T.gen.points(x.size() == 1 ? 1 : 2 * T.gen.rng().uniform(0, 1));
  }
  auto s1 = in("sigma1", T.gen.bordism(cat, x, y, opt));
  auto s2 = in("sigma2", T.gen.bordism(cat, y, x, opt));
  FieldTheory field(a);
  const FinVect& vect = field.target();
  auto lhs = field(glue_trace(cat, cat.compose(s1, s2)));
  auto rhs = trace_pairing(vect, canonical_thickener(vect, field(s2)), field(s1));
  auto fail = [&](const std::string& what) {
    auto out = *in.fail(what);
    out["A"] = a.to_string();
    return TrialResult(out);
  };
  if (!vect.mor_equal(lhs, rhs)) return fail("E(Σ_gl) = tr(E(Σ2), E(Σ1))");
  // Same pairing through the image under E of a cut of Σ2; the cut has caps
  // and cups, so this needs a symmetric A.
  auto limit = max_collar(s2);
  if (field.symmetric() && limit && *limit > 1) {
    auto image = field(cut_thickener_at(cat, s2, Rational(1)));
    if (!vect.mor_equal(lhs, trace_pairing(vect, image, field(s1))))
      return fail("E(Σ_gl) = tr_hat(E(cut Σ2)∘E(Σ1))");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- registry

template <class C>
void add_generic(std::vector<Suite>& out, const std::string& inst) {
  out.push_back({"laws." + inst, {"core.1"}, inst,
                 "associativity, unit and interchange laws", false, laws<C>});
  out.push_back({"naturality." + inst, {"core.2"}, inst, "switching is natural", false,
                 naturality<C>});
  out.push_back({"slide." + inst, {"lem.psi", "lem.trhat"}, inst,
                 "psi and tr_hat are invariant under slides", false, slide_invariance<C>});
  out.push_back({"compose." + inst, {"lem.compose"}, inst,
                 "pre/post composition of triples tracks composition", false, composition<C>});
  out.push_back({"hatcomp." + inst, {"lem.hatcomp"}, inst,
                 "witness g relates f̂1∘f2 and f1∘f̂2", false, hat_composition<C>});
  out.push_back({"symmetry." + inst, {"whtr.1"}, inst, "tr_hat(f̂∘g) = tr_hat(g∘f̂)", false,
                 symmetry<C>});
  out.push_back({"pairing-symmetry." + inst, {"main2.1"}, inst, "tr(f,g) = tr(g,f)", false,
                 pairing_symmetry<C>});
}

template <class C>
void add_linear(std::vector<Suite>& out, const std::string& inst) {
  out.push_back({"trace-consistency." + inst, {"main2.1"}, inst,
                 "tr(f,g) = classical trace of f∘g", false, trace_consistency<C>});
  out.push_back({"padding." + inst, {"tp.pad"}, inst,
                 "padding a triple by an independent summand keeps psi and tr_hat", false,
                 padding<C>});
  out.push_back({"additivity." + inst, {"whtr.2", "main2.2", "lem.psi-hom"}, inst,
                 "psi, tr_hat and the pairing are additive", false, additivity<C>});
  out.push_back({"multiplicativity." + inst, {"whtr.3", "main2.3", "lem.psi-mult"}, inst,
                 "psi, tr_hat and the pairing are multiplicative", false, multiplicativity<C>});
  out.push_back({"dual.1." + inst, {"dual.1"}, inst, "psi∘alpha is a bijection (dims <= 5)",
                 false, dual_bijection<C>});
  out.push_back({"dual.2." + inst, {"dual.2"}, inst,
                 "tr_hat(alpha(Φ⁻¹ f)) = classical trace (dims <= 5)", false, dual_trace<C>});
}

template <class C>
void add_vect(std::vector<Suite>& out, const std::string& inst) {
  out.push_back({"vect.1." + inst, {"vect.1"}, inst, "phi is the contraction and psi∘alpha = phi",
                 false, phi_alpha<C>});
  out.push_back({"vect.2." + inst, {"vect.2"}, inst, "phi is injective", false, phi_injective<C>});
  out.push_back({"vect.3." + inst, {"vect.3"}, inst, "tr_hat(alpha(t)) = trace of phi(t)", false,
                 alpha_trace<C>});
}

std::vector<Suite> build() {
  std::vector<Suite> out;
  add_generic<FinVect>(out, "finvect");
  add_generic<SuperVect>(out, "supervect");
  add_generic<GradedVect>(out, "graded");
  add_generic<RBord>(out, "rbord");
  add_linear<FinVect>(out, "finvect");
  add_linear<SuperVect>(out, "supervect");
  add_linear<GradedVect>(out, "graded");
  add_vect<FinVect>(out, "finvect");
  add_vect<SuperVect>(out, "supervect");

  out.push_back({"balanced.relations", {"bal.relations", "bal.twist"}, "graded",
                 "hexagons, inverse, twist equation and s = (id⊗θ)∘c", false,
                 balanced_relations});
  out.push_back({"balanced.over-under", {"bal.over-under"}, "graded",
                 "crossings past morphisms from/to the unit", false, balanced_over_under});
  out.push_back({"balanced.crossing-over-over", {"lem.psi-mult"}, "graded",
                 "c_{X1,Z2} in place of c⁻¹ in f̂1⊗f̂2 breaks psi multiplicativity", true,
                 crossing_convention<Crossing::Over, Crossing::Over>});
  out.push_back({"balanced.crossing-under-under", {"lem.psi-mult"}, "graded",
                 "c⁻¹_{Y2,Z1} in place of c in f̂1⊗f̂2 breaks psi multiplicativity", true,
                 crossing_convention<Crossing::Under, Crossing::Under>});
  out.push_back({"balanced.negative-control", {"whtr.3"}, "graded",
                 "plain swap in tr_hat breaks multiplicativity", true,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   return multiplicativity_with<PlainSwapGraded>(cfg, rng,
                                                                 {false, true, false, {}});
                 }});
  out.push_back({"balanced.untwisted-control", {"whtr.3"}, "graded",
                 "braiding without twist in tr_hat breaks multiplicativity", true,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   return multiplicativity_with<UntwistedGraded>(cfg, rng,
                                                                 {false, true, false, {}});
                 }});
  out.push_back({"supervect.koszul-mutation", {"whtr.3"}, "supervect",
                 "inverted Koszul sign breaks multiplicativity", true,
                 [](const SuiteConfig& cfg, Rng& rng) {
                   return multiplicativity_with<InvertedKoszulSuper>(cfg, rng, {});
                 }});

  out.push_back({"bord.thick", {"bord.1"}, "rbord",
                 "psi of triples are bordisms; bordisms are thick; isometries are not", false,
                 bord_thick});
  out.push_back({"bord.trace-property", {"bord.2"}, "rbord",
                 "independent cuts give equal tr_hat, related by the collar", false,
                 bord_trace_property});
  out.push_back({"bord.glue", {"bord.3"}, "rbord", "glue_trace = tr_hat∘cut_thickener", false,
                 bord_glue});
  out.push_back({"sec2.partition", {"sec2.partition"}, "rbord",
                 "E(Σ_gl) = tr(E(Σ2), E(Σ1)) for an exact field theory", false, partition});
  return out;
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = build();
  return all;
}

const Suite* find_suite(std::string_view id) {
  for (const auto& s : suites())
    if (s.id == id) return &s;
  return nullptr;
}

std::vector<const Suite*> select_suites(const std::vector<std::string>& selectors) {
  std::vector<const Suite*> out;
  auto add = [&](const Suite* s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const auto& sel : selectors) {
    bool matched = false;
    for (const auto& s : suites()) {
      if (sel == "all" || s.id == sel || s.id.rfind(sel + ".", 0) == 0) {
        add(&s);
        matched = true;
      }
    }
    if (!matched) throw InvalidArgument("unknown suite '" + sel + "'");
  }
  std::sort(out.begin(), out.end(), [](const Suite* a, const Suite* b) {
    return a - suites().data() < b - suites().data();
  });
  return out;
}

TrialResult run_trial(const Suite& suite, const SuiteConfig& cfg, std::size_t trial) {
  Rng rng(cfg.seed, suite.id, trial);
  try {
    return suite.trial(cfg, rng);
  } catch (const std::exception& e) {
    return json{{"exception", e.what()}};
  }
}

SuiteResult run_suite(const Suite& suite, const SuiteConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.suite = &suite;
  result.trials = cfg.trials;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    if (auto failure = run_trial(suite, cfg, i)) {
      ++result.failures;
      if (!result.first) result.first = Counterexample{i, std::move(*failure)};
    }
  }
  result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

bool Report::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed(); });
}

Report run(const SuiteConfig& cfg, unsigned jobs) {
  auto start = std::chrono::steady_clock::now();
  auto selected = select_suites(cfg.suites);
  Report report;
  report.config = cfg;
  report.results.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < selected.size();)
      report.results[i] = run_suite(*selected[i], cfg);
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace traced::check
