#pragma once

#include "traced/category.hpp"

#include <string>
#include <utility>

namespace traced {

// A representative (Z, t: I→Y⊗Z, b: Z⊗X→I) of a thickened morphism X→Y.
// Equivalence of triples is never decided; everything is phrased through
// psi, tr_hat and explicit slide witnesses.
template <MonoidalCategory C>
struct ThickTriple {
  typename C::Object dom;  // X
  typename C::Object cod;  // Y
  typename C::Object z;
  typename C::Morphism t;
  typename C::Morphism b;
};

template <MonoidalCategory C>
void validate(const C& cat, const ThickTriple<C>& tr) {
  const auto unit = cat.unit_object();
  if (!(tr.t.source() == unit) || !(tr.t.target() == cat.tensor_obj(tr.cod, tr.z)))
    throw DomainMismatch("triple: t must map I to " + cat.describe(cat.tensor_obj(tr.cod, tr.z)) +
                         ", got " + cat.describe(tr.t.source()) + " -> " +
                         cat.describe(tr.t.target()));
  if (!(tr.b.target() == unit) || !(tr.b.source() == cat.tensor_obj(tr.z, tr.dom)))
    throw DomainMismatch("triple: b must map " + cat.describe(cat.tensor_obj(tr.z, tr.dom)) +
                         " to I, got " + cat.describe(tr.b.source()) + " -> " +
                         cat.describe(tr.b.target()));
}

template <MonoidalCategory C>
ThickTriple<C> make_triple(const C& cat, typename C::Object dom, typename C::Object cod,
                           typename C::Object z, typename C::Morphism t,
                           typename C::Morphism b) {
  ThickTriple<C> tr{std::move(dom), std::move(cod), std::move(z), std::move(t), std::move(b)};
  validate(cat, tr);
  return tr;
}

// (id_Y⊗b)∘(t⊗id_X)
template <MonoidalCategory C>
typename C::Morphism psi(const C& cat, const ThickTriple<C>& tr) {
  return cat.compose(cat.tensor(cat.identity(tr.cod), tr.b),
                     cat.tensor(tr.t, cat.identity(tr.dom)));
}

// b∘s∘t with a caller-supplied switching X⊗Z→Z⊗X.
template <MonoidalCategory C>
typename C::Morphism tr_hat_with(const C& cat, const ThickTriple<C>& tr,
                                 const typename C::Morphism& switch_xz) {
  if (!(tr.dom == tr.cod))
    throw NotEndo("tr_hat needs an endomorphism triple, got " + cat.describe(tr.dom) + " -> " +
                  cat.describe(tr.cod));
  return cat.compose(tr.b, cat.compose(switch_xz, tr.t));
}

// b∘s_{X,Z}∘t
template <MonoidalCategory C>
typename C::Morphism tr_hat(const C& cat, const ThickTriple<C>& tr) {
  if (!(tr.dom == tr.cod))
    throw NotEndo("tr_hat needs an endomorphism triple, got " + cat.describe(tr.dom) + " -> " +
                  cat.describe(tr.cod));
  return tr_hat_with(cat, tr, cat.switching(tr.dom, tr.z));
}

// [Z, t, b∘(id_Z⊗f)] for f: W→X
template <MonoidalCategory C>
ThickTriple<C> pre_compose(const C& cat, const ThickTriple<C>& tr,
                           const typename C::Morphism& f) {
  if (!(f.target() == tr.dom))
    throw DomainMismatch("pre_compose: morphism lands in " + cat.describe(f.target()) +
                         ", triple starts at " + cat.describe(tr.dom));
  return {f.source(), tr.cod, tr.z, tr.t, cat.compose(tr.b, cat.tensor(cat.identity(tr.z), f))};
}

// [Z, (f⊗id_Z)∘t, b] for f: Y→W
template <MonoidalCategory C>
ThickTriple<C> post_compose(const C& cat, const typename C::Morphism& f,
                            const ThickTriple<C>& tr) {
  if (!(f.source() == tr.cod))
    throw DomainMismatch("post_compose: morphism starts at " + cat.describe(f.source()) +
                         ", triple ends at " + cat.describe(tr.cod));
  return {tr.dom, f.target(), tr.z, cat.compose(cat.tensor(f, cat.identity(tr.z)), tr.t), tr.b};
}

// g: Z→Z' relating left (over Z) and right (over Z'):
//   right.t = (id_Y⊗g)∘left.t,  left.b = right.b∘(g⊗id_X)
template <MonoidalCategory C>
struct SlideWitness {
  typename C::Morphism g;
  ThickTriple<C> left;
  ThickTriple<C> right;
};

template <MonoidalCategory C>
bool holds(const C& cat, const SlideWitness<C>& w) {
  const auto& l = w.left;
  const auto& r = w.right;
  if (!(l.dom == r.dom) || !(l.cod == r.cod)) return false;
  if (!(w.g.source() == l.z) || !(w.g.target() == r.z)) return false;
  return cat.mor_equal(r.t, cat.compose(cat.tensor(cat.identity(l.cod), w.g), l.t)) &&
         cat.mor_equal(l.b, cat.compose(r.b, cat.tensor(w.g, cat.identity(l.dom))));
}

// Slide along g: from t over Z and b' over Z' build (Z, t, b'∘(g⊗id_X)) and
// (Z', (id_Y⊗g)∘t, b').
template <MonoidalCategory C>
SlideWitness<C> slide(const C& cat, const typename C::Object& dom,
                      const typename C::Object& cod, const typename C::Morphism& t,
                      const typename C::Morphism& g, const typename C::Morphism& b_prime) {
  auto left = make_triple(cat, dom, cod, g.source(), t,
                          cat.compose(b_prime, cat.tensor(g, cat.identity(dom))));
  auto right = make_triple(cat, dom, cod, g.target(),
                           cat.compose(cat.tensor(cat.identity(cod), g), t), b_prime);
  return {g, std::move(left), std::move(right)};
}

// For tr1 over f1: X→Y and tr2 over f2: U→X, the witness
// g = (b1⊗id_{Z2})∘(id_{Z1}⊗t2) from pre_compose(tr1, f2) to post_compose(f1, tr2).
template <MonoidalCategory C>
SlideWitness<C> hat_comp_witness(const C& cat, const ThickTriple<C>& tr1,
                                 const ThickTriple<C>& tr2) {
  if (!(tr2.cod == tr1.dom))
    throw DomainMismatch("hat_comp_witness: " + cat.describe(tr2.cod) + " vs " +
                         cat.describe(tr1.dom));
  auto g = cat.compose(cat.tensor(tr1.b, cat.identity(tr2.z)),
                       cat.tensor(cat.identity(tr1.z), tr2.t));
  return {std::move(g), pre_compose(cat, tr1, psi(cat, tr2)),
          post_compose(cat, psi(cat, tr1), tr2)};
}

// tr(f, g) = tr_hat(f̂∘g) for f̂ over f: X→Y and g: Y→X.
template <MonoidalCategory C>
typename C::Morphism trace_pairing(const C& cat, const ThickTriple<C>& f_hat,
                                   const typename C::Morphism& g) {
  return tr_hat(cat, pre_compose(cat, f_hat, g));
}

// tr_hat(f∘ĝ): the same pairing with the thickener on the other side.
template <MonoidalCategory C>
typename C::Morphism trace_pairing_right(const C& cat, const typename C::Morphism& f,
                                         const ThickTriple<C>& g_hat) {
  return tr_hat(cat, post_compose(cat, f, g_hat));
}

template <AdditiveCategory C>
ThickTriple<C> zero_triple(const C& cat, const typename C::Object& dom,
                           const typename C::Object& cod) {
  auto zero = cat.zero_object();
  return {dom, cod, zero, cat.zero_mor(cat.unit_object(), cat.tensor_obj(cod, zero)),
          cat.zero_mor(cat.tensor_obj(zero, dom), cat.unit_object())};
}

// Z = Z1⊕Z2, t = (t1; t2), b = (b1, b2). Written with injections and
// projections so no distributivity convention leaks in.
template <AdditiveCategory C>
ThickTriple<C> add_triples(const C& cat, const ThickTriple<C>& tr1, const ThickTriple<C>& tr2) {
  if (!(tr1.dom == tr2.dom) || !(tr1.cod == tr2.cod))
    throw DomainMismatch("add_triples: triples over different hom-sets");
  auto z = cat.direct_sum(tr1.z, tr2.z);
  auto id_y = cat.identity(tr1.cod);
  auto id_x = cat.identity(tr1.dom);
  auto t = cat.add_mor(cat.compose(cat.tensor(id_y, cat.injection(tr1.z, tr2.z, 0)), tr1.t),
                       cat.compose(cat.tensor(id_y, cat.injection(tr1.z, tr2.z, 1)), tr2.t));
  auto b = cat.add_mor(cat.compose(tr1.b, cat.tensor(cat.projection(tr1.z, tr2.z, 0), id_x)),
                       cat.compose(tr2.b, cat.tensor(cat.projection(tr1.z, tr2.z, 1), id_x)));
  return {tr1.dom, tr1.cod, std::move(z), std::move(t), std::move(b)};
}

template <AdditiveCategory C>
ThickTriple<C> negate_triple(const C& cat, const ThickTriple<C>& tr) {
  return {tr.dom, tr.cod, tr.z, cat.negate_mor(tr.t), tr.b};
}

enum class Crossing { Over, Under };

// Which crossing sits in t (strand Z1 passing Y2) and in b (Z2 passing X1).
// The default is the one for which psi is multiplicative.
struct CrossingConvention {
  Crossing top = Crossing::Over;
  Crossing bottom = Crossing::Under;
  bool operator==(const CrossingConvention&) const = default;
};

// Z = Z1⊗Z2, t = (id⊗χ_t⊗id)∘(t1⊗t2), b = (b1⊗b2)∘(id⊗χ_b⊗id) with
// χ_t: Z1⊗Y2→Y2⊗Z1 and χ_b: Z2⊗X1→X1⊗Z2.
template <BraidedCategory C>
ThickTriple<C> tensor_triples(const C& cat, const ThickTriple<C>& tr1, const ThickTriple<C>& tr2,
                              CrossingConvention conv = {}) {
  auto chi_t = conv.top == Crossing::Over ? cat.braiding(tr1.z, tr2.cod)
                                          : cat.braiding_inv(tr2.cod, tr1.z);
  auto chi_b = conv.bottom == Crossing::Under ? cat.braiding_inv(tr1.dom, tr2.z)
                                              : cat.braiding(tr2.z, tr1.dom);
  auto t = cat.compose(tensor_all(cat, cat.identity(tr1.cod), chi_t, cat.identity(tr2.z)),
                       cat.tensor(tr1.t, tr2.t));
  auto b = cat.compose(cat.tensor(tr1.b, tr2.b),
                       tensor_all(cat, cat.identity(tr1.z), chi_b, cat.identity(tr2.dom)));
  return {cat.tensor_obj(tr1.dom, tr2.dom), cat.tensor_obj(tr1.cod, tr2.cod),
          cat.tensor_obj(tr1.z, tr2.z), std::move(t), std::move(b)};
}

}  // namespace traced
