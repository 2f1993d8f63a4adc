#pragma once

#include "traced/linear.hpp"
#include "traced/thickened.hpp"

#include <string>

namespace traced {

// Finite-dimensional vector spaces over Q with the plain swap.
class FinVect : public MatrixCategory<TrivialGrading> {
 public:
  static constexpr Capabilities capabilities{.additive = true,
                                             .braided = true,
                                             .balanced = true,
                                             .symmetric = true,
                                             .duals = true};
  static constexpr const char* name = "finvect";

  Object space(std::size_t dim) const { return Object(std::vector<int>(dim, 0)); }

  Morphism switching(const Object& x, const Object& y) const;
  Morphism braiding(const Object& x, const Object& y) const { return switching(x, y); }
  Morphism braiding_inv(const Object& x, const Object& y) const { return switching(y, x); }
  Morphism twist(const Object& x) const { return identity(x); }

  std::string describe(const Object& x) const;
};

// Z/2-graded spaces with even maps and the Koszul sign rule.
class SuperVect : public MatrixCategory<ParityGrading> {
 public:
  static constexpr Capabilities capabilities{.additive = true,
                                             .braided = true,
                                             .balanced = true,
                                             .symmetric = true,
                                             .duals = true};
  static constexpr const char* name = "supervect";

  // even_dim even basis vectors followed by odd_dim odd ones
  Object space(std::size_t even_dim, std::size_t odd_dim) const;
  std::size_t even_dim(const Object& x) const;
  std::size_t odd_dim(const Object& x) const;

  // x⊗y ↦ (−1)^{|x||y|} y⊗x
  Morphism switching(const Object& x, const Object& y) const;
  Morphism braiding(const Object& x, const Object& y) const { return switching(x, y); }
  Morphism braiding_inv(const Object& x, const Object& y) const { return switching(y, x); }
  Morphism twist(const Object& x) const { return identity(x); }

  // grading involution ε: e_i ↦ (−1)^{|e_i|} e_i
  Morphism grading_involution(const Object& x) const;
  // classtr(ε∘f)
  Rational super_trace(const Morphism& f) const;

  std::string describe(const Object& x) const;
};

static_assert(FinVect::capabilities.consistent());
static_assert(SuperVect::capabilities.consistent());

// (id_Y⊗ev_X)∘(t⊗id_X) for t: I→Y⊗X∨
template <DualizingCategory C>
typename C::Morphism phi(const C& cat, const typename C::Object& x, const typename C::Object& y,
                         const typename C::Morphism& t) {
  if (!(t.source() == cat.unit_object()) || !(t.target() == cat.tensor_obj(y, cat.dual(x))))
    throw DomainMismatch("phi: expected I -> " + cat.describe(cat.tensor_obj(y, cat.dual(x))) +
                         ", got " + cat.describe(t.source()) + " -> " +
                         cat.describe(t.target()));
  return cat.compose(cat.tensor(cat.identity(y), cat.ev(x)), cat.tensor(t, cat.identity(x)));
}

// (f⊗id_{X∨})∘coev_X, the inverse of phi
template <DualizingCategory C>
typename C::Morphism phi_inverse(const C& cat, const typename C::Morphism& f) {
  const auto& x = f.source();
  return cat.compose(cat.tensor(f, cat.identity(cat.dual(x))), cat.coev(x));
}

// [X∨, t, ev_X]
template <DualizingCategory C>
ThickTriple<C> alpha(const C& cat, const typename C::Object& x, const typename C::Object& y,
                     const typename C::Morphism& t) {
  return make_triple(cat, x, y, cat.dual(x), t, cat.ev(x));
}

template <DualizingCategory C>
ThickTriple<C> canonical_thickener(const C& cat, const typename C::Morphism& f) {
  return alpha(cat, f.source(), f.target(), phi_inverse(cat, f));
}

// ev∘s∘(f⊗id)∘coev, i.e. tr_hat of the canonical thickener
template <DualizingCategory C>
typename C::Morphism categorical_trace(const C& cat, const typename C::Morphism& f) {
  if (!(f.source() == f.target()))
    throw NotEndo("categorical_trace of " + cat.describe(f.source()) + " -> " +
                  cat.describe(f.target()));
  return tr_hat(cat, canonical_thickener(cat, f));
}

}  // namespace traced
