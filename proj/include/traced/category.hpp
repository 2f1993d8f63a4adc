#pragma once

#include "traced/errors.hpp"

#include <concepts>
#include <string>

namespace traced {

struct Capabilities {
  bool additive = false;
  bool braided = false;
  bool balanced = false;
  bool symmetric = false;
  bool duals = false;  // every object has a chosen dual

  constexpr bool consistent() const {
    return (!symmetric || balanced) && (!balanced || braided);
  }
};

// Strict monoidal category with a switching isomorphism. Objects and
// morphisms are immutable values; a morphism knows its source and target.
template <class C>
concept MonoidalCategory = requires(const C& cat, const typename C::Object& x,
                                    const typename C::Morphism& f) {
  typename C::Object;
  typename C::Morphism;
  { C::capabilities } -> std::convertible_to<Capabilities>;
  { cat.unit_object() } -> std::same_as<typename C::Object>;
  { cat.tensor_obj(x, x) } -> std::same_as<typename C::Object>;
  { cat.identity(x) } -> std::same_as<typename C::Morphism>;
  { cat.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { cat.tensor(f, f) } -> std::same_as<typename C::Morphism>;
  { cat.switching(x, x) } -> std::same_as<typename C::Morphism>;
  { cat.mor_equal(f, f) } -> std::same_as<bool>;
  { f.source() } -> std::convertible_to<typename C::Object>;
  { f.target() } -> std::convertible_to<typename C::Object>;
  { x == x } -> std::convertible_to<bool>;
  { cat.describe(x) } -> std::convertible_to<std::string>;
};

template <class C>
concept AdditiveCategory = MonoidalCategory<C> && C::capabilities.additive &&
    requires(const C& cat, const typename C::Object& x, const typename C::Morphism& f) {
      { cat.zero_object() } -> std::same_as<typename C::Object>;
      { cat.direct_sum(x, x) } -> std::same_as<typename C::Object>;
      { cat.zero_mor(x, x) } -> std::same_as<typename C::Morphism>;
      { cat.add_mor(f, f) } -> std::same_as<typename C::Morphism>;
      { cat.negate_mor(f) } -> std::same_as<typename C::Morphism>;
      // X1 → X1⊕X2 and X1⊕X2 → X1 (k = 0), likewise for X2 (k = 1).
      { cat.injection(x, x, 0) } -> std::same_as<typename C::Morphism>;
      { cat.projection(x, x, 0) } -> std::same_as<typename C::Morphism>;
    };

template <class C>
concept BraidedCategory = MonoidalCategory<C> && C::capabilities.braided &&
    requires(const C& cat, const typename C::Object& x) {
      { cat.braiding(x, x) } -> std::same_as<typename C::Morphism>;
      { cat.braiding_inv(x, x) } -> std::same_as<typename C::Morphism>;
    };

template <class C>
concept BalancedCategory = BraidedCategory<C> && C::capabilities.balanced &&
    requires(const C& cat, const typename C::Object& x) {
      { cat.twist(x) } -> std::same_as<typename C::Morphism>;
    };

template <class C>
concept DualizingCategory = MonoidalCategory<C> && C::capabilities.duals &&
    requires(const C& cat, const typename C::Object& x) {
      { cat.dual(x) } -> std::same_as<typename C::Object>;
      { cat.ev(x) } -> std::same_as<typename C::Morphism>;    // X∨⊗X → I
      { cat.coev(x) } -> std::same_as<typename C::Morphism>;  // I → X⊗X∨
    };

template <MonoidalCategory C>
bool is_endo(const typename C::Morphism& f) {
  return f.source() == f.target();
}

template <MonoidalCategory C>
typename C::Morphism compose_checked(const C& cat, const typename C::Morphism& g,
                                     const typename C::Morphism& f) {
  if (!(f.target() == g.source()))
    throw DomainMismatch("cannot compose: target " + cat.describe(f.target()) +
                         " differs from source " + cat.describe(g.source()));
  return cat.compose(g, f);
}

// compose_all(cat, h, g, f) = h∘g∘f
template <MonoidalCategory C, class... Rest>
typename C::Morphism compose_all(const C& cat, const typename C::Morphism& first,
                                 const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return first;
  } else {
    return cat.compose(first, compose_all(cat, rest...));
  }
}

template <MonoidalCategory C, class... Rest>
typename C::Morphism tensor_all(const C& cat, const typename C::Morphism& first,
                                const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return first;
  } else {
    return cat.tensor(first, tensor_all(cat, rest...));
  }
}

template <MonoidalCategory C, class... Rest>
typename C::Object tensor_obj_all(const C& cat, const typename C::Object& first,
                                  const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return first;
  } else {
    return cat.tensor_obj(first, tensor_obj_all(cat, rest...));
  }
}

}  // namespace traced
