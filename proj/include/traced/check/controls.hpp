#pragma once

#include "traced/balanced.hpp"
#include "traced/vect.hpp"

namespace traced::check {

// Deliberately wrong variants used as negative controls and mutation tests.
// Each one changes a single ingredient of a correct instance.

// Graded spaces with s replaced by the plain swap (no q, no twist).
class PlainSwapGraded : public GradedVect {
 public:
  using GradedVect::GradedVect;
  Morphism switching(const Object& x, const Object& y) const {
    return weighted_swap(x, y, [](int, int) { return Rational(1); });
  }
};

// Graded spaces with s replaced by the braiding alone (twist dropped).
class UntwistedGraded : public GradedVect {
 public:
  using GradedVect::GradedVect;
  Morphism switching(const Object& x, const Object& y) const { return braiding(x, y); }
};

// Super vector spaces whose swap sign reads the parities inverted, so
// even⊗even picks up the −1 instead of odd⊗odd.
class InvertedKoszulSuper : public SuperVect {
 public:
  Morphism switching(const Object& x, const Object& y) const {
    return weighted_swap(x, y, [](int a, int b) { return Rational((!a && !b) ? -1 : 1); });
  }
  Morphism braiding(const Object& x, const Object& y) const { return switching(x, y); }
  Morphism braiding_inv(const Object& x, const Object& y) const { return switching(y, x); }
};

}  // namespace traced::check
