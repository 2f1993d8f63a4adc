#pragma once

#include "traced/linear.hpp"
#include "traced/rational.hpp"

#include <map>
#include <string>

namespace traced {

// Z-graded spaces over Q with braiding q^{mn}·swap and twist q^{m²}. Not
// symmetric: c_{Y,X}∘c_{X,Y} scales degree (m,n) by q^{2mn}.
class GradedVect : public MatrixCategory<IntegerGrading> {
 public:
  static constexpr Capabilities capabilities{.additive = true,
                                             .braided = true,
                                             .balanced = true,
                                             .symmetric = false,
                                             .duals = true};
  static constexpr const char* name = "graded";

  // q must be a nonzero rational other than ±1.
  explicit GradedVect(Rational q = 2);

  const Rational& q() const { return q_; }

  // Basis ordered by increasing degree.
  Object space(const std::map<int, std::size_t>& dims) const;
  std::map<int, std::size_t> dims(const Object& x) const;
  // Block of f between the degree-m basis vectors of source and target.
  RatMatrix block(const Morphism& f, int degree) const;

  Morphism braiding(const Object& x, const Object& y) const;
  Morphism braiding_inv(const Object& x, const Object& y) const;
  Morphism twist(const Object& x) const;
  // (id_Y⊗θ_X)∘c_{X,Y}
  Morphism switching(const Object& x, const Object& y) const;

  std::string describe(const Object& x) const;

 private:
  Rational q_;
};

static_assert(GradedVect::capabilities.consistent());

}  // namespace traced
