#pragma once

#include "traced/balanced.hpp"
#include "traced/bordism.hpp"
#include "traced/check/rng.hpp"
#include "traced/thickened.hpp"
#include "traced/vect.hpp"

#include <cstddef>
#include <vector>

namespace traced::check {

struct GenBounds {
  std::size_t max_dim = 4;
  int max_degree = 4;
};

struct BordOptions {
  bool integer_lengths = false;
  long max_length = 4;
  bool allow_circles = true;
  // Every arc runs from source to target (needs equal sizes).
  bool through_only = false;
};

// Random inputs for one trial. Graded objects draw most degrees from a small
// per-trial palette so that hom-spaces between independently drawn objects
// are rarely zero.
class Generator {
 public:
  Generator(Rng& rng, GenBounds bounds);

  Rng& rng() { return rng_; }
  const GenBounds& bounds() const { return bounds_; }

  FinVect::Object object(const FinVect& cat, std::size_t min_dim = 1, std::size_t max_dim = 0);
  SuperVect::Object object(const SuperVect& cat, std::size_t min_dim = 1, std::size_t max_dim = 0);
  GradedVect::Object object(const GradedVect& cat, std::size_t min_dim = 1,
                            std::size_t max_dim = 0);

  // Random grade-preserving matrix; each admissible entry is nonzero with
  // probability 2/3.
  template <class Grading>
  LinearMap<Grading> morphism(const MatrixCategory<Grading>& cat, const Space<Grading>& x,
                              const Space<Grading>& y) {
    RatMatrix m(y.dim(), x.dim());
    for (std::size_t r = 0; r < y.dim(); ++r)
      for (std::size_t c = 0; c < x.dim(); ++c)
        if (y.grade(r) == x.grade(c) && rng_.chance(2, 3))
          m.set(r, c, rng_.small_nonzero_rational());
    return cat.from_matrix(x, y, std::move(m));
  }

  // Z of dimension 0..max_dim whose grades pair with those of X and Y.
  template <class C>
  ThickTriple<C> triple(const C& cat, const typename C::Object& x, const typename C::Object& y) {
    auto z = middle_object(cat, x, y);
    auto unit = cat.unit_object();
    return make_triple(cat, x, y, z, morphism(cat, unit, cat.tensor_obj(y, z)),
                       morphism(cat, cat.tensor_obj(z, x), unit));
  }

  FinVect::Object middle_object(const FinVect& cat, const FinVect::Object& x,
                                const FinVect::Object& y);
  SuperVect::Object middle_object(const SuperVect& cat, const SuperVect::Object& x,
                                  const SuperVect::Object& y);
  GradedVect::Object middle_object(const GradedVect& cat, const GradedVect::Object& x,
                                   const GradedVect::Object& y);

  // Distinct labels drawn from a-h.
  PointSet points(std::size_t n);
  PointSet points(std::size_t min_n, std::size_t max_n) {
    return points(static_cast<std::size_t>(rng_.uniform(long(min_n), long(max_n))));
  }
  Rational length(const BordOptions& opt);
  // Perfect matching of the boundary with positive lengths; needs
  // |X|+|Y| even.
  RBordMorphism bordism(const RBord& cat, const PointSet& x, const PointSet& y,
                        const BordOptions& opt = {});
  RBordMorphism isometry(const RBord& cat, const PointSet& x, const PointSet& y);
  // Bordism, isometry (if sizes agree) or a disjoint union of both.
  RBordMorphism morphism(const RBord& cat, const PointSet& x, const PointSet& y);
  PointSet middle_points(const PointSet& x, const PointSet& y);
  ThickTriple<RBord> triple(const RBord& cat, const PointSet& x, const PointSet& y,
                            const BordOptions& opt = {});

  // Random square matrix with small rational entries; symmetric on request.
  RatMatrix square_matrix(std::size_t n, bool symmetric);

 private:
  int degree();

  Rng& rng_;
  GenBounds bounds_;
  std::vector<int> palette_;
};

}  // namespace traced::check
