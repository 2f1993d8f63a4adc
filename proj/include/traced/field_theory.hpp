#pragma once

#include "traced/bordism.hpp"
#include "traced/matrix.hpp"
#include "traced/vect.hpp"

#include <Eigen/Dense>

namespace traced {

// Exact 1-dimensional field theory E: RBord → FinVect. Each point goes to
// Q^n, an arc of integer length L to A^L, a circle of length L to tr(A^L),
// disjoint union to the Kronecker product. Arcs with both ends on the same
// side only make E functorial when A is symmetric, so they are rejected
// otherwise.
class FieldTheory {
 public:
  explicit FieldTheory(RatMatrix a);

  const FinVect& target() const { return vect_; }
  const RatMatrix& matrix() const { return a_; }
  bool symmetric() const { return symmetric_; }

  FinVect::Object operator()(const PointSet& x) const;
  FinVect::Morphism operator()(const RBordMorphism& sigma) const;
  // Applies E to Z, t and b.
  ThickTriple<FinVect> operator()(const ThickTriple<RBord>& tr) const;

 private:
  RatMatrix power(const Rational& length) const;

  RatMatrix a_;
  bool symmetric_;
  FinVect vect_;
};

// Floating-point variant with E(interval t) = exp(-tH) for symmetric H. Used
// by the demo only.
class FloatFieldTheory {
 public:
  explicit FloatFieldTheory(const Eigen::MatrixXd& h);

  Eigen::MatrixXd interval(double t) const;
  double circle(double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

}  // namespace traced
