#pragma once

#include "traced/category.hpp"
#include "traced/errors.hpp"
#include "traced/matrix.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace traced {

// Grading policies for matrix-backed instances. Each basis vector of a space
// carries a grade; morphisms must preserve it.
struct TrivialGrading {
  static int combine(int, int) { return 0; }
  static int dual(int) { return 0; }
  static bool valid(int g) { return g == 0; }
};

struct ParityGrading {
  static int combine(int a, int b) { return a ^ b; }
  static int dual(int a) { return a; }
  static bool valid(int g) { return g == 0 || g == 1; }
};

struct IntegerGrading {
  static int combine(int a, int b) { return a + b; }
  static int dual(int a) { return -a; }
  static bool valid(int) { return true; }
};

// Finite-dimensional space with a graded ordered basis. Tensor products use
// row-major flattening: e_i⊗f_j sits at index i*dim(F) + j.
template <class Grading>
class Space {
 public:
  Space() = default;
  explicit Space(std::vector<int> grades) : grades_(std::move(grades)) {
    for (int g : grades_)
      if (!Grading::valid(g)) throw InvalidArgument("invalid grade " + std::to_string(g));
  }

  std::size_t dim() const { return grades_.size(); }
  int grade(std::size_t i) const { return grades_[i]; }
  const std::vector<int>& grades() const { return grades_; }

  bool operator==(const Space&) const = default;

 private:
  std::vector<int> grades_;
};

template <class Grading>
class LinearMap {
 public:
  LinearMap(Space<Grading> source, Space<Grading> target, RatMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
      throw InvalidArgument("matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + ", expected " +
                            std::to_string(target_.dim()) + "x" + std::to_string(source_.dim()));
    for (std::size_t r = 0; r < matrix_.rows(); ++r)
      for (const auto& e : matrix_.row(r))
        if (target_.grade(r) != source_.grade(e.col))
          throw InvalidArgument("matrix entry (" + std::to_string(r) + "," +
                                std::to_string(e.col) + ") does not preserve the grading");
  }

  const Space<Grading>& source() const { return source_; }
  const Space<Grading>& target() const { return target_; }
  const RatMatrix& matrix() const { return matrix_; }

  bool operator==(const LinearMap&) const = default;

 private:
  Space<Grading> source_;
  Space<Grading> target_;
  RatMatrix matrix_;
};

// Shared linear-algebra surface of the matrix instances: strict monoidal
// structure, direct sums, and duals. Switching and braiding live in the
// concrete instances.
template <class Grading>
class MatrixCategory {
 public:
  using Object = Space<Grading>;
  using Morphism = LinearMap<Grading>;

  Object unit_object() const { return Object({0}); }

  Object tensor_obj(const Object& a, const Object& b) const {
    std::vector<int> g;
    g.reserve(a.dim() * b.dim());
    for (int x : a.grades())
      for (int y : b.grades()) g.push_back(Grading::combine(x, y));
    return Object(std::move(g));
  }

  Morphism identity(const Object& x) const { return {x, x, RatMatrix::identity(x.dim())}; }

  // g∘f
  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (!(f.target() == g.source()))
      throw DomainMismatch("compose: target " + describe(f.target()) + " differs from source " +
                           describe(g.source()));
    return {f.source(), g.target(), g.matrix() * f.matrix()};
  }

  Morphism tensor(const Morphism& f, const Morphism& g) const {
    return {tensor_obj(f.source(), g.source()), tensor_obj(f.target(), g.target()),
            kron(f.matrix(), g.matrix())};
  }

  bool mor_equal(const Morphism& f, const Morphism& g) const { return f == g; }

  Morphism from_matrix(const Object& source, const Object& target, RatMatrix m) const {
    return {source, target, std::move(m)};
  }

  Morphism scalar(const Rational& value) const {
    return {unit_object(), unit_object(), RatMatrix::scalar(value)};
  }

  // Value of a morphism I→I.
  Rational scalar_value(const Morphism& f) const {
    if (!(f.source() == unit_object()) || !(f.target() == unit_object()))
      throw DomainMismatch("not a scalar: " + describe(f.source()) + " -> " +
                           describe(f.target()));
    return f.matrix().at(0, 0);
  }

  // additive capability

  Object zero_object() const { return Object(); }

  Object direct_sum(const Object& a, const Object& b) const {
    std::vector<int> g = a.grades();
    g.insert(g.end(), b.grades().begin(), b.grades().end());
    return Object(std::move(g));
  }

  Morphism zero_mor(const Object& source, const Object& target) const {
    return {source, target, RatMatrix(target.dim(), source.dim())};
  }

  Morphism add_mor(const Morphism& f, const Morphism& g) const {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
      throw DomainMismatch("add_mor: " + describe(f.source()) + " -> " + describe(f.target()) +
                           " vs " + describe(g.source()) + " -> " + describe(g.target()));
    return {f.source(), f.target(), f.matrix() + g.matrix()};
  }

  Morphism negate_mor(const Morphism& f) const { return {f.source(), f.target(), -f.matrix()}; }

  Morphism scale(const Rational& s, const Morphism& f) const {
    return {f.source(), f.target(), s * f.matrix()};
  }

  Morphism injection(const Object& a, const Object& b, int k) const {
    auto sum = direct_sum(a, b);
    const Object& part = k == 0 ? a : b;
    std::size_t offset = k == 0 ? 0 : a.dim();
    RatMatrix m(sum.dim(), part.dim());
    for (std::size_t i = 0; i < part.dim(); ++i) m.set(offset + i, i, Rational(1));
    return {part, sum, std::move(m)};
  }

  Morphism projection(const Object& a, const Object& b, int k) const {
    auto inj = injection(a, b, k);
    return {inj.target(), inj.source(), inj.matrix().transpose()};
  }

  // duals: X∨ has the same index set with dual grades

  Object dual(const Object& x) const {
    std::vector<int> g;
    g.reserve(x.dim());
    for (int v : x.grades()) g.push_back(Grading::dual(v));
    return Object(std::move(g));
  }

  // X∨⊗X → I, e^i⊗e_j ↦ δ_ij
  Morphism ev(const Object& x) const {
    std::size_t n = x.dim();
    RatMatrix m(1, n * n);
    for (std::size_t i = 0; i < n; ++i) m.set(0, i * n + i, Rational(1));
    return {tensor_obj(dual(x), x), unit_object(), std::move(m)};
  }

  // I → X⊗X∨, 1 ↦ Σ e_i⊗e^i
  Morphism coev(const Object& x) const {
    std::size_t n = x.dim();
    RatMatrix m(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) m.set(i * n + i, 0, Rational(1));
    return {unit_object(), tensor_obj(x, dual(x)), std::move(m)};
  }

  Rational classical_trace(const Morphism& f) const {
    if (!(f.source() == f.target()))
      throw NotEndo("classical_trace of " + describe(f.source()) + " -> " +
                    describe(f.target()));
    return f.matrix().trace();
  }

  std::string describe(const Object& x) const {
    std::string s = "[";
    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (i) s += ",";
      s += std::to_string(x.grade(i));
    }
    return s + "]";
  }

 protected:
  // X⊗Y → Y⊗X, e_i⊗f_j ↦ weight(grade_i, grade_j)·f_j⊗e_i
  template <class Weight>
  Morphism weighted_swap(const Object& x, const Object& y, Weight weight) const {
    std::size_t nx = x.dim(), ny = y.dim();
    RatMatrix m(nx * ny, nx * ny);
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < ny; ++j)
        m.set(j * nx + i, i * ny + j, weight(x.grade(i), y.grade(j)));
    return {tensor_obj(x, y), tensor_obj(y, x), std::move(m)};
  }

  // Diagonal endomorphism scaling e_i by weight(grade_i).
  template <class Weight>
  Morphism weighted_identity(const Object& x, Weight weight) const {
    RatMatrix m(x.dim(), x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) m.set(i, i, weight(x.grade(i)));
    return {x, x, std::move(m)};
  }
};

}  // namespace traced
