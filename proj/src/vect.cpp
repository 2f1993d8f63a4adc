#include "traced/vect.hpp"

namespace traced {

FinVect::Morphism FinVect::switching(const Object& x, const Object& y) const {
  return weighted_swap(x, y, [](int, int) { return Rational(1); });
}

std::string FinVect::describe(const Object& x) const { return "Q^" + std::to_string(x.dim()); }

SuperVect::Object SuperVect::space(std::size_t even_dim, std::size_t odd_dim) const {
  std::vector<int> g(even_dim, 0);
  g.insert(g.end(), odd_dim, 1);
  return Object(std::move(g));
}

std::size_t SuperVect::odd_dim(const Object& x) const {
  std::size_t n = 0;
  for (int g : x.grades()) n += g;
  return n;
}

std::size_t SuperVect::even_dim(const Object& x) const { return x.dim() - odd_dim(x); }

SuperVect::Morphism SuperVect::switching(const Object& x, const Object& y) const {
  return weighted_swap(x, y, [](int a, int b) { return Rational((a & b) ? -1 : 1); });
}

SuperVect::Morphism SuperVect::grading_involution(const Object& x) const {
  return weighted_identity(x, [](int a) { return Rational(a ? -1 : 1); });
}

Rational SuperVect::super_trace(const Morphism& f) const {
  return classical_trace(compose(grading_involution(f.target()), f));
}

std::string SuperVect::describe(const Object& x) const {
  std::string s = "super[";
  for (std::size_t i = 0; i < x.dim(); ++i) s += x.grade(i) ? '1' : '0';
  return s + "]";
}

}  // namespace traced
