#include "traced/balanced.hpp"

#include "traced/errors.hpp"

namespace traced {

GradedVect::GradedVect(Rational q) : q_(std::move(q)) {
  if (q_ == 0 || q_ == 1 || q_ == -1)
    throw InvalidArgument("graded instance needs q outside {0, 1, -1}, got " + to_string(q_));
}

GradedVect::Object GradedVect::space(const std::map<int, std::size_t>& dims) const {
  std::vector<int> g;
  for (const auto& [degree, n] : dims) g.insert(g.end(), n, degree);
  return Object(std::move(g));
}

std::map<int, std::size_t> GradedVect::dims(const Object& x) const {
  std::map<int, std::size_t> out;
  for (int g : x.grades()) ++out[g];
  return out;
}

RatMatrix GradedVect::block(const Morphism& f, int degree) const {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < f.target().dim(); ++i)
    if (f.target().grade(i) == degree) rows.push_back(i);
  for (std::size_t j = 0; j < f.source().dim(); ++j)
    if (f.source().grade(j) == degree) cols.push_back(j);
  RatMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out.set(r, c, f.matrix().at(rows[r], cols[c]));
  return out;
}

GradedVect::Morphism GradedVect::braiding(const Object& x, const Object& y) const {
  return weighted_swap(x, y, [this](int m, int n) { return pow(q_, long(m) * n); });
}

GradedVect::Morphism GradedVect::braiding_inv(const Object& x, const Object& y) const {
  // inverse of c_{X,Y}: Y⊗X → X⊗Y, f_j⊗e_i ↦ q^{-mn} e_i⊗f_j
  return weighted_swap(y, x, [this](int n, int m) { return pow(q_, -long(m) * n); });
}

GradedVect::Morphism GradedVect::twist(const Object& x) const {
  return weighted_identity(x, [this](int m) { return pow(q_, long(m) * m); });
}

GradedVect::Morphism GradedVect::switching(const Object& x, const Object& y) const {
  return compose(tensor(identity(y), twist(x)), braiding(x, y));
}

std::string GradedVect::describe(const Object& x) const {
  std::string s = "graded[";
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.grade(i));
  }
  return s + "]";
}

}  // namespace traced
