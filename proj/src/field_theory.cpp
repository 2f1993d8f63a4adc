#include "traced/field_theory.hpp"

#include "traced/errors.hpp"

#include <cmath>
#include <functional>

namespace traced {

FieldTheory::FieldTheory(RatMatrix a) : a_(std::move(a)) {
  if (!a_.square() || a_.rows() == 0)
    throw InvalidArgument("field theory needs a nonempty square matrix");
  symmetric_ = a_ == a_.transpose();
}

RatMatrix FieldTheory::power(const Rational& length) const {
  if (!is_integer(length) || length < 0)
    throw NonIntegerLength("exact field theory needs integer lengths, got " + to_string(length));
  return matrix_power(a_, length.get_num().get_ui());
}

FinVect::Object FieldTheory::operator()(const PointSet& x) const {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < x.size(); ++i) dim *= a_.rows();
  return vect_.space(dim);
}

FinVect::Morphism FieldTheory::operator()(const RBordMorphism& sigma) const {
  const std::size_t n = a_.rows();
  const std::size_t nin = sigma.source().size(), nout = sigma.target().size();

  Rational closed_part = 1;
  for (const auto& c : sigma.circles()) closed_part *= power(c).trace();

  struct Piece {
    Endpoint a, b;
    RatMatrix m;
  };
  std::vector<Piece> pieces;
  for (const auto& arc : sigma.arcs()) {
    if (arc.a.side == arc.b.side && !symmetric_)
      throw InvalidArgument("arcs with both ends on one side need a symmetric matrix");
    // Through arcs have a = in, b = out; the entry is A^L[out][in].
    pieces.push_back({arc.a, arc.b, power(arc.length)});
  }

  auto dom = (*this)(sigma.source());
  auto cod = (*this)(sigma.target());
  RatMatrix m(cod.dim(), dom.dim());
  if (closed_part == 0) return vect_.from_matrix(dom, cod, std::move(m));

  std::vector<std::size_t> in_idx(nin), out_idx(nout);
  auto slot = [&](const Endpoint& p) -> std::size_t& {
    return p.side == Side::In ? in_idx[p.index] : out_idx[p.index];
  };
  auto flatten = [&](const std::vector<std::size_t>& idx) {
    std::size_t k = 0;
    for (std::size_t v : idx) k = k * n + v;
    return k;
  };
  std::function<void(std::size_t, const Rational&)> expand = [&](std::size_t k,
                                                                 const Rational& weight) {
    if (k == pieces.size()) {
      m.add_to(flatten(out_idx), flatten(in_idx), weight);
      return;
    }
    const Piece& p = pieces[k];
    bool through = p.a.side == Side::In && p.b.side == Side::Out;
    for (std::size_t r = 0; r < n; ++r)
      for (const auto& e : p.m.row(r)) {
        // through: row indexes the out end, column the in end
        slot(through ? p.b : p.a) = r;
        slot(through ? p.a : p.b) = e.col;
        expand(k + 1, weight * e.value);
      }
  };
  expand(0, closed_part);
  return vect_.from_matrix(dom, cod, std::move(m));
}

ThickTriple<FinVect> FieldTheory::operator()(const ThickTriple<RBord>& tr) const {
  return make_triple(vect_, (*this)(tr.dom), (*this)(tr.cod), (*this)(tr.z), (*this)(tr.t),
                     (*this)(tr.b));
}

FloatFieldTheory::FloatFieldTheory(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols() || h.rows() == 0)
    throw InvalidArgument("hamiltonian must be a nonempty square matrix");
  if (!h.isApprox(h.transpose(), 1e-12)) throw InvalidArgument("hamiltonian must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

Eigen::MatrixXd FloatFieldTheory::interval(double t) const {
  Eigen::VectorXd d = (-t * eigenvalues_.array()).exp();
  return eigenvectors_ * d.asDiagonal() * eigenvectors_.transpose();
}

double FloatFieldTheory::circle(double t) const {
  return (-t * eigenvalues_.array()).exp().sum();
}

}  // namespace traced
