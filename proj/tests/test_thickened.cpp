#include "helpers.hpp"

#include "traced/balanced.hpp"
#include "traced/errors.hpp"
#include "traced/thickened.hpp"
#include "traced/vect.hpp"

#include <doctest.h>

using namespace traced;
using traced::test::M;
using traced::test::Q;

namespace {

// Q²: t(1) = Σ e_i⊗e_i, b(e_i⊗e_j) = δ_ij
ThickTriple<FinVect> diagonal_triple(const FinVect& v) {
  auto x = v.space(2);
  auto t = v.from_matrix(v.unit_object(), v.space(4), M({{1}, {0}, {0}, {1}}));
  auto b = v.from_matrix(v.space(4), v.unit_object(), M({{1, 0, 0, 1}}));
  return make_triple(v, x, x, x, t, b);
}

}  // namespace

TEST_CASE("psi and tr_hat of the diagonal triple") {
  FinVect v;
  auto tr = diagonal_triple(v);
  CHECK(psi(v, tr) == v.identity(v.space(2)));
  CHECK(v.scalar_value(tr_hat(v, tr)) == 2);

  auto zero = tr;
  zero.t = v.zero_mor(v.unit_object(), v.space(4));
  CHECK(psi(v, zero).matrix().is_zero());
  CHECK(v.scalar_value(tr_hat(v, zero)) == 0);
}

TEST_CASE("triple shape is validated") {
  FinVect v;
  auto tr = diagonal_triple(v);
  CHECK_THROWS_AS(make_triple(v, v.space(3), tr.cod, tr.z, tr.t, tr.b), DomainMismatch);
  auto wide = make_triple(v, v.space(2), v.space(1), v.space(2),
                          v.from_matrix(v.unit_object(), v.space(2), M({{1}, {1}})), tr.b);
  CHECK_THROWS_AS(tr_hat(v, wide), NotEndo);
}

TEST_CASE("pre- and post-composition") {
  FinVect v;
  auto tr = diagonal_triple(v);
  auto same = pre_compose(v, tr, v.identity(v.space(2)));
  CHECK(same.t == tr.t);
  CHECK(same.b == tr.b);
  auto f = v.from_matrix(v.space(2), v.space(2), M({{1, 2}, {3, 4}}));
  CHECK(psi(v, pre_compose(v, tr, f)) == f);
  CHECK(psi(v, post_compose(v, f, tr)) == f);
}

TEST_CASE("trace pairing values") {
  FinVect v;
  auto x = v.space(2);
  auto f = v.from_matrix(x, x, M({{1, 2}, {3, 4}}));
  auto g = v.from_matrix(x, x, M({{0, 1}, {1, 0}}));
  auto f_hat = canonical_thickener(v, f);
  CHECK(v.scalar_value(trace_pairing(v, f_hat, g)) == 5);
  CHECK(v.scalar_value(trace_pairing(v, f_hat, v.zero_mor(x, x))) == 0);
  CHECK(trace_pairing(v, f_hat, g) == trace_pairing(v, canonical_thickener(v, g), f));
  CHECK(trace_pairing_right(v, g, f_hat) == trace_pairing(v, f_hat, g));
}

TEST_CASE("hat composition witness with the identity thickener") {
  FinVect v;
  auto x = v.space(2);
  auto f_hat = diagonal_triple(v);
  auto id_hat = canonical_thickener(v, v.identity(x));
  auto w = hat_comp_witness(v, f_hat, id_hat);
  CHECK(holds(v, w));
  CHECK(psi(v, w.left) == psi(v, w.right));
  CHECK(tr_hat(v, w.left) == tr_hat(v, w.right));
}

TEST_CASE("slide keeps psi and tr_hat") {
  FinVect v;
  auto x = v.space(2), z = v.space(2), z2 = v.space(3);
  auto t = v.from_matrix(v.unit_object(), v.space(4), M({{1}, {2}, {0}, {-1}}));
  auto g = v.from_matrix(z, z2, M({{1, 0}, {0, 1}, {1, 1}}));
  auto b2 = v.from_matrix(v.space(6), v.unit_object(), M({{1, 0, 2, 0, 0, 3}}));
  auto w = slide(v, x, x, t, g, b2);
  CHECK(holds(v, w));
  CHECK(psi(v, w.left) == psi(v, w.right));
  CHECK(tr_hat(v, w.left) == tr_hat(v, w.right));
}

TEST_CASE("additive structure on triples") {
  FinVect v;
  auto tr = diagonal_triple(v);
  auto x = v.space(2);
  auto cancel = add_triples(v, tr, negate_triple(v, tr));
  CHECK(psi(v, cancel).matrix().is_zero());
  CHECK(v.scalar_value(tr_hat(v, cancel)) == 0);
  auto padded = add_triples(v, tr, zero_triple(v, x, x));
  CHECK(psi(v, padded) == psi(v, tr));
  CHECK(tr_hat(v, padded) == tr_hat(v, tr));
  CHECK(padded.z.dim() == tr.z.dim());
}

TEST_CASE("tensor with the identity thickener of I") {
  GradedVect g(2);
  auto x = g.space({{1, 1}, {0, 1}});
  auto f = g.from_matrix(x, x, M({{2, 0}, {0, 3}}));
  auto tr = canonical_thickener(g, f);
  auto unit_hat = canonical_thickener(g, g.identity(g.unit_object()));
  CHECK(psi(g, tensor_triples(g, tr, unit_hat)) == psi(g, tr));
  CHECK(psi(g, tensor_triples(g, unit_hat, tr)) == psi(g, tr));
}

TEST_CASE("only matching crossings keep psi multiplicative in graded spaces") {
  GradedVect g(2);
  auto line = g.space({{1, 1}});
  auto tr = canonical_thickener(g, g.identity(line));
  auto expected = g.tensor(g.identity(line), g.identity(line));
  CHECK(psi(g, tensor_triples(g, tr, tr)) == expected);
  CHECK(psi(g, tensor_triples(g, tr, tr, {Crossing::Under, Crossing::Over})) == expected);
  // One flipped crossing leaves a factor q^{±2·1·1}.
  auto over_over = psi(g, tensor_triples(g, tr, tr, {Crossing::Over, Crossing::Over}));
  auto under_under = psi(g, tensor_triples(g, tr, tr, {Crossing::Under, Crossing::Under}));
  CHECK(over_over.matrix() == RatMatrix::scalar(Q(1, 4)));
  CHECK(under_under.matrix() == RatMatrix::scalar(Q(4)));
}

TEST_CASE("tr_hat multiplicativity in graded spaces needs the twist") {
  GradedVect g(2);
  auto line = g.space({{1, 1}});
  auto tr = canonical_thickener(g, g.identity(line));
  CHECK(g.scalar_value(tr_hat(g, tr)) == 1);
  CHECK(g.scalar_value(tr_hat(g, tensor_triples(g, tr, tr))) == 1);
  // Braiding alone: ev∘c∘coev on a degree-1 line gives q^{-1}.
  auto untwisted = tr_hat_with(g, tr, g.braiding(line, g.dual(line)));
  CHECK(g.scalar_value(untwisted) == Q(1, 2));
}
