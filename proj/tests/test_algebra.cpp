#include "helpers.hpp"

#include "traced/balanced.hpp"
#include "traced/check/controls.hpp"
#include "traced/errors.hpp"
#include "traced/vect.hpp"

#include <doctest.h>

using namespace traced;
using traced::test::M;
using traced::test::Q;

TEST_CASE("rationals parse, print and exponentiate exactly") {
  CHECK(parse_rational("3/6") == Q(1, 2));
  CHECK(parse_rational("-4/2") == Q(-2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK(pow(Q(2), -3) == Q(1, 8));
  CHECK(pow(Q(-2, 3), 3) == Q(-8, 27));
  CHECK(make_rational(4, 6) == Q(2, 3));
  CHECK(is_integer(make_rational(6, 3)));
}

TEST_CASE("sparse matrices") {
  auto a = M({{1, 2}, {3, 4}});
  CHECK(a.to_string() == "[[1, 2], [3, 4]]");
  CHECK(a.trace() == 5);
  CHECK(a * M({{0, 1}, {1, 0}}) == M({{2, 1}, {4, 3}}));
  CHECK((a - a).is_zero());
  CHECK(matrix_power(a, 0) == RatMatrix::identity(2));
  CHECK(matrix_power(M({{1, 1}, {0, 1}}), 5) == M({{1, 5}, {0, 1}}));
  CHECK_THROWS_AS(M({{1, 2}}).trace(), NotEndo);

  // Kronecker product against the index formula
  auto b = M({{0, 5, 1}, {-1, 2, 0}});
  auto k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(k.at(i * 2 + r, j * 3 + c) == a.at(i, j) * b.at(r, c));
}

TEST_CASE("finvect composition, tensor and swap") {
  FinVect v;
  auto f = v.from_matrix(v.space(1), v.space(2), M({{2}, {3}}));
  auto g = v.from_matrix(v.space(2), v.space(1), M({{1, 0}}));
  CHECK(v.compose(g, f).matrix() == M({{2}}));
  CHECK_THROWS_AS(v.compose(f, f), DomainMismatch);
  CHECK(v.tensor(v.scalar(2), v.scalar(3)).matrix() == M({{6}}));
  CHECK(v.mor_equal(v.tensor(f, v.identity(v.unit_object())), f));
  CHECK(v.unit_object().dim() == 1);
  CHECK(v.direct_sum(v.space(2), v.space(3)) == v.space(5));

  // e_i⊗f_j ↦ f_j⊗e_i on Q²⊗Q³
  auto s = v.switching(v.space(2), v.space(3));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < 6; ++r)
        CHECK(s.matrix().at(r, i * 3 + j) == (r == j * 2 + i ? 1 : 0));

  auto h = v.from_matrix(v.space(2), v.space(2), M({{1, 2}, {3, 4}}));
  CHECK(v.add_mor(h, v.negate_mor(h)) == v.zero_mor(v.space(2), v.space(2)));
}

TEST_CASE("direct sum flattening: (Z1⊕Z2)⊗X against (Z1⊗X)⊕(Z2⊗X)") {
  GradedVect g(2);
  auto z1 = g.space({{0, 1}, {1, 1}}), z2 = g.space({{-1, 2}}), x = g.space({{0, 1}, {2, 1}});
  auto lhs = g.tensor_obj(g.direct_sum(z1, z2), x);
  auto rhs = g.direct_sum(g.tensor_obj(z1, x), g.tensor_obj(z2, x));
  CHECK(lhs == rhs);
  // Row-major flattening puts (Z1⊗X) first, basis (i, j) at i*dim X + j.
  CHECK(lhs.grades() == std::vector<int>{0, 2, 1, 3, -1, 1, -1, 1});
}

TEST_CASE("duals in finvect") {
  FinVect v;
  CHECK(v.ev(v.space(1)).matrix() == M({{1}}));
  CHECK(v.coev(v.space(1)).matrix() == M({{1}}));
  // 1 ↦ Σ e_i⊗e^i on Q³
  auto coev = v.coev(v.space(3)).matrix();
  for (std::size_t k = 0; k < 9; ++k) CHECK(coev.at(k, 0) == (k % 4 == 0 ? 1 : 0));

  auto x = v.space(2);
  RatMatrix t(4, 1);
  t.set(0 * 2 + 1, 0, Q(1));  // e_1⊗e^2
  auto phi_t = phi(v, x, x, v.from_matrix(v.unit_object(), v.tensor_obj(x, v.dual(x)), t));
  CHECK(phi_t.matrix() == M({{0, 1}, {0, 0}}));
  CHECK(phi(v, x, x, v.coev(x)) == v.identity(x));

  auto q3 = v.space(3);
  auto tr = alpha(v, q3, q3, v.coev(q3));
  CHECK(psi(v, tr) == v.identity(q3));
  CHECK(v.scalar_value(tr_hat(v, tr)) == 3);
  CHECK(v.scalar_value(tr_hat(v, alpha(v, q3, q3, v.zero_mor(v.unit_object(), v.tensor_obj(q3, v.dual(q3)))))) == 0);
  CHECK(v.scalar_value(categorical_trace(v, v.from_matrix(x, x, M({{1, 2}, {3, 4}})))) == 5);
  CHECK(v.scalar_value(categorical_trace(v, v.zero_mor(x, x))) == 0);
}

TEST_CASE("supervect signs") {
  SuperVect sv;
  auto odd = sv.space(0, 1), even = sv.space(1, 0);
  CHECK(sv.switching(odd, odd).matrix() == M({{-1}}));
  CHECK(sv.switching(odd, even).matrix() == M({{1}}));
  CHECK(sv.switching(even, even).matrix() == M({{1}}));

  auto x = sv.space(1, 1);
  CHECK(sv.super_trace(sv.identity(x)) == 0);
  CHECK(sv.scalar_value(categorical_trace(sv, sv.identity(x))) == 0);
  CHECK(sv.scalar_value(categorical_trace(sv, sv.identity(sv.space(3, 1)))) == 2);
  // zigzags on (1|1)
  auto id = [&](const SuperVect::Object& o) { return sv.identity(o); };
  CHECK(sv.compose(sv.tensor(id(x), sv.ev(x)), sv.tensor(sv.coev(x), id(x))) == id(x));
  CHECK(sv.compose(sv.tensor(sv.ev(x), id(sv.dual(x))), sv.tensor(id(sv.dual(x)), sv.coev(x))) ==
        id(sv.dual(x)));
  // odd-to-even maps are not morphisms
  CHECK_THROWS_AS(sv.from_matrix(odd, even, M({{1}})), InvalidArgument);
}

TEST_CASE("graded braiding, twist and switching scalars") {
  GradedVect g(2);
  auto d = [&](int deg) { return g.space({{deg, 1}}); };
  CHECK(g.braiding(d(1), d(1)).matrix() == M({{2}}));
  CHECK(g.braiding(d(0), d(3)).matrix() == M({{1}}));
  CHECK(g.compose(g.braiding(d(1), d(1)), g.braiding(d(1), d(1))).matrix() == M({{4}}));
  CHECK(g.twist(d(0)).matrix() == M({{1}}));
  CHECK(g.twist(d(2)).matrix() == M({{16}}));
  CHECK(g.switching(d(1), d(1)).matrix() == M({{4}}));
  CHECK(g.switching(d(1), d(2)).matrix() == M({{8}}));
  CHECK(g.switching(d(0), d(5)).matrix() == M({{1}}));
  CHECK(g.braiding_inv(d(1), d(2)).matrix().at(0, 0) == Q(1, 4));

  GradedVect g3(3);
  auto d3 = [&](int deg) { return g3.space({{deg, 1}}); };
  auto lhs = g3.twist(g3.tensor_obj(d3(1), d3(1)));
  auto rhs = compose_all(g3, g3.braiding(d3(1), d3(1)), g3.braiding(d3(1), d3(1)),
                         g3.tensor(g3.twist(d3(1)), g3.twist(d3(1))));
  CHECK(lhs.matrix() == M({{81}}));
  CHECK(lhs == rhs);

  // categorical traces
  CHECK(g.scalar_value(categorical_trace(g, g.identity(d(1)))) == 1);
  CHECK(g.scalar_value(categorical_trace(g, g.identity(g.space({{0, 4}})))) == 4);
  CHECK_THROWS_AS(GradedVect(1), InvalidArgument);
  CHECK_THROWS_AS(GradedVect(-1), InvalidArgument);
  CHECK_THROWS_AS(GradedVect(0), InvalidArgument);
}

TEST_CASE("plain swap agrees with s on every degree-zero tensor") {
  // t: I→X⊗Z lands in total degree 0, where q^{mn+m²} = q^{-m²+m²} = 1.
  GradedVect g(2);
  check::PlainSwapGraded plain(2);
  for (int m = -3; m <= 3; ++m) {
    auto x = g.space({{m, 1}}), z = g.space({{-m, 1}});
    CHECK(g.switching(x, z) == plain.switching(x, z));
    if (m != 0) CHECK_FALSE(g.braiding(x, z) == plain.switching(x, z));
  }
}

TEST_CASE("capability table") {
  static_assert(FinVect::capabilities.symmetric && FinVect::capabilities.balanced);
  static_assert(SuperVect::capabilities.symmetric);
  static_assert(GradedVect::capabilities.balanced && !GradedVect::capabilities.symmetric);
  FinVect v;
  CHECK(v.twist(v.space(3)) == v.identity(v.space(3)));
}
