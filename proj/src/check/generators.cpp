#include "traced/check/generators.hpp"

#include "traced/errors.hpp"

#include <algorithm>
#include <string>

namespace traced::check {

Generator::Generator(Rng& rng, GenBounds bounds) : rng_(rng), bounds_(bounds) {
  std::vector<int> all;
  for (int d = -bounds_.max_degree; d <= bounds_.max_degree; ++d) all.push_back(d);
  rng_.shuffle(all);
  palette_.assign(all.begin(), all.begin() + std::min<std::size_t>(3, all.size()));
}

int Generator::degree() {
  if (rng_.chance(17, 20)) return palette_[rng_.index(palette_.size())];
  return static_cast<int>(rng_.uniform(-bounds_.max_degree, bounds_.max_degree));
}

FinVect::Object Generator::object(const FinVect& cat, std::size_t min_dim, std::size_t max_dim) {
  if (max_dim == 0) max_dim = bounds_.max_dim;
  return cat.space(static_cast<std::size_t>(rng_.uniform(long(min_dim), long(max_dim))));
}

SuperVect::Object Generator::object(const SuperVect&, std::size_t min_dim, std::size_t max_dim) {
  if (max_dim == 0) max_dim = bounds_.max_dim;
  std::vector<int> g(static_cast<std::size_t>(rng_.uniform(long(min_dim), long(max_dim))));
  for (int& p : g) p = static_cast<int>(rng_.uniform(0, 1));
  return SuperVect::Object(std::move(g));
}

GradedVect::Object Generator::object(const GradedVect&, std::size_t min_dim,
                                     std::size_t max_dim) {
  if (max_dim == 0) max_dim = bounds_.max_dim;
  std::vector<int> g(static_cast<std::size_t>(rng_.uniform(long(min_dim), long(max_dim))));
  for (int& d : g) d = degree();
  return GradedVect::Object(std::move(g));
}

FinVect::Object Generator::middle_object(const FinVect& cat, const FinVect::Object&,
                                         const FinVect::Object&) {
  return object(cat, 0, bounds_.max_dim);
}

SuperVect::Object Generator::middle_object(const SuperVect& cat, const SuperVect::Object&,
                                           const SuperVect::Object&) {
  return object(cat, 0, bounds_.max_dim);
}

GradedVect::Object Generator::middle_object(const GradedVect&, const GradedVect::Object& x,
                                            const GradedVect::Object& y) {
  std::vector<int> pool = x.grades();
  pool.insert(pool.end(), y.grades().begin(), y.grades().end());
  std::vector<int> g(static_cast<std::size_t>(rng_.uniform(0, long(bounds_.max_dim))));
  for (int& d : g) {
    if (!pool.empty() && rng_.chance(4, 5))
      d = -pool[rng_.index(pool.size())];
    else
      d = degree();
  }
  return GradedVect::Object(std::move(g));
}

PointSet Generator::points(std::size_t n) {
  std::vector<std::string> names{"a", "b", "c", "d", "e", "f", "g", "h"};
  if (n > names.size()) throw InvalidArgument("at most 8 generated points");
  rng_.shuffle(names);
  names.resize(n);
  return PointSet{names};
}

Rational Generator::length(const BordOptions& opt) {
  if (opt.integer_lengths) return Rational(rng_.uniform(1, opt.max_length));
  long den = rng_.uniform(1, 3);
  Rational r(mpz_class(rng_.uniform(1, opt.max_length * den)), mpz_class(den));
  r.canonicalize();
  return r;
}

RBordMorphism Generator::bordism(const RBord& cat, const PointSet& x, const PointSet& y,
                                 const BordOptions& opt) {
  std::vector<Arc> arcs;
  if (opt.through_only) {
    if (x.size() != y.size()) throw InvalidArgument("through-only bordism needs |X| = |Y|");
    std::vector<std::size_t> image(x.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
    rng_.shuffle(image);
    for (std::size_t i = 0; i < image.size(); ++i)
      arcs.push_back({{Side::In, i}, {Side::Out, image[i]}, length(opt)});
  } else {
    if ((x.size() + y.size()) % 2) throw InvalidArgument("odd number of boundary points");
    std::vector<Endpoint> ends;
    for (std::size_t i = 0; i < x.size(); ++i) ends.push_back({Side::In, i});
    for (std::size_t j = 0; j < y.size(); ++j) ends.push_back({Side::Out, j});
    rng_.shuffle(ends);
    for (std::size_t k = 0; k < ends.size(); k += 2)
      arcs.push_back({ends[k], ends[k + 1], length(opt)});
  }
  std::vector<Rational> circles;
  if (opt.allow_circles && rng_.chance(1, 3)) {
    long n = rng_.uniform(1, 2);
    for (long k = 0; k < n; ++k) circles.push_back(length(opt));
  }
  return cat.bordism(x, y, std::move(arcs), std::move(circles));
}

RBordMorphism Generator::isometry(const RBord& cat, const PointSet& x, const PointSet& y) {
  std::vector<std::size_t> image(x.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  rng_.shuffle(image);
  return cat.isometry(x, y, image);
}

RBordMorphism Generator::morphism(const RBord& cat, const PointSet& x, const PointSet& y) {
  if (x.size() == y.size() && rng_.chance(1, 4)) return isometry(cat, x, y);
  std::size_t k_max = std::min(x.size(), y.size());
  if (k_max > 0 && rng_.chance(1, 3)) {
    // isometry on the first k points, bordism on the rest
    std::size_t k = static_cast<std::size_t>(rng_.uniform(1, long(k_max)));
    PointSet x1{{x.labels.begin(), x.labels.begin() + long(k)}};
    PointSet x2{{x.labels.begin() + long(k), x.labels.end()}};
    PointSet y1{{y.labels.begin(), y.labels.begin() + long(k)}};
    PointSet y2{{y.labels.begin() + long(k), y.labels.end()}};
    return cat.tensor(isometry(cat, x1, y1), bordism(cat, x2, y2));
  }
  return bordism(cat, x, y);
}

PointSet Generator::middle_points(const PointSet& x, const PointSet& y) {
  if ((x.size() + y.size()) % 2) throw InvalidArgument("|X| and |Y| must have equal parity");
  std::size_t n = static_cast<std::size_t>(rng_.uniform(0, 3));
  if ((n + y.size()) % 2) n = n == 3 ? 2 : n + 1;
  return points(n);
}

ThickTriple<RBord> Generator::triple(const RBord& cat, const PointSet& x, const PointSet& y,
                                     const BordOptions& opt) {
  PointSet z = middle_points(x, y);
  auto t = bordism(cat, PointSet{}, cat.tensor_obj(y, z), opt);
  auto b = bordism(cat, cat.tensor_obj(z, x), PointSet{}, opt);
  return make_triple(cat, x, y, z, std::move(t), std::move(b));
}

RatMatrix Generator::square_matrix(std::size_t n, bool symmetric) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
      Rational v = rng_.small_rational();
      m.set(i, j, v);
      if (symmetric) m.set(j, i, v);
    }
  return m;
}

}  // namespace traced::check
