#include "traced/bordism.hpp"

#include "traced/errors.hpp"

#include <algorithm>
#include <tuple>

namespace traced {

namespace {

struct Edge {
  std::size_t u;
  std::size_t v;
  Rational length;
};

struct Glued {
  std::vector<Edge> paths;  // between free nodes
  std::vector<Rational> cycles;
};

// Every node has degree 1 (free) or 2 (glued). Follows each path from a free
// node to the next free node and sums lengths; what is left are cycles.
Glued glue(std::size_t node_count, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> incident(node_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].u].push_back(e);
    incident[edges[e].v].push_back(e);
  }
  for (const auto& inc : incident)
    if (inc.size() > 2) throw InvalidArgument("gluing: boundary point used more than twice");

  std::vector<char> used(edges.size(), 0);
  auto other = [&](std::size_t e, std::size_t node) {
    return edges[e].u == node ? edges[e].v : edges[e].u;
  };
  auto next_edge = [&](std::size_t node) -> std::optional<std::size_t> {
    for (std::size_t e : incident[node])
      if (!used[e]) return e;
    return std::nullopt;
  };

  Glued out;
  for (std::size_t start = 0; start < node_count; ++start) {
    if (incident[start].size() != 1 || used[incident[start][0]]) continue;
    std::size_t node = start;
    Rational total = 0;
    while (auto e = next_edge(node)) {
      used[*e] = 1;
      total += edges[*e].length;
      node = other(*e, node);
      if (incident[node].size() == 1) break;
    }
    out.paths.push_back({start, node, total});
  }
  for (std::size_t e0 = 0; e0 < edges.size(); ++e0) {
    if (used[e0]) continue;
    used[e0] = 1;
    Rational total = edges[e0].length;
    std::size_t node = edges[e0].v;
    while (auto e = next_edge(node)) {
      used[*e] = 1;
      total += edges[*e].length;
      node = other(*e, node);
    }
    out.cycles.push_back(total);
  }
  return out;
}

void require_matching(const PointSet& source, const PointSet& target,
                      const std::vector<Arc>& arcs) {
  std::vector<char> in_hit(source.size(), 0), out_hit(target.size(), 0);
  auto mark = [&](const Endpoint& p) {
    auto& hits = p.side == Side::In ? in_hit : out_hit;
    if (p.index >= hits.size())
      throw InvalidArgument("arc endpoint " + std::to_string(p.index) + " out of range");
    if (hits[p.index]) throw InvalidArgument("boundary point used by two arcs");
    hits[p.index] = 1;
  };
  for (const auto& arc : arcs) {
    mark(arc.a);
    mark(arc.b);
  }
  for (char h : in_hit)
    if (!h) throw InvalidArgument("source point not covered by any arc");
  for (char h : out_hit)
    if (!h) throw InvalidArgument("target point not covered by any arc");
}

}  // namespace

RBordMorphism::RBordMorphism(PointSet source, PointSet target, std::vector<Arc> arcs,
                             std::vector<Rational> circles)
    : source_(std::move(source)),
      target_(std::move(target)),
      arcs_(std::move(arcs)),
      circles_(std::move(circles)) {
  for (auto& arc : arcs_)
    if (arc.b < arc.a) std::swap(arc.a, arc.b);
  std::sort(arcs_.begin(), arcs_.end(),
            [](const Arc& x, const Arc& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  std::sort(circles_.begin(), circles_.end());
}

RBordMorphism::Kind RBordMorphism::kind() const {
  if (arcs_.empty() && circles_.empty()) return Kind::Bordism;
  bool any_thin = false, all_thin = true;
  for (const auto& arc : arcs_) {
    bool thin = arc.length == 0;
    any_thin = any_thin || thin;
    all_thin = all_thin && thin;
  }
  if (all_thin && circles_.empty()) return Kind::Isometry;
  return any_thin ? Kind::Mixed : Kind::Bordism;
}

std::vector<std::size_t> RBordMorphism::bijection() const {
  if (kind() != Kind::Isometry && !(arcs_.empty() && circles_.empty()))
    throw InvalidArgument("bijection() of a morphism that is not an isometry");
  std::vector<std::size_t> image(source_.size());
  for (const auto& arc : arcs_) image[arc.a.index] = arc.b.index;
  return image;
}

RBord::Object RBord::tensor_obj(const Object& a, const Object& b) const {
  Object out = a;
  out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
  return out;
}

RBord::Morphism RBord::identity(const Object& x) const {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < x.size(); ++i)
    arcs.push_back({{Side::In, i}, {Side::Out, i}, Rational(0)});
  return Morphism(x, x, std::move(arcs), {});
}

RBord::Morphism RBord::compose(const Morphism& g, const Morphism& f) const {
  if (!(f.target() == g.source()))
    throw DomainMismatch("compose: target " + describe(f.target()) + " differs from source " +
                         describe(g.source()));
  const std::size_t nx = f.source().size(), ny = f.target().size(), nw = g.target().size();
  auto f_node = [&](const Endpoint& p) { return p.side == Side::In ? p.index : nx + p.index; };
  auto g_node = [&](const Endpoint& p) {
    return p.side == Side::In ? nx + p.index : nx + ny + p.index;
  };
  std::vector<Edge> edges;
  for (const auto& arc : f.arcs()) edges.push_back({f_node(arc.a), f_node(arc.b), arc.length});
  for (const auto& arc : g.arcs()) edges.push_back({g_node(arc.a), g_node(arc.b), arc.length});
  Glued glued = glue(nx + ny + nw, edges);

  auto endpoint = [&](std::size_t node) -> Endpoint {
    if (node < nx) return {Side::In, node};
    return {Side::Out, node - nx - ny};
  };
  std::vector<Arc> arcs;
  for (const auto& p : glued.paths) arcs.push_back({endpoint(p.u), endpoint(p.v), p.length});
  std::vector<Rational> circles = f.circles();
  circles.insert(circles.end(), g.circles().begin(), g.circles().end());
  circles.insert(circles.end(), glued.cycles.begin(), glued.cycles.end());
  return Morphism(f.source(), g.target(), std::move(arcs), std::move(circles));
}

RBord::Morphism RBord::tensor(const Morphism& f, const Morphism& g) const {
  std::vector<Arc> arcs = f.arcs();
  const std::size_t in_shift = f.source().size(), out_shift = f.target().size();
  auto shift = [&](Endpoint p) {
    p.index += p.side == Side::In ? in_shift : out_shift;
    return p;
  };
  for (const auto& arc : g.arcs()) arcs.push_back({shift(arc.a), shift(arc.b), arc.length});
  std::vector<Rational> circles = f.circles();
  circles.insert(circles.end(), g.circles().begin(), g.circles().end());
  return Morphism(tensor_obj(f.source(), g.source()), tensor_obj(f.target(), g.target()),
                  std::move(arcs), std::move(circles));
}

RBord::Morphism RBord::switching(const Object& x, const Object& y) const {
  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < x.size(); ++i) image.push_back(y.size() + i);
  for (std::size_t j = 0; j < y.size(); ++j) image.push_back(j);
  return isometry(tensor_obj(x, y), tensor_obj(y, x), image);
}

std::string RBord::describe(const Object& x) const {
  std::string s = "pts{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += x.labels[i];
  }
  return s + "}";
}

std::string RBord::describe(const Morphism& f) const {
  auto label = [&](const Endpoint& p) {
    return p.side == Side::In ? f.source().labels[p.index] : f.target().labels[p.index];
  };
  std::vector<std::string> parts;
  bool iso = f.is_isometry();
  for (const auto& arc : f.arcs()) {
    std::string s;
    if (arc.a.side == Side::In && arc.b.side == Side::Out) {
      s = label(arc.a) + "->" + label(arc.b);
    } else if (arc.a.side == Side::In) {
      s = label(arc.a) + " " + label(arc.b) + " ->";
    } else {
      s = "-> " + label(arc.a) + " " + label(arc.b);
    }
    if (!iso) s += " : " + to_string(arc.length);
    parts.push_back(s);
  }
  for (const auto& c : f.circles()) parts.push_back("loop: " + to_string(c));
  std::string out = iso ? "iso{" : "bord{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : " ") + parts[i];
  return out + (parts.empty() ? "}" : " }");
}

RBord::Morphism RBord::make(const Object& source, const Object& target, std::vector<Arc> arcs,
                            std::vector<Rational> circles) const {
  require_matching(source, target, arcs);
  for (const auto& arc : arcs) {
    if (arc.length < 0) throw InvalidArgument("negative arc length");
    if (arc.length == 0 && arc.a.side == arc.b.side)
      throw InvalidArgument("zero-length arc must run from source to target");
  }
  for (const auto& c : circles)
    if (c <= 0) throw InvalidArgument("circle lengths must be positive");
  return Morphism(source, target, std::move(arcs), std::move(circles));
}

RBord::Morphism RBord::bordism(const Object& source, const Object& target, std::vector<Arc> arcs,
                               std::vector<Rational> circles) const {
  for (const auto& arc : arcs)
    if (arc.length <= 0) throw InvalidArgument("bordism arc lengths must be positive");
  return make(source, target, std::move(arcs), std::move(circles));
}

RBord::Morphism RBord::isometry(const Object& source, const Object& target,
                                const std::vector<std::size_t>& image) const {
  if (source.size() != target.size() || image.size() != source.size())
    throw InvalidArgument("isometry needs a bijection between equal-size point sets");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < image.size(); ++i)
    arcs.push_back({{Side::In, i}, {Side::Out, image[i]}, Rational(0)});
  return make(source, target, std::move(arcs), {});
}

RBord::Morphism RBord::interval(const std::string& from, const std::string& to,
                                const Rational& length) const {
  return bordism(Object{{from}}, Object{{to}}, {{{Side::In, 0}, {Side::Out, 0}, length}});
}

RBord::Morphism RBord::closed(std::vector<Rational> circles) const {
  return make({}, {}, {}, std::move(circles));
}

std::optional<Rational> max_collar(const RBordMorphism& sigma) {
  std::optional<Rational> best;
  auto consider = [&](const Rational& r) {
    if (!best || r < *best) best = r;
  };
  for (const auto& arc : sigma.arcs()) {
    bool a_out = arc.a.side == Side::Out, b_out = arc.b.side == Side::Out;
    if (a_out && b_out)
      consider(arc.length / 2);
    else if (a_out || b_out)
      consider(arc.length);
  }
  return best;
}

ThickTriple<RBord> cut_thickener_at(const RBord& cat, const RBordMorphism& sigma,
                                    const Rational& epsilon) {
  if (!sigma.is_bordism())
    throw NotBordism("only bordisms can be cut; " + cat.describe(sigma) + " is not one");
  auto limit = max_collar(sigma);
  if (epsilon <= 0 || (limit && epsilon >= *limit))
    throw InvalidArgument("collar width " + to_string(epsilon) + " outside (0, " +
                          (limit ? to_string(*limit) : std::string("inf")) + ")");
  const PointSet& x = sigma.source();
  const PointSet& y = sigma.target();
  const std::size_t ny = y.size();

  std::vector<Arc> t_arcs;
  for (std::size_t j = 0; j < ny; ++j)
    t_arcs.push_back({{Side::Out, j}, {Side::Out, ny + j}, epsilon});

  // b: Z⊔X → ∅ with Z_j at in-position j and X_i at ny + i
  std::vector<Arc> b_arcs;
  auto moved = [&](const Endpoint& p) -> Endpoint {
    return p.side == Side::Out ? Endpoint{Side::In, p.index} : Endpoint{Side::In, ny + p.index};
  };
  for (const auto& arc : sigma.arcs()) {
    int out_ends = (arc.a.side == Side::Out) + (arc.b.side == Side::Out);
    b_arcs.push_back({moved(arc.a), moved(arc.b), arc.length - epsilon * out_ends});
  }
  auto t = cat.bordism({}, cat.tensor_obj(y, y), std::move(t_arcs));
  auto b = cat.bordism(cat.tensor_obj(y, x), {}, std::move(b_arcs), sigma.circles());
  return make_triple(cat, x, y, y, std::move(t), std::move(b));
}

ThickTriple<RBord> cut_thickener(const RBord& cat, const RBordMorphism& sigma,
                                 const Rational& cut_fraction) {
  if (cut_fraction <= 0 || cut_fraction >= 1)
    throw InvalidArgument("cut fraction must lie in (0, 1), got " + to_string(cut_fraction));
  if (!sigma.is_bordism())
    throw NotBordism("only bordisms can be cut; " + cat.describe(sigma) + " is not one");
  auto limit = max_collar(sigma);
  return cut_thickener_at(cat, sigma, limit ? Rational(cut_fraction * *limit) : cut_fraction);
}

SlideWitness<RBord> collar_witness(const RBord& cat, const RBordMorphism& sigma,
                                   const Rational& eps1, const Rational& eps2) {
  const Rational& lo = eps1 < eps2 ? eps1 : eps2;
  const Rational& hi = eps1 < eps2 ? eps2 : eps1;
  auto left = cut_thickener_at(cat, sigma, lo);
  auto right = cut_thickener_at(cat, sigma, hi);
  const PointSet& y = sigma.target();
  RBordMorphism g = hi == lo ? cat.identity(y) : [&] {
    std::vector<Arc> arcs;
    for (std::size_t j = 0; j < y.size(); ++j)
      arcs.push_back({{Side::In, j}, {Side::Out, j}, hi - lo});
    return cat.bordism(y, y, std::move(arcs));
  }();
  return {std::move(g), std::move(left), std::move(right)};
}

RBordMorphism glue_trace(const RBord& cat, const RBordMorphism& sigma) {
  if (!(sigma.source() == sigma.target()))
    throw NotEndo("glue_trace needs an endomorphism, got " + cat.describe(sigma.source()) +
                  " -> " + cat.describe(sigma.target()));
  if (!sigma.is_bordism())
    throw NotBordism("glue_trace of a non-bordism " + cat.describe(sigma));
  std::vector<Edge> edges;
  for (const auto& arc : sigma.arcs()) edges.push_back({arc.a.index, arc.b.index, arc.length});
  Glued glued = glue(sigma.source().size(), edges);
  std::vector<Rational> circles = sigma.circles();
  circles.insert(circles.end(), glued.cycles.begin(), glued.cycles.end());
  return cat.closed(std::move(circles));
}

}  // namespace traced
