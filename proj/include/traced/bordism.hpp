#pragma once

#include "traced/category.hpp"
#include "traced/rational.hpp"
#include "traced/thickened.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace traced {

// Closed 0-manifold: an ordered list of points. Points are addressed by
// position; labels are carried along for display and for the DSL.
struct PointSet {
  std::vector<std::string> labels;

  std::size_t size() const { return labels.size(); }
  bool empty() const { return labels.empty(); }
  bool operator==(const PointSet&) const = default;
};

enum class Side : std::uint8_t { In = 0, Out = 1 };

struct Endpoint {
  Side side;
  std::size_t index;
  auto operator<=>(const Endpoint&) const = default;
};

struct Arc {
  Endpoint a;
  Endpoint b;
  Rational length;
  bool operator==(const Arc&) const = default;
};

// A morphism of the 1-dimensional Riemannian bordism category: a perfect
// matching of the in- and out-boundary by arcs with lengths, plus closed
// circles. Isometries are the matchings whose arcs all run from in to out
// with length 0. A bordism has only positive lengths. Disjoint unions of the
// two (as in id⊔b) are allowed and classified as mixed.
//
// Canonical form: each arc has a < b, arcs sorted by endpoints, circles sorted.
class RBordMorphism {
 public:
  enum class Kind { Isometry, Bordism, Mixed };

  const PointSet& source() const { return source_; }
  const PointSet& target() const { return target_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Rational>& circles() const { return circles_; }

  Kind kind() const;
  bool is_bordism() const { return kind() == Kind::Bordism; }
  bool is_isometry() const { return kind() == Kind::Isometry; }

  // For isometries: image[i] is the target position of source point i.
  std::vector<std::size_t> bijection() const;

  bool operator==(const RBordMorphism&) const = default;

 private:
  friend class RBord;
  RBordMorphism(PointSet source, PointSet target, std::vector<Arc> arcs,
                std::vector<Rational> circles);

  PointSet source_;
  PointSet target_;
  std::vector<Arc> arcs_;
  std::vector<Rational> circles_;
};

class RBord {
 public:
  using Object = PointSet;
  using Morphism = RBordMorphism;

  static constexpr Capabilities capabilities{};
  static constexpr const char* name = "rbord1";

  Object unit_object() const { return {}; }
  Object tensor_obj(const Object& a, const Object& b) const;
  Morphism identity(const Object& x) const;
  // g∘f, gluing along the shared boundary
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  Morphism switching(const Object& x, const Object& y) const;
  bool mor_equal(const Morphism& f, const Morphism& g) const { return f == g; }
  std::string describe(const Object& x) const;
  std::string describe(const Morphism& f) const;

  // Validated constructors. make() accepts zero-length arcs from in to out;
  // bordism() insists on positive lengths.
  Morphism make(const Object& source, const Object& target, std::vector<Arc> arcs,
                std::vector<Rational> circles = {}) const;
  Morphism bordism(const Object& source, const Object& target, std::vector<Arc> arcs,
                   std::vector<Rational> circles = {}) const;
  Morphism isometry(const Object& source, const Object& target,
                    const std::vector<std::size_t>& image) const;
  Morphism interval(const std::string& from, const std::string& to, const Rational& length) const;
  Morphism closed(std::vector<Rational> circles) const;
};

static_assert(RBord::capabilities.consistent());

// Largest admissible collar width for cutting sigma near its target: the
// minimum over arcs touching the target of L (through arcs) and L/2 (arcs
// with both ends on the target). Empty when no arc touches the target.
std::optional<Rational> max_collar(const RBordMorphism& sigma);

// (Z, t, b) with Z a copy of the target Y, t the collar Y×[0,ε], b the rest.
// cut_thickener takes ε = cut_fraction · max_collar(sigma), 0 < cut_fraction < 1.
ThickTriple<RBord> cut_thickener(const RBord& cat, const RBordMorphism& sigma,
                                 const Rational& cut_fraction);
ThickTriple<RBord> cut_thickener_at(const RBord& cat, const RBordMorphism& sigma,
                                    const Rational& epsilon);

// Witness relating the cuts at widths eps1 and eps2: g is the piece of the
// collar between the two cut positions. left is the narrower cut.
SlideWitness<RBord> collar_witness(const RBord& cat, const RBordMorphism& sigma,
                                   const Rational& eps1, const Rational& eps2);

// Closed 1-manifold obtained by identifying the two boundary copies of X.
RBordMorphism glue_trace(const RBord& cat, const RBordMorphism& sigma);

}  // namespace traced
