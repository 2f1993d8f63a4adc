#pragma once

#include "traced/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace traced::check {

// Deterministic generator. Streams are derived from (seed, suite id, trial
// index) so trials can run in any order or in parallel. Bounded draws avoid
// std distributions, whose output differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t state) : state_(state) {}
  Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index);

  std::uint64_t next();
  // uniform in [lo, hi]
  long uniform(long lo, long hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, long(n) - 1)); }
  bool chance(unsigned num, unsigned den) { return uniform(0, long(den) - 1) < long(num); }

  // numerator in [-3, 3], denominator in [1, 3]
  Rational small_rational();
  Rational small_nonzero_rational();

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::uint64_t state_;
};

}  // namespace traced::check
