#pragma once

#include "traced/matrix.hpp"

#include <initializer_list>
#include <vector>

namespace traced::test {

inline RatMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long v : r) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return RatMatrix::from_rows(out);
}

inline Rational Q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace traced::test
