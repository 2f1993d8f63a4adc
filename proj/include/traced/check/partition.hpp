#pragma once

#include "traced/matrix.hpp"
#include "traced/rational.hpp"

#include <istream>
#include <string>
#include <vector>

namespace traced::check {

// Square rational matrix, one row per line, entries separated by
// whitespace. Blank lines and lines starting with '#' are skipped.
RatMatrix read_matrix(std::istream& in);

// One row per split of a circle of total length N into Σ1 = interval of
// length k and Σ2 = interval of length N-k, for k = 0..N. A zero-length
// piece is the identity.
struct PartitionRow {
  long k = 0;
  Rational glued;    // E(glue_trace(Σ1∘Σ2))
  Rational pairing;  // tr(E(Σ2), E(Σ1))
  bool equal() const { return glued == pairing; }
};

std::vector<PartitionRow> partition_table(const RatMatrix& a, const Rational& length);

struct FloatPartitionRow {
  double k = 0;
  double glued = 0;
  double pairing = 0;
  bool within = false;  // |glued - pairing| <= kFloatTolerance
};

inline constexpr double kFloatTolerance = 1e-9;

// Same table with E(interval t) = exp(-tH) for symmetric H.
std::vector<FloatPartitionRow> float_partition_table(const RatMatrix& h, const Rational& length);

std::string to_text(const std::vector<PartitionRow>& rows);
std::string to_text(const std::vector<FloatPartitionRow>& rows);

}  // namespace traced::check
