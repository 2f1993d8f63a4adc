#include "traced/check/partition.hpp"

#include "traced/bordism.hpp"
#include "traced/errors.hpp"
#include "traced/field_theory.hpp"
#include "traced/thickened.hpp"
#include "traced/vect.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace traced::check {

RatMatrix read_matrix(std::istream& in) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::vector<Rational> row;
    for (std::string w; words >> w;) row.push_back(parse_rational(w));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidArgument("matrix file has no rows");
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw InvalidArgument("matrix must be square; got a row of " + std::to_string(r.size()) +
                            " entries in a " + std::to_string(rows.size()) + "-row matrix");
  return RatMatrix::from_rows(rows);
}

namespace {

void check_length(const Rational& length) {
  if (length <= 0) throw InvalidArgument("length must be positive, got " + to_string(length));
}

RBordMorphism segment(const RBord& cat, const Rational& length) {
  return length == 0 ? cat.identity(PointSet{{"p"}}) : cat.interval("p", "p", length);
}

}  // namespace

std::vector<PartitionRow> partition_table(const RatMatrix& a, const Rational& length) {
  check_length(length);
  if (!is_integer(length))
    throw NonIntegerLength("exact mode needs an integer length, got " + to_string(length));
  RBord cat;
  FieldTheory field(a);
  const FinVect& vect = field.target();
  long n = length.get_num().get_si();
  std::vector<PartitionRow> rows;
  for (long k = 0; k <= n; ++k) {
    auto s1 = segment(cat, Rational(k));
    auto s2 = segment(cat, Rational(n - k));
    PartitionRow row;
    row.k = k;
    row.glued = vect.scalar_value(field(glue_trace(cat, cat.compose(s1, s2))));
    row.pairing =
        vect.scalar_value(trace_pairing(vect, canonical_thickener(vect, field(s2)), field(s1)));
    rows.push_back(row);
  }
  return rows;
}

std::vector<FloatPartitionRow> float_partition_table(const RatMatrix& h, const Rational& length) {
  check_length(length);
  auto dense = h.dense();
  Eigen::MatrixXd m(h.rows(), h.cols());
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) m(r, c) = dense[r][c].get_d();
  FloatFieldTheory field(m);
  double total = length.get_d();
  std::vector<double> splits;
  for (long k = 0; k <= static_cast<long>(std::floor(total)); ++k) splits.push_back(double(k));
  if (!is_integer(length)) splits.push_back(total);
  std::vector<FloatPartitionRow> rows;
  for (double k : splits) {
    FloatPartitionRow row;
    row.k = k;
    row.glued = field.circle(total);
    row.pairing = (field.interval(total - k) * field.interval(k)).trace();
    row.within = std::abs(row.glued - row.pairing) <= kFloatTolerance;
    rows.push_back(row);
  }
  return rows;
}

std::string to_text(const std::vector<PartitionRow>& rows) {
  std::ostringstream out;
  out << "k\tE(glued)\ttr(E(S2),E(S1))\n";
  bool all = true;
  for (const auto& r : rows) {
    out << r.k << "\t" << to_string(r.glued) << "\t" << to_string(r.pairing)
        << (r.equal() ? "" : "\tMISMATCH") << "\n";
    all = all && r.equal();
  }
  out << (all ? "all splits agree\n" : "splits disagree\n");
  return out.str();
}

std::string to_text(const std::vector<FloatPartitionRow>& rows) {
  std::ostringstream out;
  out << "k\tE(glued)\ttr(E(S2),E(S1))\n";
  bool all = true;
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%g\t%.12g\t%.12g%s\n", r.k, r.glued, r.pairing,
                  r.within ? "" : "\tMISMATCH");
    out << buf;
    all = all && r.within;
  }
  out << (all ? "all splits agree within 1e-9\n" : "splits disagree\n");
  return out.str();
}

}  // namespace traced::check
