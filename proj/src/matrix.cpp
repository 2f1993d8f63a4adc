#include "traced/matrix.hpp"

#include "traced/errors.hpp"

#include <algorithm>

namespace traced {

namespace {

void check_index(const RatMatrix& m, std::size_t r, std::size_t c) {
  if (r >= m.rows() || c >= m.cols())
    throw InvalidArgument("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                          ") out of range for " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
}

void require_same_shape(const RatMatrix& a, const RatMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainMismatch(std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + " differ");
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, Rational(1)});
  return m;
}

RatMatrix RatMatrix::scalar(const Rational& value) {
  RatMatrix m(1, 1);
  m.set(0, 0, value);
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.rows_[r].push_back({c, rows[r][c]});
  }
  return m;
}

Rational RatMatrix::at(std::size_t r, std::size_t c) const {
  check_index(*this, r, c);
  const auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Rational(0);
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  check_index(*this, r, c);
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  bool present = it != row.end() && it->col == c;
  if (value == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    row.insert(it, Entry{c, value});
  }
}

void RatMatrix::add_to(std::size_t r, std::size_t c, const Rational& value) {
  if (value == 0) return;
  set(r, c, at(r, c) + value);
}

std::size_t RatMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& e : rows_[r]) t.rows_[e.col].push_back({r, e.value});
  return t;
}

Rational RatMatrix::trace() const {
  if (!square()) throw NotEndo("trace of a non-square matrix");
  Rational sum = 0;
  for (std::size_t i = 0; i < rows(); ++i) sum += at(i, i);
  return sum;
}

std::vector<std::vector<Rational>> RatMatrix::dense() const {
  std::vector<std::vector<Rational>> out(rows(), std::vector<Rational>(cols_, Rational(0)));
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& e : rows_[r]) out[r][e.col] = e.value;
  return out;
}

std::string RatMatrix::to_string() const {
  std::string s = "[";
  auto d = dense();
  for (std::size_t r = 0; r < d.size(); ++r) {
    if (r) s += ", ";
    s += "[";
    for (std::size_t c = 0; c < d[r].size(); ++c) {
      if (c) s += ", ";
      s += traced::to_string(d[r][c]);
    }
    s += "]";
  }
  return s + "]";
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  RatMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto& x = a.rows_[r];
    const auto& y = b.rows_[r];
    auto& o = out.rows_[r];
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
        o.push_back(x[i++]);
      } else if (i == x.size() || y[j].col < x[i].col) {
        o.push_back(y[j++]);
      } else {
        Rational s = x[i].value + y[j].value;
        if (s != 0) o.push_back({x[i].col, s});
        ++i;
        ++j;
      }
    }
  }
  return out;
}

RatMatrix operator-(const RatMatrix& a) {
  RatMatrix out = a;
  for (auto& row : out.rows_)
    for (auto& e : row) e.value = -e.value;
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + (-b); }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw DomainMismatch("matrix product: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  RatMatrix out(a.rows(), b.cols());
  std::vector<Rational> acc(b.cols());
  std::vector<char> touched(b.cols(), 0);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    cols.clear();
    for (const auto& e : a.rows_[r]) {
      for (const auto& f : b.rows_[e.col]) {
        if (!touched[f.col]) {
          touched[f.col] = 1;
          acc[f.col] = 0;
          cols.push_back(f.col);
        }
        acc[f.col] += e.value * f.value;
      }
    }
    std::sort(cols.begin(), cols.end());
    auto& o = out.rows_[r];
    for (std::size_t c : cols) {
      touched[c] = 0;
      if (acc[c] != 0) o.push_back({c, acc[c]});
    }
  }
  return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  if (s == 0) return RatMatrix(a.rows(), a.cols());
  RatMatrix out = a;
  for (auto& row : out.rows_)
    for (auto& e : row) e.value *= s;
  return out;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.rows(); ++k) {
      std::size_t r = i * b.rows() + k;
      for (const auto& e : a.row(i))
        for (const auto& f : b.row(k)) out.set(r, e.col * b.cols() + f.col, e.value * f.value);
    }
  return out;
}

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& e : a.row(r)) out.set(r, e.col, e.value);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (const auto& e : b.row(r)) out.set(a.rows() + r, a.cols() + e.col, e.value);
  return out;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw DomainMismatch("vstack: column counts differ");
  RatMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& e : a.row(r)) out.set(r, e.col, e.value);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (const auto& e : b.row(r)) out.set(a.rows() + r, e.col, e.value);
  return out;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw DomainMismatch("hstack: row counts differ");
  RatMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& e : a.row(r)) out.set(r, e.col, e.value);
    for (const auto& e : b.row(r)) out.set(r, a.cols() + e.col, e.value);
  }
  return out;
}

RatMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  RatMatrix out(perm.size(), perm.size());
  std::vector<char> hit(perm.size(), 0);
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (perm[j] >= perm.size() || hit[perm[j]]) throw InvalidArgument("not a permutation");
    hit[perm[j]] = 1;
    out.set(perm[j], j, Rational(1));
  }
  return out;
}

RatMatrix matrix_power(const RatMatrix& a, unsigned long n) {
  if (!a.square()) throw NotEndo("power of a non-square matrix");
  RatMatrix result = RatMatrix::identity(a.rows());
  RatMatrix base = a;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

}  // namespace traced
