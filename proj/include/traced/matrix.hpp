#pragma once

#include "traced/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace traced {

// Sparse exact matrix. Rows hold their nonzero entries sorted by column, so
// two matrices are equal iff their storage is equal.
class RatMatrix {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
    bool operator==(const Entry&) const = default;
  };

  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix scalar(const Rational& value);
  // Throws InvalidArgument on ragged input. A list of zero rows gives 0x0.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows() == cols(); }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add_to(std::size_t r, std::size_t c, const Rational& value);

  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  RatMatrix transpose() const;
  Rational trace() const;

  std::vector<std::vector<Rational>> dense() const;
  // "[[1, 2], [3/2, 0]]"
  std::string to_string() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);

 private:
  std::vector<std::vector<Entry>> rows_;
  std::size_t cols_ = 0;
};

// Kronecker product, row-major: (A⊗B)[i*rB + k][j*cB + l] = A[i][j] B[k][l].
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

// Block diagonal [[a, 0], [0, b]].
RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b);

// Stack a above b; a and b need the same column count.
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
// Place a left of b; a and b need the same row count.
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);

// Matrix of the map sending basis vector j to basis vector perm[j].
RatMatrix permutation_matrix(const std::vector<std::size_t>& perm);

RatMatrix matrix_power(const RatMatrix& a, unsigned long n);

}  // namespace traced
