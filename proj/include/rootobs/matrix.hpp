// Dense exact matrices over Z and Q. Desk-scale, row-major, no floating point.
#pragma once

#include "rootobs/numeric.hpp"

#include <vector>

namespace rootobs {

class RatMat;

class IntMat {
public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be non-negative");
  }
  IntMat(int rows, int cols, std::vector<Int> entries);

  static IntMat identity(int n);
  static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }
  // Builds a matrix from a list of columns, each of length `rows`.
  static IntMat from_columns(int rows, const std::vector<std::vector<Int>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  std::vector<Int> column(int j) const;
  std::vector<Int> row_vec(int i) const;
  void set_column(int j, const std::vector<Int>& c);

  IntMat transpose() const;
  IntMat operator*(const IntMat& b) const;
  std::vector<Int> operator*(const std::vector<Int>& x) const;
  IntMat operator-(const IntMat& b) const;
  bool operator==(const IntMat& b) const { return rows_ == b.rows_ && cols_ == b.cols_ && e_ == b.e_; }
  bool is_zero() const;

  // Appends the columns of b on the right.
  IntMat hcat(const IntMat& b) const;
  // Keeps the listed columns, in order.
  IntMat select_columns(const std::vector<int>& idx) const;
  IntMat select_rows(const std::vector<int>& idx) const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int j);
  void add_row_multiple(int dst, int src, const Int& c);   // row dst += c * row src
  void add_col_multiple(int dst, int src, const Int& c);   // col dst += c * col src

  Int determinant() const;  // Bareiss, fraction-free
  RatMat to_rational() const;

  std::string str() const;  // compact one-line rendering, for messages and reproducers

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

class RatMat {
public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be non-negative");
  }

  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  std::vector<Rat> column(int j) const;

  RatMat transpose() const;
  RatMat operator*(const RatMat& b) const;
  std::vector<Rat> operator*(const std::vector<Rat>& x) const;
  bool operator==(const RatMat& b) const { return rows_ == b.rows_ && cols_ == b.cols_ && e_ == b.e_; }

  RatMat hcat(const RatMat& b) const;

  bool is_integral() const;
  IntMat to_integer() const;  // throws integrity_error on non-integral entries

  // Exact Gauss-Jordan inverse; throws integrity_error on singular input.
  RatMat inverse() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

std::vector<Rat> to_rational(const std::vector<Int>& v);

}  // namespace rootobs
