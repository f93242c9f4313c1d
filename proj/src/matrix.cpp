#include "rootobs/matrix.hpp"

#include <sstream>

namespace rootobs {

IntMat::IntMat(int rows, int cols, std::vector<Int> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be non-negative");
  if (e_.size() != size_t(rows) * cols) throw input_error("entry count does not match matrix shape");
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(int rows, const std::vector<std::vector<Int>>& cols) {
  IntMat m(rows, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j) {
    if (int(cols[j].size()) != rows) throw input_error("column length does not match row count");
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Int> IntMat::column(int j) const {
  std::vector<Int> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Int> IntMat::row_vec(int i) const {
  std::vector<Int> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

void IntMat::set_column(int j, const std::vector<Int>& c) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& b) const {
  if (cols_ != b.rows_) throw integrity_error("matrix product shape mismatch");
  IntMat c(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += a * b(k, j);
    }
  return c;
}

std::vector<Int> IntMat::operator*(const std::vector<Int>& x) const {
  if (int(x.size()) != cols_) throw integrity_error("matrix-vector shape mismatch");
  std::vector<Int> y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMat IntMat::operator-(const IntMat& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw integrity_error("matrix difference shape mismatch");
  IntMat c(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) c.e_[k] = e_[k] - b.e_[k];
  return c;
}

bool IntMat::is_zero() const {
  for (const Int& v : e_)
    if (v != 0) return false;
  return true;
}

IntMat IntMat::hcat(const IntMat& b) const {
  if (rows_ != b.rows_) throw integrity_error("hcat row mismatch");
  IntMat c(rows_, cols_ + b.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j);
    for (int j = 0; j < b.cols_; ++j) c(i, cols_ + j) = b(i, j);
  }
  return c;
}

IntMat IntMat::select_columns(const std::vector<int>& idx) const {
  IntMat c(rows_, int(idx.size()));
  for (int j = 0; j < int(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) c(i, j) = (*this)(i, idx[j]);
  return c;
}

IntMat IntMat::select_rows(const std::vector<int>& idx) const {
  IntMat c(int(idx.size()), cols_);
  for (int i = 0; i < int(idx.size()); ++i)
    for (int j = 0; j < cols_; ++j) c(i, j) = (*this)(idx[i], j);
  return c;
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMat::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMat::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

void IntMat::add_row_multiple(int dst, int src, const Int& c) {
  if (c == 0) return;
  for (int j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
}

void IntMat::add_col_multiple(int dst, int src, const Int& c) {
  if (c == 0) return;
  for (int i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
}

// Bareiss fraction-free elimination. Exact for arbitrary integer entries.
Int IntMat::determinant() const {
  if (rows_ != cols_) throw integrity_error("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMat a = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

RatMat IntMat::to_rational() const {
  RatMat m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = Rat((*this)(i, j));
  return m;
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rat> RatMat::column(int j) const {
  std::vector<Rat> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMat RatMat::operator*(const RatMat& b) const {
  if (cols_ != b.rows_) throw integrity_error("matrix product shape mismatch");
  RatMat c(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += a * b(k, j);
    }
  return c;
}

std::vector<Rat> RatMat::operator*(const std::vector<Rat>& x) const {
  if (int(x.size()) != cols_) throw integrity_error("matrix-vector shape mismatch");
  std::vector<Rat> y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

RatMat RatMat::hcat(const RatMat& b) const {
  if (rows_ != b.rows_) throw integrity_error("hcat row mismatch");
  RatMat c(rows_, cols_ + b.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j);
    for (int j = 0; j < b.cols_; ++j) c(i, cols_ + j) = b(i, j);
  }
  return c;
}

bool RatMat::is_integral() const {
  for (const Rat& v : e_)
    if (denominator(v) != 1) return false;
  return true;
}

IntMat RatMat::to_integer() const {
  IntMat m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Rat& v = (*this)(i, j);
      if (denominator(v) != 1) throw integrity_error("expected integral matrix entry, got " + v.str());
      m(i, j) = numerator(v);
    }
  return m;
}

RatMat RatMat::inverse() const {
  if (rows_ != cols_) throw integrity_error("inverse of non-square matrix");
  int n = rows_;
  RatMat a = *this;
  RatMat inv = RatMat::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) { p = i; break; }
    if (p < 0) throw integrity_error("singular matrix has no inverse");
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    Rat piv = a(k, k);
    for (int j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::vector<Rat> to_rational(const std::vector<Int>& v) {
  std::vector<Rat> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace rootobs
