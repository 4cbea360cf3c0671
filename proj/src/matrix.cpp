#include "foxcoh/matrix.hpp"

#include <cassert>

namespace foxcoh {

FMatrix FMatrix::identity(std::size_t n) {
  FMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FMatrix FMatrix::from_columns(std::size_t rows, const std::vector<FVector>& columns) {
  FMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    assert(columns[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

FVector FMatrix::column(std::size_t c) const {
  FVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

FMatrix FMatrix::transpose() const {
  FMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool FMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

FMatrix FMatrix::vstack(const FMatrix& top, const FMatrix& bottom) {
  assert(top.cols_ == bottom.cols_ || top.rows_ == 0);
  FMatrix m(top.rows_ + bottom.rows_, bottom.cols_);
  m.set_block(0, 0, top);
  m.set_block(top.rows_, 0, bottom);
  return m;
}

FMatrix FMatrix::hstack(const FMatrix& left, const FMatrix& right) {
  assert(left.rows_ == right.rows_);
  FMatrix m(left.rows_, left.cols_ + right.cols_);
  m.set_block(0, 0, left);
  m.set_block(0, left.cols_, right);
  return m;
}

void FMatrix::set_block(std::size_t row, std::size_t col, const FMatrix& block) {
  assert(row + block.rows_ <= rows_ && col + block.cols_ <= cols_);
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(row + r, col + c) = block(r, c);
}

FMatrix& FMatrix::operator+=(const FMatrix& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

FMatrix& FMatrix::operator-=(const FMatrix& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

FMatrix operator*(const FMatrix& a, const FMatrix& b) {
  assert(a.cols_ == b.rows_);
  FMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& s = a(r, k);
      if (s.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) m(r, c) += s * b(k, c);
      }
    }
  }
  return m;
}

FMatrix operator*(const FieldElement& s, FMatrix m) {
  for (auto& e : m.data_) e = s * e;
  return m;
}

FVector operator*(const FMatrix& m, const FVector& v) {
  assert(m.cols_ == v.size());
  FVector out(m.rows_);
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : IntMatrix(rows, cols) {
  assert(values.size() == rows * cols);
  std::size_t i = 0;
  for (long v : values) data_[i++] = v;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols_ == b.rows_);
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k)
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += a(r, k) * b(k, c);
  return m;
}

QuatMatrix QuatMatrix::diag(Quaternion a, Quaternion b, Quaternion c) {
  QuatMatrix m;
  m(0, 0) = std::move(a);
  m(1, 1) = std::move(b);
  m(2, 2) = std::move(c);
  return m;
}

QuatMatrix QuatMatrix::antidiag(Quaternion a, Quaternion b, Quaternion c) {
  QuatMatrix m;
  m(0, 2) = std::move(a);
  m(1, 1) = std::move(b);
  m(2, 0) = std::move(c);
  return m;
}

QuatMatrix QuatMatrix::star() const {
  QuatMatrix m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(c, r) = (*this)(r, c).conj();
  return m;
}

bool QuatMatrix::is_complex() const {
  for (const auto& q : entries_)
    if (!q.is_complex()) return false;
  return true;
}

bool QuatMatrix::is_zero() const {
  for (const auto& q : entries_)
    if (!q.is_zero()) return false;
  return true;
}

FVector QuatMatrix::realify() const {
  FVector v;
  v.reserve(36);
  for (const auto& q : entries_) {
    v.push_back(q.w);
    v.push_back(q.x);
    v.push_back(q.y);
    v.push_back(q.z);
  }
  return v;
}

QuatMatrix QuatMatrix::from_real(const FVector& coords, std::size_t offset) {
  assert(coords.size() >= offset + 36);
  QuatMatrix m;
  for (std::size_t e = 0; e < 9; ++e) {
    const std::size_t base = offset + 4 * e;
    m.entries_[e] = Quaternion(coords[base], coords[base + 1], coords[base + 2], coords[base + 3]);
  }
  return m;
}

QuatMatrix& QuatMatrix::operator+=(const QuatMatrix& o) {
  for (std::size_t i = 0; i < 9; ++i) entries_[i] += o.entries_[i];
  return *this;
}

QuatMatrix& QuatMatrix::operator-=(const QuatMatrix& o) {
  for (std::size_t i = 0; i < 9; ++i) entries_[i] -= o.entries_[i];
  return *this;
}

QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b) {
  QuatMatrix m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t k = 0; k < 3; ++k) {
        if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
        m(r, c) += a(r, k) * b(k, c);
      }
  return m;
}

QuatMatrix operator*(const FieldElement& s, QuatMatrix m) {
  for (auto& q : m.entries_) q = s * q;
  return m;
}

std::string QuatMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < 3; ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < 3; ++c) {
      if (c > 0) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace foxcoh
