#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "foxcoh/field.hpp"

namespace foxcoh {

using FVector = std::vector<FieldElement>;

/// Dense row-major matrix over F.
class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static FMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static FMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, all of length `rows`.
  static FMatrix from_columns(std::size_t rows, const std::vector<FVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FVector column(std::size_t c) const;
  FMatrix transpose() const;
  bool is_zero() const;

  /// Rows of `top` followed by rows of `bottom`; column counts must agree.
  static FMatrix vstack(const FMatrix& top, const FMatrix& bottom);
  /// Columns of `left` followed by columns of `right`; row counts must agree.
  static FMatrix hstack(const FMatrix& left, const FMatrix& right);
  /// Copies `block` into this matrix with its top-left corner at (row, col).
  void set_block(std::size_t row, std::size_t col, const FMatrix& block);

  FMatrix& operator+=(const FMatrix& o);
  FMatrix& operator-=(const FMatrix& o);
  friend FMatrix operator+(FMatrix a, const FMatrix& b) { return a += b; }
  friend FMatrix operator-(FMatrix a, const FMatrix& b) { return a -= b; }
  friend FMatrix operator*(const FMatrix& a, const FMatrix& b);
  friend FMatrix operator*(const FieldElement& s, FMatrix m);
  friend FVector operator*(const FMatrix& m, const FVector& v);
  friend bool operator==(const FMatrix& a, const FMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// 3x3 matrix of quaternions acting on column vectors.
class QuatMatrix {
 public:
  QuatMatrix() = default;
  explicit QuatMatrix(std::array<Quaternion, 9> entries) : entries_(std::move(entries)) {}

  static QuatMatrix identity() { return diag(1, 1, 1); }
  static QuatMatrix diag(Quaternion a, Quaternion b, Quaternion c);
  static QuatMatrix antidiag(Quaternion a, Quaternion b, Quaternion c);

  Quaternion& operator()(std::size_t r, std::size_t c) { return entries_[r * 3 + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return entries_[r * 3 + c]; }
  const std::array<Quaternion, 9>& entries() const { return entries_; }

  /// Conjugate transpose.
  QuatMatrix star() const;
  bool is_complex() const;
  bool is_zero() const;

  /// Real coordinates (w, x, y, z per entry, row-major): 36 values.
  FVector realify() const;
  static QuatMatrix from_real(const FVector& coords, std::size_t offset = 0);

  QuatMatrix& operator+=(const QuatMatrix& o);
  QuatMatrix& operator-=(const QuatMatrix& o);
  friend QuatMatrix operator+(QuatMatrix a, const QuatMatrix& b) { return a += b; }
  friend QuatMatrix operator-(QuatMatrix a, const QuatMatrix& b) { return a -= b; }
  friend QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b);
  friend QuatMatrix operator*(const FieldElement& s, QuatMatrix m);
  friend bool operator==(const QuatMatrix& a, const QuatMatrix& b) = default;

  std::string to_string() const;

 private:
  std::array<Quaternion, 9> entries_{};
};

}  // namespace foxcoh
