#pragma once

// Exact scalars: rationals, the real field F = Q(sqrt3, sqrt5) and the
// quaternion algebra over F.

#include <array>
#include <compare>
#include <string>

#include <gmpxx.h>

namespace foxcoh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element c0 + c1*sqrt3 + c2*sqrt5 + c3*sqrt15 of F, coordinates in Q.
///
/// Coordinates are canonical, so equality is coordinate-wise. F is a real
/// field: it is embedded in R with the positive square roots.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long value) : coords_{Rational(value), 0, 0, 0} {}  // NOLINT
  FieldElement(const Rational& value) : coords_{value, 0, 0, 0} { coords_[0].canonicalize(); }  // NOLINT
  FieldElement(Rational c0, Rational c1, Rational c2, Rational c3);

  static FieldElement sqrt3() { return {0, 1, 0, 0}; }
  static FieldElement sqrt5() { return {0, 0, 1, 0}; }
  static FieldElement sqrt15() { return {0, 0, 0, 1}; }

  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::array<Rational, 4>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.coords_ == b.coords_;
  }

  /// Multiplicative inverse; throws Error(DivisionByZero) on zero.
  FieldElement inverse() const;

  /// Literal in the entry grammar, e.g. "-1/2 + 3*sqrt3/4".
  std::string to_string() const;

 private:
  std::array<Rational, 4> coords_{0, 0, 0, 0};
};

/// Sign under the real embedding. Zero is decided from the coordinates;
/// otherwise rational enclosures of sqrt3, sqrt5, sqrt15 are tightened until
/// the enclosure of the value excludes zero.
int field_sign(const FieldElement& a);

inline FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement field_inv(const FieldElement& a) { return a.inverse(); }
inline FieldElement field_abs(const FieldElement& a) { return field_sign(a) < 0 ? -a : a; }

/// w + x*i + y*j + z*k with i^2 = j^2 = k^2 = -1, ij = k.
struct Quaternion {
  FieldElement w, x, y, z;

  Quaternion() = default;
  Quaternion(FieldElement real) : w(std::move(real)) {}  // NOLINT
  Quaternion(long real) : w(real) {}                     // NOLINT
  Quaternion(FieldElement w_, FieldElement x_, FieldElement y_, FieldElement z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quaternion unit_i() { return {0, 1, 0, 0}; }
  static Quaternion unit_j() { return {0, 0, 1, 0}; }
  static Quaternion unit_k() { return {0, 0, 0, 1}; }
  /// a + b*i
  static Quaternion complex(FieldElement re, FieldElement im) { return {std::move(re), std::move(im), 0, 0}; }

  bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
  /// Lies in the complex subfield span{1, i}.
  bool is_complex() const { return y.is_zero() && z.is_zero(); }
  /// Lies in span{j, k}.
  bool is_jk() const { return w.is_zero() && x.is_zero(); }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  /// q * conj(q), a non-negative element of F.
  FieldElement norm2() const { return w * w + x * x + y * y + z * z; }
  /// conj(q) / |q|^2; throws Error(DivisionByZero) on zero.
  Quaternion inverse() const;

  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator*(const FieldElement& s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
  friend bool operator==(const Quaternion& a, const Quaternion& b) = default;

  const FieldElement& component(std::size_t i) const;
  FieldElement& component(std::size_t i);

  std::string to_string() const;
};

inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }
inline Quaternion quat_inv(const Quaternion& q) { return q.inverse(); }

}  // namespace foxcoh
