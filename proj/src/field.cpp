#include "foxcoh/field.hpp"

#include <utility>

#include "foxcoh/error.hpp"

namespace foxcoh {

FieldElement::FieldElement(Rational c0, Rational c1, Rational c2, Rational c3)
    : coords_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  for (auto& c : coords_) c.canonicalize();
}

bool FieldElement::is_zero() const {
  return sgn(coords_[0]) == 0 && sgn(coords_[1]) == 0 && sgn(coords_[2]) == 0 &&
         sgn(coords_[3]) == 0;
}

bool FieldElement::is_rational() const {
  return sgn(coords_[1]) == 0 && sgn(coords_[2]) == 0 && sgn(coords_[3]) == 0;
}

FieldElement FieldElement::operator-() const {
  FieldElement r;
  for (std::size_t i = 0; i < 4; ++i) r.coords_[i] = -coords_[i];
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  for (std::size_t i = 0; i < 4; ++i) coords_[i] += other.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  for (std::size_t i = 0; i < 4; ++i) coords_[i] -= other.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  *this = *this * other;
  return *this;
}

// sqrt3^2 = 3, sqrt5^2 = 5, sqrt3*sqrt5 = sqrt15, sqrt15*sqrt3 = 3 sqrt5,
// sqrt15*sqrt5 = 5 sqrt3, sqrt15^2 = 15.
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational()) {
    FieldElement r;
    for (std::size_t i = 0; i < 4; ++i) r.coords_[i] = a.coords_[0] * b.coords_[i];
    return r;
  }
  if (b.is_rational()) {
    FieldElement r;
    for (std::size_t i = 0; i < 4; ++i) r.coords_[i] = a.coords_[i] * b.coords_[0];
    return r;
  }
  const auto& [a0, a1, a2, a3] = a.coords_;
  const auto& [b0, b1, b2, b3] = b.coords_;
  FieldElement r;
  r.coords_[0] = a0 * b0 + 3 * (a1 * b1) + 5 * (a2 * b2) + 15 * (a3 * b3);
  r.coords_[1] = a0 * b1 + a1 * b0 + 5 * (a2 * b3 + a3 * b2);
  r.coords_[2] = a0 * b2 + a2 * b0 + 3 * (a1 * b3 + a3 * b1);
  r.coords_[3] = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
  return r;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(sqrt3, sqrt5)");
  if (is_rational()) return FieldElement(1 / coords_[0]);
  // a * conj3(a) lies in Q(sqrt5); its norm to Q is nonzero.
  FieldElement conj3(coords_[0], -coords_[1], coords_[2], -coords_[3]);
  FieldElement n = *this * conj3;
  FieldElement conj5(n[0], n[1], -n[2], -n[3]);
  Rational norm = n[0] * n[0] - 5 * n[2] * n[2];
  FieldElement r = conj3 * conj5;
  for (auto& c : r.coords_) c /= norm;
  return r;
}

namespace {

const char* const kRadicals[4] = {"", "sqrt3", "sqrt5", "sqrt15"};

// |c| * radical * unit, written in the entry grammar without a sign.
std::string magnitude_term(const Rational& c, const char* radical, const char* unit) {
  Integer num = abs(c.get_num());
  const Integer& den = c.get_den();
  std::string out;
  auto append = [&out](const std::string& factor) {
    if (!out.empty()) out += '*';
    out += factor;
  };
  if (num != 1 || (*radical == '\0' && *unit == '\0')) append(num.get_str());
  if (*radical != '\0') append(radical);
  if (*unit != '\0') append(unit);
  if (den != 1) out += "/" + den.get_str();
  return out;
}

void append_signed(std::string& out, bool negative, const std::string& term) {
  if (out.empty()) {
    out = negative ? "-" + term : term;
  } else {
    out += negative ? " - " : " + ";
    out += term;
  }
}

}  // namespace

std::string FieldElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(coords_[i]) == 0) continue;
    append_signed(out, sgn(coords_[i]) < 0, magnitude_term(coords_[i], kRadicals[i], ""));
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Interval {
  Rational lo, hi;
};

// Enclosure of sqrt(n) with width 2^-bits.
Interval sqrt_enclosure(unsigned long n, unsigned long bits) {
  Integer scaled = n;
  scaled <<= 2 * bits;
  Integer root = sqrt(scaled);
  Integer denom = 1;
  denom <<= bits;
  return {Rational(root, denom), Rational(root + 1, denom)};
}

void accumulate(Interval& sum, const Rational& c, const Interval& x) {
  if (sgn(c) >= 0) {
    sum.lo += c * x.lo;
    sum.hi += c * x.hi;
  } else {
    sum.lo += c * x.hi;
    sum.hi += c * x.lo;
  }
}

}  // namespace

int field_sign(const FieldElement& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return sgn(a[0]);
  for (unsigned long bits = 16;; bits *= 2) {
    Interval sum{a[0], a[0]};
    accumulate(sum, a[1], sqrt_enclosure(3, bits));
    accumulate(sum, a[2], sqrt_enclosure(5, bits));
    accumulate(sum, a[3], sqrt_enclosure(15, bits));
    if (sgn(sum.lo) > 0) return 1;
    if (sgn(sum.hi) < 0) return -1;
  }
}

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero quaternion");
  return norm2().inverse() * conj();
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  w += o.w;
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  w -= o.w;
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  if (p.is_complex() && q.is_complex()) {
    return {p.w * q.w - p.x * q.x, p.w * q.x + p.x * q.w, 0, 0};
  }
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

const FieldElement& Quaternion::component(std::size_t i) const {
  switch (i) {
    case 0: return w;
    case 1: return x;
    case 2: return y;
    default: return z;
  }
}

FieldElement& Quaternion::component(std::size_t i) {
  return const_cast<FieldElement&>(std::as_const(*this).component(i));
}

std::string Quaternion::to_string() const {
  static const char* const units[4] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t u = 0; u < 4; ++u) {
    const FieldElement& c = component(u);
    if (c.is_zero()) continue;
    std::size_t nonzero = 0, index = 0;
    for (std::size_t r = 0; r < 4; ++r) {
      if (sgn(c[r]) != 0) {
        ++nonzero;
        index = r;
      }
    }
    if (u == 0) {
      out = c.to_string();
    } else if (nonzero == 1) {
      append_signed(out, sgn(c[index]) < 0, magnitude_term(c[index], kRadicals[index], units[u]));
    } else {
      append_signed(out, false, "(" + c.to_string() + ")*" + units[u]);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace foxcoh
