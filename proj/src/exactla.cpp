#include "foxcoh/exactla.hpp"

#include <utility>

#include "foxcoh/error.hpp"

namespace foxcoh {

Echelon row_reduce(FMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));

    const FieldElement scale = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) = m(row, c) * scale;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElement factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const FMatrix& m) {
  // Forward elimination only.
  FMatrix a = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    const FieldElement inv = a(row, col).inverse();
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      if (a(r, col).is_zero()) continue;
      const FieldElement factor = a(r, col) * inv;
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
    }
    ++row;
  }
  return row;
}

std::vector<FVector> kernel_basis(const FMatrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<FVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FMatrix> solve(const FMatrix& m, const FMatrix& rhs) {
  const Echelon e = row_reduce(FMatrix::hstack(m, rhs));
  if (!e.pivots.empty() && e.pivots.back() >= m.cols()) return std::nullopt;
  FMatrix x(m.cols(), rhs.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(e.pivots[r], c) = e.reduced(r, m.cols() + c);
  return x;
}

std::optional<FVector> solve(const FMatrix& m, const FVector& b) {
  auto x = solve(m, FMatrix::from_columns(b.size(), {b}));
  if (!x) return std::nullopt;
  return x->column(0);
}

namespace {

bool abs_less(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

// Position of the nonzero entry of smallest magnitude in the trailing
// submatrix starting at (t, t), or nullopt if it is zero.
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a,
                                                                  std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (sgn(a(r, c)) == 0) continue;
      if (!best || abs_less(a(r, c), a(best->first, best->second))) best = {{r, c}};
    }
  return best;
}

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    auto start = smallest_entry(a, t);
    if (!start) break;
    swap_rows(a, t, start->first);
    swap_cols(a, t, start->second);

    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (sgn(a(r, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t c = t; c < a.cols(); ++c) a(r, c) -= q * a(t, c);
        if (sgn(a(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (sgn(a(t, c)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t r = t; r < a.rows(); ++r) a(r, c) -= q * a(r, t);
        if (sgn(a(t, c)) != 0) clean = false;
      }
      if (clean) {
        // Enforce divisibility of the trailing block by the pivot.
        std::optional<std::size_t> offending;
        for (std::size_t r = t + 1; r < a.rows() && !offending; ++r)
          for (std::size_t c = t + 1; c < a.cols(); ++c)
            if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
              offending = r;
              break;
            }
        if (!offending) break;
        for (std::size_t c = t; c < a.cols(); ++c) a(t, c) += a(*offending, c);
        continue;
      }
      // Bring the smallest remainder of row/column t into the pivot.
      std::size_t br = t, bc = t;
      for (std::size_t r = t + 1; r < a.rows(); ++r)
        if (sgn(a(r, t)) != 0 && abs_less(a(r, t), a(br, bc))) {
          br = r;
          bc = t;
        }
      for (std::size_t c = t + 1; c < a.cols(); ++c)
        if (sgn(a(t, c)) != 0 && abs_less(a(t, c), a(br, bc))) {
          br = t;
          bc = c;
        }
      swap_rows(a, t, br);
      swap_cols(a, t, bc);
    }
  }

  SmithForm form;
  form.rank = t;
  form.free_rank = a.rows() - t;
  for (std::size_t i = 0; i < t; ++i) {
    Integer d = abs(a(i, i));
    if (d != 1) form.factors.push_back(d);
  }
  return form;
}

namespace {

int sign_changes(const std::vector<FieldElement>& coefficients) {
  int changes = 0, last = 0;
  for (const auto& c : coefficients) {
    const int s = field_sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Signature hermitian_signature(const QuatMatrix& j) {
  if (!j.is_complex()) throw Error(ErrorCode::NonHermitian, "form must have complex entries");
  if (j.star() != j) throw Error(ErrorCode::NonHermitian, "form is not Hermitian");

  // Entries commute: complex arithmetic inside the quaternions.
  auto e = [&j](std::size_t r, std::size_t c) -> const Quaternion& { return j(r, c); };
  const Quaternion det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
                         e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
  if (det.is_zero()) throw Error(ErrorCode::DegenerateForm, "form is degenerate (det = 0)");

  const FieldElement trace = e(0, 0).w + e(1, 1).w + e(2, 2).w;
  FieldElement minors;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) minors += e(a, a).w * e(b, b).w - e(a, b).norm2();

  // p(t) = t^3 - trace t^2 + minors t - det and p(-t) up to sign.
  const int positive = sign_changes({1, -trace, minors, -det.w});
  const int negative = sign_changes({-1, -trace, -minors, -det.w});
  return {static_cast<std::size_t>(positive), static_cast<std::size_t>(negative)};
}

}  // namespace foxcoh
