#pragma once

// Exact dense linear algebra over F and over Z.
//
// Ranks computed over F are ranks over R: F is a subfield of R and rank is
// invariant under field extension, so every dimension reported here is a
// real dimension.

#include <optional>
#include <vector>

#include "foxcoh/matrix.hpp"

namespace foxcoh {

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  FMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(FMatrix m);

std::size_t rank(const FMatrix& m);

/// Basis of the right null space, one vector per non-pivot column, in
/// increasing column order. Each vector has a 1 at its free column.
std::vector<FVector> kernel_basis(const FMatrix& m);

/// Some solution of m * x = b, or nullopt if the system is inconsistent.
std::optional<FVector> solve(const FMatrix& m, const FVector& b);

/// Solves m * X = rhs for all columns at once (one elimination).
std::optional<FMatrix> solve(const FMatrix& m, const FMatrix& rhs);

struct SmithForm {
  /// Invariant factors greater than 1, each dividing the next.
  std::vector<Integer> factors;
  /// Rank of the free part of the cokernel Z^rows / image.
  std::size_t free_rank = 0;
  /// Number of nonzero diagonal entries.
  std::size_t rank = 0;
};

SmithForm smith_normal_form(IntMatrix m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a complex Hermitian 3x3 matrix, from Descartes' rule applied to
/// the (real-rooted) characteristic polynomial. Throws NonHermitian when J is
/// not complex Hermitian and DegenerateForm when det J = 0.
Signature hermitian_signature(const QuatMatrix& j);

}  // namespace foxcoh
