#pragma once

// Invariant Hermitian forms, real bases of sp(2,1) and its subspaces, and the
// adjoint action of Sp(2,1) in those bases.
//
// sp(2,1) = { X in M_3(H) : X* J + J X = 0 } for a complex Hermitian J of
// signature (2,1). Writing X = A + B j with A, B complex, the condition splits
// into A* J + J A = 0 (the u(2,1) part, dimension 9) and J B symmetric (the
// complement m = S^2 C^3, dimension 12). Conjugation by a complex matrix
// preserves both parts.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foxcoh/exactla.hpp"
#include "foxcoh/matrix.hpp"
#include "foxcoh/words.hpp"

namespace foxcoh {

enum class Flavor { sp21, u21, su21, m };

std::string_view flavor_name(Flavor flavor);
std::optional<Flavor> parse_flavor(std::string_view name);
/// 21, 9, 8, 12.
std::size_t flavor_dimension(Flavor flavor);

/// Complex Hermitian 3x3 matrix of signature (2,1).
class HermitianForm {
 public:
  /// Throws NonHermitian / DegenerateForm, or InvalidInput for a wrong signature.
  explicit HermitianForm(QuatMatrix j);

  const QuatMatrix& matrix() const { return j_; }
  const QuatMatrix& inverse() const { return j_inverse_; }

  /// g* J g == J exactly.
  bool preserved_by(const QuatMatrix& g) const;
  /// J^-1 g* J, the inverse of any g preserving the form.
  QuatMatrix group_inverse(const QuatMatrix& g) const;

 private:
  QuatMatrix j_;
  QuatMatrix j_inverse_;
};

/// Solves g* J g = J, J* = J over the complex Hermitian matrices for all given
/// complex matrices. The solution space must be one-dimensional; the result is
/// scaled so that its first nonzero real coordinate has absolute value 1 and
/// then negated if needed to have signature (2,1).
/// Throws NoInvariantForm (no nonzero or no indefinite solution) or
/// AmbiguousForm (solution space of dimension >= 2).
HermitianForm derive_invariant_form(std::span<const QuatMatrix> matrices);

struct Representation {
  HermitianForm form;
  /// Generator names, aligned with `images`.
  std::string generators;
  std::vector<QuatMatrix> images;
  /// Metadata only; never certified.
  bool claimed_zariski_dense = false;

  bool complex_entries() const;
  const QuatMatrix& image(std::uint8_t generator) const { return images.at(generator); }
};

/// Ordered real basis of a Lie algebra flavor. For sp21 the first `split`
/// elements span u(2,1) and the remaining ones span m.
class LieBasis {
 public:
  LieBasis(Flavor flavor, HermitianForm form, std::vector<QuatMatrix> elements, std::size_t split);

  Flavor flavor() const { return flavor_; }
  const HermitianForm& form() const { return form_; }
  const std::vector<QuatMatrix>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t split() const { return split_; }
  /// 36 x d matrix whose columns are the realified elements.
  const FMatrix& coordinate_matrix() const { return coordinate_matrix_; }

  /// Coordinates of X in this basis, or nullopt if X is not in the span.
  std::optional<FVector> coordinates(const QuatMatrix& x) const;
  QuatMatrix element(const FVector& coords) const;

  /// Same elements reordered: new element k is old element order[k].
  /// The split is dropped unless the order keeps both blocks in place.
  LieBasis permuted(std::span<const std::size_t> order) const;

 private:
  Flavor flavor_;
  HermitianForm form_;
  std::vector<QuatMatrix> elements_;
  std::size_t split_;
  FMatrix coordinate_matrix_;
};

LieBasis lie_basis(const HermitianForm& form, Flavor flavor);

/// d x d matrix whose column i holds the coordinates of g X_i g^-1.
/// Throws NotInGroup if g* J g != J and SubspaceNotPreserved if the
/// conjugates leave the span (for instance a non-complex g on u21).
FMatrix adjoint_matrix(const QuatMatrix& g, const LieBasis& basis);

/// Product of the images of the letters of w, inverses via J^-1 g* J.
QuatMatrix evaluate_word_matrix(const FreeWord& w, const Representation& rho);

/// Evaluates group-ring elements under Ad o rho, caching the adjoint matrix of
/// every word prefix it meets. Words are evaluated as left-to-right products
/// of generator adjoint matrices.
class AdjointEvaluator {
 public:
  AdjointEvaluator(const Representation& rho, const LieBasis& basis);

  const FMatrix& word(const FreeWord& w);
  FMatrix evaluate(const GroupRingElement& u);
  const LieBasis& basis() const { return basis_; }

 private:
  const Representation& rho_;
  const LieBasis& basis_;
  std::map<FreeWord, FMatrix> cache_;
};

FMatrix evaluate_ad(const GroupRingElement& u, const Representation& rho, const LieBasis& basis);

/// dim ker(Ad(g) - I): the dimension of the centralizer of g.
std::size_t centralizer_dimension(const QuatMatrix& g, const LieBasis& basis);

/// X Y - Y X.
QuatMatrix bracket(const QuatMatrix& x, const QuatMatrix& y);

}  // namespace foxcoh
