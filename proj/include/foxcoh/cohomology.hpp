#pragma once

// H^0 and H^1 of a finitely presented group with coefficients in a Lie
// algebra twisted by Ad o rho, via Fox calculus:
//   Z^1 = { (u_1..u_n) : sum_i Ad rho(d_i R) u_i = 0 for every relator R }
//   B^1 = { (Ad rho(x_i) u - u)_i : u in g }
// The H^1 reported is the Zariski tangent dimension of the character variety
// at rho, not a certified dimension of the variety itself.

#include <optional>
#include <string>
#include <vector>

#include "foxcoh/exactla.hpp"
#include "foxcoh/lie.hpp"
#include "foxcoh/words.hpp"

namespace foxcoh {

struct H1Split {
  std::size_t u21 = 0;
  std::size_t m = 0;
};

struct CohomologyReport {
  Flavor flavor = Flavor::sp21;
  std::size_t basis_size = 0;
  std::size_t generators = 0;
  std::size_t relators = 0;
  std::size_t h0 = 0;
  std::size_t z1 = 0;
  std::size_t b1 = 0;
  std::size_t h1 = 0;
  std::size_t cocycle_rank = 0;
  /// Present for sp21 when every generator image is complex.
  std::optional<H1Split> split;
  /// dim of the centralizer of each generator image, in generator order.
  std::vector<std::size_t> centralizers;
  SmithForm abelianization;
};

/// Throws NotARepresentation unless every relator maps to the identity.
void verify_relators(const Representation& rho, const Presentation& p);

/// (n d) x d matrix stacking Ad(rho(x_i)) - I.
FMatrix coboundary_matrix(const Representation& rho, const LieBasis& basis);

/// (m d) x (n d) matrix with block (j, i) = Ad rho(d_i R_j). Verifies the
/// relators first.
FMatrix cocycle_matrix(const Representation& rho, const LieBasis& basis, const Presentation& p);

/// Dimension of the subspace fixed by every generator image.
std::size_t h0_dimension(const Representation& rho, const LieBasis& basis);

CohomologyReport h1_dimension(const Representation& rho, const LieBasis& basis, const Presentation& p);

}  // namespace foxcoh
