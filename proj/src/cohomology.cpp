#include "foxcoh/cohomology.hpp"

#include <stdexcept>

#include "foxcoh/error.hpp"

namespace foxcoh {

void verify_relators(const Representation& rho, const Presentation& p) {
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    if (evaluate_word_matrix(p.relators[j], rho) != QuatMatrix::identity())
      throw Error(ErrorCode::NotARepresentation,
                  "relator " + std::to_string(j + 1) + " (" + p.relators[j].to_string(p.generators) +
                      ") does not map to the identity");
  }
}

namespace {

FMatrix coboundary_from(AdjointEvaluator& ad, std::size_t generators) {
  const std::size_t d = ad.basis().size();
  FMatrix result(generators * d, d);
  for (std::size_t i = 0; i < generators; ++i)
    result.set_block(i * d, 0, ad.word(FreeWord::generator(static_cast<std::uint8_t>(i))) - FMatrix::identity(d));
  return result;
}

FMatrix cocycle_from(AdjointEvaluator& ad, const Presentation& p) {
  const std::size_t d = ad.basis().size();
  const std::size_t n = p.generator_count();
  FMatrix result(p.relators.size() * d, n * d);
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      result.set_block(j * d, i * d, ad.evaluate(fox_derivative(static_cast<std::uint8_t>(i), p.relators[j])));
  return result;
}

// Intersects the fixed spaces one generator at a time.
std::size_t fixed_dimension(AdjointEvaluator& ad, std::size_t generators) {
  const std::size_t d = ad.basis().size();
  FMatrix fixed = FMatrix::identity(d);  // columns span the current fixed space
  for (std::size_t i = 0; i < generators && fixed.cols() > 0; ++i) {
    const FMatrix& g = ad.word(FreeWord::generator(static_cast<std::uint8_t>(i)));
    const auto kernel = kernel_basis((g - FMatrix::identity(d)) * fixed);
    std::vector<FVector> next;
    for (const auto& v : kernel) next.push_back(fixed * v);
    fixed = next.empty() ? FMatrix(d, 0) : FMatrix::from_columns(d, next);
  }
  return fixed.cols();
}

void check_generators(const Representation& rho, const Presentation& p) {
  if (rho.images.size() != p.generator_count())
    throw Error(ErrorCode::InvalidInput, "representation and presentation disagree on the number of generators");
}

}  // namespace

FMatrix coboundary_matrix(const Representation& rho, const LieBasis& basis) {
  AdjointEvaluator ad(rho, basis);
  return coboundary_from(ad, rho.images.size());
}

FMatrix cocycle_matrix(const Representation& rho, const LieBasis& basis, const Presentation& p) {
  check_generators(rho, p);
  verify_relators(rho, p);
  AdjointEvaluator ad(rho, basis);
  return cocycle_from(ad, p);
}

std::size_t h0_dimension(const Representation& rho, const LieBasis& basis) {
  AdjointEvaluator ad(rho, basis);
  return fixed_dimension(ad, rho.images.size());
}

namespace {

CohomologyReport compute(const Representation& rho, const LieBasis& basis, const Presentation& p) {
  AdjointEvaluator ad(rho, basis);
  CohomologyReport report;
  report.flavor = basis.flavor();
  report.basis_size = basis.size();
  report.generators = p.generator_count();
  report.relators = p.relators.size();

  const std::size_t d = basis.size();
  report.h0 = fixed_dimension(ad, report.generators);
  report.b1 = d - report.h0;
  if (rank(coboundary_from(ad, report.generators)) != report.b1)
    throw std::logic_error("dim B^1 from H^0 disagrees with the coboundary rank");

  report.cocycle_rank = rank(cocycle_from(ad, p));
  report.z1 = report.generators * d - report.cocycle_rank;
  if (report.z1 < report.b1) throw std::logic_error("B^1 is not contained in Z^1");
  report.h1 = report.z1 - report.b1;

  for (std::size_t i = 0; i < report.generators; ++i) {
    const FMatrix& g = ad.word(FreeWord::generator(static_cast<std::uint8_t>(i)));
    report.centralizers.push_back(d - rank(g - FMatrix::identity(d)));
  }
  report.abelianization = smith_normal_form(abelianization_matrix(p));
  return report;
}

}  // namespace

CohomologyReport h1_dimension(const Representation& rho, const LieBasis& basis, const Presentation& p) {
  check_generators(rho, p);
  verify_relators(rho, p);
  CohomologyReport report = compute(rho, basis, p);

  if (basis.flavor() == Flavor::sp21 && rho.complex_entries()) {
    const CohomologyReport u = compute(rho, lie_basis(basis.form(), Flavor::u21), p);
    const CohomologyReport m = compute(rho, lie_basis(basis.form(), Flavor::m), p);
    if (u.h1 + m.h1 != report.h1) throw std::logic_error("H^1 split does not add up");
    report.split = H1Split{u.h1, m.h1};
  }
  return report;
}

}  // namespace foxcoh
