#include <doctest.h>

#include "foxcoh/error.hpp"
#include "foxcoh/lie.hpp"
#include "test_support.hpp"

using namespace foxcoh;
using namespace foxcoh::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

// Centralizer dimension straight from the defining equations: X in sp(2,1)
// with g X = X g, in the 36 real unknowns. Independent of any basis or
// adjoint matrix.
std::size_t centralizer_oracle(const QuatMatrix& g, const QuatMatrix& j) {
  std::vector<FVector> columns;
  for (std::size_t e = 0; e < 9; ++e)
    for (std::size_t comp = 0; comp < 4; ++comp) {
      QuatMatrix u;
      u(e / 3, e % 3).component(comp) = 1;
      FVector column = (u.star() * j + j * u).realify();
      const FVector commute = (g * u - u * g).realify();
      column.insert(column.end(), commute.begin(), commute.end());
      columns.push_back(std::move(column));
    }
  return kernel_basis(FMatrix::from_columns(72, columns)).size();
}

}  // namespace

TEST_CASE("invariant form of rho0") {
  const std::vector<QuatMatrix> images{rho0_a(), rho0_b()};
  const HermitianForm form = derive_invariant_form(images);
  CHECK(form.matrix() == QuatMatrix::antidiag(1, 1, 1));
  for (const auto& g : images) CHECK(g.star() * form.matrix() * g == form.matrix());
}

TEST_CASE("invariant form of rhoW") {
  const std::vector<QuatMatrix> images{rhoW_a(), rhoW_b()};
  const HermitianForm form = derive_invariant_form(images);
  CHECK(hermitian_signature(form.matrix()) == Signature{2, 1});
  for (const auto& g : images) CHECK(form.preserved_by(g));
  // Recorded in the fixture notes.
  CHECK(form.matrix() == QuatMatrix::antidiag(1, 1, 1));
}

TEST_CASE("invariant form errors") {
  const std::vector<QuatMatrix> identity{QuatMatrix::identity()};
  CHECK(code_of([&] { derive_invariant_form(identity); }) == ErrorCode::AmbiguousForm);
  const std::vector<QuatMatrix> scalings{QuatMatrix::diag(2, 1, 1), QuatMatrix::diag(1, 2, 1), QuatMatrix::diag(1, 1, 2)};
  CHECK(code_of([&] { derive_invariant_form(scalings); }) == ErrorCode::NoInvariantForm);
  // SU(3)-type images only admit a definite form.
  const QuatMatrix cycle({Quaternion(0), 0, 1, 1, 0, 0, 0, 1, 0});
  const std::vector<QuatMatrix> compact{QuatMatrix::diag(omega(), 1, 1), cycle};
  CHECK(code_of([&] { derive_invariant_form(compact); }) == ErrorCode::NoInvariantForm);
  CHECK(code_of([] { HermitianForm(QuatMatrix::identity()); }) == ErrorCode::InvalidInput);
}

TEST_CASE("basis sizes and defining equations") {
  for (const HermitianForm& form : {antidiag_form(), diagonal_form()}) {
    for (Flavor f : {Flavor::sp21, Flavor::u21, Flavor::su21, Flavor::m}) {
      const LieBasis basis = lie_basis(form, f);
      CHECK(basis.size() == flavor_dimension(f));
      CHECK(rank(basis.coordinate_matrix()) == basis.size());
      for (const auto& x : basis.elements()) {
        CHECK((x.star() * form.matrix() + form.matrix() * x).is_zero());
        if (f == Flavor::u21 || f == Flavor::su21) CHECK(x.is_complex());
        if (f == Flavor::su21) CHECK((x(0, 0) + x(1, 1) + x(2, 2)).is_zero());
        if (f == Flavor::m)
          for (const auto& q : x.entries()) CHECK(q.is_jk());
      }
    }
    const LieBasis sp = lie_basis(form, Flavor::sp21);
    CHECK(sp.split() == 9);
    for (std::size_t k = 0; k < sp.size(); ++k) CHECK(sp.elements()[k].is_complex() == (k < 9));
  }
  CHECK(flavor_dimension(Flavor::sp21) == 21);
}

TEST_CASE("adjoint matrix basics") {
  const LieBasis sp = lie_basis(antidiag_form(), Flavor::sp21);
  CHECK(adjoint_matrix(QuatMatrix::identity(), sp) == FMatrix::identity(21));
  const QuatMatrix g = rho0_a();
  const QuatMatrix g_inv = sp.form().group_inverse(g);
  CHECK(g * g_inv == QuatMatrix::identity());
  CHECK(adjoint_matrix(g, sp) * adjoint_matrix(g_inv, sp) == FMatrix::identity(21));

  CHECK(code_of([&] { adjoint_matrix(QuatMatrix::diag(2, 1, 1), sp); }) == ErrorCode::NotInGroup);
  const LieBasis u = lie_basis(diagonal_form(), Flavor::u21);
  const QuatMatrix jjj = QuatMatrix::diag(Quaternion::unit_j(), Quaternion::unit_j(), Quaternion::unit_j());
  CHECK(code_of([&] { adjoint_matrix(jjj, u); }) == ErrorCode::SubspaceNotPreserved);
}

TEST_CASE("order-3 element diag(1, w, w)") {
  const HermitianForm form = diagonal_form();
  const LieBasis sp = lie_basis(form, Flavor::sp21);
  const QuatMatrix a = QuatMatrix::diag(1, omega(), omega());
  CHECK(a * a * a == QuatMatrix::identity());
  CHECK(centralizer_oracle(a, form.matrix()) == 7);
  CHECK(centralizer_dimension(a, sp) == 7);

  // 1 + Ad + Ad^2 vanishes off the fixed space: its kernel has dimension 21 - 7.
  const FMatrix ad = adjoint_matrix(a, sp);
  CHECK(kernel_basis(FMatrix::identity(21) + ad + ad * ad).size() == 14);
}

TEST_CASE("centralizer dimensions") {
  const HermitianForm form = diagonal_form();
  const LieBasis sp = lie_basis(form, Flavor::sp21);
  CHECK(centralizer_dimension(QuatMatrix::identity(), sp) == 21);
  const QuatMatrix jjj = QuatMatrix::diag(Quaternion::unit_j(), Quaternion::unit_j(), Quaternion::unit_j());
  CHECK(form.preserved_by(jjj));
  CHECK(centralizer_oracle(jjj, form.matrix()) == 9);
  CHECK(centralizer_dimension(jjj, sp) == 9);

  const LieBasis spa = lie_basis(antidiag_form(), Flavor::sp21);
  for (const auto& g : {rho0_a(), rho0_b(), rhoW_a(), rhoW_b()})
    CHECK(centralizer_dimension(g, spa) == centralizer_oracle(g, QuatMatrix::antidiag(1, 1, 1)));
}

TEST_CASE("word evaluation") {
  const Representation r0 = rho0(), rw = rhoW();
  CHECK(evaluate_word_matrix(FreeWord{}, r0) == QuatMatrix::identity());
  CHECK(evaluate_word_matrix(gamma8().relators[0], r0) == QuatMatrix::identity());
  CHECK(evaluate_word_matrix(parse_word("aaa", "ab"), rw) == QuatMatrix::identity());
  CHECK(evaluate_word_matrix(parse_word("bbb", "ab"), rw) == QuatMatrix::identity());
  CHECK(evaluate_word_matrix(gammaW().relators[0], rw) == QuatMatrix::identity());
  CHECK(evaluate_word_matrix(parse_word("aA", "ab"), r0) == QuatMatrix::identity());
  CHECK(evaluate_word_matrix(parse_word("A", "ab"), r0) * rho0_a() == QuatMatrix::identity());
}

TEST_CASE("group ring evaluation") {
  const Representation r0 = rho0();
  const LieBasis sp = lie_basis(r0.form, Flavor::sp21);
  CHECK(evaluate_ad(GroupRingElement{}, r0, sp).is_zero());
  CHECK(evaluate_ad(GroupRingElement::one(), r0, sp) == FMatrix::identity(21));
  const GroupRingElement u = GroupRingElement(parse_word("ab", "ab"), 2) - GroupRingElement(parse_word("B", "ab"));
  const FMatrix expected = FieldElement(2) * adjoint_matrix(rho0_a() * rho0_b(), sp) -
                           adjoint_matrix(r0.form.group_inverse(rho0_b()), sp);
  CHECK(evaluate_ad(u, r0, sp) == expected);
}

TEST_CASE("complex images preserve the u21 + m split") {
  const LieBasis sp = lie_basis(antidiag_form(), Flavor::sp21);
  for (const auto& g : {rho0_a(), rho0_b(), rhoW_a(), rhoW_b()}) {
    const FMatrix ad = adjoint_matrix(g, sp);
    for (std::size_t r = 0; r < 21; ++r)
      for (std::size_t c = 0; c < 21; ++c)
        if ((r < 9) != (c < 9)) CHECK(ad(r, c).is_zero());
  }
}

TEST_CASE("iI is fixed by complex images") {
  const LieBasis sp = lie_basis(antidiag_form(), Flavor::sp21);
  const Quaternion i = Quaternion::unit_i();
  const auto coords = sp.coordinates(QuatMatrix::diag(i, i, i));
  REQUIRE(coords);
  for (const auto& g : {rho0_a(), rho0_b(), rhoW_a(), rhoW_b()})
    CHECK(adjoint_matrix(g, sp) * *coords == *coords);
  CHECK_FALSE(lie_basis(antidiag_form(), Flavor::su21).coordinates(QuatMatrix::diag(i, i, i)));
}

TEST_CASE("permuted basis keeps or drops the split") {
  const LieBasis sp = lie_basis(antidiag_form(), Flavor::sp21);
  std::vector<std::size_t> swap_within(21);
  for (std::size_t k = 0; k < 21; ++k) swap_within[k] = k;
  std::swap(swap_within[0], swap_within[1]);
  CHECK(sp.permuted(swap_within).split() == 9);
  std::swap(swap_within[0], swap_within[20]);
  CHECK(sp.permuted(swap_within).split() == 0);
}
