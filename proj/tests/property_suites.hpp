#pragma once

// Randomized exact property suites shared by the doctest runner and the
// acceptance binary. Each suite returns how many cases ran and failed.

#include <functional>
#include <sstream>
#include <string>

#include "foxcoh/cohomology.hpp"
#include "foxcoh/exactla.hpp"
#include "test_support.hpp"

namespace foxcoh::testing {

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

inline void record(SuiteResult& r, bool ok, const std::function<std::string()>& describe) {
  ++r.cases;
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = describe();
}

struct FixtureCase {
  const char* name;
  Representation rho;
  Presentation presentation;
};

inline std::vector<FixtureCase> fixture_cases() {
  return {{"gamma8_rho0", rho0(), gamma8()}, {"gammaW_rhoW", rhoW(), gammaW()}, {"z3z3_rhoW", rhoW(), z3z3()}};
}

inline constexpr Flavor kFlavors[] = {Flavor::sp21, Flavor::u21, Flavor::su21, Flavor::m};

/// d(uv) = d(u) + u d(v) for random words u, v with |uv| <= 64.
inline SuiteResult fox_product_rule(std::uint32_t seed, std::size_t cases) {
  Random rng(seed);
  SuiteResult r;
  const std::string names = "abc";
  for (std::size_t n = 0; n < cases; ++n) {
    const auto generators = static_cast<std::uint8_t>(rng.integer(1, 3));
    const FreeWord u = rng.word(32, generators);
    const FreeWord v = rng.word(32, generators);
    const auto i = static_cast<std::uint8_t>(rng.integer(0, generators - 1));
    const GroupRingElement lhs = fox_derivative(i, u * v);
    const GroupRingElement rhs = fox_derivative(i, u) + GroupRingElement(u) * fox_derivative(i, v);
    record(r, lhs == rhs, [&] { return "product rule fails for u=" + u.to_string(names) + " v=" + v.to_string(names); });
  }
  return r;
}

/// w - 1 = sum_i d_i(w) (x_i - 1) for random words of length <= 64.
inline SuiteResult fox_mean_value(std::uint32_t seed, std::size_t cases) {
  Random rng(seed);
  SuiteResult r;
  const std::string names = "abc";
  for (std::size_t n = 0; n < cases; ++n) {
    const auto generators = static_cast<std::uint8_t>(rng.integer(1, 3));
    const FreeWord w = rng.word(64, generators);
    GroupRingElement sum;
    for (std::uint8_t i = 0; i < generators; ++i)
      sum += fox_derivative(i, w) * (GroupRingElement(FreeWord::generator(i)) - GroupRingElement::one());
    record(r, sum == GroupRingElement(w) - GroupRingElement::one(),
           [&] { return "mean value theorem fails for w=" + w.to_string(names); });
  }
  return r;
}

/// Ad(gh) = Ad(g) Ad(h) for random words g, h of length <= 8.
inline SuiteResult adjoint_homomorphism(std::uint32_t seed, std::size_t cases) {
  Random rng(seed);
  SuiteResult r;
  const Representation reps[] = {rho0(), rhoW()};
  std::vector<LieBasis> bases;
  for (Flavor f : kFlavors) bases.push_back(lie_basis(antidiag_form(), f));
  for (std::size_t n = 0; n < cases; ++n) {
    const Representation& rho = reps[rng.integer(0, 1)];
    const LieBasis& basis = bases[static_cast<std::size_t>(rng.integer(0, 3))];
    const FreeWord g = rng.word(8, 2);
    const FreeWord h = rng.word(8, 2);
    const FMatrix lhs = adjoint_matrix(evaluate_word_matrix(g * h, rho), basis);
    const FMatrix rhs =
        adjoint_matrix(evaluate_word_matrix(g, rho), basis) * adjoint_matrix(evaluate_word_matrix(h, rho), basis);
    record(r, lhs == rhs, [&] {
      return "Ad(gh) != Ad(g)Ad(h) for g=" + g.to_string("ab") + " h=" + h.to_string("ab") + " on " +
             std::string(flavor_name(basis.flavor()));
    });
  }
  return r;
}

/// Positive scalar used to rescale J: a small rational or sqrt3 times one.
inline FieldElement random_scale(Random& rng) {
  const FieldElement q(Rational(rng.integer(1, 7), rng.integer(1, 7)));
  return rng.coin() ? q : q * FieldElement::sqrt3();
}

inline Representation rescaled(const Representation& rho, const FieldElement& s) {
  return Representation{HermitianForm(s * rho.form.matrix()), rho.generators, rho.images, rho.claimed_zariski_dense};
}

/// cocycle_matrix * coboundary_matrix = 0 for every fixture and flavor, under
/// random basis permutations and J rescalings.
inline SuiteResult cocycle_coboundary(std::uint32_t seed, std::size_t cases) {
  Random rng(seed);
  SuiteResult r;
  const std::vector<FixtureCase> fixtures = fixture_cases();
  for (std::size_t n = 0; n < cases; ++n) {
    const FixtureCase& fx = fixtures[n % fixtures.size()];
    const Flavor flavor = kFlavors[(n / fixtures.size()) % 4];
    const Representation rho = rescaled(fx.rho, random_scale(rng));
    const LieBasis base = lie_basis(rho.form, flavor);
    const LieBasis basis = base.permuted(rng.permutation(base.size()));
    const FMatrix product = cocycle_matrix(rho, basis, fx.presentation) * coboundary_matrix(rho, basis);
    record(r, product.is_zero(), [&] {
      return std::string("Z * B != 0 for ") + fx.name + " / " + std::string(flavor_name(flavor));
    });
  }
  return r;
}

/// dim H^1 is unchanged by permuting the basis and rescaling J.
inline SuiteResult h1_invariance(std::uint32_t seed, std::size_t cases) {
  Random rng(seed);
  SuiteResult r;
  const std::vector<FixtureCase> fixtures = fixture_cases();
  std::vector<std::vector<std::size_t>> reference;
  for (const auto& fx : fixtures) {
    std::vector<std::size_t> dims;
    for (Flavor f : kFlavors) dims.push_back(h1_dimension(fx.rho, lie_basis(fx.rho.form, f), fx.presentation).h1);
    reference.push_back(dims);
  }
  for (std::size_t n = 0; n < cases; ++n) {
    const std::size_t fi = n % fixtures.size();
    const std::size_t flavor_index = (n / fixtures.size()) % 4;
    const FixtureCase& fx = fixtures[fi];
    const FieldElement scale = random_scale(rng);
    const Representation rho = rescaled(fx.rho, scale);
    const LieBasis base = lie_basis(rho.form, kFlavors[flavor_index]);
    const LieBasis basis = base.permuted(rng.permutation(base.size()));
    const std::size_t h1 = h1_dimension(rho, basis, fx.presentation).h1;
    record(r, h1 == reference[fi][flavor_index], [&] {
      std::ostringstream out;
      out << "H1 changed for " << fx.name << " / " << flavor_name(kFlavors[flavor_index]) << " with J scaled by "
          << scale.to_string() << ": " << h1 << " != " << reference[fi][flavor_index];
      return out.str();
    });
  }
  return r;
}

}  // namespace foxcoh::testing
