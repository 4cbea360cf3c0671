// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "foxcoh/cli.hpp"
#include "foxcoh/exactla.hpp"
#include "property_suites.hpp"

using namespace foxcoh;
using namespace foxcoh::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::size_t h1(const Representation& rho, Flavor f, const Presentation& p) {
  return h1_dimension(rho, lie_basis(rho.form, f), p).h1;
}

std::size_t spectral_h1(const Representation& rho, const LieBasis& basis) {
  std::size_t z1 = 0;
  for (const auto& g : rho.images)
    z1 += rank(adjoint_matrix(g, basis) - FMatrix::identity(basis.size()));
  return z1 - (basis.size() - h0_dimension(rho, basis));
}

std::string abelian(const SmithForm& s) {
  std::ostringstream out;
  out << "Z^" << s.free_rank;
  for (const auto& f : s.factors) out << " + Z/" << f.get_str();
  return out.str();
}

void criterion_1(Outcome& o) {
  const std::size_t d = h1(rho0(), Flavor::sp21, gamma8());
  o.detail << "dim H1(Gamma8, rho0, sp21) = " << d;
  o.expect(d == 3, "expected 3");
}

void criterion_2(Outcome& o) {
  const CohomologyReport r = h1_dimension(rho0(), lie_basis(rho0().form, Flavor::sp21), gamma8());
  const std::size_t u = h1(rho0(), Flavor::u21, gamma8());
  o.expect(r.split.has_value(), "split present");
  if (r.split) o.detail << "split u21 " << r.split->u21 << " + m " << r.split->m;
  o.detail << ", dim H1(u21) = " << u;
  o.expect(r.split && r.split->u21 == 3 && r.split->m == 0, "split (3, 0)");
  o.expect(u == 3, "u21 dimension 3");
}

void criterion_3(Outcome& o) {
  const CohomologyReport su = h1_dimension(rho0(), lie_basis(rho0().form, Flavor::su21), gamma8());
  const std::size_t u = h1(rho0(), Flavor::u21, gamma8());
  o.detail << "dim H1(su21) = " << su.h1 << ", u21 " << u << " = " << su.h1 << " + " << su.abelianization.free_rank;
  o.expect(su.h1 == 2, "su21 dimension 2");
  o.expect(u == su.h1 + su.abelianization.free_rank, "central split");
}

void criterion_4(Outcome& o) {
  const std::size_t expected[] = {21, 9, 8, 12};
  for (std::size_t i = 0; i < 4; ++i) {
    for (const HermitianForm& form : {antidiag_form(), diagonal_form()}) {
      const std::size_t n = lie_basis(form, kFlavors[i]).size();
      o.expect(n == expected[i], std::string(flavor_name(kFlavors[i])));
    }
    o.detail << (i ? " / " : "sizes ") << lie_basis(antidiag_form(), kFlavors[i]).size();
  }
}

void criterion_5(Outcome& o) {
  const QuatMatrix g = QuatMatrix::diag(1, omega(), omega());
  const LieBasis basis = lie_basis(diagonal_form(), Flavor::sp21);
  const std::size_t z = centralizer_dimension(g, basis);
  const long bound = static_cast<long>(basis.size()) - 2 * static_cast<long>(z);
  o.detail << "dim Z = " << z << ", bound " << bound;
  o.expect(z == 7, "centralizer 7");
  o.expect(bound == 7, "bound 7");

  // The same numbers through the CLI report.
  const Manifest m = load_manifest(fixture("z3z3_rhoW.json"));
  RunOptions options;
  options.arguments = {"a"};
  const RunResult run_result = run(m, "centralizer", options);
  const auto& entry = run_result.report["centralizers"]["sp21"];
  o.expect(run_result.exit_code == 0 && entry["centralizer_dimension"] == 7 && entry["pair_bound"] == 7,
           "CLI centralizer report");
}

void criterion_6(Outcome& o) {
  const Representation rho = rhoW();
  std::size_t dims[4];
  for (std::size_t i = 0; i < 4; ++i) {
    const LieBasis basis = lie_basis(rho.form, kFlavors[i]);
    dims[i] = h1_dimension(rho, basis, z3z3()).h1;
    o.expect(dims[i] == spectral_h1(rho, basis), "spectral oracle agrees for " + std::string(flavor_name(kFlavors[i])));
  }
  o.detail << "dim H1 sp21 = " << dims[0] << ", su21 = " << dims[2] << ", u21 = " << dims[1];
  o.expect(dims[0] == 8, "sp21 dimension 8");
  o.expect(dims[2] == 4, "su21 dimension 4");
  o.expect(dims[0] >= 7, "bound 7");
  o.expect(dims[0] > dims[1], "sp21 > u21");
}

void criterion_7(Outcome& o) {
  const Representation rho = rhoW();
  for (Flavor f : kFlavors) {
    const std::size_t w = h1(rho, f, gammaW());
    const std::size_t q = h1(rho, f, z3z3());
    o.detail << flavor_name(f) << " " << w << ">=" << q << " ";
    o.expect(w >= q, std::string(flavor_name(f)));
  }
}

void criterion_8(Outcome& o) {
  const SmithForm g8 = smith_normal_form(abelianization_matrix(gamma8()));
  const SmithForm gw = smith_normal_form(abelianization_matrix(gammaW()));
  const SmithForm zz = smith_normal_form(abelianization_matrix(z3z3()));
  o.detail << abelian(g8) << ", " << abelian(gw) << ", " << abelian(zz);
  o.expect(g8.free_rank == 1 && g8.factors.empty(), "Gamma8 -> Z");
  o.expect(gw.free_rank == 2 && gw.factors.empty(), "GammaW -> Z^2");
  o.expect(zz.free_rank == 0 && zz.factors.size() == 2 && zz.factors[0] == 3 && zz.factors[1] == 3,
           "Z3 * Z3 -> Z/3 + Z/3");
}

void criterion_9(Outcome& o) {
  for (const char* name : {"gamma8_rho0.json", "gammaW_rhoW.json"}) {
    const RunResult r = run_file(fixture(name), "verify", RunOptions{});
    o.detail << name << " exit " << r.exit_code << "; ";
    o.expect(r.exit_code == 0, name);
    o.expect(r.report["form"]["source"] == "derived", std::string(name) + " form derived");
    o.expect(r.report["form"]["signature"] == nlohmann::ordered_json::array({2, 1}), std::string(name) + " signature");
  }
  const Representation rho = rhoW();
  for (std::uint8_t i = 0; i < 2; ++i) {
    const QuatMatrix g = rho.image(i);
    o.expect(g * g * g == QuatMatrix::identity(), "rhoW generator of order 3");
    o.expect(g.star() * rho.form.matrix() * g == rho.form.matrix(), "g* J g = J");
  }
  verify_relators(rho0(), gamma8());
  verify_relators(rhoW(), gammaW());
}

void criterion_10(Outcome& o) {
  constexpr std::size_t kCases = 200;
  const std::pair<const char*, std::function<SuiteResult()>> suites[] = {
      {"fox-product", [] { return fox_product_rule(1, kCases); }},
      {"fox-mvt", [] { return fox_mean_value(2, kCases); }},
      {"ad-hom", [] { return adjoint_homomorphism(3, kCases); }},
      {"cocycle-coboundary", [] { return cocycle_coboundary(4, kCases); }},
      {"h1-invariance", [] { return h1_invariance(5, kCases); }},
  };
  for (const auto& [name, suite] : suites) {
    const SuiteResult r = suite();
    o.detail << name << " " << (r.cases - r.failures) << "/" << r.cases << " ";
    o.expect(r.cases >= kCases && r.passed(), std::string(name) + ": " + r.first_failure);
  }
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Outcome&)> criteria[] = {
      {"rigidity headline", criterion_1}, {"sp21 decomposition", criterion_2},
      {"SU-level and central split", criterion_3}, {"basis dimensions", criterion_4},
      {"order-3 centralizer", criterion_5}, {"deformability", criterion_6},
      {"inflation", criterion_7}, {"abelianizations", criterion_8},
      {"representation certification", criterion_9}, {"property suites", criterion_10},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [title, check] : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2d (%s): %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", index, title, o.detail.str().c_str(),
                seconds);
    if (!o.ok) ++failures;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
