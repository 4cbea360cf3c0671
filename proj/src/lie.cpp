#include "foxcoh/lie.hpp"

#include <utility>

#include "foxcoh/error.hpp"

namespace foxcoh {

std::string_view flavor_name(Flavor flavor) {
  switch (flavor) {
    case Flavor::sp21: return "sp21";
    case Flavor::u21: return "u21";
    case Flavor::su21: return "su21";
    case Flavor::m: return "m";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(std::string_view name) {
  for (Flavor f : {Flavor::sp21, Flavor::u21, Flavor::su21, Flavor::m})
    if (flavor_name(f) == name) return f;
  return std::nullopt;
}

std::size_t flavor_dimension(Flavor flavor) {
  switch (flavor) {
    case Flavor::sp21: return 21;
    case Flavor::u21: return 9;
    case Flavor::su21: return 8;
    case Flavor::m: return 12;
  }
  return 0;
}

namespace {

// Inverse of an invertible complex 3x3 matrix via the adjugate.
QuatMatrix complex_inverse(const QuatMatrix& a) {
  QuatMatrix adj;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t r0 = r == 0 ? 1 : 0, r1 = r == 2 ? 1 : 2;
      const std::size_t c0 = c == 0 ? 1 : 0, c1 = c == 2 ? 1 : 2;
      Quaternion minor = a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0);
      adj(c, r) = (r + c) % 2 == 0 ? minor : -minor;
    }
  Quaternion det;
  for (std::size_t c = 0; c < 3; ++c) det += a(0, c) * adj(c, 0);
  if (det.is_zero()) throw Error(ErrorCode::DegenerateForm, "form is degenerate (det = 0)");
  const Quaternion inv = det.inverse();
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) adj(r, c) = adj(r, c) * inv;
  return adj;
}

}  // namespace

HermitianForm::HermitianForm(QuatMatrix j) : j_(std::move(j)) {
  const Signature s = hermitian_signature(j_);
  if (s != Signature{2, 1})
    throw Error(ErrorCode::InvalidInput, "form has signature (" + std::to_string(s.positive) + "," +
                                             std::to_string(s.negative) + "), expected (2,1)");
  j_inverse_ = complex_inverse(j_);
}

bool HermitianForm::preserved_by(const QuatMatrix& g) const { return g.star() * j_ * g == j_; }

QuatMatrix HermitianForm::group_inverse(const QuatMatrix& g) const { return j_inverse_ * g.star() * j_; }

namespace {

// Real basis of the complex Hermitian 3x3 matrices: diagonal units, then for
// each upper entry (r, c) the symmetric real unit and the antisymmetric i unit.
std::vector<QuatMatrix> hermitian_units() {
  std::vector<QuatMatrix> units;
  for (std::size_t d = 0; d < 3; ++d) {
    QuatMatrix e;
    e(d, d) = 1;
    units.push_back(e);
  }
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
    QuatMatrix re, im;
    re(r, c) = 1;
    re(c, r) = 1;
    im(r, c) = Quaternion::unit_i();
    im(c, r) = -Quaternion::unit_i();
    units.push_back(re);
    units.push_back(im);
  }
  return units;
}

}  // namespace

HermitianForm derive_invariant_form(std::span<const QuatMatrix> matrices) {
  for (const auto& g : matrices)
    if (!g.is_complex()) throw Error(ErrorCode::InvalidInput, "invariant form derivation needs complex matrices");

  const std::vector<QuatMatrix> units = hermitian_units();
  std::vector<FVector> columns;
  for (const auto& h : units) {
    FVector column;
    for (const auto& g : matrices) {
      const FVector eq = (g.star() * h * g - h).realify();
      column.insert(column.end(), eq.begin(), eq.end());
    }
    columns.push_back(std::move(column));
  }
  const std::size_t equations = 36 * matrices.size();
  const auto kernel = kernel_basis(FMatrix::from_columns(equations, columns));
  if (kernel.empty()) throw Error(ErrorCode::NoInvariantForm, "no invariant Hermitian form");
  if (kernel.size() > 1)
    throw Error(ErrorCode::AmbiguousForm, "invariant Hermitian forms span a space of dimension " +
                                              std::to_string(kernel.size()) + "; supply the form explicitly");

  QuatMatrix j;
  for (std::size_t u = 0; u < units.size(); ++u)
    if (!kernel[0][u].is_zero()) j += kernel[0][u] * units[u];

  for (const auto& c : j.realify()) {
    if (c.is_zero()) continue;
    j = field_abs(c).inverse() * j;
    break;
  }
  const Signature s = hermitian_signature(j);
  if (s == Signature{1, 2}) {
    j = FieldElement(-1) * j;
  } else if (s != Signature{2, 1}) {
    throw Error(ErrorCode::NoInvariantForm, "the invariant Hermitian form is definite");
  }
  return HermitianForm(std::move(j));
}

bool Representation::complex_entries() const {
  for (const auto& g : images)
    if (!g.is_complex()) return false;
  return true;
}

LieBasis::LieBasis(Flavor flavor, HermitianForm form, std::vector<QuatMatrix> elements, std::size_t split)
    : flavor_(flavor), form_(std::move(form)), elements_(std::move(elements)), split_(split) {
  std::vector<FVector> columns;
  for (const auto& x : elements_) columns.push_back(x.realify());
  coordinate_matrix_ = FMatrix::from_columns(36, columns);
}

std::optional<FVector> LieBasis::coordinates(const QuatMatrix& x) const {
  return solve(coordinate_matrix_, x.realify());
}

QuatMatrix LieBasis::element(const FVector& coords) const {
  QuatMatrix x;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!coords[i].is_zero()) x += coords[i] * elements_[i];
  return x;
}

LieBasis LieBasis::permuted(std::span<const std::size_t> order) const {
  std::vector<QuatMatrix> elements;
  bool keeps_split = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    elements.push_back(elements_.at(order[k]));
    if ((k < split_) != (order[k] < split_)) keeps_split = false;
  }
  return LieBasis(flavor_, form_, std::move(elements), keeps_split ? split_ : 0);
}

namespace {

// Unknowns are quaternion coordinates (entry-major, then component); only the
// listed components of each entry are free.
std::vector<QuatMatrix> solve_algebra(const HermitianForm& form, std::initializer_list<std::size_t> components,
                                      bool traceless) {
  const QuatMatrix& j = form.matrix();
  std::vector<QuatMatrix> units;
  for (std::size_t e = 0; e < 9; ++e)
    for (std::size_t comp : components) {
      QuatMatrix u;
      u(e / 3, e % 3).component(comp) = 1;
      units.push_back(u);
    }

  std::vector<FVector> columns;
  for (const auto& u : units) {
    FVector column = (u.star() * j + j * u).realify();
    if (traceless) {
      const Quaternion trace = u(0, 0) + u(1, 1) + u(2, 2);
      column.push_back(trace.w);
      column.push_back(trace.x);
    }
    columns.push_back(std::move(column));
  }
  const std::size_t rows = 36 + (traceless ? 2 : 0);
  std::vector<QuatMatrix> basis;
  for (const auto& v : kernel_basis(FMatrix::from_columns(rows, columns))) {
    QuatMatrix x;
    for (std::size_t k = 0; k < units.size(); ++k)
      if (!v[k].is_zero()) x += v[k] * units[k];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

LieBasis lie_basis(const HermitianForm& form, Flavor flavor) {
  std::vector<QuatMatrix> elements;
  std::size_t split = 0;
  switch (flavor) {
    case Flavor::u21: elements = solve_algebra(form, {0, 1}, false); break;
    case Flavor::su21: elements = solve_algebra(form, {0, 1}, true); break;
    case Flavor::m: elements = solve_algebra(form, {2, 3}, false); break;
    case Flavor::sp21: {
      elements = solve_algebra(form, {0, 1}, false);
      split = elements.size();
      auto rest = solve_algebra(form, {2, 3}, false);
      elements.insert(elements.end(), rest.begin(), rest.end());
      break;
    }
  }
  if (elements.size() != flavor_dimension(flavor))
    throw Error(ErrorCode::InvalidInput, std::string(flavor_name(flavor)) + " basis has unexpected size " +
                                             std::to_string(elements.size()));
  return LieBasis(flavor, form, std::move(elements), split);
}

FMatrix adjoint_matrix(const QuatMatrix& g, const LieBasis& basis) {
  const HermitianForm& form = basis.form();
  if (!form.preserved_by(g)) throw Error(ErrorCode::NotInGroup, "matrix does not preserve the form: " + g.to_string());
  if (basis.flavor() != Flavor::sp21 && !g.is_complex())
    throw Error(ErrorCode::SubspaceNotPreserved,
                std::string("conjugation by a non-complex matrix does not preserve ") +
                    std::string(flavor_name(basis.flavor())));

  const QuatMatrix g_inv = form.group_inverse(g);
  std::vector<FVector> conjugates;
  conjugates.reserve(basis.size());
  for (const auto& x : basis.elements()) conjugates.push_back((g * x * g_inv).realify());
  auto coords = solve(basis.coordinate_matrix(), FMatrix::from_columns(36, conjugates));
  if (!coords)
    throw Error(ErrorCode::SubspaceNotPreserved,
                std::string("conjugates leave the span of the ") + std::string(flavor_name(basis.flavor())) + " basis");
  return std::move(*coords);
}

QuatMatrix evaluate_word_matrix(const FreeWord& w, const Representation& rho) {
  QuatMatrix result = QuatMatrix::identity();
  for (const Letter& l : w.letters()) {
    const QuatMatrix& g = rho.image(l.generator);
    result = result * (l.inverse ? rho.form.group_inverse(g) : g);
  }
  return result;
}

AdjointEvaluator::AdjointEvaluator(const Representation& rho, const LieBasis& basis) : rho_(rho), basis_(basis) {
  cache_.emplace(FreeWord{}, FMatrix::identity(basis.size()));
}

const FMatrix& AdjointEvaluator::word(const FreeWord& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  const Letter last = w.letters().back();
  const FreeWord letter({last});
  FMatrix letter_ad;
  if (auto it = cache_.find(letter); it != cache_.end()) {
    letter_ad = it->second;
  } else {
    const QuatMatrix& g = rho_.image(last.generator);
    letter_ad = adjoint_matrix(last.inverse ? rho_.form.group_inverse(g) : g, basis_);
    cache_.emplace(letter, letter_ad);
    if (w.length() == 1) return cache_.at(w);
  }
  FMatrix product = word(w.prefix(w.length() - 1)) * letter_ad;
  return cache_.emplace(w, std::move(product)).first->second;
}

FMatrix AdjointEvaluator::evaluate(const GroupRingElement& u) {
  FMatrix sum(basis_.size(), basis_.size());
  for (const auto& [w, c] : u.terms()) sum += FieldElement(Rational(c)) * word(w);
  return sum;
}

FMatrix evaluate_ad(const GroupRingElement& u, const Representation& rho, const LieBasis& basis) {
  AdjointEvaluator evaluator(rho, basis);
  return evaluator.evaluate(u);
}

std::size_t centralizer_dimension(const QuatMatrix& g, const LieBasis& basis) {
  return basis.size() - rank(adjoint_matrix(g, basis) - FMatrix::identity(basis.size()));
}

QuatMatrix bracket(const QuatMatrix& x, const QuatMatrix& y) { return x * y - y * x; }

}  // namespace foxcoh
