#include "foxcoh/words.hpp"

#include <cctype>

#include "foxcoh/error.hpp"

namespace foxcoh {

FreeWord::FreeWord(const std::vector<Letter>& letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!letters_.empty() && letters_.back() == l.inverted()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverted());
  return w;
}

FreeWord FreeWord::prefix(std::size_t length) const {
  FreeWord w;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(length));
  return w;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::size_t cancel = 0;
  const std::size_t na = a.letters_.size();
  while (cancel < na && cancel < b.letters_.size() &&
         a.letters_[na - 1 - cancel] == b.letters_[cancel].inverted())
    ++cancel;
  FreeWord w;
  w.letters_.reserve(na + b.letters_.size() - 2 * cancel);
  w.letters_.insert(w.letters_.end(), a.letters_.begin(),
                    a.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  w.letters_.insert(w.letters_.end(), b.letters_.begin() + static_cast<std::ptrdiff_t>(cancel),
                    b.letters_.end());
  return w;
}

std::string FreeWord::to_string(std::string_view generators) const {
  std::string out;
  for (const Letter& l : letters_) {
    const char c = generators[l.generator];
    out += l.inverse ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
  }
  return out;
}

FreeWord parse_word(std::string_view text, std::string_view generators) {
  std::vector<Letter> letters;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (std::isspace(c)) continue;
    if (!std::isalpha(c)) throw SyntaxError(std::string("unexpected character '") + text[pos] + "'", pos);
    const char lower = static_cast<char>(std::tolower(c));
    const auto index = generators.find(lower);
    if (index == std::string_view::npos)
      throw Error(ErrorCode::UnknownGenerator, std::string("unknown generator '") + lower +
                                                   "' at position " + std::to_string(pos));
    letters.push_back({static_cast<std::uint8_t>(index), static_cast<bool>(std::isupper(c))});
  }
  return FreeWord(letters);
}

GroupRingElement::GroupRingElement(const FreeWord& word, Integer coefficient) {
  add_term(word, coefficient);
}

void GroupRingElement::add_term(const FreeWord& word, const Integer& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (sgn(it->second) == 0) terms_.erase(it);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
  return r;
}

GroupRingElement operator*(const Integer& s, const GroupRingElement& a) {
  GroupRingElement r;
  if (sgn(s) == 0) return r;
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, s * c);
  return r;
}

std::string GroupRingElement::to_string(std::string_view generators) const {
  std::string out;
  for (const auto& [w, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Integer magnitude = abs(c);
    std::string term = w.is_identity() ? "1" : w.to_string(generators);
    if (magnitude != 1) term = magnitude.get_str() + (w.is_identity() ? "" : "*" + term);
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

Integer augmentation(const GroupRingElement& u) {
  Integer sum = 0;
  for (const auto& [w, c] : u.terms()) sum += c;
  return sum;
}

// d(x) = 1 and d(x^-1) = -x^-1 for the chosen generator, extended by
// d(uv) = d(u) eps(v) + u d(v) along the letters.
GroupRingElement fox_derivative(std::uint8_t generator, const FreeWord& word) {
  GroupRingElement result;
  const auto& letters = word.letters();
  for (std::size_t t = 0; t < letters.size(); ++t) {
    if (letters[t].generator != generator) continue;
    if (letters[t].inverse) {
      result -= GroupRingElement(word.prefix(t + 1));
    } else {
      result += GroupRingElement(word.prefix(t));
    }
  }
  return result;
}

GroupRingElement fox_derivative(std::uint8_t generator, const GroupRingElement& u) {
  GroupRingElement result;
  for (const auto& [w, c] : u.terms()) result += c * fox_derivative(generator, w);
  return result;
}

Presentation Presentation::parse(std::string_view generators, const std::vector<std::string>& relators) {
  if (generators.empty() || generators.size() > 26)
    throw Error(ErrorCode::InvalidInput, "a presentation needs between 1 and 26 generators");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(generators[i]);
    if (!std::islower(c)) throw Error(ErrorCode::InvalidInput, "generator names must be lowercase letters");
    if (generators.find(generators[i], i + 1) != std::string_view::npos)
      throw Error(ErrorCode::InvalidInput, std::string("duplicate generator '") + generators[i] + "'");
  }
  Presentation p;
  p.generators = std::string(generators);
  for (const auto& r : relators) p.relators.push_back(parse_word(r, generators));
  return p;
}

IntMatrix abelianization_matrix(const Presentation& p) {
  IntMatrix m(p.generator_count(), p.relators.size());
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (const Letter& l : p.relators[j].letters()) m(l.generator, j) += l.inverse ? -1 : 1;
  return m;
}

}  // namespace foxcoh
