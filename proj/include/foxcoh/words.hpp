#pragma once

// Free-group words, the integral group ring Z[F_n], Fox derivatives and
// presentations.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "foxcoh/field.hpp"
#include "foxcoh/matrix.hpp"

namespace foxcoh {

struct Letter {
  std::uint8_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word; the empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the given letter sequence.
  explicit FreeWord(const std::vector<Letter>& letters);

  static FreeWord generator(std::uint8_t index) { return FreeWord({Letter{index, false}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord inverse() const;
  /// Prefix of the given length (already reduced).
  FreeWord prefix(std::size_t length) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

  /// Lowercase letter for a generator, uppercase for its inverse.
  std::string to_string(std::string_view generators) const;

 private:
  std::vector<Letter> letters_;
};

/// Parses a word: lowercase letters are generators, uppercase their inverses,
/// whitespace is ignored. `generators` lists the allowed lowercase names.
/// Throws SyntaxError (with offset) or Error(UnknownGenerator).
FreeWord parse_word(std::string_view text, std::string_view generators);

/// Finite integer combination of free-group words with no zero coefficients.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(const FreeWord& word, Integer coefficient = 1);  // NOLINT

  static GroupRingElement one() { return GroupRingElement(FreeWord{}); }

  const std::map<FreeWord, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement operator-() const;
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const Integer& s, const GroupRingElement& a);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  /// Terms in word order, e.g. "B - BabA + 2*ab"; the identity prints as "1".
  std::string to_string(std::string_view generators) const;

 private:
  void add_term(const FreeWord& word, const Integer& coefficient);
  std::map<FreeWord, Integer> terms_;
};

/// Coefficient sum.
Integer augmentation(const GroupRingElement& u);

/// Fox derivative d/dx_i of a word.
GroupRingElement fox_derivative(std::uint8_t generator, const FreeWord& word);
/// Fox derivative extended Z-linearly.
GroupRingElement fox_derivative(std::uint8_t generator, const GroupRingElement& u);

struct Presentation {
  /// Distinct lowercase letters, at most 26.
  std::string generators;
  std::vector<FreeWord> relators;

  std::size_t generator_count() const { return generators.size(); }
  /// Builds and validates a presentation from relator strings.
  static Presentation parse(std::string_view generators, const std::vector<std::string>& relators);
};

/// (generators x relators) matrix of exponent sums eps(d_i R_j).
IntMatrix abelianization_matrix(const Presentation& p);

}  // namespace foxcoh
