#include "foxcoh/entry.hpp"

#include <cctype>
#include <string>

#include "foxcoh/error.hpp"

namespace foxcoh {

namespace {

class EntryParser {
 public:
  explicit EntryParser(std::string_view text) : text_(text) {}

  Quaternion parse() {
    Quaternion value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer uint() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Quaternion expr() {
    Quaternion value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Quaternion term() {
    Quaternion value = factor();
    while (accept('*')) value = value * factor();
    if (accept('/')) {
      const std::size_t at = pos_;
      const Integer d = uint();
      if (sgn(d) == 0) throw Error(ErrorCode::DivisionByZero, "division by zero at position " + std::to_string(at));
      value = FieldElement(Rational(1, d)) * value;
    }
    return value;
  }

  Quaternion factor() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Quaternion value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return FieldElement(Rational(uint()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "i") return Quaternion::unit_i();
      if (name == "j") return Quaternion::unit_j();
      if (name == "k") return Quaternion::unit_k();
      if (name == "sqrt3") return FieldElement::sqrt3();
      if (name == "sqrt5") return FieldElement::sqrt5();
      if (name == "sqrt15") return FieldElement::sqrt15();
      throw Error(ErrorCode::NonConstantExpression,
                  "unknown identifier '" + std::string(name) + "' at position " + std::to_string(start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Quaternion parse_entry(std::string_view text) { return EntryParser(text).parse(); }

}  // namespace foxcoh
