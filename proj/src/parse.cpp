#include "maxsg/parse.hpp"

#include <cctype>
#include <string>

#include "maxsg/error.hpp"

namespace maxsg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MapExpr expr() {
    skip();
    std::size_t start = pos_;
    std::string word = identifier();
    if (word == "cantor_proj") {
      return cantor_proj();
    }
    if (word == "id") {
      return identity_map();
    }
    if (word == "compose") {
      expect('(');
      MapExpr a = expr();
      expect(',');
      MapExpr b = expr();
      expect(')');
      return compose(std::move(a), std::move(b));
    }
    if (word == "affine") {
      expect('(');
      AffinePeriodic f;
      f.threshold = number();
      expect(',');
      f.period = number();
      expect(',');
      f.shift = number();
      expect(',');
      f.table = list();
      expect(')');
      return MapExpr(std::move(f));
    }
    if (word == "perm") {
      expect('(');
      auto images = list();
      expect(')');
      return perm_map(images);
    }
    if (word == "shift" || word == "times" || word == "divfloor") {
      expect('(');
      std::uint64_t k = number();
      expect(')');
      if (word == "shift") {
        return shift_map(k);
      }
      return word == "times" ? times_map(k) : divfloor_map(k);
    }
    throw ParseError(start, word.empty() ? "expected an expression"
                                         : "unknown expression '" + word + "'");
  }

  std::vector<std::uint64_t> naturals() {
    std::vector<std::uint64_t> out;
    skip();
    if (done()) {
      return out;
    }
    out.push_back(number());
    while (peek(',')) {
      ++pos_;
      out.push_back(number());
    }
    return out;
  }

  void finish() {
    skip();
    if (!done()) {
      throw ParseError(pos_, "trailing characters");
    }
  }

 private:
  bool done() const { return pos_ >= text_.size(); }

  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip();
    return !done() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string identifier() {
    std::string out;
    while (!done() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                       text_[pos_] == '_')) {
      out += text_[pos_++];
    }
    return out;
  }

  std::uint64_t number() {
    skip();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, digit, &v)) {
        throw ParseError(start, "number exceeds 64 bits");
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(pos_, "expected a natural number");
    }
    return v;
  }

  std::vector<std::uint64_t> list() {
    expect('[');
    std::vector<std::uint64_t> out;
    if (peek(']')) {
      ++pos_;
      return out;
    }
    out.push_back(number());
    while (peek(',')) {
      ++pos_;
      out.push_back(number());
    }
    expect(']');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MapExpr parse_expr(std::string_view text) {
  Parser p(text);
  MapExpr e = p.expr();
  p.finish();
  return e;
}

std::vector<std::uint64_t> parse_naturals(std::string_view text) {
  Parser p(text);
  auto out = p.naturals();
  p.finish();
  return out;
}

}  // namespace maxsg
