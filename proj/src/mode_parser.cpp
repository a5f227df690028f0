#include "weylva/mode_parser.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace weylva {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ModeElement element() {
    ModeElement out;
    skip();
    Rational sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [word, c] = term();
      out.add(word, sign * c);
      skip();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      sign = op == '-' ? -1 : 1;
      ++pos_;
    }
    return out;
  }

  ModeWord word_only() {
    skip();
    ModeWord w = word();
    skip();
    if (!at_end()) fail("unexpected trailing input");
    return w;
  }

 private:
  std::pair<ModeWord, Rational> term() {
    skip();
    Rational c = 1;
    bool have_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      have_coefficient = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      } else {
        return {ModeWord{}, c};
      }
    }
    if (peek() != 'a') {
      if (have_coefficient) fail("expected a mode after '*'");
      fail("expected a coefficient or a mode");
    }
    return {word(), c};
  }

  ModeWord word() {
    std::vector<Generator> gens;
    skip();
    while (peek() == 'a') {
      gens.push_back(generator());
      skip();
    }
    if (gens.empty()) fail("expected a mode");
    return ModeWord(std::move(gens));
  }

  Generator generator() {
    ++pos_;
    bool star = false;
    if (peek() == '*') {
      star = true;
      ++pos_;
    }
    if (peek() != '(') fail("expected '('");
    ++pos_;
    skip();
    long sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer index");
    int index = static_cast<int>(sign * std::stol(std::string(text_.substr(start, pos_ - start))));
    skip();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return star ? Generator::a_star(index) : Generator::a(index);
  }

  Rational number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den_start == pos_) fail("expected a denominator");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ModeWord parse_mode_word(std::string_view text) { return Parser(text).word_only(); }

ModeElement parse_mode_element(std::string_view text) { return Parser(text).element(); }

}  // namespace weylva
