#include "trop/dsl.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "tropical/error.hpp"

namespace trop {

using tropical::Error;
using tropical::ErrorCode;
using tropical::PiecewiseLinear;
using tropical::Rational;

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  PiecewiseLinear parse() {
    PiecewiseLinear f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos_), pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  static bool is_constant(const PiecewiseLinear& f) { return f.breakpoints().empty() && f.left_slope() == 0; }

  PiecewiseLinear expr() {
    PiecewiseLinear f = term();
    for (;;) {
      if (accept('+')) {
        f = tropical::tplus(f, term());
      } else if (accept('-')) {
        f = tropical::tminus(f, term());
      } else {
        return f;
      }
    }
  }

  PiecewiseLinear term() {
    PiecewiseLinear f = unary();
    while (true) {
      skip();
      std::size_t at = pos_;
      if (!accept('*')) return f;
      PiecewiseLinear g = unary();
      if (is_constant(f)) {
        f = tropical::scale(g, f(Rational(0)));
      } else if (is_constant(g)) {
        f = tropical::scale(f, g(Rational(0)));
      } else {
        throw Error(ErrorCode::NonLinearTerm, "product of two non-constant terms at position " + std::to_string(at),
                    at);
      }
    }
  }

  PiecewiseLinear unary() {
    if (accept('-')) return tropical::negate(unary());
    if (accept('+')) return unary();
    return primary();
  }

  PiecewiseLinear primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return PiecewiseLinear::constant(number());
    if (accept('(')) {
      PiecewiseLinear f = expr();
      expect(')');
      return f;
    }
    if (accept_word("max")) return envelope(true);
    if (accept_word("min")) return envelope(false);
    if (accept_word("x")) return PiecewiseLinear::identity();
    fail("expected a number, 'x', max(...), min(...) or '('");
  }

  PiecewiseLinear envelope(bool upper) {
    expect('(');
    std::vector<PiecewiseLinear> args;
    do {
      args.push_back(expr());
    } while (accept(','));
    expect(')');
    PiecewiseLinear f = args.front();
    for (std::size_t i = 1; i < args.size(); ++i) f = upper ? tropical::tmax(f, args[i]) : tropical::tmin(f, args[i]);
    return f;
  }

  Rational number() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      digits();
    } else if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      digits();
    }
    try {
      return tropical::parse_rational(s_.substr(start, pos_ - start));
    } catch (const Error& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PiecewiseLinear parse_function(std::string_view text) { return Parser(text).parse(); }

}  // namespace trop
