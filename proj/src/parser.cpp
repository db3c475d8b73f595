#include "qsuper/parser.hpp"

#include <cctype>

#include "qsuper/errors.hpp"

namespace qsuper {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const ParseContext& ctx) : src_(src), ctx_(ctx) {
    alpha_ = ctx.alphabet ? ctx.alphabet : make_alphabet({});
    for (const auto& v : ctx.params.vars())
      if (alpha_->find(v.name()))
        throw Error(ErrorKind::InvalidArgument, "'" + v.name() + "' is both a parameter and a generator");
  }

  Element parse() {
    skip();
    if (pos_ == src_.size()) fail("empty expression");
    Element e = expr();
    skip();
    if (pos_ != src_.size()) {
      if (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '(')
        fail("missing operator (juxtaposition is not allowed)");
      fail(std::string("unexpected '") + src_[pos_] + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Element expr() {
    Element acc(alpha_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-')) neg = true;
      else if (!first && !eat('+')) break;
      else if (first) eat('+');
      Element t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip();
      if (pos_ >= src_.size() || (src_[pos_] != '+' && src_[pos_] != '-')) break;
    }
    return acc;
  }

  Element term() {
    Element acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Element d = power();
        if (!d.is_scalar()) {
          pos_ = at;
          throw Error(ErrorKind::DivisionByGeneratorExpression,
                      "divisor contains generators at position " + std::to_string(at));
        }
        acc = d.scalar_part().inverse() * acc;
      } else {
        return acc;
      }
    }
  }

  Element power() {
    Element base = factor();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer exponent");
    long e = std::stol(std::string(src_.substr(start, pos_ - start)));
    if (e <= 0) fail("exponent must be positive");
    Element r = base;
    for (long k = 1; k < e; ++k) r = r * base;
    return r;
  }

  Element factor() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (c == '(') {
      ++pos_;
      Element e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      mpq_class v(std::string(src_.substr(start, pos_ - start)));
      return Element::scalar(alpha_, Scalar(GaussRational(v, 0)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      if (name == "i") return Element::scalar(alpha_, Scalar::imaginary_unit());
      if (auto v = ctx_.params.find(name)) return Element::scalar(alpha_, Scalar::param(*v));
      if (auto g = alpha_->find(name)) return Element::generator(alpha_, *g);
      pos_ = start;
      throw Error(ErrorKind::UnknownSymbol,
                  "unknown symbol '" + name + "' at position " + std::to_string(start));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  const ParseContext& ctx_;
  AlphabetPtr alpha_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(std::string_view src, const ParseContext& ctx) {
  return Parser(src, ctx).parse();
}

Scalar parse_scalar(std::string_view src, const ParameterSet& params) {
  Element e = parse_expression(src, ParseContext{params, nullptr});
  if (!e.is_scalar()) throw Error(ErrorKind::InvalidArgument, "expected a scalar");
  return e.scalar_part();
}

int parse_parity(std::string_view s) {
  if (s == "even" || s == "0") return 0;
  if (s == "odd" || s == "1") return 1;
  throw Error(ErrorKind::InvalidArgument, "parity must be even or odd, got '" + std::string(s) + "'");
}

}  // namespace qsuper
