#include "jacarena/parser.hpp"

#include <cctype>

#include "jacarena/error.hpp"

namespace jacarena {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParseError,
                msg + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool peek_ident() {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
  }
  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])) != 0) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class ExprParser {
 public:
  ExprParser(Cursor& cur, SpacePtr space) : cur_(cur), space_(std::move(space)) {}

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (cur_.consume('+')) acc += term();
      else if (cur_.consume('-')) acc -= term();
      else return acc;
    }
  }

 private:
  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (cur_.consume('*')) {
        acc *= unary();
      } else if (cur_.peek() == '/') {
        const std::size_t at = cur_.pos();
        cur_.consume('/');
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          cur_.fail("division only by a nonzero constant (offset " + std::to_string(at) + ")");
        }
        const Scalar c = d.constant_term();
        if (space_->coeffs.is_integers()) {
          Polynomial q(space_);
          std::vector<Term> terms;
          for (const auto& t : acc.terms()) {
            Scalar v = t.coeff / c;
            if (v.get_den() != 1) cur_.fail("inexact division over ZZ");
            terms.push_back(Term{t.monomial, v});
          }
          acc = Polynomial::from_terms(space_, std::move(terms));
        } else {
          acc = acc.scaled(space_->coeffs.inverse(c));
        }
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (cur_.consume('-')) return -unary();
    if (cur_.consume('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (cur_.consume('^')) {
      const Integer e = cur_.integer();
      if (!e.fits_ulong_p()) cur_.fail("exponent too large");
      return base.pow(e.get_ui());
    }
    return base;
  }

  Polynomial atom() {
    if (cur_.consume('(')) {
      Polynomial inner = expr();
      cur_.expect(')');
      return inner;
    }
    if (cur_.peek_digit()) return Polynomial::constant(space_, Scalar(cur_.integer()));
    if (cur_.peek_ident()) {
      const std::string name = cur_.ident();
      auto idx = space_->index_of(name);
      if (!idx) throw Error(ErrorCode::kUnknownVariable, "unknown variable '" + name + "'");
      return Polynomial::variable(space_, *idx);
    }
    cur_.fail("unexpected character");
  }

  Cursor& cur_;
  SpacePtr space_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const SpacePtr& space) {
  Cursor cur(text);
  ExprParser parser(cur, space);
  Polynomial p = parser.expr();
  if (!cur.at_end()) cur.fail("trailing input");
  return p.in_space(space);
}

RingSyntax parse_ring_syntax(std::string_view text) {
  Cursor cur(text);
  RingSyntax out;
  if (cur.consume_word("ZZ")) {
    out.coeffs = CoefficientRing::integers();
  } else if (cur.consume_word("QQ")) {
    out.coeffs = CoefficientRing::rationals();
  } else if (cur.consume_word("GF")) {
    cur.expect('(');
    const Integer p = cur.integer();
    cur.expect(')');
    out.coeffs = CoefficientRing::prime_field(p);
  } else {
    cur.fail("expected ZZ, QQ or GF(p)");
  }
  if (cur.consume('[')) {
    do {
      std::string name = cur.ident();
      for (const auto& v : out.vars) {
        if (v == name) cur.fail("duplicate variable '" + name + "'");
      }
      out.vars.push_back(std::move(name));
    } while (cur.consume(','));
    cur.expect(']');
  }
  out.space = make_space(out.coeffs, out.vars);
  if (cur.consume('/')) {
    if (cur.consume('(')) {
      ExprParser parser(cur, out.space);
      do {
        out.relations.push_back(parser.expr().in_space(out.space));
      } while (cur.consume(','));
      cur.expect(')');
    } else {
      out.relations.push_back(Polynomial::constant(out.space, Scalar(cur.integer())));
    }
  }
  if (!cur.at_end()) cur.fail("trailing input");
  return out;
}

}  // namespace jacarena
