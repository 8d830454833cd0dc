#include "spectral/expr.hpp"

#include <cctype>
#include <map>

#include "spectral/roots.hpp"

namespace spectral {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar parse_all() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  IntPoly poly_all() {
    IntPoly p = poly();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  IntPoly poly() {
    std::map<int, Rat> terms;
    skip();
    bool first = true;
    for (;;) {
      skip();
      int sgn = 1;
      if (peek() == '+' || peek() == '-') {
        sgn = get() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      skip();
      Rat coef = 1;
      bool have_coef = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = number();
        have_coef = true;
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
        }
      }
      int e = 0;
      if (peek() == 'x') {
        ++pos_;
        e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          size_t start = pos_;
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
          if (start == pos_) fail("expected exponent");
          e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        }
      } else if (!have_coef) {
        fail("expected polynomial term");
      }
      terms[e] += sgn * coef;
      first = false;
    }
    std::vector<Rat> c(terms.empty() ? 1 : terms.rbegin()->first + 1);
    for (auto& [e, v] : terms) c[e] = v;
    for (auto& v : c) {
      if (v.get_den() != 1) fail("polynomial coefficients must be integers");
    }
    std::vector<BigInt> ic;
    for (auto& v : c) ic.push_back(v.get_num());
    return IntPoly(std::move(ic));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool keyword(std::string_view kw) {
    skip();
    if (s_.substr(pos_, kw.size()) == kw) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  Rat number() {
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected number");
    BigInt whole(std::string(s_.substr(start, pos_ - start)));
    Rat v(whole);
    if (peek() == '.') {
      ++pos_;
      size_t fs = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (fs == pos_) fail("expected digits after '.'");
      std::string frac(s_.substr(fs, pos_ - fs));
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      v += Rat(BigInt(frac), scale);
      v.canonicalize();
    }
    return v;
  }

  Rat signed_number() {
    skip();
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    skip();
    Rat v = number();
    return neg ? Rat(-v) : v;
  }

  Scalar apply(char op, const Scalar& a, const Scalar& b, size_t at) {
    try {
      switch (op) {
        case '+':
          return a + b;
        case '-':
          return a - b;
        case '*':
          return a * b;
        default:
          return a / b;
      }
    } catch (const std::domain_error& e) {
      throw ParseError(e.what(), at);
    }
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') return v;
      size_t at = pos_++;
      v = apply(c, v, term(), at);
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      skip();
      char c = peek();
      if (c != '*' && c != '/') return v;
      size_t at = pos_++;
      v = apply(c, v, unary(), at);
    }
  }

  Scalar unary() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return primary();
  }

  Scalar primary() {
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) return Scalar(number());
    if (peek() == '(') {
      ++pos_;
      Scalar v = expr();
      expect(')');
      return v;
    }
    size_t at = pos_;
    if (keyword("sqrt")) {
      expect('(');
      Scalar arg = expr();
      expect(')');
      if (!arg.is_rational()) throw ParseError("sqrt argument must be rational", at);
      if (arg.rational() < 0) throw ParseError("sqrt of a negative number", at);
      if (!Surd::representable_sqrt(arg.rational())) throw ParseError("radicand exceeds the supported range", at);
      return Scalar(Surd::sqrt(arg.rational()));
    }
    if (keyword("root")) {
      expect('(');
      IntPoly p = poly();
      expect(',');
      expect('[');
      Rat lo = signed_number();
      expect(',');
      Rat hi = signed_number();
      expect(']');
      expect(')');
      if (p.degree() < 1) throw ParseError("root() needs a nonconstant polynomial", at);
      if (!(lo < hi)) throw ParseError("root() interval is empty", at);
      IntPoly q = squarefree_part(p);
      if (q.sign_at(lo) == 0 || q.sign_at(hi) == 0 || sturm_count(q, lo, hi) != 1) {
        throw ParseError("root() interval must isolate exactly one root", at);
      }
      return Scalar::root_of(q, lo, hi);
    }
    fail(peek() == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, peek()) + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse_all(); }

IntPoly parse_poly(std::string_view text) { return Parser(text).poly_all(); }

}  // namespace spectral
