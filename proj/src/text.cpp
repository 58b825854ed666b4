#include "symlen/text.hpp"

#include <cctype>

#include "symlen/errors.hpp"

namespace symlen {

namespace {

class Parser {
 public:
  Parser(const Backend& b, std::string_view s) : b_(b), s_(s) {}

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail_at(start, "expected integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1LL << 40)) fail_at(start, "integer too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        RatFunc d = unary();
        if (d.is_zero()) fail_at(at, "division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (peek() == '^') {
      const std::size_t at = pos_;
      ++pos_;
      long long e = 0;
      if (accept('(')) {
        e = integer();
        expect(')');
      } else {
        e = integer();
      }
      if (e < 0 && base.is_zero()) fail_at(at, "negative power of zero");
      return base.pow(e);
    }
    return base;
  }

  RatFunc atom() {
    const FiniteField& f = b_.fq();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      expect(')');
      return r;
    }
    if (c == '[') {
      const std::size_t at = pos_;
      ++pos_;
      std::vector<std::uint32_t> co;
      if (!accept(']')) {
        do {
          const long long v = integer();
          co.push_back(static_cast<std::uint32_t>(((v % f.p()) + f.p()) % f.p()));
        } while (accept(','));
        expect(']');
      }
      if (co.size() > f.k()) fail_at(at, "coefficient tuple longer than extension degree");
      return b_.constant(f.from_coeffs(co));
    }
    if (c == 't') {
      if (!b_.rational()) fail("t is not an element of " + b_.name());
      ++pos_;
      return RatFunc::t(f);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return b_.from_int(integer());
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::uint32_t degree_suffix(std::optional<std::uint32_t> default_n) {
    if (accept('_')) {
      const std::size_t at = pos_;
      const long long n = integer();
      if (n < 1) fail_at(at, "degree must be positive");
      return static_cast<std::uint32_t>(n);
    }
    if (!default_n) fail("missing degree suffix _n");
    return *default_n;
  }

  std::size_t pos() const { return pos_; }

 private:
  const Backend& b_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string slot_text(const RatFunc& x) { return x.to_string(); }

}  // namespace

RatFunc parse_element(const Backend& b, std::string_view text) {
  Parser p(b, text);
  RatFunc r = p.expr();
  if (!p.at_end()) p.fail("trailing input");
  return r;
}

SymbolProduct parse_product(const Backend& b, std::string_view text, std::optional<std::uint32_t> default_n) {
  Parser p(b, text);
  SymbolProduct out{b, Interpretation::Brauer, {}};
  const char first = p.peek();
  if (first == '1' || first == '0') {
    p.integer();
    if (!p.at_end()) p.fail("trailing input after empty product");
    out.kind = first == '1' ? Interpretation::Brauer : Interpretation::Milnor;
    return out;
  }
  if (first == '{') out.kind = Interpretation::Milnor;
  else if (first != '(') p.fail("expected '(' or '{'");
  const char open = out.kind == Interpretation::Milnor ? '{' : '(';
  const char close = out.kind == Interpretation::Milnor ? '}' : ')';
  const char sep = out.kind == Interpretation::Milnor ? '+' : '*';
  for (;;) {
    p.expect(open);
    RatFunc a = p.expr();
    p.expect(',');
    RatFunc bb = p.expr();
    p.expect(close);
    const std::uint32_t n = p.degree_suffix(default_n);
    out.factors.emplace_back(std::move(a), std::move(bb), n);
    if (p.at_end()) break;
    if (!p.accept(sep)) p.fail(std::string("expected '") + sep + "'");
  }
  return out;
}

std::string to_string(const Symbol& s, Interpretation kind) {
  const bool m = kind == Interpretation::Milnor;
  return std::string(m ? "{" : "(") + slot_text(s.a) + ", " + slot_text(s.b) + (m ? "}" : ")") + "_" +
         std::to_string(s.n);
}

std::string to_string(const SymbolProduct& p) {
  const bool m = p.kind == Interpretation::Milnor;
  if (p.factors.empty()) return m ? "0" : "1";
  std::string out;
  for (const auto& s : p.factors) {
    if (!out.empty()) out += m ? " + " : " * ";
    out += to_string(s, p.kind);
  }
  return out;
}

}  // namespace symlen
