#include "montes/parse.hpp"

#include <cctype>
#include <map>

namespace montes {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ == s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  Integer number() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return Integer(s_.substr(start, i_ - start));
  }
  [[noreturn]] void fail(const std::string& msg) {
    skip_ws();
    throw ParseError(i_, msg);
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

IntPoly parse_list(Scanner& sc) {
  sc.expect('[');
  std::vector<Integer> c;
  if (sc.accept(']')) return IntPoly();
  for (;;) {
    bool neg = false;
    if (sc.accept('-'))
      neg = true;
    else
      sc.accept('+');
    Integer v = sc.number();
    c.push_back(neg ? Integer(-v) : v);
    if (sc.accept(']')) break;
    sc.expect(',');
  }
  if (!sc.at_end()) sc.fail("trailing characters");
  return IntPoly(std::move(c));
}

IntPoly parse_expr(Scanner& sc) {
  std::map<unsigned long, Integer> terms;
  bool first = true;
  while (first || !sc.at_end()) {
    bool neg = false;
    if (sc.accept('-'))
      neg = true;
    else if (!sc.accept('+') && !first)
      sc.fail("expected '+' or '-'");
    first = false;
    Integer coef = 1;
    bool have_coef = false;
    if (sc.digit_next()) {
      coef = sc.number();
      have_coef = true;
      if (sc.accept('*') && sc.peek() != 'x') sc.fail("expected 'x' after '*'");
    }
    unsigned long deg = 0;
    if (sc.accept('x')) {
      deg = 1;
      if (sc.accept('^')) {
        Integer d = sc.number();
        if (!d.fits_ulong_p() || d > 100000) sc.fail("exponent too large");
        deg = d.get_ui();
      }
    } else if (!have_coef) {
      sc.fail("expected a term");
    }
    terms[deg] += neg ? Integer(-coef) : coef;
  }
  if (terms.empty()) return IntPoly();
  std::vector<Integer> c(terms.rbegin()->first + 1, Integer(0));
  for (const auto& [d, v] : terms) c[d] = v;
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
  Scanner sc(text);
  if (sc.at_end()) sc.fail("empty input");
  if (sc.peek() == '[') return parse_list(sc);
  return parse_expr(sc);
}

}  // namespace montes
