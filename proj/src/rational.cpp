#include "dswan/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "dswan/error.hpp"

namespace dswan {

int vp(const Integer& x, unsigned p) {
  if (x == 0) throw std::logic_error("vp of zero");
  Integer y = abs(x);
  int v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), p)) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int vp(const Rational& x, unsigned p) {
  return vp(x.get_num(), p) - vp(x.get_den(), p);
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto integer = [&]() -> Integer {
    skip();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == digits) throw ParseError("expected integer", i);
    std::string s(text.substr(start, i - start));
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return Integer(s);
  };
  Integer num = integer();
  Integer den = 1;
  skip();
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = integer();
    if (den == 0) throw ParseError("zero denominator", i);
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters in rational", i);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace dswan
