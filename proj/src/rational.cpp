#include "thv/rational.hpp"

#include <cctype>

#include "thv/errors.hpp"

namespace thv {

std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg, i, 1, static_cast<int>(i) + 1);
  };
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_start) throw fail("expected integer");
  Integer num(std::string(text.substr(digits_start, i - digits_start)));
  Integer den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start) throw fail("expected denominator");
    den = Integer(std::string(text.substr(den_start, i - den_start)));
    if (den == 0) throw fail("zero denominator");
  }
  if (i != text.size()) throw fail("trailing characters in rational");
  Rational q(num, den);
  if (neg) q = -q;
  return q;
}

}  // namespace thv
