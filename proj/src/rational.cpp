#include "rca/rational.hpp"

#include "rca/errors.hpp"

namespace rca {

std::string rational_to_string(const Rational& r) {
  return r.str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  std::size_t i = 0;
  auto scan_int = [&]() {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && is_digit(text[i])) ++i, ++digits;
    if (digits == 0)
      throw ParseError("bad rational literal: " + std::string(text));
    return std::string(text.substr(start, i - start));
  };
  std::string num = scan_int();
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = scan_int();
  }
  if (i != text.size())
    throw ParseError("bad rational literal: " + std::string(text));
  using Int = boost::multiprecision::cpp_int;
  Int d(den);
  if (d <= 0)
    throw ParseError("rational denominator must be positive: " +
                     std::string(text));
  return Rational(Int(num), d);
}

}  // namespace rca
