#include "ditlogic/rational.hpp"

#include <cctype>

#include "ditlogic/error.hpp"

namespace ditlogic {

namespace {

using boost::multiprecision::cpp_int;

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw Error(ErrorKind::parse, "parse error at position " + std::to_string(pos) + ": " + what,
              pos);
}

// [sign] digits [. digits] [e [sign] digits]
Rational parse_decimal(std::string_view s, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';

  cpp_int mantissa = 0;
  int scale = 0;
  std::size_t digits = 0;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, ++digits) {
    mantissa = mantissa * 10 + (s[i] - '0');
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, ++digits) {
      mantissa = mantissa * 10 + (s[i] - '0');
      --scale;
    }
  }
  if (digits == 0) fail(offset + i, "expected a number");

  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) exp_negative = s[i++] == '-';
    int exponent = 0;
    std::size_t exp_digits = 0;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, ++exp_digits) {
      exponent = exponent * 10 + (s[i] - '0');
      if (exponent > 400) fail(offset + i, "exponent out of range");
    }
    if (exp_digits == 0) fail(offset + i, "expected exponent digits");
    scale += exp_negative ? -exponent : exponent;
  }
  if (i != s.size()) fail(offset + i, "unexpected character '" + std::string(1, s[i]) + "'");

  Rational r(mantissa);
  if (scale > 0) r *= Rational(boost::multiprecision::pow(cpp_int(10), scale));
  if (scale < 0) r /= Rational(boost::multiprecision::pow(cpp_int(10), -scale));
  return negative ? Rational(-r) : r;
}

}  // namespace

std::string to_string(const Rational& r) {
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational parse_rational(std::string_view text, std::size_t base_offset) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) fail(base_offset + begin, "empty number");

  const std::string_view body = text.substr(begin, end - begin);
  const std::size_t slash = body.find('/');
  if (slash == std::string_view::npos) return parse_decimal(body, base_offset + begin);

  const Rational num = parse_decimal(body.substr(0, slash), base_offset + begin);
  const Rational den = parse_decimal(body.substr(slash + 1), base_offset + begin + slash + 1);
  if (den == 0) fail(base_offset + begin + slash + 1, "zero denominator");
  return num / den;
}

}  // namespace ditlogic
