#include "schifferlab/numeric.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <numeric>

namespace schifferlab {

namespace {

std::int64_t checked_mul10(std::int64_t v, int digit, bool& overflow) {
  if (v > (INT64_MAX - digit) / 10) {
    overflow = true;
    return v;
  }
  return v * 10 + digit;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const char* p = text.c_str();
  while (std::isspace(static_cast<unsigned char>(*p))) ++p;
  bool negative = false;
  if (*p == '+' || *p == '-') {
    negative = (*p == '-');
    ++p;
  }
  bool overflow = false;
  std::int64_t mantissa = 0;
  int frac_digits = 0;
  bool any_digit = false;
  for (; std::isdigit(static_cast<unsigned char>(*p)); ++p) {
    mantissa = checked_mul10(mantissa, *p - '0', overflow);
    any_digit = true;
  }
  if (*p == '.') {
    ++p;
    for (; std::isdigit(static_cast<unsigned char>(*p)); ++p) {
      mantissa = checked_mul10(mantissa, *p - '0', overflow);
      ++frac_digits;
      any_digit = true;
    }
  }
  int exponent = 0;
  if (*p == 'e' || *p == 'E') {
    ++p;
    bool exp_neg = false;
    if (*p == '+' || *p == '-') {
      exp_neg = (*p == '-');
      ++p;
    }
    bool exp_digit = false;
    for (; std::isdigit(static_cast<unsigned char>(*p)); ++p) {
      exponent = exponent * 10 + (*p - '0');
      exp_digit = true;
      if (exponent > 40) overflow = true;
    }
    if (!exp_digit) throw Error("curve_model", "malformed decimal string '" + text + "'");
    if (exp_neg) exponent = -exponent;
  }
  while (std::isspace(static_cast<unsigned char>(*p))) ++p;
  if (!any_digit || *p != '\0')
    throw Error("curve_model", "malformed decimal string '" + text + "'");

  int shift = exponent - frac_digits;
  std::int64_t num = mantissa;
  std::int64_t den = 1;
  while (shift > 0 && !overflow) {
    num = checked_mul10(num, 0, overflow);
    --shift;
  }
  while (shift < 0 && !overflow) {
    den = checked_mul10(den, 0, overflow);
    ++shift;
  }
  if (overflow) throw Error("curve_model", "decimal string '" + text + "' exceeds exact range");
  if (negative) num = -num;

  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

double parse_decimal(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
  if (end == begin || (end && *end != '\0'))
    throw Error("cli", "malformed decimal value '" + text + "'");
  return v;
}

std::string format_complex(const Complex& z) {
  return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
}

}  // namespace schifferlab
