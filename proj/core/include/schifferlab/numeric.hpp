#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace schifferlab {

using Real = double;
using Complex = std::complex<double>;

/// Domain error carrying the originating module's name. CLI maps these to
/// exit code 1; anything else is a bug.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& message)
      : std::runtime_error(module + ": " + message), module_(std::move(module)) {}
  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

/// Exact rational holding an ingested decimal coefficient. Only decimal
/// strings (optional sign, fraction, e-exponent) are accepted; values are
/// converted to working precision exactly once.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational parse(const std::string& text);
  static Rational from_int(std::int64_t v) { return Rational{v, 1}; }

  double to_double() const { return static_cast<double>(static_cast<long double>(num) / den); }
  bool is_zero() const { return num == 0; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  std::string to_string() const;
};

/// Deterministic RNG. std::mt19937_64 has a pinned bit stream; the mapping
/// helpers below avoid the implementation-defined std distributions so that
/// seeded runs reproduce across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  Complex uniform_complex(double radius) {
    return Complex(uniform(-radius, radius), uniform(-radius, radius));
  }

 private:
  std::mt19937_64 eng_;
};

/// Shortest round-trip decimal form of a double, used everywhere a value is
/// serialized; identical inputs produce byte-identical output.
std::string format_double(double v);
double parse_decimal(const std::string& text);

std::string format_complex(const Complex& z);

inline double sq(double x) { return x * x; }

}  // namespace schifferlab
