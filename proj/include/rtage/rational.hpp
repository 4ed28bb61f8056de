#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rtage {

/// Exact rational with a 64-bit numerator and positive denominator, always in
/// lowest terms. Ages never leave the range [0, dim] with denominators
/// bounded by the enumeration order, so machine words are enough.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT implicit
  constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr Rational operator+(const Rational& o) const {
    const std::int64_t g = std::gcd(den_, o.den_);
    return {num_ * (o.den_ / g) + o.num_ * (den_ / g), den_ / g * o.den_};
  }
  constexpr Rational operator-(const Rational& o) const { return *this + Rational(-o.num_, o.den_); }
  constexpr Rational operator-() const { return Rational(-num_, den_); }
  constexpr Rational operator*(const Rational& o) const { return {num_ * o.num_, den_ * o.den_}; }
  constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }
  constexpr Rational& operator-=(const Rational& o) { return *this = *this - o; }

  constexpr bool operator==(const Rational&) const = default;
  constexpr std::strong_ordering operator<=>(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ <=> static_cast<__int128>(o.num_) * den_;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Always "num/den", including "0/1" and "1/1".
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }
  static Rational parse(std::string_view text);

private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace rtage
