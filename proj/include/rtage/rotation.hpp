#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "rtage/rational.hpp"

namespace rtage {

/// Largest denominator a rotation number may carry. Every sweep runs with
/// orders dividing some N <= 360, so products and sums stay in 32 bits.
inline constexpr std::int32_t kMaxDenominator = 360;

/// Element of Q/Z in lowest terms, 0 <= num < den; encodes exp(2 pi i num/den).
class RotationNumber {
public:
  constexpr RotationNumber() = default;
  /// Reduces num/den mod 1. Throws std::invalid_argument when den <= 0 or the
  /// reduced denominator exceeds kMaxDenominator.
  RotationNumber(std::int64_t num, std::int64_t den);

  std::int32_t num() const { return num_; }
  std::int32_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  /// The fractional part as an exact rational in [0, 1).
  Rational value() const { return {num_, den_}; }

  RotationNumber operator+(const RotationNumber& o) const;
  RotationNumber operator-() const;
  RotationNumber operator-(const RotationNumber& o) const { return *this + (-o); }
  /// k * q mod 1; k may be negative.
  RotationNumber times(std::int64_t k) const;

  bool operator==(const RotationNumber&) const = default;
  /// Canonical order: by denominator, then numerator.
  std::strong_ordering operator<=>(const RotationNumber& o) const {
    if (auto c = den_ <=> o.den_; c != 0) return c;
    return num_ <=> o.num_;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }
  /// Accepts "p/q" or an integer string; the value is taken mod 1.
  static RotationNumber parse(std::string_view text);

private:
  std::int32_t num_ = 0;
  std::int32_t den_ = 1;
};

/// A finite multiset of rotation numbers, stored sorted in canonical order so
/// that equal multisets compare equal structurally.
class Spectrum {
public:
  using value_type = RotationNumber;
  using const_iterator = std::vector<RotationNumber>::const_iterator;

  Spectrum() = default;
  explicit Spectrum(std::vector<RotationNumber> entries);
  Spectrum(std::initializer_list<RotationNumber> entries);

  std::size_t dim() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<RotationNumber>& entries() const { return entries_; }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  /// True when every entry is 0 (the operator is the identity).
  bool is_trivial() const;
  /// True when every entry equals c.
  bool is_constant(const RotationNumber& c) const;
  std::size_t count(const RotationNumber& q) const;

  bool operator==(const Spectrum&) const = default;
  auto operator<=>(const Spectrum& o) const { return entries_ <=> o.entries_; }

  std::vector<std::string> to_strings() const;
  static Spectrum from_strings(const std::vector<std::string>& items);
  /// "{0/1, 1/2}"
  std::string str() const;

private:
  std::vector<RotationNumber> entries_;
};

/// Euler's totient (memoized up to kMaxDenominator).
std::int64_t totient(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Multiset of orbit orders n_j; the spectrum of a block-diagonal matrix of
/// cyclotomic companion blocks.
class OrbitSignature {
public:
  OrbitSignature() = default;
  explicit OrbitSignature(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  /// Sum of totients of the parts.
  std::int64_t total_degree() const;
  /// Concatenation of the Galois orbits of the parts.
  Spectrum spectrum() const;

  bool operator==(const OrbitSignature&) const = default;
  auto operator<=>(const OrbitSignature& o) const { return parts_ <=> o.parts_; }
  std::string str() const;

private:
  std::vector<std::int64_t> parts_;
};

/// Primitive n-th roots of unity as rotation numbers; {0} for n = 1.
Spectrum galois_orbit(std::int64_t n);

/// True iff the multiset is a disjoint union of complete Galois orbits, i.e.
/// the characteristic polynomial is a product of cyclotomic polynomials.
bool validate_integral(const Spectrum& s);

/// True iff a together with its negation is integral: a can be the action on
/// the tangent space of an abelian variety with integral action on H_1.
bool validate_ppav(const Spectrum& a);

/// Order of the operator: lcm of the denominators, 1 for the identity.
std::int64_t element_order(const Spectrum& s);

/// Recovers the orbit signature of an integral spectrum; throws
/// std::invalid_argument if the spectrum is not integral.
OrbitSignature signature_of(const Spectrum& s);

}  // namespace rtage
