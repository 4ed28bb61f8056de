#include "rtage/rotation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rtage {

RotationNumber::RotationNumber(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("RotationNumber: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den > kMaxDenominator)
    throw std::invalid_argument("RotationNumber: denominator " + std::to_string(den) +
                                " exceeds " + std::to_string(kMaxDenominator));
  num_ = static_cast<std::int32_t>(num);
  den_ = static_cast<std::int32_t>(den);
}

RotationNumber RotationNumber::operator+(const RotationNumber& o) const {
  const std::int64_t l = std::lcm<std::int64_t>(den_, o.den_);
  return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
}

RotationNumber RotationNumber::operator-() const { return {-static_cast<std::int64_t>(num_), den_}; }

RotationNumber RotationNumber::times(std::int64_t k) const { return {(k % den_) * num_, den_}; }

RotationNumber RotationNumber::parse(std::string_view text) {
  const Rational r = Rational::parse(text);
  return {r.num(), r.den()};
}

Spectrum::Spectrum(std::vector<RotationNumber> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

Spectrum::Spectrum(std::initializer_list<RotationNumber> entries)
    : Spectrum(std::vector<RotationNumber>(entries)) {}

bool Spectrum::is_trivial() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& q) { return q.is_zero(); });
}

bool Spectrum::is_constant(const RotationNumber& c) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](const auto& q) { return q == c; });
}

std::size_t Spectrum::count(const RotationNumber& q) const {
  auto [lo, hi] = std::equal_range(entries_.begin(), entries_.end(), q);
  return static_cast<std::size_t>(hi - lo);
}

std::vector<std::string> Spectrum::to_strings() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& q : entries_) out.push_back(q.str());
  return out;
}

Spectrum Spectrum::from_strings(const std::vector<std::string>& items) {
  std::vector<RotationNumber> entries;
  entries.reserve(items.size());
  for (const auto& s : items) entries.push_back(RotationNumber::parse(s));
  return Spectrum(std::move(entries));
}

std::string Spectrum::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? ", " : "") << entries_[i].str();
  os << '}';
  return os.str();
}

namespace {

std::int64_t totient_trial(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

std::int64_t totient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("totient: n must be positive");
  static const auto table = [] {
    std::array<std::int64_t, kMaxDenominator + 1> t{};
    for (std::int64_t k = 1; k <= kMaxDenominator; ++k) t[k] = totient_trial(k);
    return t;
  }();
  return n <= kMaxDenominator ? table[n] : totient_trial(n);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

OrbitSignature::OrbitSignature(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (auto n : parts_)
    if (n < 1) throw std::invalid_argument("OrbitSignature: orbit orders must be positive");
  std::sort(parts_.begin(), parts_.end());
}

std::int64_t OrbitSignature::total_degree() const {
  std::int64_t d = 0;
  for (auto n : parts_) d += totient(n);
  return d;
}

Spectrum OrbitSignature::spectrum() const {
  std::vector<RotationNumber> entries;
  for (auto n : parts_) {
    const Spectrum orbit = galois_orbit(n);
    entries.insert(entries.end(), orbit.begin(), orbit.end());
  }
  return Spectrum(std::move(entries));
}

std::string OrbitSignature::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << '}';
  return os.str();
}

Spectrum galois_orbit(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("galois_orbit: n must be positive");
  if (n == 1) return Spectrum{RotationNumber{}};
  std::vector<RotationNumber> entries;
  for (std::int64_t k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) entries.emplace_back(k, n);
  return Spectrum(std::move(entries));
}

bool validate_integral(const Spectrum& s) {
  // Entries are sorted by (den, num): walk one denominator block at a time,
  // each unit k/n must occur, all with the same multiplicity.
  const auto& e = s.entries();
  std::size_t i = 0;
  while (i < e.size()) {
    const std::int32_t n = e[i].den();
    std::size_t distinct = 0;
    std::size_t mult = 0;
    bool uniform = true;
    while (i < e.size() && e[i].den() == n) {
      std::size_t j = i;
      while (j < e.size() && e[j] == e[i]) ++j;
      const std::size_t m = j - i;
      if (distinct == 0) mult = m;
      else if (m != mult) uniform = false;
      ++distinct;
      i = j;
    }
    if (!uniform || static_cast<std::int64_t>(distinct) != totient(n)) return false;
  }
  return true;
}

bool validate_ppav(const Spectrum& a) {
  std::vector<RotationNumber> doubled = a.entries();
  for (const auto& q : a) doubled.push_back(-q);
  return validate_integral(Spectrum(std::move(doubled)));
}

std::int64_t element_order(const Spectrum& s) {
  std::int64_t order = 1;
  for (const auto& q : s) order = std::lcm<std::int64_t>(order, q.den());
  return order;
}

OrbitSignature signature_of(const Spectrum& s) {
  if (!validate_integral(s)) throw std::invalid_argument("signature_of: spectrum " + s.str() + " is not integral");
  std::map<std::int64_t, std::size_t> per_den;
  for (const auto& q : s) ++per_den[q.den()];
  std::vector<std::int64_t> parts;
  for (auto [n, size] : per_den)
    parts.insert(parts.end(), size / static_cast<std::size_t>(totient(n)), n);
  return OrbitSignature(std::move(parts));
}

}  // namespace rtage
