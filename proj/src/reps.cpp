#include "rtage/reps.hpp"

#include <stdexcept>
#include <vector>

namespace rtage {

Age age(const Spectrum& s) {
  Age total;
  for (const auto& q : s) total += q.value();
  return total;
}

Spectrum sym2(const Spectrum& a) {
  const auto& e = a.entries();
  std::vector<RotationNumber> out;
  out.reserve(e.size() * (e.size() + 1) / 2);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j) out.push_back(e[i] + e[j]);
  return Spectrum(std::move(out));
}

Spectrum tensor(const Spectrum& a, const Spectrum& b) {
  std::vector<RotationNumber> out;
  out.reserve(a.dim() * b.dim());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + y);
  return Spectrum(std::move(out));
}

Spectrum direct_sum(std::span<const Spectrum> parts) {
  std::vector<RotationNumber> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return Spectrum(std::move(out));
}

Spectrum direct_sum(const Spectrum& x, const Spectrum& y) {
  const Spectrum parts[] = {x, y};
  return direct_sum(parts);
}

Spectrum power(const Spectrum& s, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("power: exponent must be non-negative");
  std::vector<RotationNumber> out;
  out.reserve(s.dim());
  for (const auto& q : s) out.push_back(q.times(k));
  return Spectrum(std::move(out));
}

Spectrum negation(const Spectrum& s) {
  std::vector<RotationNumber> out;
  out.reserve(s.dim());
  for (const auto& q : s) out.push_back(-q);
  return Spectrum(std::move(out));
}

Spectrum sign_flip(const Spectrum& s) {
  const RotationNumber half(1, 2);
  std::vector<RotationNumber> out;
  out.reserve(s.dim());
  for (const auto& q : s) out.push_back(q + half);
  return Spectrum(std::move(out));
}

std::size_t fixed_multiplicity(const Spectrum& s) { return s.count(RotationNumber{}); }

Spectrum v_spectrum(const Spectrum& a, const Spectrum& b) { return direct_sum(sym2(a), tensor(a, b)); }

Spectrum forms_spectrum(const Spectrum& b) { return sym2(b); }

}  // namespace rtage
