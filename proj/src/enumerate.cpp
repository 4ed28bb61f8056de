#include "rtage/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rtage/reps.hpp"

namespace rtage {

std::string_view to_string(ConstraintMode m) {
  switch (m) {
    case ConstraintMode::integral_both: return "integral-both";
    case ConstraintMode::integral_lambda_only: return "integral-lambda-only";
    case ConstraintMode::unconstrained: return "unconstrained";
  }
  return "?";
}

ConstraintMode parse_constraint_mode(std::string_view text) {
  if (text == "integral-both") return ConstraintMode::integral_both;
  if (text == "integral-lambda-only") return ConstraintMode::integral_lambda_only;
  if (text == "unconstrained") return ConstraintMode::unconstrained;
  throw std::invalid_argument("unknown constraint mode '" + std::string(text) + "'");
}

std::strong_ordering ElementClass::operator<=>(const ElementClass& o) const {
  if (auto c = h <=> o.h; c != 0) return c;
  if (auto c = r <=> o.r; c != 0) return c;
  if (auto c = w_spec <=> o.w_spec; c != 0) return c;
  return lambda_spec <=> o.lambda_spec;
}

namespace {

void check_order_bound(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("order bound must be positive");
  if (n > kMaxDenominator)
    throw std::invalid_argument("order bound " + std::to_string(n) + " exceeds " + std::to_string(kMaxDenominator));
}

ElementClass make_class(const Spectrum& w, const Spectrum& b) {
  ElementClass c;
  c.h = static_cast<int>(w.dim());
  c.r = static_cast<int>(b.dim());
  c.w_spec = w;
  c.lambda_spec = b;
  c.order = std::lcm(element_order(w), element_order(b));
  c.kernel_on_v = v_spectrum(w, b).is_trivial();
  return c;
}

// Calls visit(multiset) for every non-decreasing sequence of `size` indices in
// [0, base), as counts over the alphabet.
void for_each_multiset(int size, std::int64_t base, const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> idx(static_cast<std::size_t>(size), 0);
  if (size == 0) {
    visit(idx);
    return;
  }
  while (true) {
    visit(idx);
    int pos = size - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == base - 1) --pos;
    if (pos < 0) return;
    const std::int64_t next = idx[static_cast<std::size_t>(pos)] + 1;
    for (int k = pos; k < size; ++k) idx[static_cast<std::size_t>(k)] = next;
  }
}

}  // namespace

ElementClass canonical_class(const Spectrum& w, const Spectrum& b, std::int64_t order_divides) {
  if (w.dim() >= 1 && order_divides % 2 == 0) {
    Spectrum fw = sign_flip(w);
    Spectrum fb = sign_flip(b);
    if (std::tie(fw, fb) > std::tie(w, b)) return make_class(fw, fb);
  }
  return make_class(w, b);
}

void for_each_signature(std::int64_t dim, std::int64_t order_divides, const SignatureVisitor& visit) {
  if (dim < 0) throw std::invalid_argument("signature dimension must be non-negative");
  check_order_bound(order_divides);
  const auto divs = divisors(order_divides);
  std::vector<std::int64_t> parts;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from, std::int64_t remaining) {
    if (remaining == 0) {
      visit(OrbitSignature(parts));
      return;
    }
    for (std::size_t i = from; i < divs.size(); ++i) {
      const std::int64_t deg = totient(divs[i]);
      if (deg > remaining) continue;
      parts.push_back(divs[i]);
      rec(i, remaining - deg);
      parts.pop_back();
    }
  };
  rec(0, dim);
}

std::vector<OrbitSignature> cyclotomic_signatures(std::int64_t dim, std::int64_t order_divides) {
  std::vector<OrbitSignature> out;
  for_each_signature(dim, order_divides, [&](const OrbitSignature& s) { out.push_back(s); });
  return out;
}

std::vector<Spectrum> lattice_classes(int r, std::int64_t order_divides) {
  std::vector<Spectrum> out;
  for_each_signature(r, order_divides, [&](const OrbitSignature& s) { out.push_back(s.spectrum()); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Spectrum> unconstrained_spectra(int dim, std::int64_t order_divides) {
  if (dim < 0) throw std::invalid_argument("dimension must be non-negative");
  check_order_bound(order_divides);
  std::vector<Spectrum> out;
  for_each_multiset(dim, order_divides, [&](const std::vector<std::int64_t>& idx) {
    std::vector<RotationNumber> e;
    e.reserve(idx.size());
    for (auto k : idx) e.emplace_back(k, order_divides);
    out.emplace_back(std::move(e));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Spectrum> ppav_classes_bruteforce(int h, std::int64_t order_divides) {
  std::vector<Spectrum> out;
  for (auto& s : unconstrained_spectra(h, order_divides))
    if (validate_ppav(s)) out.push_back(std::move(s));
  return out;
}

std::vector<Spectrum> ppav_classes_assembled(int h, std::int64_t order_divides) {
  if (h < 0) throw std::invalid_argument("dimension must be non-negative");
  check_order_bound(order_divides);
  const auto divs = divisors(order_divides);
  std::vector<Spectrum> out;
  std::vector<RotationNumber> entries;

  // Pairs {k/n, (n-k)/n} with k < n/2 and gcd(k, n) = 1.
  auto unit_pairs = [](std::int64_t n) {
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 1; 2 * k < n; ++k)
      if (std::gcd(k, n) == 1) ks.push_back(k);
    return ks;
  };

  std::function<void(std::size_t, std::int64_t)> by_divisor;

  // Distributes multiplicity c over the pairs of orbit n, one pair at a time.
  std::function<void(std::int64_t, const std::vector<std::int64_t>&, std::size_t, std::int64_t, std::size_t, std::int64_t)>
      split_pairs = [&](std::int64_t n, const std::vector<std::int64_t>& ks, std::size_t p, std::int64_t c,
                        std::size_t next_div, std::int64_t remaining) {
        if (p == ks.size()) {
          by_divisor(next_div, remaining);
          return;
        }
        const std::size_t mark = entries.size();
        for (std::int64_t m = 0; m <= c; ++m) {
          entries.resize(mark);
          entries.insert(entries.end(), static_cast<std::size_t>(m), RotationNumber(ks[p], n));
          entries.insert(entries.end(), static_cast<std::size_t>(c - m), RotationNumber(n - ks[p], n));
          split_pairs(n, ks, p + 1, c, next_div, remaining);
        }
        entries.resize(mark);
      };

  by_divisor = [&](std::size_t i, std::int64_t remaining) {
    if (i == divs.size()) {
      if (remaining == 0) out.emplace_back(entries);
      return;
    }
    const std::int64_t n = divs[i];
    const std::size_t mark = entries.size();
    if (n <= 2) {
      for (std::int64_t m = 0; m <= remaining; ++m) {
        entries.resize(mark);
        entries.insert(entries.end(), static_cast<std::size_t>(m), RotationNumber(n == 1 ? 0 : 1, n));
        by_divisor(i + 1, remaining - m);
      }
    } else {
      const auto ks = unit_pairs(n);
      const auto half = static_cast<std::int64_t>(ks.size());
      for (std::int64_t c = 0; c * half <= remaining; ++c) {
        entries.resize(mark);
        split_pairs(n, ks, 0, c, i + 1, remaining - c * half);
      }
    }
    entries.resize(mark);
  };

  by_divisor(0, h);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Spectrum> ppav_classes(int h, std::int64_t order_divides) {
  return h <= 3 ? ppav_classes_bruteforce(h, order_divides) : ppav_classes_assembled(h, order_divides);
}

void for_each_class(const EnumerationConfig& cfg, const ClassVisitor& visit, Partition part) {
  if (cfg.h < 0 || cfg.r < 0) throw std::invalid_argument("h and r must be non-negative");
  if (part.count == 0 || part.index >= part.count) throw std::invalid_argument("invalid partition");
  check_order_bound(cfg.order_divides);
  const std::int64_t n = cfg.order_divides;

  const auto ws = cfg.mode == ConstraintMode::integral_both ? ppav_classes(cfg.h, n) : unconstrained_spectra(cfg.h, n);
  const auto ls = cfg.mode == ConstraintMode::unconstrained ? unconstrained_spectra(cfg.r, n) : lattice_classes(cfg.r, n);
  // Both families are closed under s -> -s when 2 | N, so keeping the larger
  // member of each pair emits every class exactly once.
  const bool identify = cfg.h >= 1 && n % 2 == 0;

  std::size_t t = 0;
  for (const auto& w : ws) {
    const Spectrum fw = identify ? sign_flip(w) : Spectrum{};
    for (const auto& b : ls) {
      if (t++ % part.count != part.index) continue;
      if (identify) {
        const Spectrum fb = sign_flip(b);
        if (std::tie(fw, fb) > std::tie(w, b)) continue;
      } else if (cfg.h == 0 && b.is_trivial()) {
        continue;
      }
      visit(make_class(w, b));
    }
  }
}

std::vector<ElementClass> element_classes(const EnumerationConfig& cfg) {
  std::vector<ElementClass> out;
  for_each_class(cfg, [&](const ElementClass& c) { out.push_back(c); });
  return out;
}

}  // namespace rtage
