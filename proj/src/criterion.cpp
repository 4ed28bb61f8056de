#include "rtage/criterion.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

namespace rtage {

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::terminal: return "terminal";
    case VerdictKind::canonical_not_terminal: return "canonical-not-terminal";
    case VerdictKind::not_canonical: return "not-canonical";
    case VerdictKind::quasi_reflection: return "quasi-reflection";
  }
  return "?";
}

VerdictKind parse_verdict_kind(std::string_view text) {
  for (auto k : {VerdictKind::terminal, VerdictKind::canonical_not_terminal, VerdictKind::not_canonical,
                 VerdictKind::quasi_reflection})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

std::string_view to_string(Threshold t) { return t == Threshold::canonical ? "canonical" : "terminal"; }

Threshold parse_threshold(std::string_view text) {
  if (text == "canonical") return Threshold::canonical;
  if (text == "terminal") return Threshold::terminal;
  throw std::invalid_argument("unknown threshold '" + std::string(text) + "'");
}

bool below_threshold(const Age& a, Threshold t) { return t == Threshold::canonical ? a < Age(1) : a <= Age(1); }

namespace {

VerdictKind classify(const Age& min_age) {
  if (min_age > Age(1)) return VerdictKind::terminal;
  if (min_age == Age(1)) return VerdictKind::canonical_not_terminal;
  return VerdictKind::not_canonical;
}

// Runs work(partition, acc) on `jobs` threads and merges the accumulators in
// partition order, so the result does not depend on scheduling.
template <typename Acc, typename Work>
Acc parallel_fold(unsigned jobs, Work work) {
  jobs = std::max(1u, jobs);
  std::vector<Acc> parts(jobs);
  if (jobs == 1) {
    work(Partition{0, 1}, parts[0]);
    return std::move(parts[0]);
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> threads;
    for (unsigned i = 0; i < jobs; ++i)
      threads.emplace_back([&, i] {
        try {
          work(Partition{i, jobs}, parts[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc out = std::move(parts[0]);
  for (unsigned i = 1; i < jobs; ++i) out.merge(parts[i]);
  return out;
}

struct VAccumulator {
  Minimum<ElementClass> minimum;
  std::vector<ExceptionRecord> exceptions;
  void merge(const VAccumulator& o) {
    minimum.merge(o.minimum);
    exceptions.insert(exceptions.end(), o.exceptions.begin(), o.exceptions.end());
  }
};

template <typename Item>
struct MinAccumulator {
  Minimum<Item> minimum;
  void merge(const MinAccumulator& o) { minimum.merge(o.minimum); }
};

}  // namespace

Verdict rst_verdict(const std::function<Spectrum(std::int64_t)>& tangent_of, std::int64_t order) {
  if (order < 1) throw std::invalid_argument("rst_verdict: order must be positive");
  if (order == 1) throw IdentityGerm("rst_verdict: the identity germ has no verdict");
  std::optional<std::size_t> dim;
  std::optional<Verdict> quasi;
  std::optional<Age> min_age;
  std::int64_t min_power = 0;
  for (std::int64_t k = 1; k < order; ++k) {
    const Spectrum s = tangent_of(k);
    if (!dim) dim = s.dim();
    else if (*dim != s.dim()) throw std::invalid_argument("rst_verdict: tangent dimension varies with k");
    if (s.is_trivial()) continue;
    const Age a = age(s);
    if (!quasi && s.dim() - fixed_multiplicity(s) == 1) quasi = Verdict{VerdictKind::quasi_reflection, k, a};
    if (!min_age || a < *min_age) {
      min_age = a;
      min_power = k;
    }
  }
  if (!min_age) throw IdentityGerm("rst_verdict: every power acts trivially");
  if (quasi) return *quasi;
  return {classify(*min_age), min_power, *min_age};
}

Verdict rst_verdict(const Spectrum& s) {
  return rst_verdict([&](std::int64_t k) { return power(s, k); }, element_order(s));
}

bool matches_exceptional_shape(const ElementClass& c) {
  const RotationNumber half(1, 2);
  if (c.h != 1 || c.w_spec != Spectrum{half}) return false;
  const auto& b = c.lambda_spec;
  return c.r >= 1 && fixed_multiplicity(b) == 1 && b.count(half) == static_cast<std::size_t>(c.r - 1);
}

ExceptionRecord make_exception_record(const ElementClass& c) {
  ExceptionRecord rec;
  rec.cls = c;
  rec.age_sym2 = age(sym2(c.w_spec));
  rec.age_tensor = age(tensor(c.w_spec, c.lambda_spec));
  rec.age_v = rec.age_sym2 + rec.age_tensor;
  rec.matches_iii = matches_exceptional_shape(c);
  return rec;
}

PropositionViolation::PropositionViolation(std::string proposition, ElementClass cls, Age age_v, std::string detail)
    : std::runtime_error("proposition (" + proposition + ") violated at h=" + std::to_string(cls.h) +
                         " r=" + std::to_string(cls.r) + " w=" + cls.w_spec.str() + " lambda=" +
                         cls.lambda_spec.str() + " age_v=" + age_v.str() + ": " + detail),
      proposition_(std::move(proposition)),
      cls_(std::move(cls)),
      age_v_(age_v),
      detail_(std::move(detail)) {}

Minimum<Spectrum> sweep_sym2(int h, std::int64_t order_divides, unsigned jobs) {
  if (h < 1) throw std::invalid_argument("sweep_sym2: h must be at least 1");
  const auto classes = ppav_classes(h, order_divides);
  const RotationNumber zero;
  const RotationNumber half(1, 2);
  auto acc = parallel_fold<MinAccumulator<Spectrum>>(jobs, [&](Partition part, MinAccumulator<Spectrum>& out) {
    for (std::size_t i = part.index; i < classes.size(); i += part.count) {
      const auto& a = classes[i];
      if (a.is_constant(zero) || a.is_constant(half)) continue;
      out.minimum.offer(age(sym2(a)), a);
    }
  });
  std::sort(acc.minimum.witnesses.begin(), acc.minimum.witnesses.end());
  return std::move(acc.minimum);
}

VSweep sweep_v(const EnumerationConfig& cfg, Threshold threshold, unsigned jobs) {
  if (cfg.h < 1) throw std::invalid_argument("sweep_v: h must be at least 1");
  auto acc = parallel_fold<VAccumulator>(jobs, [&](Partition part, VAccumulator& out) {
    for_each_class(
        cfg,
        [&](const ElementClass& c) {
          if (c.kernel_on_v) return;
          const Age a = age(v_spectrum(c.w_spec, c.lambda_spec));
          out.minimum.offer(a, c);
          if (below_threshold(a, threshold)) out.exceptions.push_back(make_exception_record(c));
        },
        part);
  });
  VSweep result;
  result.h = cfg.h;
  result.r = cfg.r;
  result.minimum = std::move(acc.minimum);
  result.exceptions = std::move(acc.exceptions);
  std::sort(result.minimum.witnesses.begin(), result.minimum.witnesses.end());
  std::sort(result.exceptions.begin(), result.exceptions.end(),
            [](const ExceptionRecord& x, const ExceptionRecord& y) { return x.cls < y.cls; });

  if (cfg.h + cfg.r >= 5) {
    for (const auto& rec : result.exceptions) {
      if (rec.age_v >= Age(1)) continue;
      const auto v_order = element_order(v_spectrum(rec.cls.w_spec, rec.cls.lambda_spec));
      if (v_order != 2)
        throw PropositionViolation("ii", rec.cls, rec.age_v,
                                   "age_v < 1 but s|V has order " + std::to_string(v_order));
    }
  }
  return result;
}

std::vector<VSweep> exception_catalog(int g, std::int64_t order_divides, ConstraintMode mode, Threshold threshold,
                                      unsigned jobs) {
  if (g < 1) throw std::invalid_argument("exception_catalog: g must be at least 1");
  std::vector<VSweep> out;
  for (int h = 1; h <= g; ++h) out.push_back(sweep_v({h, g - h, order_divides, mode}, threshold, jobs));
  if (g >= 5) {
    for (const auto& sweep : out)
      for (const auto& rec : sweep.exceptions) {
        if (rec.age_v >= Age(1)) continue;
        if (!rec.matches_iii) throw PropositionViolation("iii", rec.cls, rec.age_v, "not of the exceptional shape");
        if (rec.age_v != Age(1, 2)) throw PropositionViolation("iii", rec.cls, rec.age_v, "age_v differs from 1/2");
      }
  }
  return out;
}

InteriorSummary interior_verdict(int g, std::int64_t order_divides, unsigned jobs) {
  if (g < 1) throw std::invalid_argument("interior_verdict: g must be at least 1");
  InteriorSummary s;
  s.g = g;
  s.minimum = sweep_sym2(g, order_divides, jobs);
  // No class other than +-1: nothing acts, so the interior is smooth here.
  s.kind = s.minimum.value ? classify(*s.minimum.value) : VerdictKind::terminal;
  return s;
}

TorusSummary torus_sweep(int r, std::int64_t order_divides, ConstraintMode mode) {
  TorusSummary s;
  s.r = r;
  for_each_class({0, r, order_divides, mode}, [&](const ElementClass& c) {
    const Spectrum forms = forms_spectrum(c.lambda_spec);
    if (!forms.is_trivial()) s.minimum.offer(age(forms), c.lambda_spec);
  });
  std::sort(s.minimum.witnesses.begin(), s.minimum.witnesses.end());
  return s;
}

std::size_t boundary_moved_count(const Spectrum& b) {
  const std::size_t r = b.dim();
  return r * (r + 1) / 2 - fixed_multiplicity(forms_spectrum(b));
}

ReductionSupport reduction_support(std::int64_t n, int h_max) {
  if (n < 1) throw std::invalid_argument("reduction_support: n must be positive");
  if (12 % n == 0) throw std::invalid_argument("reduction_support: n divides 12");
  const std::int64_t phi = totient(n);
  if (phi % 2 != 0) throw std::invalid_argument("reduction_support: odd orbit degree has no half embedding");
  if (phi > 2 * static_cast<std::int64_t>(h_max))
    throw std::invalid_argument("reduction_support: orbit degree exceeds 2*h_max");

  std::vector<std::int64_t> ks;
  for (std::int64_t k = 1; 2 * k < n; ++k)
    if (std::gcd(k, n) == 1) ks.push_back(k);

  ReductionSupport best;
  best.n = n;
  bool first = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ks.size()); ++mask) {
    std::vector<RotationNumber> half;
    for (std::size_t p = 0; p < ks.size(); ++p) half.emplace_back((mask >> p) & 1 ? n - ks[p] : ks[p], n);
    Spectrum a(std::move(half));
    const Age v = age(sym2(a));
    if (first || v < best.min_age || (v == best.min_age && a < best.minimizer)) {
      best.min_age = v;
      best.minimizer = std::move(a);
      first = false;
    }
  }
  return best;
}

}  // namespace rtage
