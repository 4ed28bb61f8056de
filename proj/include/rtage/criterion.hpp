#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rtage/enumerate.hpp"
#include "rtage/reps.hpp"

namespace rtage {

enum class VerdictKind { terminal, canonical_not_terminal, not_canonical, quasi_reflection };

std::string_view to_string(VerdictKind k);
VerdictKind parse_verdict_kind(std::string_view text);

/// Reid-Shepherd-Barron-Tai classification of a cyclic germ.
struct Verdict {
  VerdictKind kind = VerdictKind::terminal;
  /// Exponent k of the power that decides the verdict (the first minimizer,
  /// or the first quasi-reflection).
  std::int64_t witness_power = 0;
  Age witness_age;

  bool operator==(const Verdict&) const = default;
};

/// Raised when a germ has no nontrivial power: the point is smooth.
class IdentityGerm : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Classifies the cyclic group generated by s from the tangent spectra of its
/// powers s^k, 1 <= k < order. Powers acting trivially are skipped.
Verdict rst_verdict(const std::function<Spectrum(std::int64_t)>& tangent_of, std::int64_t order);
/// Convenience overload: tangent_of(k) = power(s, k), order = element_order(s).
Verdict rst_verdict(const Spectrum& s);

/// A class whose V-age is below the threshold, with the split of the age.
struct ExceptionRecord {
  ElementClass cls;
  Age age_sym2;
  Age age_tensor;
  Age age_v;
  /// h = 1, s|W = -1 and s|Lambda has exactly one eigenvalue 1, the rest -1.
  bool matches_iii = false;

  bool operator==(const ExceptionRecord&) const = default;
};

ExceptionRecord make_exception_record(const ElementClass& c);
bool matches_exceptional_shape(const ElementClass& c);

/// Which classes count as exceptional: age_v < 1 fails canonicity, age_v <= 1
/// fails terminality.
enum class Threshold { canonical, terminal };
std::string_view to_string(Threshold t);
Threshold parse_threshold(std::string_view text);
bool below_threshold(const Age& a, Threshold t);

/// A machine-checked proposition failed on a concrete class.
class PropositionViolation : public std::runtime_error {
public:
  PropositionViolation(std::string proposition, ElementClass cls, Age age_v, std::string detail);

  const std::string& proposition() const { return proposition_; }
  const ElementClass& cls() const { return cls_; }
  const Age& age_v() const { return age_v_; }
  const std::string& detail() const { return detail_; }

private:
  std::string proposition_;
  ElementClass cls_;
  Age age_v_;
  std::string detail_;
};

/// Running minimum over an enumeration together with all minimizers.
template <typename Item>
struct Minimum {
  std::optional<Age> value;
  std::vector<Item> witnesses;
  std::size_t count = 0;

  void offer(const Age& a, const Item& item) {
    ++count;
    if (!value || a < *value) {
      value = a;
      witnesses.clear();
    }
    if (a == *value) witnesses.push_back(item);
  }
  void merge(const Minimum& o) {
    count += o.count;
    if (!o.value) return;
    if (!value || *o.value < *value) {
      value = o.value;
      witnesses = o.witnesses;
    } else if (*o.value == *value) {
      witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
    }
  }
};

/// min age(sym2(a)) over ppav classes of dimension h with a != +-1.
Minimum<Spectrum> sweep_sym2(int h, std::int64_t order_divides, unsigned jobs = 1);

struct VSweep {
  int h = 0;
  int r = 0;
  /// Minimum of age_v over classes not acting trivially on V.
  Minimum<ElementClass> minimum;
  std::vector<ExceptionRecord> exceptions;
};

/// All classes for cfg with age_v below the threshold, sorted. When
/// h + r >= 5 every class with age_v < 1 must act on V with order exactly 2;
/// otherwise PropositionViolation("ii") is thrown.
VSweep sweep_v(const EnumerationConfig& cfg, Threshold threshold = Threshold::canonical, unsigned jobs = 1);

/// sweep_v at every (h, g - h), h = 1..g. When g >= 5 the classes with
/// age_v < 1 must be exactly the exceptional shape at h = 1 with age 1/2;
/// otherwise PropositionViolation("iii") is thrown.
std::vector<VSweep> exception_catalog(int g, std::int64_t order_divides,
                                      ConstraintMode mode = ConstraintMode::integral_both,
                                      Threshold threshold = Threshold::canonical, unsigned jobs = 1);

struct InteriorSummary {
  int g = 0;
  VerdictKind kind = VerdictKind::terminal;
  Minimum<Spectrum> minimum;
};

/// Classifies the interior at genus g from the Sym^2 sweep at h = g:
/// min > 1 terminal, min = 1 canonical, min < 1 not canonical.
InteriorSummary interior_verdict(int g, std::int64_t order_divides, unsigned jobs = 1);

/// Minimum over the forms of the induced action on B(Lambda) for h = 0.
struct TorusSummary {
  int r = 0;
  Minimum<Spectrum> minimum;
};
TorusSummary torus_sweep(int r, std::int64_t order_divides, ConstraintMode mode = ConstraintMode::integral_both);

/// Dimension of the moved part of B(Lambda_Q): r(r+1)/2 - fixed multiplicity.
std::size_t boundary_moved_count(const Spectrum& b);

struct ReductionSupport {
  std::int64_t n = 0;
  Age min_age;
  Spectrum minimizer;
};

/// Minimum of age(sym2(a)) over halves a with a + (-a) = galois_orbit(n), for
/// orders n not dividing 12. Single-orbit evidence for the order reduction.
ReductionSupport reduction_support(std::int64_t n, int h_max);

}  // namespace rtage
