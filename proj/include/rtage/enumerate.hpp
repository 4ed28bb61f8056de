#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rtage/rotation.hpp"

namespace rtage {

enum class ConstraintMode { integral_both, integral_lambda_only, unconstrained };

std::string_view to_string(ConstraintMode m);
ConstraintMode parse_constraint_mode(std::string_view text);

struct EnumerationConfig {
  int h = 0;
  int r = 0;
  std::int64_t order_divides = 12;
  ConstraintMode mode = ConstraintMode::integral_both;
};

/// Conjugacy-class data of a boundary stabilizer element: its spectrum on W
/// (dim h) and on Lambda (x) C (dim r).
///
/// For h >= 1 the element s and -s act identically on V, so enumeration emits
/// one representative per pair {s, -s}: the larger in (w_spec, lambda_spec)
/// order. The pair {1, -1} is emitted once, as -1, with kernel_on_v set.
struct ElementClass {
  int h = 0;
  int r = 0;
  Spectrum w_spec;
  Spectrum lambda_spec;
  std::int64_t order = 1;
  /// v_spectrum(w_spec, lambda_spec) is identically zero.
  bool kernel_on_v = false;

  bool operator==(const ElementClass&) const = default;
  std::strong_ordering operator<=>(const ElementClass& o) const;
};

/// Builds the canonical representative of the class of (w, b); N is the order
/// bound of the enumeration it belongs to (identification needs 2 | N).
ElementClass canonical_class(const Spectrum& w, const Spectrum& b, std::int64_t order_divides);

/// Slice of an enumeration stream: item t goes to the worker with
/// t % count == index.
struct Partition {
  std::size_t index = 0;
  std::size_t count = 1;
};

using SignatureVisitor = std::function<void(const OrbitSignature&)>;
using SpectrumVisitor = std::function<void(const Spectrum&)>;
using ClassVisitor = std::function<void(const ElementClass&)>;

/// Every multiset {n_j} with n_j | N and sum phi(n_j) = dim, exactly once, in
/// lexicographic order of the sorted parts.
void for_each_signature(std::int64_t dim, std::int64_t order_divides, const SignatureVisitor& visit);
std::vector<OrbitSignature> cyclotomic_signatures(std::int64_t dim, std::int64_t order_divides);

/// Spectra of integral operators of rank r whose order divides N.
std::vector<Spectrum> lattice_classes(int r, std::int64_t order_divides);

/// All a with |a| = h, order | N and validate_ppav(a), sorted canonically.
std::vector<Spectrum> ppav_classes(int h, std::int64_t order_divides);
/// Filter over all h-multisets of {k/N}.
std::vector<Spectrum> ppav_classes_bruteforce(int h, std::int64_t order_divides);
/// Direct assembly: for each n | N with n >= 3 pick a multiplicity c and,
/// for every pair {k/n, -k/n}, a split m + m' = c; orders 1 and 2 are free.
std::vector<Spectrum> ppav_classes_assembled(int h, std::int64_t order_divides);

/// All multisets of size dim over {k/N : 0 <= k < N}, sorted canonically.
std::vector<Spectrum> unconstrained_spectra(int dim, std::int64_t order_divides);

/// Streams the classes described by cfg; see ElementClass for the +-1 rule.
/// For h = 0 the identity is omitted and nothing is identified.
void for_each_class(const EnumerationConfig& cfg, const ClassVisitor& visit, Partition part = {});
std::vector<ElementClass> element_classes(const EnumerationConfig& cfg);

}  // namespace rtage
