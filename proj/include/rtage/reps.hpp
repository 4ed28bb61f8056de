#pragma once

#include <cstddef>
#include <span>

#include "rtage/rational.hpp"
#include "rtage/rotation.hpp"

namespace rtage {

/// Exact age: sum of the fractional parts of the eigenvalue angles.
using Age = Rational;

Age age(const Spectrum& s);

/// Spectrum of the symmetric square: {a_i + a_j : i <= j}.
Spectrum sym2(const Spectrum& a);
/// Spectrum of the tensor product: {a_i + b_p}.
Spectrum tensor(const Spectrum& a, const Spectrum& b);
Spectrum direct_sum(std::span<const Spectrum> parts);
Spectrum direct_sum(const Spectrum& x, const Spectrum& y);
/// Spectrum of s^k, k >= 0.
Spectrum power(const Spectrum& s, std::int64_t k);
/// Spectrum of the dual (complex conjugate) operator.
Spectrum negation(const Spectrum& s);
/// Spectrum of -s: every entry shifted by 1/2.
Spectrum sign_flip(const Spectrum& s);

/// Multiplicity of the eigenvalue 1.
std::size_t fixed_multiplicity(const Spectrum& s);

/// V = Sym^2 W + W (x) Lambda for W-spectrum a (dim h) and Lambda-spectrum b
/// (dim r); dimension h(h+1)/2 + hr.
Spectrum v_spectrum(const Spectrum& a, const Spectrum& b);

/// Action on the symmetric bilinear forms B(Lambda), i.e. Sym^2 of b.
Spectrum forms_spectrum(const Spectrum& b);

}  // namespace rtage
