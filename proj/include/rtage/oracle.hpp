#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "rtage/rotation.hpp"

namespace rtage::oracle {

/// Numeric cross-check failed to produce a trustworthy answer.
class OracleFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dense square integer matrix, row-major.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntegerMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  /// Throws OracleFailure on 64-bit overflow.
  IntegerMatrix operator*(const IntegerMatrix& o) const;
  IntegerMatrix pow(std::int64_t k) const;
  bool operator==(const IntegerMatrix&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);
/// Companion matrix of a monic polynomial given lowest degree first.
IntegerMatrix companion(const std::vector<std::int64_t>& monic);
/// Block-diagonal matrix of the companions of Phi_{n_j}.
IntegerMatrix realize(const OrbitSignature& sig);

IntegerMatrix block_diagonal(const std::vector<IntegerMatrix>& blocks);
/// The operator induced on Sym^2 in the basis e_i e_j, i <= j.
IntegerMatrix induced_sym2(const IntegerMatrix& m);
IntegerMatrix kronecker(const IntegerMatrix& a, const IntegerMatrix& b);

/// Smallest k in [1, bound] with m^k = 1; OracleFailure if none.
std::int64_t matrix_order(const IntegerMatrix& m, std::int64_t bound = kMaxDenominator);

/// Eigenvalue angles / 2 pi in [0, 1), sorted. The matrix is first conjugated
/// to an orthogonal one (Cholesky factor of sum_k (m^k)^T m^k), so the
/// eigenproblem is perfectly conditioned. Every angle must lie within 1e-9 of
/// a multiple of 1/order, else OracleFailure.
std::vector<double> numeric_angles(const IntegerMatrix& m);

/// Greedy nearest-match of numeric angles to an exact spectrum, with circular
/// distance; each exact entry is used once.
bool angles_match(const std::vector<double>& numeric, const Spectrum& exact, double tol);

/// Realizes both signatures and compares numeric angles of A, B, Sym^2 A and
/// A (x) B against the exact spectra.
bool crosscheck_functor(const OrbitSignature& a, const OrbitSignature& b, double tol = 1e-9);

/// Uniform degree in [1, max_degree], then a uniform signature of that degree.
OrbitSignature sample_signature(std::mt19937_64& rng, std::int64_t max_degree, std::int64_t order_divides);

}  // namespace rtage::oracle
