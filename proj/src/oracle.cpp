#include "rtage/oracle.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "rtage/enumerate.hpp"
#include "rtage/reps.hpp"

namespace rtage::oracle {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("IntegerMatrix: size mismatch");
  IntegerMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const std::int64_t x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        std::int64_t p = 0;
        if (__builtin_mul_overflow(x, o(k, j), &p) || __builtin_add_overflow(out(i, j), p, &out(i, j)))
          throw OracleFailure("IntegerMatrix: entry overflow (matrix is not of finite order?)");
      }
    }
  return out;
}

IntegerMatrix IntegerMatrix::pow(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("IntegerMatrix::pow: negative exponent");
  IntegerMatrix result = identity(n_);
  IntegerMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto q = cyclotomic_polynomial(d);
    const std::size_t dq = q.size() - 1;
    std::vector<std::int64_t> quot(p.size() - dq, 0);
    for (std::size_t i = p.size() - 1; i + 1 > dq; --i) {
      const std::int64_t c = p[i];  // divisor is monic
      quot[i - dq] = c;
      for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
      if (i == dq) break;
    }
    for (std::size_t j = 0; j < dq; ++j)
      if (p[j] != 0) throw OracleFailure("cyclotomic_polynomial: inexact division");
    p = std::move(quot);
  }
  std::lock_guard lock(mu);
  memo.emplace(n, p);
  return p;
}

IntegerMatrix companion(const std::vector<std::int64_t>& monic) {
  if (monic.empty() || monic.back() != 1) throw std::invalid_argument("companion: polynomial must be monic");
  const std::size_t d = monic.size() - 1;
  IntegerMatrix m(d);
  for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -monic[i];
  return m;
}

IntegerMatrix block_diagonal(const std::vector<IntegerMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  IntegerMatrix m(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m(off + i, off + j) = b(i, j);
    off += b.size();
  }
  return m;
}

IntegerMatrix realize(const OrbitSignature& sig) {
  std::vector<IntegerMatrix> blocks;
  for (auto n : sig.parts()) blocks.push_back(companion(cyclotomic_polynomial(n)));
  return block_diagonal(blocks);
}

IntegerMatrix induced_sym2(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) basis.emplace_back(i, j);
  IntegerMatrix s(basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto [i, j] = basis[col];
    for (std::size_t row = 0; row < basis.size(); ++row) {
      const auto [k, l] = basis[row];
      s(row, col) = k == l ? m(k, i) * m(k, j) : m(k, i) * m(l, j) + m(l, i) * m(k, j);
    }
  }
  return s;
}

IntegerMatrix kronecker(const IntegerMatrix& a, const IntegerMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t p = b.size();
  IntegerMatrix k(n * p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = 0; y < p; ++y) k(i * p + x, j * p + y) = a(i, j) * b(x, y);
  return k;
}

std::int64_t matrix_order(const IntegerMatrix& m, std::int64_t bound) {
  const IntegerMatrix id = IntegerMatrix::identity(m.size());
  IntegerMatrix p = m;
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  throw OracleFailure("matrix_order: no power up to " + std::to_string(bound) + " is the identity");
}

namespace {

double circular_distance(double x, double y) {
  const double d = std::fabs(x - y);
  return std::min(d, 1.0 - d);
}

Eigen::MatrixXd to_eigen(const IntegerMatrix& m) {
  Eigen::MatrixXd e(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m(i, j));
  return e;
}

}  // namespace

std::vector<double> numeric_angles(const IntegerMatrix& m) {
  if (m.size() == 0) return {};
  const std::int64_t order = matrix_order(m);
  const Eigen::MatrixXd mat = to_eigen(m);
  const auto n = mat.rows();

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd pk = Eigen::MatrixXd::Identity(n, n);
  for (std::int64_t k = 0; k < order; ++k) {
    gram.noalias() += pk.transpose() * pk;
    pk = pk * mat;
  }
  const Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) throw OracleFailure("numeric_angles: averaged Gram matrix is not positive definite");
  const Eigen::MatrixXd lower = llt.matrixL();
  const Eigen::MatrixXd x = lower.transpose() * mat;
  const Eigen::MatrixXd orth = llt.matrixL().solve(x.transpose()).transpose();
  if ((orth.transpose() * orth - Eigen::MatrixXd::Identity(n, n)).norm() > 1e-8)
    throw OracleFailure("numeric_angles: conjugated matrix is not orthogonal");

  const Eigen::EigenSolver<Eigen::MatrixXd> solver(orth, false);
  if (solver.info() != Eigen::Success) throw OracleFailure("numeric_angles: eigenvalue iteration did not converge");

  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto z = solver.eigenvalues()(i);
    double t = std::atan2(z.imag(), z.real()) / (2.0 * std::numbers::pi);
    if (t < 0) t += 1.0;
    if (t >= 1.0) t -= 1.0;
    const double snapped = std::round(t * static_cast<double>(order)) / static_cast<double>(order);
    if (circular_distance(t, snapped) > 1e-9)
      throw OracleFailure("numeric_angles: angle " + std::to_string(t) + " is not a multiple of 1/" +
                          std::to_string(order));
    angles.push_back(t);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

bool angles_match(const std::vector<double>& numeric, const Spectrum& exact, double tol) {
  if (tol <= 0) throw std::invalid_argument("angles_match: tolerance must be positive");
  if (numeric.size() != exact.dim()) return false;
  std::vector<double> targets;
  for (const auto& q : exact) targets.push_back(q.value().to_double());
  std::vector<bool> used(targets.size(), false);
  for (double t : numeric) {
    std::size_t best = targets.size();
    double best_d = 2.0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (used[i]) continue;
      const double d = circular_distance(t, targets[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best == targets.size() || best_d > tol) return false;
    used[best] = true;
  }
  return true;
}

bool crosscheck_functor(const OrbitSignature& a, const OrbitSignature& b, double tol) {
  if (tol <= 0) throw std::invalid_argument("crosscheck_functor: tolerance must be positive");
  const IntegerMatrix ma = realize(a);
  const IntegerMatrix mb = realize(b);
  const IntegerMatrix sa = induced_sym2(ma);
  const IntegerMatrix tab = kronecker(ma, mb);
  const std::size_t n = ma.size();
  if (sa.size() != n * (n + 1) / 2 || tab.size() != n * mb.size())
    throw OracleFailure("crosscheck_functor: induced operator has the wrong dimension");

  const Spectrum ea = a.spectrum();
  const Spectrum eb = b.spectrum();
  return angles_match(numeric_angles(ma), ea, tol) && angles_match(numeric_angles(mb), eb, tol) &&
         angles_match(numeric_angles(sa), sym2(ea), tol) && angles_match(numeric_angles(tab), tensor(ea, eb), tol);
}

OrbitSignature sample_signature(std::mt19937_64& rng, std::int64_t max_degree, std::int64_t order_divides) {
  if (max_degree < 1) throw std::invalid_argument("sample_signature: max_degree must be positive");
  std::uniform_int_distribution<std::int64_t> pick_degree(1, max_degree);
  const auto sigs = cyclotomic_signatures(pick_degree(rng), order_divides);
  std::uniform_int_distribution<std::size_t> pick(0, sigs.size() - 1);
  return sigs[pick(rng)];
}

}  // namespace rtage::oracle
