#include "landauer/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "landauer/errors.hpp"

namespace landauer::linalg {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-12;
constexpr double kHermitianTolerance = 1e-10;
constexpr double kUnitaryTolerance = 1e-10;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": shapes differ (" + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                            "x" + std::to_string(b.cols()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("ComplexMatrix: expected " + std::to_string(rows * cols) +
                            " entries, got " + std::to_string(data_.size()));
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionMismatch("ComplexMatrix: ragged initializer");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
  return sum;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scalar) { return a *= scalar; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("operator*: inner dimensions differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) worst = std::max(worst, std::abs(ea[k] - eb[k]));
  return worst;
}

double max_abs(const ComplexMatrix& m) {
  double worst = 0.0;
  for (const auto& z : m.entries()) worst = std::max(worst, std::abs(z));
  return worst;
}

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const auto& z : m.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) {
  return u * m * u.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  ComplexMatrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) out(i * p + k, j * q + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_system, std::size_t dim_env,
                            Keep keep) {
  const std::size_t n = dim_system * dim_env;
  if (!m.is_square() || m.rows() != n) {
    throw DimensionMismatch("partial_trace: operator of size " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " does not match " +
                            std::to_string(dim_system) + "*" + std::to_string(dim_env));
  }
  if (keep == Keep::System) {
    ComplexMatrix out(dim_system, dim_system);
    for (std::size_t i = 0; i < dim_system; ++i)
      for (std::size_t j = 0; j < dim_system; ++j) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < dim_env; ++k) sum += m(i * dim_env + k, j * dim_env + k);
        out(i, j) = sum;
      }
    return out;
  }
  ComplexMatrix out(dim_env, dim_env);
  for (std::size_t k = 0; k < dim_env; ++k)
    for (std::size_t l = 0; l < dim_env; ++l) {
      Complex sum = 0.0;
      for (std::size_t i = 0; i < dim_system; ++i) sum += m(i * dim_env + k, i * dim_env + l);
      out(k, l) = sum;
    }
  return out;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : m_(m) {
  if (!m.is_square()) {
    throw NotHermitian("HermitianMatrix: matrix is not square");
  }
  const double scale = std::max(1.0, max_abs(m));
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex upper = m(i, j);
      const Complex lower = std::conj(m(j, i));
      if (std::abs(upper - lower) > kHermitianTolerance * scale) {
        throw NotHermitian("HermitianMatrix: entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ") violates symmetry");
      }
      const Complex mean = 0.5 * (upper + lower);
      m_(i, j) = mean;
      m_(j, i) = std::conj(mean);
    }
  }
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  return HermitianMatrix(ComplexMatrix::diagonal(values));
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) {
    throw DomainError("UnitaryMatrix: matrix is not square");
  }
  const double err = max_abs_diff(m_ * m_.adjoint(), ComplexMatrix::identity(m_.rows()));
  if (err > kUnitaryTolerance) {
    throw DomainError("UnitaryMatrix: U U^dagger deviates from identity by " +
                      std::to_string(err));
  }
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  const ComplexMatrix& v = eigenvectors;
  const std::size_t n = v.rows();
  ComplexMatrix vd(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) vd(i, k) = v(i, k) * eigenvalues[k];
  return vd * v.adjoint();
}

EigenDecomposition hermitian_eig(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix a = m.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kOffDiagonalTolerance * frobenius_norm(a);
  auto off_diagonal = [&] {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
  };

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal() <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Phase-rotate the pair to a real symmetric 2x2 block, then apply a
        // real Jacobi rotation. Combined column transform G:
        //   G = [[c, s], [-s e*, c e*]]  with e = apq / |apq|.
        const Complex phase = apq / r;
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          const Complex new_kp = akp * c + akq * gqp;
          const Complex new_kq = akp * s + akq * gqq;
          a(k, p) = new_kp;
          a(k, q) = new_kq;
          a(p, k) = std::conj(new_kp);
          a(q, k) = std::conj(new_kq);
        }
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * gqp;
          v(k, q) = vkp * s + vkq * gqq;
        }
      }
    }
  }
  if (!converged && off_diagonal() > threshold) {
    throw NoConvergence("hermitian_eig: off-diagonal norm above threshold after " +
                        std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

UnitaryMatrix unitary_from_eig(const EigenDecomposition& eig, double t) {
  if (!std::isfinite(t)) {
    throw DomainError("unitary_from_eig: time must be finite");
  }
  const ComplexMatrix& v = eig.eigenvectors;
  const std::size_t n = v.rows();
  ComplexMatrix vd(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, -eig.eigenvalues[k] * t);
    for (std::size_t i = 0; i < n; ++i) vd(i, k) = v(i, k) * phase;
  }
  return UnitaryMatrix(vd * v.adjoint());
}

UnitaryMatrix unitary_from_hamiltonian(const HermitianMatrix& h, double t) {
  return unitary_from_eig(hermitian_eig(h), t);
}

}  // namespace landauer::linalg
