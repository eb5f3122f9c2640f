#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace landauer::linalg {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch if the entry count is wrong and DomainError on
  /// non-finite entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::span<const Complex> values);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] std::span<const Complex> entries() const noexcept { return data_; }

  [[nodiscard]] ComplexMatrix adjoint() const;
  [[nodiscard]] Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

/// u * m * u^dagger
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m);

/// Kronecker product; (a ⊗ b)[i*p + k, j*q + l] = a[i,j] * b[k,l] where b is p x q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Which factor of a bipartite space (system ⊗ environment) to keep.
enum class Keep { System, Environment };

/// Partial trace of a (dim_system*dim_env)-square operator ordered system ⊗ environment.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_system, std::size_t dim_env,
                            Keep keep);

/// Square matrix equal to its adjoint. Inputs within 1e-10 (relative to the
/// largest entry, floor 1) of Hermitian are symmetrized as (m + m^dagger)/2.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m);
  static HermitianMatrix diagonal(std::span<const double> values);

  [[nodiscard]] std::size_t dim() const noexcept { return m_.rows(); }
  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

/// Square matrix with U U^dagger == 1 within 1e-10 in max-norm.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix m);

  [[nodiscard]] std::size_t dim() const noexcept { return m_.rows(); }
  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]

  /// V diag(eigenvalues) V^dagger
  [[nodiscard]] ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi eigensolver. Stops once the off-diagonal Frobenius
/// norm drops below 1e-12 * ||m||_F; throws NoConvergence after 100 sweeps.
EigenDecomposition hermitian_eig(const HermitianMatrix& m);

/// exp(-i h t)
UnitaryMatrix unitary_from_hamiltonian(const HermitianMatrix& h, double t);
UnitaryMatrix unitary_from_eig(const EigenDecomposition& eig, double t);

}  // namespace landauer::linalg
