#pragma once

// Dense complex matrices with tolerance-aware equality and quantized keys.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace u3g {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a numerical routine cannot proceed (singular metric, rank loss).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ToleranceConfig {
  double eq_tol = 1e-7;    // componentwise equality threshold
  double key_grid = 1e-6;  // quantization step of MatrixKey
  double unit_tol = 1e-6;  // unitarity / |det| = 1 threshold

  // Throws ContractViolation unless 0 < eq_tol < key_grid and all three < 1e-3.
  void validate() const;
};

/// Quantized lattice point: round(x / key_grid) for the real and imaginary
/// part of every entry, row-major, interleaved.
struct MatrixKey {
  std::vector<std::int64_t> coords;

  friend bool operator==(const MatrixKey&, const MatrixKey&) = default;
  friend auto operator<=>(const MatrixKey& a, const MatrixKey& b) {
    return a.coords <=> b.coords;
  }
};

struct MatrixKeyHash {
  std::size_t operator()(const MatrixKey& key) const noexcept;
};

bool approx_equal(const Matrix& a, const Matrix& b, const ToleranceConfig& cfg);
bool approx_equal(const Matrix& a, const Matrix& b, double tol);

/// Largest componentwise |Re| or |Im| difference.
double max_component_distance(const Matrix& a, const Matrix& b);

MatrixKey canonical_key(const Matrix& a, const ToleranceConfig& cfg);

/// Keys a matrix within eq_tol of `a` may carry. Always starts with
/// canonical_key(a); further entries flip the coordinates that sit within
/// eq_tol of a rounding boundary to their ±1 neighbor.
std::vector<MatrixKey> probe_keys(const Matrix& a, const ToleranceConfig& cfg);

Matrix kronecker(const Matrix& a, const Matrix& b);

Matrix identity(std::size_t dim);
Complex trace(const Matrix& a);
bool is_unitary(const Matrix& a, double tol);
/// ‖M†M − 1‖ in componentwise max norm.
double unitarity_defect(const Matrix& a);

/// e^{2πi k/n}, with k reduced modulo n before evaluation.
Complex root_of_unity(long long n, long long k);

/// Modified Gram-Schmidt over the given vectors (with one re-orthogonalization
/// pass). Vectors whose residual norm falls below `tol` are dropped. Returns
/// the orthonormal basis as the columns of a matrix.
Matrix orthonormal_basis(std::span<const Vector> vectors, double tol = 1e-9);
Matrix orthonormal_columns(const Matrix& columns, double tol = 1e-9);

/// Orthonormalizes the standard basis under ⟨x, y⟩ = x† H y.
/// Returns T (columns v_j) with T† H T = 1. Throws NumericalError when H is
/// not positive definite.
Matrix metric_orthonormal_basis(const Matrix& metric);

/// The group-averaged metric (1/|G|) Σ D(a)† D(a), summed in the given order.
Matrix averaged_metric(std::span<const Matrix> images);

std::string to_string(const Matrix& a, int precision = 6);

}  // namespace u3g
