#include "u3groups/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace u3g {

void ToleranceConfig::validate() const {
  if (!(eq_tol > 0.0 && eq_tol < key_grid))
    throw ContractViolation("tolerance config: need 0 < eq_tol < key_grid");
  if (!(eq_tol < 1e-3 && key_grid < 1e-3 && unit_tol > 0.0 && unit_tol < 1e-3))
    throw ContractViolation("tolerance config: tolerances must lie in (0, 1e-3)");
}

std::size_t MatrixKeyHash::operator()(const MatrixKey& key) const noexcept {
  // FNV-1a over the coordinate words
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t c : key.coords) {
    auto v = static_cast<std::uint64_t>(c);
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

static void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ContractViolation("matrix dimension mismatch");
}

double max_component_distance(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex d = a.data()[i] - b.data()[i];
    worst = std::max({worst, std::abs(d.real()), std::abs(d.imag())});
  }
  return worst;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  require_same_shape(a, b);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex d = a.data()[i] - b.data()[i];
    if (!(std::abs(d.real()) < tol && std::abs(d.imag()) < tol)) return false;
  }
  return true;
}

bool approx_equal(const Matrix& a, const Matrix& b, const ToleranceConfig& cfg) {
  return approx_equal(a, b, cfg.eq_tol);
}

MatrixKey canonical_key(const Matrix& a, const ToleranceConfig& cfg) {
  MatrixKey key;
  key.coords.reserve(static_cast<std::size_t>(2 * a.size()));
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    key.coords.push_back(std::llround(a.data()[i].real() / cfg.key_grid));
    key.coords.push_back(std::llround(a.data()[i].imag() / cfg.key_grid));
  }
  return key;
}

std::vector<MatrixKey> probe_keys(const Matrix& a, const ToleranceConfig& cfg) {
  MatrixKey base = canonical_key(a, cfg);
  const double margin = 0.5 - cfg.eq_tol / cfg.key_grid;
  std::vector<std::pair<std::size_t, std::int64_t>> flips;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double parts[2] = {a.data()[i].real(), a.data()[i].imag()};
    for (int p = 0; p < 2; ++p) {
      const std::size_t idx = static_cast<std::size_t>(2 * i + p);
      const double offset = parts[p] / cfg.key_grid - static_cast<double>(base.coords[idx]);
      if (offset > margin) flips.emplace_back(idx, base.coords[idx] + 1);
      if (offset < -margin) flips.emplace_back(idx, base.coords[idx] - 1);
    }
  }
  if (flips.size() > 20)
    throw NumericalError("probe_keys: too many coordinates on rounding boundaries");
  std::vector<MatrixKey> out;
  out.reserve(std::size_t{1} << flips.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << flips.size()); ++mask) {
    MatrixKey k = base;
    for (std::size_t f = 0; f < flips.size(); ++f)
      if (mask & (std::size_t{1} << f)) k.coords[flips[f].first] = flips[f].second;
    out.push_back(std::move(k));
  }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix identity(std::size_t dim) {
  return Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

Complex trace(const Matrix& a) { return a.trace(); }

double unitarity_defect(const Matrix& a) {
  if (a.rows() != a.cols()) throw ContractViolation("unitarity check on non-square matrix");
  const Matrix prod = a.adjoint() * a;
  return max_component_distance(prod, identity(static_cast<std::size_t>(a.rows())));
}

bool is_unitary(const Matrix& a, double tol) { return unitarity_defect(a) < tol; }

Complex root_of_unity(long long n, long long k) {
  if (n <= 0) throw ContractViolation("root_of_unity: order must be positive");
  long long r = k % n;
  if (r < 0) r += n;
  if (r == 0) return {1.0, 0.0};
  // exact values on the axes keep structural zeros exact
  if (2 * r == n) return {-1.0, 0.0};
  if (4 * r == n) return {0.0, 1.0};
  if (4 * r == 3 * n) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

Matrix orthonormal_basis(std::span<const Vector> vectors, double tol) {
  std::vector<Vector> basis;
  for (const Vector& v0 : vectors) {
    Vector v = v0;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vector& q : basis) v -= q.dot(v) * q;  // dot() conjugates q
    const double norm = v.norm();
    if (norm > tol) basis.push_back(v / norm);
  }
  const Eigen::Index rows = vectors.empty() ? 0 : vectors.front().size();
  Matrix out(rows, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = basis[j];
  return out;
}

Matrix orthonormal_columns(const Matrix& columns, double tol) {
  std::vector<Vector> vs;
  vs.reserve(static_cast<std::size_t>(columns.cols()));
  for (Eigen::Index j = 0; j < columns.cols(); ++j) vs.emplace_back(columns.col(j));
  Matrix out = orthonormal_basis(vs, tol);
  if (vs.empty()) out.resize(columns.rows(), 0);
  return out;
}

Matrix metric_orthonormal_basis(const Matrix& metric) {
  const Eigen::Index n = metric.rows();
  if (metric.cols() != n) throw ContractViolation("metric must be square");
  auto inner = [&](const Vector& x, const Vector& y) { return x.dot(metric * y); };
  std::vector<Vector> basis;
  for (Eigen::Index k = 0; k < n; ++k) {
    Vector v = Vector::Unit(n, k);
    for (int pass = 0; pass < 2; ++pass)
      for (const Vector& q : basis) v -= inner(q, v) * q;
    const Complex nn = inner(v, v);
    if (!(nn.real() > 1e-12) || std::abs(nn.imag()) > 1e-8 * std::max(1.0, nn.real()))
      throw NumericalError("averaged metric is not positive definite");
    basis.push_back(v / std::sqrt(nn.real()));
  }
  Matrix t(n, n);
  for (Eigen::Index j = 0; j < n; ++j) t.col(j) = basis[static_cast<std::size_t>(j)];
  return t;
}

Matrix averaged_metric(std::span<const Matrix> images) {
  if (images.empty()) throw ContractViolation("averaged_metric: no images");
  Matrix h = Matrix::Zero(images.front().rows(), images.front().cols());
  for (const Matrix& d : images) h += d.adjoint() * d;
  return h / static_cast<double>(images.size());
}

std::string to_string(const Matrix& a, int precision) {
  std::ostringstream os;
  os.precision(precision);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Complex z = a(i, j);
      os << (j ? ", " : "") << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    os << (i + 1 == a.rows() ? "]" : "\n");
  }
  return os.str();
}

}  // namespace u3g
