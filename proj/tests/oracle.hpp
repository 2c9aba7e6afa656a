#pragma once

// Brute-force reference computations on explicit matrix lists. Nothing here
// uses the library's hashing, tables or classes.

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

inline double dist(const Mat& a, const Mat& b) {
  double d = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Complex x = a(i, j) - b(i, j);
      d = std::max({d, std::abs(x.real()), std::abs(x.imag())});
    }
  return d;
}

inline long find(const std::vector<Mat>& list, const Mat& m, double tol = 1e-7) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (dist(list[i], m) < tol) return static_cast<long>(i);
  return -1;
}

/// Quadratic closure by linear search; throws std::length_error past `cap`.
inline std::vector<Mat> closure(const std::vector<Mat>& gens, std::size_t cap = 4000) {
  const auto n = gens.front().rows();
  std::vector<Mat> elems{Mat::Identity(n, n)};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Mat& g : gens) {
      Mat p = elems[i] * g;
      if (find(elems, p) < 0) {
        if (elems.size() >= cap) throw std::length_error("oracle closure cap");
        elems.push_back(std::move(p));
      }
    }
  return elems;
}

inline std::size_t element_order(const Mat& g) {
  const Mat id = Mat::Identity(g.rows(), g.cols());
  Mat p = g;
  std::size_t k = 1;
  while (dist(p, id) > 1e-7) {
    p = p * g;
    if (++k > 100000) return 0;
  }
  return k;
}

inline std::vector<std::size_t> class_sizes(const std::vector<Mat>& elems) {
  std::vector<int> label(elems.size(), -1);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (label[i] >= 0) continue;
    std::size_t count = 0;
    for (const Mat& h : elems) {
      const long j = find(elems, h * elems[i] * h.adjoint());
      if (label[j] < 0) {
        label[j] = static_cast<int>(sizes.size());
        ++count;
      }
    }
    sizes.push_back(count);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::size_t center_order(const std::vector<Mat>& elems, const std::vector<Mat>& gens) {
  std::size_t c = 0;
  for (const Mat& z : elems) {
    bool central = true;
    for (const Mat& g : gens) central = central && dist(z * g, g * z) < 1e-7;
    c += central;
  }
  return c;
}

/// ⟨χ, χ⟩ summed over elements, from traces only.
inline double norm_sq_from_traces(const std::vector<Mat>& images) {
  double s = 0;
  for (const Mat& m : images) s += std::norm(m.trace());
  return s / static_cast<double>(images.size());
}

inline Mat random_invertible(std::size_t n, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(nd(rng), nd(rng));
  return m + 3.0 * Mat::Identity(n, n);
}

inline long mod_inverse_brute(long q, long n) {
  for (long p = 1; p < n; ++p)
    if ((p * q) % n == 1) return p;
  return n == 1 ? 0 : -1;
}

}  // namespace oracle
