#pragma once

// Theorem predicates for phase-extended series and the direct-product
// criterion, with constructions and brute-force cross-validation.

#include <optional>
#include <string>
#include <vector>

#include "u3groups/group.hpp"
#include "u3groups/rep.hpp"

namespace u3g {

/// G = ⟨H-generators, B⟩ with ⟨H⟩ normal, B of prime order n modulo H,
/// center of order c (1 or prime, c ≠ n) and no cyclic direct factor.
struct SemidirectPackage {
  std::string name;
  std::vector<Matrix> h_generators;
  Matrix b;
  long n = 0;
  long c = 0;
};

struct PackageCheck {
  bool h_normal = false;
  bool n_prime = false;
  bool c_matches = false;
  bool c_admissible = false;  // 1 or prime, and c ≠ n
  bool no_cyclic_factor = false;
  std::size_t order = 0;
  std::size_t computed_center = 0;
  bool ok() const { return h_normal && n_prime && c_matches && c_admissible && no_cyclic_factor; }
  std::string describe() const;
};
PackageCheck validate_package(const SemidirectPackage& pkg, const ToleranceConfig& cfg = {});

SemidirectPackage package_s4();
/// ⟨F(n,1,a)⟩ ⋊ ⟨E⟩ with the smallest solution a.
SemidirectPackage package_tn(long long n);
SemidirectPackage package_delta6(long long n);

bool is_prime(long n);

/// gcd(n, c) = 1.
bool theorem_product_predict(long c, long n);
/// b = c^j · n^k for some j, k ≥ 0.
bool theorem_series_predicate(long c, long n, long b);
/// Exponents (j, k) with b = c^j n^k; for c = 1, j = 0.
std::optional<std::pair<long, long>> series_exponents(long c, long n, long b);
/// Predicted center order of G_b for b = c^j n^k.
long theorem_center_predict(long c, long n, long j, long k);

/// ⟨H-generators, e^{2πi/b}·B⟩.
GroupPtr theorem_series_build(const SemidirectPackage& pkg, long b, const ToleranceConfig& cfg = {},
                              std::size_t max_order = kDefaultMaxOrder);

struct TheoremVerdict {
  long b = 0;
  bool skipped = false;
  std::string note;
  std::size_t order = 0;
  bool predicted_no_factor = false;
  bool computed_no_factor = false;
  std::optional<long> predicted_center;
  std::size_t computed_center = 0;
  bool center_cyclic = false;
  std::size_t lemma_bound = 0;
  bool foreign_prime_split = true;  // witness order divisible by every foreign prime
  bool agree = false;
};

std::vector<TheoremVerdict> cross_validate(const SemidirectPackage& pkg, long b_lo, long b_hi,
                                           const ToleranceConfig& cfg = {});

/// Z_n × G realized by block-diagonal matrices diag(D(g), 1) and
/// diag(1_d, e^{2πi/n}), with the representation (a^k, g) ↦ e^{2πik/n} D(g).
struct ProductConstruction {
  GroupPtr product;
  Representation rep;
  bool faithful = false;
  bool irreducible = false;
};
/// No precondition check; the cross-validation needs the failing cases too.
ProductConstruction direct_product_rep(const Representation& rep, long n);
/// Requires gcd(n, |Z(G)|) = 1 (throws ContractViolation otherwise).
ProductConstruction theorem_product_construct(const FiniteMatrixGroup& g, const Representation& rep, long n);

struct ProductVerdict {
  std::string group;
  long n = 0;
  std::size_t center_order = 0;
  bool predicted = false;
  bool faithful = false;
  bool irreducible = false;
  std::size_t product_order = 0;
  bool agree = false;
};
ProductVerdict product_theorem_check(const std::string& name, const Representation& rep, long n);

}  // namespace u3g
