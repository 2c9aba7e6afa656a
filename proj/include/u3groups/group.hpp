#pragma once

// Finite matrix groups: closure from generators, conjugacy classes, center,
// normal subgroups, quotients, abelian invariants and cyclic direct factors.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "u3groups/linalg.hpp"

namespace u3g {

using ElementIndex = std::uint32_t;

/// The closure exceeded max_order; the generators most likely generate an
/// infinite group (for instance an irrational phase).
class GroupNotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A desk-scale size guard refused to run an enumeration.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxOrder = 20000;
inline constexpr std::size_t kNormalSubgroupGuard = 1000;

/// Sorted member indices of a subgroup of one particular group.
struct SubgroupRef {
  std::uint64_t parent_id = 0;
  std::vector<ElementIndex> members;

  std::size_t order() const { return members.size(); }
  bool contains(ElementIndex g) const;
  friend bool operator==(const SubgroupRef&, const SubgroupRef&) = default;
};

class FiniteMatrixGroup {
 public:
  std::uint64_t id() const { return id_; }
  std::size_t order() const { return matrices_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<Matrix>& generators() const { return generators_; }
  const ToleranceConfig& tolerance() const { return cfg_; }

  const Matrix& matrix(ElementIndex g) const { return matrices_[g]; }
  const MatrixKey& key(ElementIndex g) const { return keys_[g]; }

  /// Generator indices whose left-to-right product is matrix(g); empty for
  /// the identity (index 0).
  std::vector<int> word(ElementIndex g) const;
  /// Breadth-first tree: matrix(g) = matrix(tree_parent(g)) · generator(tree_generator(g)).
  ElementIndex tree_parent(ElementIndex g) const { return parent_[g]; }
  int tree_generator(ElementIndex g) const { return via_[g]; }
  ElementIndex generator_element(int k) const { return right_[static_cast<std::size_t>(k)]; }

  ElementIndex mult(ElementIndex a, ElementIndex b) const;
  ElementIndex inv(ElementIndex a) const { return inv_[a]; }
  ElementIndex right_by_generator(ElementIndex a, int k) const {
    return right_[static_cast<std::size_t>(a) * generators_.size() + static_cast<std::size_t>(k)];
  }
  ElementIndex conjugate(ElementIndex x, ElementIndex by) const;  // by·x·by⁻¹
  std::size_t element_order(ElementIndex g) const { return element_orders_[g]; }

  /// Index of the element approx_equal to m, if any.
  std::optional<ElementIndex> find(const Matrix& m) const;

  /// Conjugacy classes: identity class first, then by (size, minimal key).
  const std::vector<std::vector<ElementIndex>>& classes() const { return classes_; }
  std::size_t class_of(ElementIndex g) const { return class_of_[g]; }
  std::vector<std::size_t> class_sizes() const;

  /// Smallest componentwise distance between two distinct elements (computed
  /// for orders up to 2048; +inf above that).
  double min_separation() const { return min_separation_; }

 private:
  friend std::shared_ptr<const FiniteMatrixGroup> generate_group(std::vector<Matrix>,
                                                                 const ToleranceConfig&,
                                                                 std::size_t);
  FiniteMatrixGroup() = default;
  std::optional<ElementIndex> lookup(const Matrix& m) const;
  void build_tables();
  void build_classes();

  std::uint64_t id_ = 0;
  std::size_t dim_ = 0;
  ToleranceConfig cfg_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> matrices_;
  std::vector<MatrixKey> keys_;
  std::vector<ElementIndex> parent_;
  std::vector<int> via_;
  std::vector<ElementIndex> right_;  // order × num_generators
  std::vector<ElementIndex> table_;  // order × order, only for small groups
  std::vector<ElementIndex> inv_;
  std::vector<std::size_t> element_orders_;
  std::vector<std::vector<ElementIndex>> classes_;
  std::vector<std::size_t> class_of_;
  std::unordered_map<MatrixKey, std::vector<ElementIndex>, MatrixKeyHash> index_;
  double min_separation_ = 0.0;
};

using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

/// Breadth-first closure. Throws GroupNotClosed past max_order and
/// ContractViolation for non-unitary or mismatched generators.
GroupPtr generate_group(std::vector<Matrix> generators, const ToleranceConfig& cfg = {},
                        std::size_t max_order = kDefaultMaxOrder);

const std::vector<std::vector<ElementIndex>>& conjugacy_classes(const FiniteMatrixGroup& g);

SubgroupRef whole_group(const FiniteMatrixGroup& g);
SubgroupRef trivial_subgroup(const FiniteMatrixGroup& g);
SubgroupRef generated_subgroup(const FiniteMatrixGroup& g, std::span<const ElementIndex> seeds);
SubgroupRef normal_closure(const FiniteMatrixGroup& g, std::span<const ElementIndex> seeds);
SubgroupRef center(const FiniteMatrixGroup& g);
SubgroupRef commutator_subgroup(const FiniteMatrixGroup& g);
SubgroupRef intersection(const SubgroupRef& a, const SubgroupRef& b);
bool is_subgroup(const FiniteMatrixGroup& g, const SubgroupRef& h);
bool is_normal(const FiniteMatrixGroup& g, const SubgroupRef& h);
bool is_cyclic(const FiniteMatrixGroup& g, const SubgroupRef& h);
bool is_abelian(const FiniteMatrixGroup& g);

/// Every normal subgroup, {e} and G included, sorted by (order, members).
/// Throws GuardExceeded above kNormalSubgroupGuard elements.
std::vector<SubgroupRef> all_normal_subgroups(const FiniteMatrixGroup& g);

/// Group given by its Cayley table. Abstract element 0 is the identity.
struct AbstractGroupTable {
  std::size_t order = 0;
  std::vector<std::uint32_t> cayley;      // row-major, a·b
  std::vector<std::uint32_t> inverse;
  std::vector<std::uint32_t> generators;  // images of the parent's generators
  /// Parent element standing for each abstract element (for quotients: the
  /// member of the coset with minimal MatrixKey).
  std::vector<ElementIndex> representatives;
  /// Parent element -> abstract element; UINT32_MAX when not covered.
  std::vector<std::uint32_t> label_of_parent;
  /// Breadth-first tree over `generators`: a = tree_parent[a] · generators[tree_generator[a]].
  std::vector<std::uint32_t> tree_parent;
  std::vector<int> tree_generator;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return cayley[a * order + b]; }
  bool is_abelian() const;
  bool is_latin_square() const;
  std::size_t element_order(std::uint32_t a) const;
};

/// Cosets of a normal subgroup. Throws ContractViolation if N is not normal.
AbstractGroupTable quotient_group(const FiniteMatrixGroup& g, const SubgroupRef& n);
/// The subgroup h as a table of its own (generators: all members).
AbstractGroupTable subgroup_table(const FiniteMatrixGroup& g, const SubgroupRef& h);

/// Invariant-factor decomposition of an abelian group with an explicit basis.
struct AbelianDecomposition {
  std::vector<long> invariants;       // ascending, each divides the next
  std::vector<std::uint32_t> basis;   // basis[i] has order invariants[i]
  std::vector<std::vector<long>> coordinates;  // per abstract element
};
AbelianDecomposition decompose_abelian(const AbstractGroupTable& a);
std::vector<long> abelian_invariants(const AbstractGroupTable& a);
std::vector<long> abelian_invariants(const FiniteMatrixGroup& g, const SubgroupRef& h);

struct CyclicDirectFactor {
  SubgroupRef cyclic;      // central, cyclic, order > 1
  SubgroupRef complement;  // normal, meets `cyclic` trivially, |F|·|Z| = |G|
};

/// A witness G = F × Z with Z cyclic central, choosing Z of maximal order.
/// Throws GuardExceeded above kNormalSubgroupGuard elements when the
/// center is nontrivial.
std::optional<CyclicDirectFactor> find_cyclic_direct_factor(const FiniteMatrixGroup& g);

}  // namespace u3g
