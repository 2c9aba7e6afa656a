#pragma once

// Representations of finite matrix groups and their characters.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "u3groups/group.hpp"

namespace u3g {

class NotAHomomorphism : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not (e.g. Criterion-style
/// faithfulness vs. kernel, or a non-integral multiplicity).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Representation {
 public:
  /// Images of the group's generators, in generator order. Every element
  /// image is materialized through the closure tree and the homomorphism
  /// property is checked on every (element, generator) edge.
  Representation(GroupPtr group, std::vector<Matrix> generator_images, bool require_unitary = true);

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& generator_images() const { return generator_images_; }
  const Matrix& image(ElementIndex g) const { return images_[g]; }
  const std::vector<Matrix>& images() const { return images_; }

  /// Builds from a complete image table (one matrix per element); used by
  /// constructions that know every image exactly (products, restrictions).
  static Representation from_element_images(GroupPtr group, std::vector<Matrix> images,
                                            bool require_unitary = true);

 private:
  Representation() = default;
  void validate(bool require_unitary) const;

  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<Matrix> generator_images_;
  std::vector<Matrix> images_;
};

Representation rep_from_images(GroupPtr group, std::vector<Matrix> generator_images);
Representation defining_rep(GroupPtr group);
Representation trivial_rep(GroupPtr group);
Representation conjugate_rep(const Representation& rep);
Representation tensor_rep(const Representation& a, const Representation& b);
Representation twist(const Representation& rep, const Representation& one_dim);
/// Action on an invariant subspace with orthonormal basis `basis` (columns):
/// g ↦ Q† D(g) Q.
Representation restrict_to_subspace(const Representation& rep, const Matrix& basis);

struct Character {
  GroupPtr group;
  std::vector<Complex> values;  // one per conjugacy class, in group->classes() order

  double degree() const { return values.empty() ? 0.0 : values.front().real(); }
};

Character character_of(const Representation& rep);
Character make_character(GroupPtr group, std::vector<Complex> values);
Character conjugate(const Character& c);
Character product(const Character& a, const Character& b);
Character operator+(const Character& a, const Character& b);
Character operator-(const Character& a, const Character& b);
Character operator*(Complex s, const Character& c);
/// Symmetric / antisymmetric square through the power map g ↦ g².
Character symmetric_square(const Character& c);
Character alternating_square(const Character& c);
/// Largest classwise |a − b|.
double distance(const Character& a, const Character& b);

/// (1/|G|) Σ_classes |C| · conj(χ₁(C)) · χ₂(C).
Complex inner_product(const Character& a, const Character& b);
bool is_irreducible(const Character& c);
/// Asserts the dimension theorem (d divides |G|) whenever the test passes.
bool is_irreducible(const Representation& rep);
/// Criterion: exactly one class with χ = dim; cross-checked with kernel().
bool is_faithful(const Representation& rep);
SubgroupRef kernel(const Representation& rep);

struct DeterminantInfo {
  Character det;
  std::size_t subgroup_order = 1;  // order of the cyclic group of determinants
};
DeterminantInfo determinant_character(const Representation& rep);

/// Abstract-table representations (used for quotient groups).
struct TableRepresentation {
  const AbstractGroupTable* table = nullptr;
  std::vector<Matrix> images;  // one per abstract element
  std::size_t dim() const { return images.empty() ? 0 : static_cast<std::size_t>(images.front().rows()); }
};
TableRepresentation table_rep_from_images(const AbstractGroupTable& table, std::vector<Matrix> generator_images);
Representation lift_from_quotient(GroupPtr group, const AbstractGroupTable& quotient,
                                  const TableRepresentation& rep);

/// All |G/[G,G]| one-dimensional representations, enumerated by the
/// exponent tuple over the invariant-factor basis of the abelianization.
std::vector<Representation> one_dim_characters(GroupPtr group);

struct CharacterTable {
  GroupPtr group;
  std::vector<Character> characters;
  std::vector<std::optional<Representation>> realizations;  // parallel to characters
  bool complete = false;

  std::size_t size() const { return characters.size(); }
  std::vector<std::size_t> dimensions() const;
};

/// Sort rows by dimension, then lexicographically on values rounded to 1e-6.
void canonical_sort(CharacterTable& table);

class IncompleteTable : public std::runtime_error {
 public:
  IncompleteTable(const std::string& what, CharacterTable partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const CharacterTable& partial() const { return partial_; }

 private:
  CharacterTable partial_;
};

struct DiscoverOptions {
  int max_rounds = 20;
  bool realize = true;              // build matrices for the irreducibles where possible
  std::size_t max_realize_dim = 36;  // skip realizations through larger tensor spaces
};

/// Tensor peeling from the one-dimensional characters and the seeds.
/// Throws IncompleteTable when Σ d² = |G| is not reached.
CharacterTable discover_irreducibles(GroupPtr group, std::span<const Representation> seeds,
                                     const DiscoverOptions& options = {});

struct TableCheck {
  bool ok = true;
  double worst_row = 0.0;
  double worst_column = 0.0;
  std::string diagnostic;
};
TableCheck verify_character_table(const CharacterTable& table, double tol = 1e-6);

/// Multiplicities ⟨χᵢ, χ⟩; throws InconsistencyError unless each is a
/// nonnegative integer within 1e-6 and Σ mᵢ dᵢ = χ(e).
std::vector<long> decompose(const Character& chi, const CharacterTable& table);

struct IsotypicComponent {
  Character target;
  Matrix projector;
  Matrix basis;  // orthonormal columns spanning the image
  std::size_t multiplicity = 0;
  double idempotency_defect = 0.0;
  double adjoint_defect = 0.0;
};
/// P = (d/|G|) Σ_g conj(χ(g)) D(g), summed in element order.
IsotypicComponent isotypic_projector(const Representation& rep, const Character& target, std::size_t degree);

struct SubspaceCheck {
  bool invariant = false;
  double residual = 0.0;
  Matrix basis;  // orthonormalized input
  Character restricted;
};
SubspaceCheck verify_invariant_subspace(const Representation& rep, std::span<const Vector> basis,
                                        double tol = 1e-6);

struct Unitarized {
  Matrix change_of_basis;  // T with T† H T = 1
  Representation rep;       // T⁻¹ D T
};
Unitarized unitarize(const Representation& rep);

/// Character table as plain data (rows by columns) with the class sizes.
struct RawCharacterTable {
  std::vector<std::size_t> class_sizes;
  std::vector<std::vector<Complex>> rows;
};
RawCharacterTable raw_table(const CharacterTable& table);
/// Same table up to a permutation of rows and of columns (columns may only
/// map to columns of equal class size); entries compared on a `grid` lattice.
bool equivalent_up_to_permutation(const RawCharacterTable& a, const RawCharacterTable& b, double grid = 1e-6);

}  // namespace u3g
