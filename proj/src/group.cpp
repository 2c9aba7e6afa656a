#include "u3groups/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

namespace u3g {

namespace {

std::atomic<std::uint64_t> next_group_id{1};

constexpr std::size_t kFullTableLimit = 4096;
constexpr std::size_t kSeparationLimit = 2048;
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

class Bitset {
 public:
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

 private:
  std::vector<std::uint64_t> words_;
};

SubgroupRef make_ref(const FiniteMatrixGroup& g, std::vector<ElementIndex> members) {
  std::sort(members.begin(), members.end());
  return SubgroupRef{g.id(), std::move(members)};
}

void require_parent(const FiniteMatrixGroup& g, const SubgroupRef& h) {
  if (h.parent_id != g.id()) throw ContractViolation("subgroup belongs to a different group");
}

// Closure of `start` under right multiplication by `seeds`.
std::vector<ElementIndex> close_under(const FiniteMatrixGroup& g, std::vector<ElementIndex> start,
                                      std::span<const ElementIndex> seeds) {
  Bitset seen(g.order());
  std::vector<ElementIndex> out;
  std::deque<ElementIndex> queue;
  for (ElementIndex s : start)
    if (!seen.test(s)) {
      seen.set(s);
      out.push_back(s);
      queue.push_back(s);
    }
  while (!queue.empty()) {
    const ElementIndex x = queue.front();
    queue.pop_front();
    for (ElementIndex s : seeds) {
      const ElementIndex y = g.mult(x, s);
      if (!seen.test(y)) {
        seen.set(y);
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

// AB for a normal subgroup A and any subgroup B.
SubgroupRef join_normal(const FiniteMatrixGroup& g, const SubgroupRef& a, const SubgroupRef& b) {
  Bitset in(g.order());
  std::vector<ElementIndex> members = a.members;
  for (ElementIndex x : members) in.set(x);
  for (ElementIndex y : b.members) {
    if (in.test(y)) continue;
    for (ElementIndex x : a.members) {
      const ElementIndex z = g.mult(x, y);
      if (!in.test(z)) {
        in.set(z);
        members.push_back(z);
      }
    }
  }
  return make_ref(g, std::move(members));
}

bool ref_less(const SubgroupRef& a, const SubgroupRef& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members < b.members;
}

void fill_tree(AbstractGroupTable& t) {
  t.tree_parent.assign(t.order, kNone);
  t.tree_generator.assign(t.order, -1);
  std::vector<bool> seen(t.order, false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  t.tree_parent[0] = 0;
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < t.generators.size(); ++k) {
      const std::uint32_t y = t.mul(x, t.generators[k]);
      if (!seen[y]) {
        seen[y] = true;
        t.tree_parent[y] = x;
        t.tree_generator[y] = static_cast<int>(k);
        queue.push_back(y);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ContractViolation("table generators do not generate the group");
}

void fill_inverse(AbstractGroupTable& t) {
  t.inverse.assign(t.order, kNone);
  for (std::uint32_t a = 0; a < t.order; ++a)
    for (std::uint32_t b = 0; b < t.order; ++b)
      if (t.mul(a, b) == 0) {
        t.inverse[a] = b;
        break;
      }
}

}  // namespace

bool SubgroupRef::contains(ElementIndex g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

std::vector<int> FiniteMatrixGroup::word(ElementIndex g) const {
  std::vector<int> w;
  while (g != 0) {
    w.push_back(via_[g]);
    g = parent_[g];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

ElementIndex FiniteMatrixGroup::mult(ElementIndex a, ElementIndex b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  const std::vector<int> w = word(b);
  for (int k : w) a = right_by_generator(a, k);
  return a;
}

ElementIndex FiniteMatrixGroup::conjugate(ElementIndex x, ElementIndex by) const {
  return mult(mult(by, x), inv_[by]);
}

std::optional<ElementIndex> FiniteMatrixGroup::lookup(const Matrix& m) const {
  for (const MatrixKey& k : probe_keys(m, cfg_)) {
    auto it = index_.find(k);
    if (it == index_.end()) continue;
    for (ElementIndex idx : it->second)
      if (approx_equal(matrices_[idx], m, cfg_)) return idx;
  }
  return std::nullopt;
}

std::optional<ElementIndex> FiniteMatrixGroup::find(const Matrix& m) const {
  if (m.rows() != static_cast<Eigen::Index>(dim_) || m.cols() != static_cast<Eigen::Index>(dim_))
    throw ContractViolation("find: dimension mismatch");
  return lookup(m);
}

std::vector<std::size_t> FiniteMatrixGroup::class_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(c.size());
  return out;
}

void FiniteMatrixGroup::build_tables() {
  const std::size_t n = order();
  const std::size_t k = generators_.size();
  if (n <= kFullTableLimit) {
    table_.assign(n * n, 0);
    // element b = parent(b)·gen(b), and the tree visits parents first
    for (std::size_t a = 0; a < n; ++a) table_[a * n] = static_cast<ElementIndex>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const std::size_t p = parent_[b];
      const auto gk = static_cast<std::size_t>(via_[b]);
      for (std::size_t a = 0; a < n; ++a) table_[a * n + b] = right_[table_[a * n + p] * k + gk];
    }
  }
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto hit = lookup(matrices_[a].adjoint());
    if (!hit) throw NumericalError("inverse of a group element not found; tolerance too tight");
    inv_[a] = *hit;
  }
  element_orders_.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    ElementIndex x = static_cast<ElementIndex>(a);
    std::size_t ord = 1;
    while (x != 0) {
      x = mult(x, static_cast<ElementIndex>(a));
      ++ord;
    }
    element_orders_[a] = ord;
  }
}

void FiniteMatrixGroup::build_classes() {
  const std::size_t n = order();
  std::vector<ElementIndex> gens_el(generators_.size());
  for (std::size_t k = 0; k < generators_.size(); ++k) gens_el[k] = generator_element(static_cast<int>(k));
  class_of_.assign(n, std::numeric_limits<std::size_t>::max());
  std::vector<std::vector<ElementIndex>> found;
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] != std::numeric_limits<std::size_t>::max()) continue;
    const std::size_t cid = found.size();
    std::vector<ElementIndex> orbit{static_cast<ElementIndex>(a)};
    class_of_[a] = cid;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (ElementIndex s : gens_el) {
        const ElementIndex y = conjugate(orbit[i], s);
        if (class_of_[y] != cid) {
          class_of_[y] = cid;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    found.push_back(std::move(orbit));
  }
  auto min_key = [&](const std::vector<ElementIndex>& c) -> const MatrixKey& {
    const MatrixKey* best = &keys_[c.front()];
    for (ElementIndex x : c)
      if (keys_[x] < *best) best = &keys_[x];
    return *best;
  };
  std::vector<std::size_t> order_idx(found.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t x, std::size_t y) {
    const bool xe = found[x].front() == 0, ye = found[y].front() == 0;
    if (xe != ye) return xe;
    if (found[x].size() != found[y].size()) return found[x].size() < found[y].size();
    return min_key(found[x]) < min_key(found[y]);
  });
  classes_.clear();
  classes_.reserve(found.size());
  for (std::size_t i = 0; i < order_idx.size(); ++i) {
    for (ElementIndex x : found[order_idx[i]]) class_of_[x] = i;
    classes_.push_back(std::move(found[order_idx[i]]));
  }
}

GroupPtr generate_group(std::vector<Matrix> generators, const ToleranceConfig& cfg,
                        std::size_t max_order) {
  cfg.validate();
  if (max_order == 0) throw ContractViolation("max_order must be positive");
  if (generators.empty()) throw ContractViolation("generate_group: at least one generator required");
  const Eigen::Index dim = generators.front().rows();
  for (const Matrix& m : generators) {
    if (m.rows() != dim || m.cols() != dim)
      throw ContractViolation("generate_group: generators must share one square dimension");
    if (!is_unitary(m, cfg.unit_tol))
      throw ContractViolation("generate_group: non-unitary generator (defect " +
                              std::to_string(unitarity_defect(m)) + ")");
    if (std::abs(std::abs(m.determinant()) - 1.0) >= cfg.unit_tol)
      throw ContractViolation("generate_group: |det| differs from 1");
  }

  std::shared_ptr<FiniteMatrixGroup> g(new FiniteMatrixGroup());
  g->id_ = next_group_id.fetch_add(1);
  g->dim_ = static_cast<std::size_t>(dim);
  g->cfg_ = cfg;
  g->generators_ = std::move(generators);
  const std::size_t k = g->generators_.size();

  auto insert = [&](Matrix m, ElementIndex parent, int via) {
    const auto idx = static_cast<ElementIndex>(g->matrices_.size());
    MatrixKey key = canonical_key(m, cfg);
    g->index_[key].push_back(idx);
    g->keys_.push_back(std::move(key));
    g->matrices_.push_back(std::move(m));
    g->parent_.push_back(parent);
    g->via_.push_back(via);
    return idx;
  };
  insert(identity(g->dim_), 0, -1);
  for (std::size_t x = 0; x < g->matrices_.size(); ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      Matrix y = g->matrices_[x] * g->generators_[j];
      ElementIndex yi;
      if (auto hit = g->lookup(y)) {
        yi = *hit;
      } else {
        if (g->matrices_.size() >= max_order)
          throw GroupNotClosed("closure exceeded max_order = " + std::to_string(max_order));
        yi = insert(std::move(y), static_cast<ElementIndex>(x), static_cast<int>(j));
      }
      g->right_.push_back(yi);
    }
  }

  const std::size_t n = g->order();
  g->min_separation_ = std::numeric_limits<double>::infinity();
  if (n <= kSeparationLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        g->min_separation_ =
            std::min(g->min_separation_, max_component_distance(g->matrices_[a], g->matrices_[b]));
    if (g->min_separation_ <= 10.0 * cfg.eq_tol)
      throw NumericalError("group elements closer than 10·eq_tol: tolerance equality unsafe");
  }
  g->build_tables();
  g->build_classes();
  return g;
}

const std::vector<std::vector<ElementIndex>>& conjugacy_classes(const FiniteMatrixGroup& g) {
  return g.classes();
}

SubgroupRef whole_group(const FiniteMatrixGroup& g) {
  std::vector<ElementIndex> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return SubgroupRef{g.id(), std::move(all)};
}

SubgroupRef trivial_subgroup(const FiniteMatrixGroup& g) { return SubgroupRef{g.id(), {0}}; }

SubgroupRef generated_subgroup(const FiniteMatrixGroup& g, std::span<const ElementIndex> seeds) {
  return make_ref(g, close_under(g, {0}, seeds));
}

SubgroupRef normal_closure(const FiniteMatrixGroup& g, std::span<const ElementIndex> seeds) {
  std::vector<ElementIndex> conj;
  std::vector<bool> used(g.classes().size(), false);
  for (ElementIndex s : seeds) {
    const std::size_t c = g.class_of(s);
    if (used[c]) continue;
    used[c] = true;
    conj.insert(conj.end(), g.classes()[c].begin(), g.classes()[c].end());
  }
  return generated_subgroup(g, conj);
}

SubgroupRef center(const FiniteMatrixGroup& g) {
  std::vector<ElementIndex> z;
  for (const auto& c : g.classes())
    if (c.size() == 1) z.push_back(c.front());
  return make_ref(g, std::move(z));
}

SubgroupRef commutator_subgroup(const FiniteMatrixGroup& g) {
  std::vector<ElementIndex> comms;
  const std::size_t k = g.num_generators();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const ElementIndex a = g.generator_element(static_cast<int>(i));
      const ElementIndex b = g.generator_element(static_cast<int>(j));
      comms.push_back(g.mult(g.mult(a, b), g.mult(g.inv(a), g.inv(b))));
    }
  return normal_closure(g, comms);
}

SubgroupRef intersection(const SubgroupRef& a, const SubgroupRef& b) {
  if (a.parent_id != b.parent_id) throw ContractViolation("intersection of subgroups of different groups");
  SubgroupRef out{a.parent_id, {}};
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

bool is_subgroup(const FiniteMatrixGroup& g, const SubgroupRef& h) {
  require_parent(g, h);
  if (h.members.empty() || !h.contains(0)) return false;
  for (ElementIndex x : h.members) {
    if (!h.contains(g.inv(x))) return false;
    for (ElementIndex y : h.members)
      if (!h.contains(g.mult(x, y))) return false;
  }
  return true;
}

bool is_normal(const FiniteMatrixGroup& g, const SubgroupRef& h) {
  require_parent(g, h);
  for (std::size_t k = 0; k < g.num_generators(); ++k) {
    const ElementIndex s = g.generator_element(static_cast<int>(k));
    for (ElementIndex x : h.members)
      if (!h.contains(g.conjugate(x, s))) return false;
  }
  return true;
}

bool is_cyclic(const FiniteMatrixGroup& g, const SubgroupRef& h) {
  require_parent(g, h);
  for (ElementIndex x : h.members)
    if (g.element_order(x) == h.order()) return true;
  return false;
}

bool is_abelian(const FiniteMatrixGroup& g) { return g.classes().size() == g.order(); }

std::vector<SubgroupRef> all_normal_subgroups(const FiniteMatrixGroup& g) {
  if (g.order() > kNormalSubgroupGuard)
    throw GuardExceeded("all_normal_subgroups: order " + std::to_string(g.order()) + " exceeds " +
                        std::to_string(kNormalSubgroupGuard));
  std::vector<SubgroupRef> found{trivial_subgroup(g)};
  auto known = [&](const SubgroupRef& s) {
    return std::find(found.begin(), found.end(), s) != found.end();
  };
  for (const auto& c : g.classes()) {
    const ElementIndex rep = c.front();
    SubgroupRef s = normal_closure(g, std::span<const ElementIndex>(&rep, 1));
    if (!known(s)) found.push_back(std::move(s));
  }
  const std::size_t minimal = found.size();
  // joins of generated normal subgroups with the single-class closures
  // reach every normal subgroup (each is the product of its class closures)
  for (std::size_t i = 1; i < found.size(); ++i)
    for (std::size_t j = 1; j < minimal; ++j) {
      if (std::includes(found[i].members.begin(), found[i].members.end(), found[j].members.begin(),
                        found[j].members.end()))
        continue;
      SubgroupRef s = join_normal(g, found[i], found[j]);
      if (!known(s)) found.push_back(std::move(s));
    }
  std::sort(found.begin(), found.end(), ref_less);
  return found;
}

bool AbstractGroupTable::is_abelian() const {
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool AbstractGroupTable::is_latin_square() const {
  for (std::uint32_t a = 0; a < order; ++a) {
    std::vector<bool> row(order, false), col(order, false);
    for (std::uint32_t b = 0; b < order; ++b) {
      const std::uint32_t r = mul(a, b), c = mul(b, a);
      if (r >= order || c >= order || row[r] || col[c]) return false;
      row[r] = col[c] = true;
    }
  }
  return true;
}

std::size_t AbstractGroupTable::element_order(std::uint32_t a) const {
  std::size_t ord = 1;
  for (std::uint32_t x = a; x != 0; x = mul(x, a)) ++ord;
  return ord;
}

AbstractGroupTable quotient_group(const FiniteMatrixGroup& g, const SubgroupRef& n) {
  require_parent(g, n);
  if (!n.contains(0) || !is_normal(g, n)) throw ContractViolation("quotient_group: subgroup is not normal");
  AbstractGroupTable t;
  t.label_of_parent.assign(g.order(), kNone);
  std::vector<std::vector<ElementIndex>> cosets;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (t.label_of_parent[x] != kNone) continue;
    const auto label = static_cast<std::uint32_t>(cosets.size());
    std::vector<ElementIndex> coset;
    coset.reserve(n.order());
    for (ElementIndex m : n.members) {
      const ElementIndex y = g.mult(x, m);
      if (t.label_of_parent[y] != kNone) throw ContractViolation("quotient_group: cosets overlap");
      t.label_of_parent[y] = label;
      coset.push_back(y);
    }
    cosets.push_back(std::move(coset));
  }
  t.order = cosets.size();
  for (const auto& c : cosets)
    t.representatives.push_back(*std::min_element(
        c.begin(), c.end(), [&](ElementIndex a, ElementIndex b) { return g.key(a) < g.key(b); }));
  t.cayley.assign(t.order * t.order, 0);
  for (std::size_t a = 0; a < t.order; ++a)
    for (std::size_t b = 0; b < t.order; ++b)
      t.cayley[a * t.order + b] = t.label_of_parent[g.mult(t.representatives[a], t.representatives[b])];
  for (std::size_t k = 0; k < g.num_generators(); ++k)
    t.generators.push_back(t.label_of_parent[g.generator_element(static_cast<int>(k))]);
  fill_inverse(t);
  fill_tree(t);
  return t;
}

AbstractGroupTable subgroup_table(const FiniteMatrixGroup& g, const SubgroupRef& h) {
  require_parent(g, h);
  if (!is_subgroup(g, h)) throw ContractViolation("subgroup_table: not a subgroup");
  AbstractGroupTable t;
  t.order = h.order();
  t.representatives = h.members;  // sorted, so index 0 is the identity
  t.label_of_parent.assign(g.order(), kNone);
  for (std::size_t i = 0; i < t.order; ++i) t.label_of_parent[h.members[i]] = static_cast<std::uint32_t>(i);
  t.cayley.assign(t.order * t.order, 0);
  for (std::size_t a = 0; a < t.order; ++a)
    for (std::size_t b = 0; b < t.order; ++b)
      t.cayley[a * t.order + b] = t.label_of_parent[g.mult(h.members[a], h.members[b])];
  for (std::uint32_t i = 1; i < t.order; ++i) t.generators.push_back(i);
  fill_inverse(t);
  fill_tree(t);
  return t;
}

namespace {

std::vector<std::uint32_t> cyclic_span(const AbstractGroupTable& a, std::uint32_t x) {
  std::vector<std::uint32_t> out{0};
  for (std::uint32_t y = x; y != 0; y = a.mul(y, x)) out.push_back(y);
  return out;
}

// Subgroup generated by s together with the element x (abelian setting).
std::vector<bool> add_generator(const AbstractGroupTable& a, const std::vector<bool>& s, std::uint32_t x) {
  std::vector<bool> out = s;
  const auto powers = cyclic_span(a, x);
  for (std::uint32_t y = 0; y < a.order; ++y)
    if (s[y])
      for (std::uint32_t p : powers) out[a.mul(y, p)] = true;
  return out;
}

}  // namespace

AbelianDecomposition decompose_abelian(const AbstractGroupTable& a) {
  if (!a.is_abelian()) throw ContractViolation("abelian_invariants: group is not abelian");
  // Work within the current factor K (initially the whole group): take an
  // element x of maximal order in K, find a complement C of <x> in K by
  // greedily growing a subgroup that meets <x> trivially, then recurse on C.
  std::vector<bool> current(a.order, true);
  std::vector<std::uint32_t> basis;
  while (true) {
    std::size_t size = static_cast<std::size_t>(std::count(current.begin(), current.end(), true));
    if (size == 1) break;
    std::uint32_t x = 0;
    std::size_t best = 1;
    for (std::uint32_t y = 0; y < a.order; ++y)
      if (current[y] && a.element_order(y) > best) {
        best = a.element_order(y);
        x = y;
      }
    std::vector<bool> cyc(a.order, false);
    for (std::uint32_t p : cyclic_span(a, x)) cyc[p] = true;
    std::vector<bool> comp(a.order, false);
    comp[0] = true;
    std::size_t comp_size = 1;
    bool grown = true;
    while (grown && comp_size * best < size) {
      grown = false;
      for (std::uint32_t y = 0; y < a.order && !grown; ++y) {
        if (!current[y] || comp[y]) continue;
        std::vector<bool> cand = add_generator(a, comp, y);
        bool meets = false;
        for (std::uint32_t z = 1; z < a.order; ++z)
          if (cand[z] && cyc[z]) {
            meets = true;
            break;
          }
        if (meets) continue;
        comp = std::move(cand);
        comp_size = static_cast<std::size_t>(std::count(comp.begin(), comp.end(), true));
        grown = true;
      }
    }
    if (comp_size * best != size) throw NumericalError("abelian_invariants: complement search failed");
    basis.push_back(x);
    current = std::move(comp);
  }
  std::reverse(basis.begin(), basis.end());
  AbelianDecomposition d;
  d.basis = basis;
  for (std::uint32_t b : basis) d.invariants.push_back(static_cast<long>(a.element_order(b)));
  // coordinates by enumerating all products of basis powers
  d.coordinates.assign(a.order, std::vector<long>(basis.size(), 0));
  std::vector<long> exps(basis.size(), 0);
  std::size_t visited = 0;
  while (true) {
    std::uint32_t el = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (long e = 0; e < exps[i]; ++e) el = a.mul(el, basis[i]);
    d.coordinates[el] = exps;
    ++visited;
    std::size_t i = 0;
    while (i < basis.size() && ++exps[i] == d.invariants[i]) exps[i++] = 0;
    if (i == basis.size()) break;
  }
  if (visited != a.order) throw NumericalError("abelian_invariants: basis does not span");
  return d;
}

std::vector<long> abelian_invariants(const AbstractGroupTable& a) { return decompose_abelian(a).invariants; }

std::vector<long> abelian_invariants(const FiniteMatrixGroup& g, const SubgroupRef& h) {
  return abelian_invariants(subgroup_table(g, h));
}

std::optional<CyclicDirectFactor> find_cyclic_direct_factor(const FiniteMatrixGroup& g) {
  const SubgroupRef z = center(g);
  if (z.order() == 1) return std::nullopt;
  std::vector<SubgroupRef> cyclic;
  for (ElementIndex x : z.members) {
    if (x == 0) continue;
    SubgroupRef c = generated_subgroup(g, std::span<const ElementIndex>(&x, 1));
    if (std::find(cyclic.begin(), cyclic.end(), c) == cyclic.end()) cyclic.push_back(std::move(c));
  }
  std::sort(cyclic.begin(), cyclic.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.members < b.members;
  });
  const std::vector<SubgroupRef> normals = all_normal_subgroups(g);
  for (const SubgroupRef& c : cyclic)
    for (const SubgroupRef& f : normals) {
      if (f.order() * c.order() != g.order()) continue;
      if (intersection(f, c).order() == 1) return CyclicDirectFactor{c, f};
    }
  return std::nullopt;
}

}  // namespace u3g
