#include "u3groups/rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

namespace u3g {

namespace {

constexpr double kCharTol = 1e-6;

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (!a || !b || a->id() != b->id()) throw ContractViolation("characters/representations of different groups");
}

double scale_of(const Matrix& m) {
  double s = 1.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) s = std::max(s, std::abs(m.data()[i]));
  return s;
}

long checked_round(Complex z, const char* what) {
  const double r = std::round(z.real());
  if (std::abs(z.real() - r) > kCharTol || std::abs(z.imag()) > kCharTol) {
    std::ostringstream os;
    os << what << ": expected an integer, got (" << z.real() << ", " << z.imag() << ")";
    throw InconsistencyError(os.str());
  }
  return static_cast<long>(r);
}

bool is_unitary_rep(const Representation& rep) {
  for (const Matrix& m : rep.generator_images())
    if (unitarity_defect(m) > 1e-9) return false;
  return true;
}

std::int64_t quantize(double x, double grid) { return std::llround(x / grid); }

}  // namespace

Representation::Representation(GroupPtr group, std::vector<Matrix> generator_images, bool require_unitary)
    : group_(std::move(group)), generator_images_(std::move(generator_images)) {
  if (!group_) throw ContractViolation("representation without group");
  if (generator_images_.size() != group_->num_generators())
    throw ContractViolation("representation needs one image per generator");
  dim_ = static_cast<std::size_t>(generator_images_.front().rows());
  for (const Matrix& m : generator_images_)
    if (m.rows() != static_cast<Eigen::Index>(dim_) || m.cols() != static_cast<Eigen::Index>(dim_))
      throw ContractViolation("generator images must share one square dimension");
  images_.resize(group_->order());
  images_[0] = identity(dim_);
  for (ElementIndex x = 1; x < group_->order(); ++x)
    images_[x] = images_[group_->tree_parent(x)] *
                 generator_images_[static_cast<std::size_t>(group_->tree_generator(x))];
  validate(require_unitary);
}

Representation Representation::from_element_images(GroupPtr group, std::vector<Matrix> images,
                                                   bool require_unitary) {
  if (!group) throw ContractViolation("representation without group");
  if (images.size() != group->order()) throw ContractViolation("need one image per element");
  Representation r;
  r.group_ = std::move(group);
  r.dim_ = static_cast<std::size_t>(images.front().rows());
  for (const Matrix& m : images)
    if (m.rows() != static_cast<Eigen::Index>(r.dim_) || m.cols() != static_cast<Eigen::Index>(r.dim_))
      throw ContractViolation("element images must share one square dimension");
  if (!approx_equal(images.front(), identity(r.dim_), 10.0 * r.group_->tolerance().eq_tol))
    throw NotAHomomorphism("identity element not mapped to the identity matrix");
  r.images_ = std::move(images);
  for (std::size_t k = 0; k < r.group_->num_generators(); ++k)
    r.generator_images_.push_back(r.images_[r.group_->generator_element(static_cast<int>(k))]);
  r.validate(require_unitary);
  return r;
}

void Representation::validate(bool require_unitary) const {
  const ToleranceConfig& cfg = group_->tolerance();
  if (require_unitary)
    for (const Matrix& m : generator_images_)
      if (!is_unitary(m, cfg.unit_tol)) throw ContractViolation("representation image is not unitary");
  const double tol = 10.0 * cfg.eq_tol;
  for (ElementIndex x = 0; x < group_->order(); ++x)
    for (std::size_t k = 0; k < generator_images_.size(); ++k) {
      const Matrix expect = images_[x] * generator_images_[k];
      const Matrix& got = images_[group_->right_by_generator(x, static_cast<int>(k))];
      if (max_component_distance(expect, got) > tol * scale_of(expect))
        throw NotAHomomorphism("generator images violate a group relation");
    }
}

Representation rep_from_images(GroupPtr group, std::vector<Matrix> generator_images) {
  return Representation(std::move(group), std::move(generator_images), true);
}

Representation defining_rep(GroupPtr group) {
  std::vector<Matrix> gens = group->generators();
  return Representation(std::move(group), std::move(gens), true);
}

Representation trivial_rep(GroupPtr group) {
  std::vector<Matrix> gens(group->num_generators(), identity(1));
  return Representation(std::move(group), std::move(gens), true);
}

Representation conjugate_rep(const Representation& rep) {
  std::vector<Matrix> images;
  images.reserve(rep.images().size());
  for (const Matrix& m : rep.images()) images.push_back(m.conjugate());
  return Representation::from_element_images(rep.group(), std::move(images), false);
}

Representation tensor_rep(const Representation& a, const Representation& b) {
  require_same_group(a.group(), b.group());
  std::vector<Matrix> images;
  images.reserve(a.images().size());
  for (std::size_t x = 0; x < a.images().size(); ++x) images.push_back(kronecker(a.images()[x], b.images()[x]));
  return Representation::from_element_images(a.group(), std::move(images), false);
}

Representation twist(const Representation& rep, const Representation& one_dim) {
  require_same_group(rep.group(), one_dim.group());
  if (one_dim.dim() != 1) throw ContractViolation("twist: second argument must be one-dimensional");
  std::vector<Matrix> images;
  images.reserve(rep.images().size());
  for (std::size_t x = 0; x < rep.images().size(); ++x)
    images.push_back(one_dim.images()[x](0, 0) * rep.images()[x]);
  return Representation::from_element_images(rep.group(), std::move(images), false);
}

Representation restrict_to_subspace(const Representation& rep, const Matrix& basis) {
  if (basis.rows() != static_cast<Eigen::Index>(rep.dim()) || basis.cols() == 0)
    throw ContractViolation("restrict_to_subspace: basis shape mismatch");
  std::vector<Matrix> images;
  images.reserve(rep.images().size());
  for (const Matrix& m : rep.images()) images.push_back(basis.adjoint() * m * basis);
  return Representation::from_element_images(rep.group(), std::move(images), false);
}

Character make_character(GroupPtr group, std::vector<Complex> values) {
  if (!group || values.size() != group->classes().size())
    throw ContractViolation("character needs one value per conjugacy class");
  return Character{std::move(group), std::move(values)};
}

Character character_of(const Representation& rep) {
  const auto& classes = rep.group()->classes();
  std::vector<Complex> values;
  values.reserve(classes.size());
  for (const auto& c : classes) values.push_back(trace(rep.image(c.front())));
  return Character{rep.group(), std::move(values)};
}

Character conjugate(const Character& c) {
  Character out = c;
  for (Complex& v : out.values) v = std::conj(v);
  return out;
}

Character product(const Character& a, const Character& b) {
  require_same_group(a.group, b.group);
  Character out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
  return out;
}

Character operator+(const Character& a, const Character& b) {
  require_same_group(a.group, b.group);
  Character out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

Character operator-(const Character& a, const Character& b) {
  require_same_group(a.group, b.group);
  Character out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

Character operator*(Complex s, const Character& c) {
  Character out = c;
  for (Complex& v : out.values) v *= s;
  return out;
}

static Character square_part(const Character& c, double sign) {
  const FiniteMatrixGroup& g = *c.group;
  Character out = c;
  for (std::size_t i = 0; i < g.classes().size(); ++i) {
    const ElementIndex x = g.classes()[i].front();
    const Complex sq = c.values[g.class_of(g.mult(x, x))];
    out.values[i] = (c.values[i] * c.values[i] + sign * sq) / 2.0;
  }
  return out;
}

Character symmetric_square(const Character& c) { return square_part(c, 1.0); }
Character alternating_square(const Character& c) { return square_part(c, -1.0); }

double distance(const Character& a, const Character& b) {
  require_same_group(a.group, b.group);
  double d = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) d = std::max(d, std::abs(a.values[i] - b.values[i]));
  return d;
}

Complex inner_product(const Character& a, const Character& b) {
  require_same_group(a.group, b.group);
  const auto& classes = a.group->classes();
  Complex s = 0.0;
  for (std::size_t i = 0; i < classes.size(); ++i)
    s += static_cast<double>(classes[i].size()) * std::conj(a.values[i]) * b.values[i];
  return s / static_cast<double>(a.group->order());
}

bool is_irreducible(const Character& c) {
  const Complex n = inner_product(c, c);
  return std::abs(n.real() - 1.0) < 1e-7 && std::abs(n.imag()) < 1e-7;
}

bool is_irreducible(const Representation& rep) {
  const bool irr = is_irreducible(character_of(rep));
  if (irr && rep.group()->order() % rep.dim() != 0)
    throw InconsistencyError("irreducible representation whose dimension does not divide the group order");
  return irr;
}

SubgroupRef kernel(const Representation& rep) {
  const Matrix one = identity(rep.dim());
  SubgroupRef k{rep.group()->id(), {}};
  for (ElementIndex x = 0; x < rep.group()->order(); ++x)
    if (approx_equal(rep.image(x), one, kCharTol)) k.members.push_back(x);
  return k;
}

bool is_faithful(const Representation& rep) {
  const Character chi = character_of(rep);
  const double d = static_cast<double>(rep.dim());
  std::size_t hits = 0;
  for (const Complex& v : chi.values)
    if (std::abs(v.real() - d) < kCharTol && std::abs(v.imag()) < kCharTol) ++hits;
  const bool by_character = hits == 1;
  const bool by_kernel = kernel(rep).order() == 1;
  if (by_character != by_kernel)
    throw InconsistencyError("character count and kernel disagree on faithfulness");
  return by_character;
}

DeterminantInfo determinant_character(const Representation& rep) {
  const FiniteMatrixGroup& g = *rep.group();
  DeterminantInfo info;
  info.det.group = rep.group();
  const long long limit = 2 * static_cast<long long>(g.order());
  std::size_t lcm = 1;
  for (const auto& c : g.classes()) {
    const Complex z = rep.image(c.front()).determinant();
    info.det.values.push_back(z);
    if (std::abs(std::abs(z) - 1.0) > g.tolerance().unit_tol)
      throw NumericalError("determinant off the unit circle");
    const double turns = std::arg(z) / (2.0 * std::numbers::pi);
    long long q = 1;
    for (; q <= limit; ++q) {
      const double t = turns * static_cast<double>(q);
      if (std::abs(t - std::round(t)) < kCharTol * static_cast<double>(q)) break;
    }
    if (q > limit) throw NumericalError("determinant is not a root of unity of bounded order");
    lcm = std::lcm(lcm, static_cast<std::size_t>(q));
  }
  info.subgroup_order = lcm;
  return info;
}

TableRepresentation table_rep_from_images(const AbstractGroupTable& table, std::vector<Matrix> generator_images) {
  if (generator_images.size() != table.generators.size())
    throw ContractViolation("table representation needs one image per table generator");
  const auto dim = static_cast<std::size_t>(generator_images.front().rows());
  TableRepresentation r;
  r.table = &table;
  r.images.resize(table.order);
  r.images[0] = identity(dim);
  // tree order is not index order; walk each element's path
  std::vector<bool> done(table.order, false);
  done[0] = true;
  std::function<const Matrix&(std::uint32_t)> eval = [&](std::uint32_t a) -> const Matrix& {
    if (!done[a]) {
      r.images[a] = eval(table.tree_parent[a]) * generator_images[static_cast<std::size_t>(table.tree_generator[a])];
      done[a] = true;
    }
    return r.images[a];
  };
  for (std::uint32_t a = 0; a < table.order; ++a) eval(a);
  for (std::uint32_t a = 0; a < table.order; ++a)
    for (std::size_t k = 0; k < table.generators.size(); ++k) {
      const Matrix expect = r.images[a] * generator_images[k];
      if (max_component_distance(expect, r.images[table.mul(a, table.generators[k])]) > 1e-6 * scale_of(expect))
        throw NotAHomomorphism("quotient images violate a relation of the table");
    }
  return r;
}

Representation lift_from_quotient(GroupPtr group, const AbstractGroupTable& quotient, const TableRepresentation& rep) {
  if (rep.table != &quotient) throw ContractViolation("lift_from_quotient: representation of another table");
  if (quotient.label_of_parent.size() != group->order())
    throw ContractViolation("lift_from_quotient: table is not a quotient of this group");
  std::vector<Matrix> images;
  images.reserve(group->order());
  for (ElementIndex x = 0; x < group->order(); ++x) {
    const std::uint32_t label = quotient.label_of_parent[x];
    if (label >= quotient.order) throw ContractViolation("lift_from_quotient: element without coset");
    images.push_back(rep.images[label]);
  }
  return Representation::from_element_images(std::move(group), std::move(images), false);
}

std::vector<Representation> one_dim_characters(GroupPtr group) {
  const FiniteMatrixGroup& g = *group;
  const AbstractGroupTable ab = quotient_group(g, commutator_subgroup(g));
  const AbelianDecomposition dec = decompose_abelian(ab);
  const std::size_t r = dec.invariants.size();
  long exponent = 1;
  for (long e : dec.invariants) exponent = std::lcm(exponent, e);
  std::vector<Representation> out;
  for (std::size_t idx = 0; idx < ab.order; ++idx) {
    std::vector<long> t(r, 0);
    std::size_t rest = idx;
    for (std::size_t i = r; i-- > 0;) {
      t[i] = static_cast<long>(rest % static_cast<std::size_t>(dec.invariants[i]));
      rest /= static_cast<std::size_t>(dec.invariants[i]);
    }
    std::vector<Matrix> images;
    images.reserve(g.order());
    for (ElementIndex x = 0; x < g.order(); ++x) {
      const auto& coords = dec.coordinates[ab.label_of_parent[x]];
      long long k = 0;
      for (std::size_t i = 0; i < r; ++i) k += static_cast<long long>(t[i]) * coords[i] * (exponent / dec.invariants[i]);
      Matrix m(1, 1);
      m(0, 0) = root_of_unity(exponent, k);
      images.push_back(std::move(m));
    }
    out.push_back(Representation::from_element_images(group, std::move(images), true));
  }
  return out;
}

std::vector<std::size_t> CharacterTable::dimensions() const {
  std::vector<std::size_t> d;
  for (const Character& c : characters) d.push_back(static_cast<std::size_t>(std::lround(c.degree())));
  return d;
}

void canonical_sort(CharacterTable& table) {
  std::vector<std::size_t> idx(table.characters.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto sort_key = [&](std::size_t i) {
    std::vector<std::int64_t> key;
    key.push_back(std::lround(table.characters[i].degree()));
    for (const Complex& v : table.characters[i].values) {
      key.push_back(quantize(v.real(), kCharTol));
      key.push_back(quantize(v.imag(), kCharTol));
    }
    return key;
  };
  std::vector<std::vector<std::int64_t>> keys;
  for (std::size_t i = 0; i < idx.size(); ++i) keys.push_back(sort_key(i));
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  CharacterTable sorted{table.group, {}, {}, table.complete};
  for (std::size_t i : idx) {
    sorted.characters.push_back(std::move(table.characters[i]));
    sorted.realizations.push_back(std::move(table.realizations[i]));
  }
  table = std::move(sorted);
}

namespace {

Matrix square_subspace_basis(std::size_t d, bool symmetric) {
  std::vector<Vector> cols;
  const auto n = static_cast<Eigen::Index>(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      if (a == b) {
        if (symmetric) cols.push_back(Vector::Unit(n, static_cast<Eigen::Index>(a * d + a)));
        continue;
      }
      Vector v = Vector::Zero(n);
      v(static_cast<Eigen::Index>(a * d + b)) = 1.0 / std::sqrt(2.0);
      v(static_cast<Eigen::Index>(b * d + a)) = (symmetric ? 1.0 : -1.0) / std::sqrt(2.0);
      cols.push_back(std::move(v));
    }
  Matrix q(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) q.col(static_cast<Eigen::Index>(j)) = cols[j];
  return q;
}

// Eigenspaces of a random element of the commutant split a unitary rep into invariant pieces.
std::vector<Representation> split_by_commutant(const Representation& rep, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(rep.dim());
  std::normal_distribution<double> gauss;
  Matrix x(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) x(i, j) = Complex(gauss(rng), gauss(rng));
  x = (x + x.adjoint()).eval();
  Matrix h = Matrix::Zero(d, d);
  for (const Matrix& m : rep.images()) h.noalias() += m * x * m.adjoint();
  h /= static_cast<double>(rep.images().size());
  h = ((h + h.adjoint()) * 0.5).eval();
  const Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& ev = es.eigenvalues();
  const double gap = 1e-6 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<Representation> pieces;
  for (Eigen::Index start = 0; start < d;) {
    Eigen::Index end = start + 1;
    while (end < d && ev(end) - ev(end - 1) < gap) ++end;
    pieces.push_back(restrict_to_subspace(rep, es.eigenvectors().middleCols(start, end - start)));
    start = end;
  }
  return pieces;
}

struct Candidate {
  Character chi;
  std::function<std::optional<Representation>()> source;
};

}  // namespace

CharacterTable discover_irreducibles(GroupPtr group, std::span<const Representation> seeds,
                                     const DiscoverOptions& options) {
  const FiniteMatrixGroup& g = *group;
  for (const Representation& s : seeds) require_same_group(s.group(), group);
  CharacterTable table{group, {}, {}, false};
  double sum_sq = 0.0;
  std::mt19937_64 rng(0x5eed);
  const double target = static_cast<double>(g.order());

  auto peel = [&](Character chi) {
    for (const Character& k : table.characters) {
      const long m = checked_round(inner_product(k, chi), "peeling multiplicity");
      if (m < 0) throw InconsistencyError("negative multiplicity while peeling");
      if (m) chi = chi - static_cast<double>(m) * k;
    }
    return chi;
  };
  auto realize = [&](const Character& irr, const Candidate& c) -> std::optional<Representation> {
    if (!options.realize || !c.source) return std::nullopt;
    std::optional<Representation> src = c.source();
    if (!src) return std::nullopt;
    const auto d = static_cast<std::size_t>(std::lround(irr.degree()));
    IsotypicComponent comp = isotypic_projector(*src, irr, d);
    if (comp.multiplicity != 1) return std::nullopt;
    return restrict_to_subspace(*src, comp.basis);
  };

  std::vector<Candidate> pool;
  // returns true when the candidate contributed a new irreducible
  auto consider = [&](Candidate c) {
    Character res = peel(c.chi);
    const long norm = checked_round(inner_product(res, res), "residue norm");
    if (norm == 0) return false;
    if (norm == 1 && res.degree() > 0.5) {
      std::optional<Representation> rep = realize(res, c);
      table.characters.push_back(res);
      table.realizations.push_back(std::move(rep));
      sum_sq += res.degree() * res.degree();
      return true;
    }
    if (norm > 1 && options.realize && c.source) {
      std::optional<Representation> src = c.source();
      c.source = nullptr;
      if (src && src->dim() <= options.max_realize_dim) {
        if (!is_unitary_rep(*src)) src = unitarize(*src).rep;
        bool found = false;
        for (int attempt = 0; attempt < 3; ++attempt) {
          bool stuck = false;
          for (Representation& piece : split_by_commutant(*src, rng)) {
            Character pc = peel(character_of(piece));
            const long pn = checked_round(inner_product(pc, pc), "piece norm");
            if (pn == 1) {
              table.characters.push_back(pc);
              sum_sq += pc.degree() * pc.degree();
              table.realizations.push_back(options.realize ? std::optional<Representation>(std::move(piece))
                                                           : std::nullopt);
              found = true;
            } else if (pn > 1) {
              stuck = true;
            }
          }
          if (!stuck) break;
        }
        if (found) return true;
      }
    }
    for (const Candidate& p : pool)
      if (distance(p.chi, res) < kCharTol) return false;
    pool.push_back(Candidate{std::move(res), std::move(c.source)});
    return false;
  };
  auto done = [&] { return sum_sq > target - 0.5; };

  for (Representation& r : one_dim_characters(group)) {
    auto rp = std::make_shared<Representation>(std::move(r));
    consider(Candidate{character_of(*rp), [rp] { return std::optional<Representation>(*rp); }});
  }
  for (const Representation& s : seeds) {
    auto rp = std::make_shared<Representation>(s);
    consider(Candidate{character_of(*rp), [rp] { return std::optional<Representation>(*rp); }});
  }

  std::size_t processed = 0;  // knowns whose products etc. have been formed
  int round = 0;
  while (!done() && round < options.max_rounds) {
    ++round;
    const std::size_t before = table.size();
    const std::size_t known = table.size();
    std::vector<Candidate> retry = std::move(pool);
    pool.clear();
    for (Candidate& c : retry) {
      consider(std::move(c));
      if (done()) break;
    }
    auto rep_of = [&table](std::size_t i) { return table.realizations[i]; };
    for (std::size_t j = processed; j < known && !done(); ++j) {
      for (std::size_t i = 0; i <= j && !done(); ++i) {
        auto ri = rep_of(i), rj = rep_of(j);
        std::function<std::optional<Representation>()> src;
        if (ri && rj && ri->dim() * rj->dim() <= options.max_realize_dim)
          src = [ri, rj] { return std::optional<Representation>(tensor_rep(*ri, *rj)); };
        consider(Candidate{product(table.characters[i], table.characters[j]), src});
      }
      if (done()) break;
      auto rj = rep_of(j);
      std::function<std::optional<Representation>()> csrc;
      if (rj) csrc = [rj] { return std::optional<Representation>(conjugate_rep(*rj)); };
      consider(Candidate{conjugate(table.characters[j]), csrc});
      if (table.characters[j].degree() > 1.5) {
        for (bool sym : {true, false}) {
          if (done()) break;
          const std::size_t d = rj ? rj->dim() : 0;
          const std::size_t sub = sym ? d * (d + 1) / 2 : d * (d - 1) / 2;
          std::function<std::optional<Representation>()> ssrc;
          if (rj && sub <= options.max_realize_dim)
            ssrc = [rj, d, sym] {
              return std::optional<Representation>(
                  restrict_to_subspace(tensor_rep(*rj, *rj), square_subspace_basis(d, sym)));
            };
          const Character& cj = table.characters[j];
          consider(Candidate{sym ? symmetric_square(cj) : alternating_square(cj), ssrc});
        }
      }
    }
    processed = known;
    if (table.size() == before && processed == table.size()) break;
  }
  table.complete = std::abs(sum_sq - target) < 0.5 && table.size() == g.classes().size();
  canonical_sort(table);
  if (!table.complete) {
    std::ostringstream os;
    os << "tensor peeling found " << table.size() << " of " << g.classes().size()
       << " irreducibles (sum of squared degrees " << sum_sq << " of " << g.order() << ")";
    throw IncompleteTable(os.str(), table);
  }
  return table;
}

TableCheck verify_character_table(const CharacterTable& table, double tol) {
  TableCheck check;
  const FiniteMatrixGroup& g = *table.group;
  const std::size_t nc = g.classes().size();
  std::ostringstream diag;
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      const Complex ip = inner_product(table.characters[i], table.characters[j]);
      const double dev = std::abs(ip - Complex(i == j ? 1.0 : 0.0));
      if (dev > check.worst_row) {
        check.worst_row = dev;
        if (dev > tol) {
          diag.str("");
          diag << "row orthogonality (" << i << "," << j << ") off by " << dev;
        }
      }
    }
  if (table.size() != nc) {
    check.ok = false;
    check.diagnostic = "table has " + std::to_string(table.size()) + " rows for " + std::to_string(nc) + " classes";
    return check;
  }
  std::string col_diag;
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b) {
      Complex s = 0.0;
      for (const Character& c : table.characters) s += std::conj(c.values[a]) * c.values[b];
      const double expect =
          a == b ? static_cast<double>(g.order()) / static_cast<double>(g.classes()[a].size()) : 0.0;
      const double dev = std::abs(s - Complex(expect));
      if (dev > check.worst_column) {
        check.worst_column = dev;
        if (dev > tol) {
          std::ostringstream os;
          os << "column orthogonality (" << a << "," << b << ") off by " << dev;
          col_diag = os.str();
        }
      }
    }
  check.ok = check.worst_row <= tol && check.worst_column <= tol;
  if (!check.ok) check.diagnostic = check.worst_row > tol ? diag.str() : col_diag;
  return check;
}

std::vector<long> decompose(const Character& chi, const CharacterTable& table) {
  std::vector<long> m;
  double total = 0.0;
  for (const Character& c : table.characters) {
    const long k = checked_round(inner_product(c, chi), "multiplicity");
    if (k < 0) throw InconsistencyError("negative multiplicity");
    m.push_back(k);
    total += static_cast<double>(k) * c.degree();
  }
  if (std::abs(total - chi.degree()) > kCharTol)
    throw InconsistencyError("multiplicities do not account for the full dimension");
  return m;
}

IsotypicComponent isotypic_projector(const Representation& rep, const Character& target, std::size_t degree) {
  require_same_group(rep.group(), target.group);
  const FiniteMatrixGroup& g = *rep.group();
  for (const Matrix& m : rep.generator_images())
    if (!is_unitary(m, g.tolerance().unit_tol)) throw ContractViolation("isotypic_projector: rep is not unitary");
  IsotypicComponent comp;
  comp.target = target;
  const auto n = static_cast<Eigen::Index>(rep.dim());
  Matrix p = Matrix::Zero(n, n);
  for (ElementIndex x = 0; x < g.order(); ++x) p += std::conj(target.values[g.class_of(x)]) * rep.image(x);
  p *= static_cast<double>(degree) / static_cast<double>(g.order());
  comp.idempotency_defect = max_component_distance(p * p, p);
  comp.adjoint_defect = max_component_distance(p.adjoint(), p);
  const Complex tr = p.trace();
  const double m = std::round(tr.real() / static_cast<double>(degree));
  if (std::abs(tr.real() - m * static_cast<double>(degree)) > kCharTol || std::abs(tr.imag()) > kCharTol || m < 0)
    throw InconsistencyError("projector trace is not a multiple of the degree");
  if (comp.idempotency_defect > kCharTol || comp.adjoint_defect > kCharTol)
    throw InconsistencyError("projector is not an orthogonal projection");
  comp.multiplicity = static_cast<std::size_t>(m);
  comp.basis = orthonormal_columns(p, 1e-6);
  if (static_cast<std::size_t>(comp.basis.cols()) != comp.multiplicity * degree)
    throw NumericalError("projector rank differs from its trace");
  comp.projector = std::move(p);
  return comp;
}

SubspaceCheck verify_invariant_subspace(const Representation& rep, std::span<const Vector> basis, double tol) {
  SubspaceCheck out;
  for (const Vector& v : basis)
    if (v.size() != static_cast<Eigen::Index>(rep.dim())) throw ContractViolation("subspace vector dimension mismatch");
  out.basis = orthonormal_basis(basis);
  const Matrix& q = out.basis;
  const auto n = static_cast<Eigen::Index>(rep.dim());
  if (q.cols() == 0) throw ContractViolation("verify_invariant_subspace: empty basis");
  const Matrix perp = Matrix::Identity(n, n) - q * q.adjoint();
  for (const Matrix& d : rep.generator_images()) {
    const Matrix r = perp * d * q;
    out.residual = std::max(out.residual, max_component_distance(r, Matrix::Zero(r.rows(), r.cols())));
  }
  out.invariant = out.residual < tol;
  out.restricted.group = rep.group();
  for (const auto& c : rep.group()->classes()) out.restricted.values.push_back((q.adjoint() * rep.image(c.front()) * q).trace());
  return out;
}

Unitarized unitarize(const Representation& rep) {
  const Matrix h = averaged_metric(rep.images());
  Matrix t = metric_orthonormal_basis(h);
  const Matrix t_inv = t.inverse();
  std::vector<Matrix> images;
  images.reserve(rep.images().size());
  for (const Matrix& d : rep.images()) images.push_back(t_inv * d * t);
  Representation out = Representation::from_element_images(rep.group(), std::move(images), false);
  for (const Matrix& m : out.images())
    if (!is_unitary(m, rep.group()->tolerance().unit_tol))
      throw NumericalError("unitarize: result is not unitary");
  return Unitarized{std::move(t), std::move(out)};
}

RawCharacterTable raw_table(const CharacterTable& table) {
  RawCharacterTable raw;
  raw.class_sizes = table.group->class_sizes();
  for (const Character& c : table.characters) raw.rows.push_back(c.values);
  return raw;
}

bool equivalent_up_to_permutation(const RawCharacterTable& a, const RawCharacterTable& b, double grid) {
  const std::size_t nc = a.class_sizes.size();
  if (b.class_sizes.size() != nc || a.rows.size() != b.rows.size()) return false;
  using Cell = std::pair<std::int64_t, std::int64_t>;
  auto grid_of = [&](const RawCharacterTable& t) {
    std::vector<std::vector<Cell>> q;
    for (const auto& row : t.rows) {
      if (row.size() != nc) throw ContractViolation("character table row of wrong length");
      std::vector<Cell> r;
      for (const Complex& z : row) r.emplace_back(quantize(z.real(), grid), quantize(z.imag(), grid));
      q.push_back(std::move(r));
    }
    return q;
  };
  const auto qa = grid_of(a), qb = grid_of(b);
  const std::size_t nr = qa.size();
  auto column_signature = [&](const std::vector<std::vector<Cell>>& q, const RawCharacterTable& t, std::size_t c) {
    std::vector<Cell> col;
    for (std::size_t r = 0; r < nr; ++r) col.push_back(q[r][c]);
    std::sort(col.begin(), col.end());
    return std::make_pair(t.class_sizes[c], col);
  };
  std::vector<decltype(column_signature(qa, a, 0))> sig_a, sig_b;
  for (std::size_t c = 0; c < nc; ++c) {
    sig_a.push_back(column_signature(qa, a, c));
    sig_b.push_back(column_signature(qb, b, c));
  }
  std::vector<std::size_t> assign;
  std::vector<bool> used(nc, false);
  auto prefix_rows_match = [&] {
    std::vector<std::vector<Cell>> ra, rb;
    for (std::size_t r = 0; r < nr; ++r) {
      std::vector<Cell> x, y;
      for (std::size_t i = 0; i < assign.size(); ++i) {
        x.push_back(qa[r][i]);
        y.push_back(qb[r][assign[i]]);
      }
      ra.push_back(std::move(x));
      rb.push_back(std::move(y));
    }
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
  };
  std::function<bool()> search = [&]() -> bool {
    const std::size_t i = assign.size();
    if (i == nc) return true;
    for (std::size_t c = 0; c < nc; ++c) {
      if (used[c] || sig_a[i] != sig_b[c]) continue;
      used[c] = true;
      assign.push_back(c);
      if (prefix_rows_match() && search()) return true;
      assign.pop_back();
      used[c] = false;
    }
    return false;
  };
  return search();
}

}  // namespace u3g
