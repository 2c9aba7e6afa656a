#include "u3groups/series_lab.hpp"

#include <numeric>
#include <sstream>

#include "u3groups/catalog.hpp"

namespace u3g {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string PackageCheck::describe() const {
  std::ostringstream os;
  os << "order=" << order << " center=" << computed_center << " H-normal=" << h_normal << " n-prime=" << n_prime
     << " c-matches=" << c_matches << " c-admissible=" << c_admissible << " no-cyclic-factor=" << no_cyclic_factor;
  return os.str();
}

PackageCheck validate_package(const SemidirectPackage& pkg, const ToleranceConfig& cfg) {
  PackageCheck check;
  std::vector<Matrix> gens = pkg.h_generators;
  gens.push_back(pkg.b);
  GroupPtr g = generate_group(gens, cfg);
  check.order = g->order();
  std::vector<ElementIndex> h_seeds;
  for (std::size_t i = 0; i < pkg.h_generators.size(); ++i) h_seeds.push_back(g->generator_element(static_cast<int>(i)));
  const SubgroupRef h = generated_subgroup(*g, h_seeds);
  check.h_normal = is_normal(*g, h);
  check.n_prime = is_prime(pkg.n) && h.order() * static_cast<std::size_t>(pkg.n) == g->order();
  check.computed_center = center(*g).order();
  check.c_matches = check.computed_center == static_cast<std::size_t>(pkg.c);
  check.c_admissible = (pkg.c == 1 || is_prime(pkg.c)) && pkg.c != pkg.n;
  check.no_cyclic_factor = !find_cyclic_direct_factor(*g).has_value();
  return check;
}

SemidirectPackage package_s4() {
  // ⟨A, B⟩ ≅ A₄ extended by C
  return SemidirectPackage{"S4", {gen::F(2, 0, 1), gen::R(2, 1, 1, 0)}, gen::S(1, 0, 0, 0), 2, 1};
}

SemidirectPackage package_tn(long long n) {
  const TnSolutions s = solve_tn(n);
  if (s.solutions.empty()) throw NoSuchSeriesMember("no Tn for n=" + std::to_string(n));
  return SemidirectPackage{"T" + std::to_string(n), {gen::F(n, 1, s.solutions.front())}, gen::E(), 3, 1};
}

SemidirectPackage package_delta6(long long n) {
  const long c = n % 3 == 0 ? 3 : 1;
  return SemidirectPackage{"Delta(6x" + std::to_string(n) + "^2)", {gen::E(), gen::F(n, 0, 1)}, gen::T(2, 1, 1, 1), 2,
                           c};
}

bool theorem_product_predict(long c, long n) {
  if (c < 1 || n < 1) throw ContractViolation("theorem_product_predict: c, n >= 1 required");
  return std::gcd(c, n) == 1;
}

std::optional<std::pair<long, long>> series_exponents(long c, long n, long b) {
  if (c < 1 || n < 2 || b < 1) throw ContractViolation("series_exponents: c >= 1, n >= 2, b >= 1 required");
  long k = 0;
  while (b % n == 0) {
    b /= n;
    ++k;
  }
  long j = 0;
  if (c > 1)
    while (b % c == 0) {
      b /= c;
      ++j;
    }
  if (b != 1) return std::nullopt;
  return std::make_pair(j, k);
}

bool theorem_series_predicate(long c, long n, long b) { return series_exponents(c, n, b).has_value(); }

long theorem_center_predict(long c, long n, long j, long k) {
  if (j < 0 || k < 0) throw ContractViolation("theorem_center_predict: j, k >= 0 required");
  auto pw = [](long base, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
  };
  if (j == 0 && k == 0) return c;
  if (j == 0) return c * pw(n, k - 1);
  if (k == 0) return pw(c, j);
  return pw(c, j) * pw(n, k - 1);
}

GroupPtr theorem_series_build(const SemidirectPackage& pkg, long b, const ToleranceConfig& cfg, std::size_t max_order) {
  if (b < 1) throw ContractViolation("theorem_series_build: b >= 1 required");
  std::vector<Matrix> gens = pkg.h_generators;
  gens.push_back(root_of_unity(b, 1) * pkg.b);
  return generate_group(std::move(gens), cfg, max_order);
}

namespace {

std::vector<long> prime_factors(long x) {
  std::vector<long> out;
  for (long p = 2; p * p <= x; ++p)
    if (x % p == 0) {
      out.push_back(p);
      while (x % p == 0) x /= p;
    }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace

std::vector<TheoremVerdict> cross_validate(const SemidirectPackage& pkg, long b_lo, long b_hi,
                                           const ToleranceConfig& cfg) {
  std::vector<TheoremVerdict> out;
  for (long b = b_lo; b <= b_hi; ++b) {
    TheoremVerdict v;
    v.b = b;
    GroupPtr g;
    try {
      g = theorem_series_build(pkg, b, cfg);
    } catch (const GroupNotClosed& e) {
      v.skipped = true;
      v.note = e.what();
      out.push_back(v);
      continue;
    }
    v.order = g->order();
    if (g->order() > kNormalSubgroupGuard) {
      v.skipped = true;
      v.note = "order " + std::to_string(g->order()) + " above the normal-subgroup guard";
      out.push_back(v);
      continue;
    }
    const SubgroupRef z = center(*g);
    v.computed_center = z.order();
    v.center_cyclic = is_cyclic(*g, z);
    const auto witness = find_cyclic_direct_factor(*g);
    v.computed_no_factor = !witness.has_value();
    v.predicted_no_factor = theorem_series_predicate(pkg.c, pkg.n, b);

    std::vector<Matrix> phased = pkg.h_generators;
    phased.push_back(root_of_unity(b, 1) * identity(pkg.b.rows()));
    v.lemma_bound = generate_group(phased, cfg)->order() * static_cast<std::size_t>(pkg.n);

    bool ok = v.predicted_no_factor == v.computed_no_factor && v.order <= v.lemma_bound;
    if (const auto jk = series_exponents(pkg.c, pkg.n, b)) {
      v.predicted_center = theorem_center_predict(pkg.c, pkg.n, jk->first, jk->second);
      ok = ok && static_cast<std::size_t>(*v.predicted_center) == v.computed_center && v.center_cyclic;
    } else if (witness) {
      for (long q : prime_factors(b))
        if (std::gcd(q, pkg.c * pkg.n) == 1 && witness->cyclic.order() % static_cast<std::size_t>(q) != 0)
          v.foreign_prime_split = false;
      ok = ok && v.foreign_prime_split;
    }
    v.agree = ok;
    out.push_back(v);
  }
  return out;
}

ProductConstruction direct_product_rep(const Representation& rep, long n) {
  if (n < 1) throw ContractViolation("direct_product_rep: n >= 1 required");
  const FiniteMatrixGroup& g = *rep.group();
  const auto d = static_cast<Eigen::Index>(g.dim());
  std::vector<Matrix> gens;
  for (const Matrix& m : g.generators()) {
    Matrix blk = Matrix::Identity(d + 1, d + 1);
    blk.topLeftCorner(d, d) = m;
    gens.push_back(std::move(blk));
  }
  Matrix z = Matrix::Identity(d + 1, d + 1);
  z(d, d) = root_of_unity(n, 1);
  gens.push_back(std::move(z));
  GroupPtr product = generate_group(std::move(gens), g.tolerance());

  std::vector<Matrix> images = rep.generator_images();
  images.push_back(root_of_unity(n, 1) * identity(rep.dim()));
  Representation r(product, std::move(images), true);
  const bool faithful = is_faithful(r);
  const bool irreducible = is_irreducible(r);
  return ProductConstruction{std::move(product), std::move(r), faithful, irreducible};
}

ProductConstruction theorem_product_construct(const FiniteMatrixGroup& g, const Representation& rep, long n) {
  if (rep.group().get() != &g) throw ContractViolation("theorem_product_construct: representation of another group");
  const auto c = static_cast<long>(center(g).order());
  if (!theorem_product_predict(c, n))
    throw ContractViolation("theorem_product_construct: gcd(n, center order) must be 1");
  ProductConstruction pc = direct_product_rep(rep, n);
  if (pc.product->order() != static_cast<std::size_t>(n) * g.order() || !pc.faithful || !pc.irreducible)
    throw InconsistencyError("product representation is not faithful and irreducible");
  return pc;
}

ProductVerdict product_theorem_check(const std::string& name, const Representation& rep, long n) {
  ProductVerdict v;
  v.group = name;
  v.n = n;
  v.center_order = center(*rep.group()).order();
  v.predicted = theorem_product_predict(static_cast<long>(v.center_order), n);
  const ProductConstruction pc = direct_product_rep(rep, n);
  v.faithful = pc.faithful;
  v.irreducible = pc.irreducible;
  v.product_order = pc.product->order();
  v.agree = v.predicted == (pc.faithful && pc.irreducible);
  return v;
}

}  // namespace u3g
