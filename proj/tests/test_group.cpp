#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracle.hpp"
#include "u3groups/catalog.hpp"
#include "u3groups/group.hpp"

using namespace u3g;

namespace {

GroupPtr make(std::vector<std::string> exprs) { return generate_group(parse_generators(exprs)); }

std::vector<oracle::Mat> as_oracle(const std::vector<Matrix>& ms) {
  std::vector<oracle::Mat> out;
  for (const auto& m : ms) out.emplace_back(m);
  return out;
}

const std::vector<std::vector<std::string>> kSmallGroups{
    {"E"},
    {"PHASE(1,7)*E"},
    {"E", "F(2,0,1)"},
    {"E", "F(3,0,1)"},
    {"R(3,1,1,2)", "R(3,1,2,1)"},
    {"F(7,1,2)", "E"},
    {"S(4,1,3,1)", "T(4,3,3,1)"},
    {"E", "F(2,0,1)", "H"},
    {"E", "M", "N"},
    {"E", "J", "K"},
};

}  // namespace

TEST_CASE("closure matches the brute-force oracle") {
  for (const auto& exprs : kSmallGroups) {
    CAPTURE(exprs.front());
    const GroupPtr g = make(exprs);
    const auto gens = as_oracle(parse_generators(exprs));
    const auto elems = oracle::closure(gens);
    REQUIRE(g->order() == elems.size());
    for (ElementIndex x = 0; x < g->order(); ++x) CHECK(oracle::find(elems, oracle::Mat(g->matrix(x))) >= 0);

    std::vector<std::size_t> sizes = g->class_sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == oracle::class_sizes(elems));
    CHECK(center(*g).order() == oracle::center_order(elems, gens));
    for (ElementIndex x = 0; x < g->order(); ++x) CHECK(g->element_order(x) == oracle::element_order(g->matrix(x)));
  }
}

TEST_CASE("trivial and cyclic examples") {
  CHECK(make({"E"})->order() == 3);
  CHECK(make({"PHASE(1,7)*E"})->order() == 21);
  const GroupPtr triv = make({"F(1,0,0)"});
  CHECK(triv->order() == 1);
  CHECK(triv->classes().size() == 1);
  CHECK(all_normal_subgroups(*triv).size() == 1);
}

TEST_CASE("identity is index 0 and mult/inv agree with matrices") {
  const GroupPtr g = make({"E", "M", "N"});
  CHECK(approx_equal(g->matrix(0), identity(3), 1e-12));
  std::mt19937 rng(1);
  std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(g->order() - 1));
  for (int t = 0; t < 500; ++t) {
    const ElementIndex a = pick(rng), b = pick(rng);
    CHECK(approx_equal(g->matrix(g->mult(a, b)), g->matrix(a) * g->matrix(b), g->tolerance()));
    CHECK(g->mult(a, g->inv(a)) == 0);
    CHECK(approx_equal(g->matrix(g->conjugate(a, b)), g->matrix(b) * g->matrix(a) * g->matrix(b).adjoint(),
                       g->tolerance()));
  }
}

TEST_CASE("words reproduce elements through the tree") {
  const GroupPtr g = make({"S(4,1,3,1)", "T(4,3,3,1)"});
  for (ElementIndex x = 0; x < g->order(); ++x) {
    Matrix m = identity(3);
    for (int k : g->word(x)) m = m * g->generators()[static_cast<std::size_t>(k)];
    CHECK(approx_equal(m, g->matrix(x), g->tolerance()));
    if (x != 0) CHECK(g->right_by_generator(g->tree_parent(x), g->tree_generator(x)) == x);
  }
}

TEST_CASE("large-group multiplication without a full table") {
  const GroupPtr g = make({"X9", "X10"});
  REQUIRE(g->order() == 432);
  const GroupPtr big = generate_group({gen::E(), gen::F(40, 0, 1)});
  CHECK(big->order() == 3 * 1600);
  std::mt19937 rng(2);
  std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(big->order() - 1));
  for (int t = 0; t < 200; ++t) {
    const ElementIndex a = pick(rng), b = pick(rng);
    CHECK(approx_equal(big->matrix(big->mult(a, b)), big->matrix(a) * big->matrix(b), big->tolerance()));
  }
}

TEST_CASE("non-closing generators raise GroupNotClosed") {
  Matrix irr = identity(3);
  irr(0, 0) = std::polar(1.0, 1.0);
  irr(1, 1) = std::polar(1.0, -1.0);
  CHECK_THROWS_AS(generate_group({irr}, ToleranceConfig{}, 500), GroupNotClosed);
  CHECK_THROWS_AS(generate_group(parse_generators(std::vector<std::string>{"E", "F(2,0,1)", "H"}), {}, 59),
                  GroupNotClosed);
  Matrix nonunitary = identity(2);
  nonunitary(0, 1) = 1;
  CHECK_THROWS_AS(generate_group({nonunitary}), ContractViolation);
}

TEST_CASE("Lagrange, class sums and normality") {
  for (const auto& exprs : kSmallGroups) {
    const GroupPtr g = make(exprs);
    std::size_t sum = 0;
    for (std::size_t s : g->class_sizes()) {
      CHECK(g->order() % s == 0);
      sum += s;
    }
    CHECK(sum == g->order());
    for (const SubgroupRef& n : all_normal_subgroups(*g)) {
      CHECK(g->order() % n.order() == 0);
      CHECK(is_subgroup(*g, n));
      CHECK(is_normal(*g, n));
      for (ElementIndex x : n.members)
        for (ElementIndex y : g->classes()[g->class_of(x)]) CHECK(n.contains(y));
    }
    const SubgroupRef z = center(*g);
    CHECK(is_normal(*g, z));
    CHECK(g->order() % z.order() == 0);
  }
}

TEST_CASE("U(3) catalog elements are well separated and keyed stably") {
  const auto rows = read_expected_rows(default_expected_rows_path());
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> jitter(-0.45e-7, 0.45e-7);
  std::size_t checked = 0;
  for (const auto& row : rows) {
    if (row.det_one) continue;
    const GroupPtr g = generate_group(parse_generators(row.generators));
    if (g->order() <= 2048) CHECK(g->min_separation() > 10 * g->tolerance().eq_tol);
    for (ElementIndex x = 0; x < g->order(); ++x) {
      Matrix m = g->matrix(x);
      for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] += Complex(jitter(rng), jitter(rng));
      const auto found = g->find(m);
      REQUIRE(found.has_value());
      CHECK(*found == x);
      ++checked;
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("intersections of cyclic groups are trivial exactly for coprime orders") {
  for (long a = 1; a <= 30; ++a)
    for (long b = 1; b <= 30; ++b) {
      const long n = std::lcm(a, b);
      Matrix z(1, 1);
      z(0, 0) = root_of_unity(n, 1);
      const GroupPtr g = generate_group({z});
      auto elem_of_order = [&](long k) {
        Matrix m(1, 1);
        m(0, 0) = root_of_unity(k, 1);
        return *g->find(m);
      };
      const ElementIndex ea = elem_of_order(a), eb = elem_of_order(b);
      const SubgroupRef za = generated_subgroup(*g, std::span<const ElementIndex>(&ea, 1));
      const SubgroupRef zb = generated_subgroup(*g, std::span<const ElementIndex>(&eb, 1));
      CHECK(za.order() == static_cast<std::size_t>(a));
      CHECK((intersection(za, zb).order() == 1) == (std::gcd(a, b) == 1));
    }
}

TEST_CASE("quotients, commutators and abelian invariants") {
  const GroupPtr g = make({"R(3,1,1,2)", "R(3,1,2,1)"});
  const SubgroupRef z = center(*g);
  CHECK(z.order() == 3);
  const AbstractGroupTable q = quotient_group(*g, z);
  CHECK(q.order == 9);
  CHECK(q.is_latin_square());
  CHECK(q.is_abelian());
  CHECK(abelian_invariants(q) == std::vector<long>{3, 3});
  CHECK(commutator_subgroup(*g).order() == 3);

  const GroupPtr a4 = make({"E", "F(2,0,1)"});
  CHECK(abelian_invariants(quotient_group(*a4, commutator_subgroup(*a4))) == std::vector<long>{3});
  CHECK_THROWS_AS(quotient_group(*a4, generated_subgroup(*a4, std::vector<ElementIndex>{a4->generator_element(0)})),
                  ContractViolation);

  const GroupPtr z12 = generate_group({root_of_unity(12, 1) * identity(1)});
  const AbelianDecomposition d = decompose_abelian(subgroup_table(*z12, whole_group(*z12)));
  CHECK(d.invariants == std::vector<long>{12});
  Matrix a(2, 2), b(2, 2);
  a << -1, 0, 0, 1;
  b << root_of_unity(6, 1), 0, 0, 1;
  const GroupPtr k = generate_group({a, b});
  CHECK(k->order() == 6);
  Matrix c(2, 2);
  c << 1, 0, 0, -1;
  const GroupPtr k2 = generate_group({c, b});
  CHECK(k2->order() == 12);
  const AbstractGroupTable t2 = subgroup_table(*k2, whole_group(*k2));
  const AbelianDecomposition d2 = decompose_abelian(t2);
  CHECK(d2.invariants == std::vector<long>{2, 6});
  std::set<std::vector<long>> coords(d2.coordinates.begin(), d2.coordinates.end());
  CHECK(coords.size() == k2->order());
}

TEST_CASE("cyclic direct factors") {
  CHECK_FALSE(find_cyclic_direct_factor(*make({"E", "F(2,0,1)"})).has_value());
  CHECK_FALSE(find_cyclic_direct_factor(*make({"R(3,1,1,2)", "R(3,1,2,1)"})).has_value());
  const auto w = find_cyclic_direct_factor(*make({"F(2,0,1)", "PHASE(1,5)*E"}));
  REQUIRE(w.has_value());
  CHECK(w->cyclic.order() == 5);
  CHECK(w->complement.order() == 12);
  CHECK(find_cyclic_direct_factor(*make({"E"})).has_value());
}

TEST_CASE("normal subgroup enumeration is guarded") {
  const GroupPtr big = generate_group({gen::E(), gen::F(20, 0, 1)});
  REQUIRE(big->order() > kNormalSubgroupGuard);
  CHECK_THROWS_AS(all_normal_subgroups(*big), GuardExceeded);
}
