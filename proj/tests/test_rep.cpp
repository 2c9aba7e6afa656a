#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "reference_data.hpp"
#include "u3groups/catalog.hpp"
#include "u3groups/rep.hpp"

using namespace u3g;

namespace {

GroupPtr make(std::vector<std::string> exprs) { return generate_group(parse_generators(exprs)); }

CharacterTable table_for(const GroupPtr& g) {
  const Representation seed = defining_rep(g);
  return discover_irreducibles(g, std::span<const Representation>(&seed, 1));
}

const std::vector<std::vector<std::string>> kGroups{
    {"E", "F(2,0,1)"},
    {"E", "F(3,0,1)"},
    {"R(3,1,1,2)", "R(3,1,2,1)"},
    {"F(7,1,2)", "E"},
    {"S(4,1,3,1)", "T(4,3,3,1)"},
    {"E", "F(2,0,1)", "H"},
    {"E", "F(2,0,1)", "T(2,1,1,1)"},
    {"E", "M", "N"},
    {"E", "J", "K", "L"},
};

}  // namespace

TEST_CASE("characters agree with traces taken from the matrices") {
  for (const auto& exprs : kGroups) {
    const GroupPtr g = make(exprs);
    const Representation d = defining_rep(g);
    const Representation t = tensor_rep(d, conjugate_rep(d));
    const Character chi = character_of(t);
    for (std::size_t c = 0; c < g->classes().size(); ++c)
      for (ElementIndex x : g->classes()[c]) {
        const Complex direct = (oracle::Mat(g->matrix(x)).trace()) * std::conj(oracle::Mat(g->matrix(x)).trace());
        CHECK(std::abs(chi.values[c] - direct) < 1e-9);
      }
    std::vector<oracle::Mat> imgs;
    for (ElementIndex x = 0; x < g->order(); ++x) imgs.emplace_back(d.image(x));
    const double nsq = oracle::norm_sq_from_traces(imgs);
    CHECK(std::abs(inner_product(character_of(d), character_of(d)).real() - nsq) < 1e-9);
  }
}

TEST_CASE("homomorphism check rejects bad images") {
  const GroupPtr g = make({"E", "F(2,0,1)"});
  Matrix m(1, 1);
  m(0, 0) = Complex(0, 1);
  CHECK_THROWS_AS(rep_from_images(g, {m, identity(1)}), NotAHomomorphism);
  CHECK_THROWS_AS(rep_from_images(g, {identity(1)}), ContractViolation);
  Matrix w(1, 1);
  w(0, 0) = root_of_unity(3, 1);
  CHECK_NOTHROW(rep_from_images(g, {w, identity(1)}));
}

TEST_CASE("faithfulness criterion agrees with the kernel") {
  for (const auto& exprs : kGroups) {
    const GroupPtr g = make(exprs);
    for (const Representation& r : one_dim_characters(g)) {
      const bool f = is_faithful(r);
      CHECK(f == (kernel(r).order() == 1));
    }
    CHECK(is_faithful(defining_rep(g)));
    CHECK(is_faithful(trivial_rep(g)) == (g->order() == 1));
  }
}

TEST_CASE("one-dimensional characters enumerate the abelianization") {
  for (const auto& exprs : kGroups) {
    const GroupPtr g = make(exprs);
    const auto ab = abelian_invariants(quotient_group(*g, commutator_subgroup(*g)));
    std::size_t n = 1;
    for (long x : ab) n *= static_cast<std::size_t>(x);
    const auto ones = one_dim_characters(g);
    CHECK(ones.size() == n);
    for (std::size_t i = 0; i < ones.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        CHECK(std::abs(inner_product(character_of(ones[i]), character_of(ones[j]))) < 1e-9);
  }
}

TEST_CASE("discovered tables are complete and orthogonal") {
  for (const auto& exprs : kGroups) {
    CAPTURE(exprs.front());
    const GroupPtr g = make(exprs);
    const CharacterTable t = table_for(g);
    REQUIRE(t.complete);
    CHECK(t.size() == g->classes().size());
    std::size_t sq = 0;
    for (std::size_t d : t.dimensions()) {
      CHECK(g->order() % d == 0);
      sq += d * d;
    }
    CHECK(sq == g->order());
    CHECK(verify_character_table(t).ok);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t.realizations[i]) continue;
      const Representation& r = *t.realizations[i];
      CHECK(distance(character_of(r), t.characters[i]) < 1e-6);
      CHECK(is_irreducible(r));
    }
  }
}

TEST_CASE("tensor multiplicities are nonnegative integers summing to the degree") {
  const GroupPtr g = make({"E", "M", "N"});
  const CharacterTable t = table_for(g);
  const Representation d = defining_rep(g);
  const Character sq = character_of(tensor_rep(d, d));
  const auto m = decompose(sq, t);
  long deg = 0;
  for (std::size_t i = 0; i < m.size(); ++i) deg += m[i] * std::lround(t.characters[i].degree());
  CHECK(deg == 9);
  CHECK(distance(symmetric_square(character_of(d)) + alternating_square(character_of(d)), sq) < 1e-9);
  CHECK_THROWS_AS(decompose(Complex(0.5, 0) * sq, t), InconsistencyError);
}

TEST_CASE("isotypic projectors resolve the identity") {
  for (const auto& exprs : kGroups) {
    const GroupPtr g = make(exprs);
    const CharacterTable t = table_for(g);
    const Representation d = defining_rep(g);
    const Representation r = tensor_rep(d, conjugate_rep(d));
    Matrix sum = Matrix::Zero(9, 9);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto deg = static_cast<std::size_t>(std::lround(t.characters[i].degree()));
      const IsotypicComponent c = isotypic_projector(r, t.characters[i], deg);
      CHECK(c.idempotency_defect < 1e-6);
      CHECK(c.adjoint_defect < 1e-6);
      CHECK(static_cast<std::size_t>(c.basis.cols()) == c.multiplicity * deg);
      sum += c.projector;
    }
    CHECK(max_component_distance(sum, identity(9)) < 1e-9);
  }
}

TEST_CASE("restriction to an invariant subspace") {
  const GroupPtr g = make({"E", "F(2,0,1)"});
  const Representation d = defining_rep(g);
  const Representation r = tensor_rep(d, conjugate_rep(d));
  Vector v = Vector::Zero(9);
  v(0) = v(4) = v(8) = 1;
  const SubspaceCheck chk = verify_invariant_subspace(r, std::vector<Vector>{v});
  CHECK(chk.invariant);
  CHECK(distance(chk.restricted, character_of(trivial_rep(g))) < 1e-9);
  Vector e1 = Vector::Zero(9);
  e1(1) = 1;
  CHECK_FALSE(verify_invariant_subspace(r, std::vector<Vector>{e1}).invariant);
}

TEST_CASE("unitarize restores unitarity and preserves characters") {
  std::mt19937 rng(23);
  for (const auto& exprs : std::vector<std::vector<std::string>>{{"E", "F(2,0,1)"}, {"R(3,1,1,2)", "R(3,1,2,1)"}}) {
    const GroupPtr g = make(exprs);
    const Representation d = defining_rep(g);
    for (int t = 0; t < 5; ++t) {
      const Matrix s = oracle::random_invertible(3, rng);
      const Matrix si = s.inverse();
      std::vector<Matrix> gens;
      for (const Matrix& m : d.generator_images()) gens.push_back(si * m * s);
      const Representation skew(g, gens, false);
      const Unitarized u = unitarize(skew);
      for (ElementIndex x = 0; x < g->order(); ++x) CHECK(unitarity_defect(u.rep.image(x)) < 1e-6);
      CHECK(distance(character_of(u.rep), character_of(d)) < 1e-6);
      const Unitarized again = unitarize(u.rep);
      CHECK(distance(character_of(again.rep), character_of(d)) < 1e-6);
      for (ElementIndex x = 0; x < g->order(); ++x)
        CHECK(max_component_distance(again.rep.image(x), u.rep.image(x)) < 1e-6);
    }
  }
}

TEST_CASE("table comparison up to permutation") {
  const GroupPtr g = make({"R(3,1,1,2)", "R(3,1,2,1)"});
  const RawCharacterTable a = raw_table(table_for(g));
  RawCharacterTable b = a;
  std::reverse(b.rows.begin(), b.rows.end());
  std::swap(b.class_sizes[3], b.class_sizes[7]);
  for (auto& row : b.rows) std::swap(row[3], row[7]);
  CHECK(equivalent_up_to_permutation(a, b));
  b.rows[0][1] *= root_of_unity(3, 1);
  CHECK_FALSE(equivalent_up_to_permutation(a, b));
}

TEST_CASE("determinant subgroup") {
  CHECK(determinant_character(defining_rep(make({"E", "F(2,0,1)"}))).subgroup_order == 1);
  CHECK(determinant_character(defining_rep(make({"PHASE(1,7)*E"}))).subgroup_order == 7);
  CHECK(determinant_character(defining_rep(make({"R(3,1,1,2)", "R(3,1,2,1)"}))).subgroup_order == 3);
}

TEST_CASE("transcribed [27,4] table against orthogonality") {
  namespace p = ref::g274;
  const GroupPtr g = generate_group({p::R(), p::S()});
  const auto reps = p::class_representatives();
  auto as_table = [&](const std::vector<std::vector<Complex>>& rows) {
    CharacterTable t{g, {}, {}, true};
    for (const auto& row : rows) {
      std::vector<Complex> v(11);
      for (std::size_t k = 0; k < 11; ++k) v[g->class_of(*g->find(reps[k]))] = row[k];
      t.characters.push_back(make_character(g, v));
      t.realizations.emplace_back();
    }
    return t;
  };
  auto rows = p::table();
  CHECK_FALSE(verify_character_table(as_table(rows)).ok);
  std::swap(rows[7][10], rows[8][10]);
  CHECK(verify_character_table(as_table(rows)).ok);
  rows[9][0] = -rows[9][0];
  CHECK_FALSE(verify_character_table(as_table(rows)).ok);
}
