#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "oracle.hpp"
#include "u3groups/catalog.hpp"
#include "u3groups/series_lab.hpp"

using namespace u3g;

TEST_CASE("coprime residues are invertible") {
  for (long n = 1; n <= 50; ++n)
    for (long q = 1; q <= 50; ++q) {
      if (std::gcd(q, n) != 1 || n == 1) continue;
      const long p = oracle::mod_inverse_brute(q % n, n);
      CHECK(p > 0);
      CHECK((p * q) % n == 1);
    }
}

TEST_CASE("series predicate and exponents") {
  CHECK(theorem_series_predicate(1, 2, 1));
  CHECK(theorem_series_predicate(1, 2, 8));
  CHECK_FALSE(theorem_series_predicate(1, 2, 6));
  CHECK(theorem_series_predicate(3, 2, 12));
  CHECK_FALSE(theorem_series_predicate(3, 2, 5));
  CHECK(series_exponents(3, 2, 36) == std::make_pair(2L, 2L));
  CHECK(theorem_center_predict(1, 2, 0, 3) == 4);
  CHECK(theorem_center_predict(3, 2, 0, 0) == 3);
  CHECK(theorem_center_predict(3, 2, 2, 0) == 9);
  CHECK(theorem_center_predict(3, 2, 1, 3) == 12);
  CHECK_THROWS_AS(series_exponents(1, 1, 4), ContractViolation);
  CHECK(theorem_product_predict(1, 7));
  CHECK_FALSE(theorem_product_predict(3, 6));
}

TEST_CASE("packages satisfy their hypotheses") {
  for (const auto& pkg : {package_s4(), package_tn(7), package_tn(13), package_delta6(3)}) {
    CAPTURE(pkg.name);
    const PackageCheck c = validate_package(pkg);
    CHECK_MESSAGE(c.ok(), c.describe());
  }
  CHECK_THROWS_AS(package_tn(5), NoSuchSeriesMember);
}

TEST_CASE("series theorem agrees with brute force") {
  for (const auto& pkg : {package_s4(), package_tn(7), package_tn(13), package_delta6(3)}) {
    std::size_t ran = 0;
    for (const TheoremVerdict& v : cross_validate(pkg, 1, 12)) {
      CAPTURE(pkg.name);
      CAPTURE(v.b);
      if (v.skipped) continue;
      ++ran;
      CHECK(v.agree);
      CHECK(v.order <= v.lemma_bound);
      CHECK(v.center_cyclic);
    }
    CHECK(ran >= 8);
  }
}

TEST_CASE("S4 phase series: order and center") {
  for (long m = 1; m <= 5; ++m) {
    const GroupPtr g = theorem_series_build(package_s4(), 1L << m);
    CHECK(g->order() == static_cast<std::size_t>(24L << (m - 1)));
    CHECK(center(*g).order() == static_cast<std::size_t>(1L << (m - 1)));
  }
}

TEST_CASE("direct product criterion") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> groups{
      {"A4", {"E", "F(2,0,1)"}}, {"Delta(27)", {"E", "F(3,0,1)"}}, {"T7", {"E", "F(7,1,2)"}}};
  for (const auto& [name, exprs] : groups) {
    const GroupPtr g = generate_group(parse_generators(exprs));
    const Representation r = defining_rep(g);
    for (long n = 2; n <= 5; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const ProductVerdict v = product_theorem_check(name, r, n);
      CHECK(v.agree);
      CHECK(v.product_order == static_cast<std::size_t>(n) * g->order());
      if (theorem_product_predict(static_cast<long>(v.center_order), n)) {
        const ProductConstruction pc = theorem_product_construct(*g, r, n);
        CHECK(pc.faithful);
        CHECK(pc.irreducible);
      } else {
        CHECK_THROWS_AS(theorem_product_construct(*g, r, n), ContractViolation);
      }
    }
  }
}
