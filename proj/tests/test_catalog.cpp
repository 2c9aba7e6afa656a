#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "u3groups/catalog.hpp"

using namespace u3g;

TEST_CASE("named generators are unitary") {
  for (const char* e : {"E", "H", "J", "K", "L", "M", "N", "P", "Q", "F(7,1,2)", "G(4,1,3)", "R(3,1,1,2)",
                        "S(4,1,3,1)", "T(4,3,3,1)", "U(9,5,8,2)", "V(4,1,2,3)", "W(4,1,2,3)", "PHASE(2,9)*E"}) {
    CAPTURE(e);
    CHECK(is_unitary(parse_generator(e), 1e-12));
  }
  for (int i = 1; i <= 10; ++i) CHECK(is_unitary(gen::X(i), 1e-12));
}

TEST_CASE("small generator identities") {
  const Matrix e = gen::E();
  CHECK(approx_equal(e * e * e, identity(3), 1e-12));
  CHECK(approx_equal(gen::F(1, 0, 0), identity(3), 1e-15));
  const Matrix f = gen::F(7, 1, 2);
  Matrix p = identity(3);
  for (int k = 0; k < 7; ++k) p = p * f;
  CHECK(approx_equal(p, identity(3), 1e-12));
  CHECK(approx_equal(gen::phase(1, 4), Complex(0, 1) * identity(3), 1e-15));
  const Constants& c = constants();
  CHECK(std::abs(c.omega - root_of_unity(3, 1)) < 1e-15);
  CHECK(std::abs(c.mu_plus + c.mu_minus + 1.0) < 1e-12);
}

TEST_CASE("expressions round-trip through render") {
  std::mt19937 rng(31);
  const auto& names = generator_names();
  std::uniform_int_distribution<int> small(0, 12);
  for (int t = 0; t < 2000; ++t) {
    const auto& [name, arity] = names[static_cast<std::size_t>(rng() % names.size())];
    if (name == "PHASE") continue;
    GeneratorExpr e;
    e.name = name;
    for (int i = 0; i < arity; ++i) e.args.push_back(i == 0 ? 1 + small(rng) : small(rng));
    if (t % 3 == 0) e.phase = std::make_pair(static_cast<long long>(small(rng)), static_cast<long long>(1 + small(rng)));
    const std::string text = render(e);
    CAPTURE(text);
    CHECK(parse_expression(text) == e);
    std::string spaced;
    for (char ch : text) {
      spaced += ch;
      if (ch == ',' || ch == '*') spaced += "  ";
    }
    CHECK(parse_expression(spaced) == e);
  }
}

TEST_CASE("malformed expressions report a position") {
  for (const char* bad : {"", "Z", "F(2,0", "F(2,0,1,3)", "E*F(2,0,1)", "PHASE(1,0)*E", "F(0,0,1)", "E(1)", "R(3,1,1)",
                          "PHASE(1,2)*", "F(2,0,1))", "F(2,a,1)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_expression(bad), ParseError);
  }
  CHECK(approx_equal(parse_generator("PHASE(1,2)"), -identity(3), 1e-15));
  try {
    parse_expression("F(2,0,x)");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("Tn solutions match brute force") {
  for (long long n = 2; n <= 200; ++n) {
    std::vector<long long> brute;
    for (long long a = 1; a < n; ++a)
      if ((1 + a + a * a) % n == 0) brute.push_back(a);
    CHECK(solve_tn(n).solutions == brute);
  }
  CHECK(solve_tn(7).solutions == std::vector<long long>{2, 4});
  CHECK(solve_tn(13).solutions == std::vector<long long>{3, 9});
  CHECK_THROWS_AS(build_series({SeriesId::Tn, {5}}), NoSuchSeriesMember);
  CHECK_THROWS_AS(series_expressions({SeriesId::Sigma3N3, {}}), ContractViolation);
}

TEST_CASE("series names parse") {
  for (const char* n : {"C", "D", "Delta3", "Delta6", "Tn", "Sigma60", "Sigma168", "Sigma36phi", "Sigma72phi",
                        "Sigma216phi", "Sigma360phi", "TnM", "Delta3M", "S4M", "Delta6M", "Delta6Prime"})
    CHECK(series_name(parse_series_id(n)) == n);
  CHECK_THROWS_AS(parse_series_id("Nope"), ContractViolation);
}

TEST_CASE("classification strings map to builders") {
  const auto c = series_for_classification("C(7,1,2)");
  REQUIRE(c);
  CHECK(c->id == SeriesId::C);
  CHECK(series_for_classification("Delta(27)=Delta(3x3^2)")->id == SeriesId::Delta3);
  CHECK(series_for_classification("Delta(96)=Delta(6x4^2)")->id == SeriesId::Delta6);
  CHECK(series_for_classification("D(9,1,1;2,1,1)")->id == SeriesId::D);
  CHECK(series_for_classification("A5")->id == SeriesId::Sigma60);
  CHECK(series_for_classification("S_4(3)")->params == std::vector<long long>{3});
  CHECK_FALSE(series_for_classification("").has_value());
}

TEST_CASE("expected rows parse") {
  const auto rows = read_expected_rows(default_expected_rows_path());
  std::size_t su3 = 0, u3 = 0;
  for (const auto& r : rows) (r.det_one ? su3 : u3)++;
  CHECK(su3 == 59);
  CHECK(u3 == 75);
  CHECK_THROWS(parse_expected_rows("bad,header\n"));
  const auto one = parse_expected_rows(
      "label,classification,generators,order,center_order,det_one\n\"[x]\",\"C(7,1,2)\",\"E;F(7,1,2)\",21,1,true\n");
  REQUIRE(one.size() == 1);
  CHECK(one[0].generators == std::vector<std::string>{"E", "F(7,1,2)"});
}

TEST_CASE("SU(3) classification builders reproduce order and center; expected rows verify") {
  const auto rows = read_expected_rows(default_expected_rows_path());
  for (const auto& row : rows) {
    CAPTURE(row.label);
    if (row.det_one) {
      const auto spec = series_for_classification(row.classification);
      REQUIRE(spec.has_value());
      const GroupPtr g = generate_group(build_series(*spec));
      CHECK(g->order() == row.order);
      CHECK(center(*g).order() == row.center_order);
    }
    const RowResult r = verify_row(row);
    for (const auto& f : r.failures) MESSAGE(f);
    CHECK(r.pass);
  }
}

TEST_CASE("extended rows verify") {
  for (const auto& row : extended_rows()) {
    const RowResult r = verify_row(row);
    CHECK(r.pass);
    CHECK(r.order == row.order);
  }
}

TEST_CASE("fingerprint matching picks out a row") {
  const auto rows = read_expected_rows(default_expected_rows_path());
  const VerifyReport rep = verify_expected_rows(rows);
  CHECK(rep.all_passed());
  for (const auto& group : rep.collisions) CHECK(group.size() >= 2);
  const GroupPtr g = generate_group(parse_generators(std::vector<std::string>{"R(3,1,1,2)", "R(3,1,2,1)"}));
  const auto labels = match_expected(fingerprint(*g, defining_rep(g)), false, rows);
  CHECK(labels == std::vector<std::string>{"[27,4]"});
}
