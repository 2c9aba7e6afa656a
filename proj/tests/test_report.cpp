#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "u3groups/report.hpp"

using namespace u3g;

namespace {

GroupReport report_for(std::vector<std::string> exprs) {
  return make_group_report(exprs, ToleranceConfig{}, kDefaultMaxOrder, read_expected_rows(default_expected_rows_path()));
}

void check_round_trip(const Json& j) {
  const std::string text = j.dump(2);
  CHECK(Json::parse(text).dump(2) == text);
  const std::string compact = j.dump();
  CHECK(Json::parse(compact).dump() == compact);
}

}  // namespace

TEST_CASE("significant-digit rounding normalizes negative zero") {
  CHECK(round_significant(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(round_significant(-0.0)));
  CHECK(round_significant(0.1234567890123456) == 0.123456789012);
  CHECK(round_significant(-0.5) == -0.5);
  const Json z = complex_json(Complex(-0.0, -1e-17));
  CHECK(z.dump() == "[0.0,-1e-17]");
  CHECK(complex_json(root_of_unity(4, 1)).dump() == "[0.0,1.0]");
  CHECK(complex_json(root_of_unity(3, 1)).dump() == "[-0.5,0.866025403784]");
}

TEST_CASE("group report fields are consistent") {
  const GroupReport r = report_for({"R(3,1,1,2)", "R(3,1,2,1)"});
  CHECK(r.order == 27);
  CHECK(r.center_order == 3);
  CHECK(r.num_classes == 11);
  std::size_t sum = 0;
  for (auto s : r.class_sizes) sum += s;
  CHECK(sum == r.order);
  CHECK(r.det_subgroup_order == 3);
  CHECK(r.irreducible);
  CHECK(r.faithful);
  CHECK(r.abelianization_invariants == std::vector<long>{3, 3});
  CHECK(r.has_cyclic_direct_factor == false);
  CHECK(r.matched_expected_label == "[27,4]");

  const Json j = to_json(r);
  for (const char* key : {"input_expressions", "order", "center_order", "num_classes", "class_sizes",
                          "det_subgroup_order", "irreducible", "faithful", "abelianization_invariants",
                          "has_cyclic_direct_factor", "fingerprint", "matched_expected_label"})
    CHECK(j.contains(key));
  check_round_trip(j);
}

TEST_CASE("cyclic reports") {
  const GroupReport e = report_for({"E"});
  CHECK(e.order == 3);
  CHECK(e.abelianization_invariants == std::vector<long>{3});
  CHECK_FALSE(e.irreducible);
  CHECK(e.has_cyclic_direct_factor == true);
  CHECK_FALSE(e.matched_expected_label.has_value());
  CHECK(to_json(e)["matched_expected_label"].is_null());
  CHECK(report_for({"PHASE(1,7)*E"}).order == 21);
}

TEST_CASE("character table JSON round-trips") {
  const GroupPtr g = generate_group(parse_generators(std::vector<std::string>{"E", "M", "N"}));
  const Representation d = defining_rep(g);
  const CharacterTable t = discover_irreducibles(g, std::span<const Representation>(&d, 1));
  const Json j = to_json(t);
  CHECK(j["sum_of_squares"] == 168);
  CHECK(j["characters"].size() == 6);
  check_round_trip(j);
  const std::string text = to_text(t);
  CHECK(text.find("6 irreducibles") != std::string::npos);
  const std::string csv = to_csv(t);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("row and theorem verdict JSON round-trips") {
  for (const auto& row : read_expected_rows(default_expected_rows_path())) {
    if (row.order > 100) continue;
    check_round_trip(to_json(verify_row(row)));
  }
  for (const auto& v : cross_validate(package_s4(), 1, 6)) check_round_trip(to_json(v));
}

TEST_CASE("text and csv renderings") {
  const GroupReport r = report_for({"E", "F(2,0,1)"});
  const std::string csv = to_csv(r);
  const auto nl = csv.find('\n');
  const std::string header = csv.substr(0, nl);
  CHECK(std::count(header.begin(), header.end(), ',') == 11);
  CHECK(to_text(r).find("order:               12") != std::string::npos);
  CHECK(r.matched_expected_label == "[12,3]");
}

TEST_CASE("display of exact character values") {
  CHECK(display_value(Complex(3, 0)) == "3");
  CHECK(display_value(Complex(-1, 0)) == "-1");
  CHECK(display_value(Complex(0, 1)) == "i");
  CHECK(display_value(Complex(0, -2)) == "-2i");
  CHECK(display_value(root_of_unity(3, 1)) == "w");
  CHECK(display_value(3.0 * root_of_unity(3, 2)) == "3w2");
  CHECK(display_value(Complex(0, 0)) == "0");
  CHECK(display_value(root_of_unity(8, 3)) == "e(3/8)");
  CHECK(display_value(Complex(0.5, 0)) == "0.5000");
}
