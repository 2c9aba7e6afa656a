#pragma once

// Machine-readable reports for the command-line tool and the bindings.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "u3groups/catalog.hpp"
#include "u3groups/rep.hpp"
#include "u3groups/series_lab.hpp"

namespace u3g {

using Json = nlohmann::ordered_json;

struct GroupReport {
  std::vector<std::string> input_expressions;
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t num_classes = 0;
  std::vector<std::size_t> class_sizes;
  std::size_t det_subgroup_order = 1;
  bool irreducible = false;
  bool faithful = false;
  std::vector<long> abelianization_invariants;
  std::optional<bool> has_cyclic_direct_factor;  // empty above the size guard
  Fingerprint fingerprint;
  std::optional<std::string> matched_expected_label;
};

/// Builds the group and fills every field. `expected` (optional) is searched
/// for a fingerprint match; several matches are joined with " | ".
GroupReport make_group_report(std::span<const std::string> expressions, const ToleranceConfig& cfg,
                              std::size_t max_order, std::span<const ExpectedRow> expected = {});
GroupReport make_group_report(GroupPtr group, std::vector<std::string> expressions,
                              std::span<const ExpectedRow> expected = {});

/// [re, im] rounded to 12 significant digits, without negative zeros.
Json complex_json(Complex z);
double round_significant(double x, int digits = 12);

Json to_json(const Fingerprint& f);
Json to_json(const GroupReport& r);
Json to_json(const CharacterTable& t);
Json to_json(const RowResult& r);
Json to_json(const TheoremVerdict& v);
Json to_json(const ProductVerdict& v);

std::string to_text(const GroupReport& r);
std::string to_csv(const GroupReport& r);
std::string to_text(const CharacterTable& t);
std::string to_csv(const CharacterTable& t);

/// Compact display of a complex value: exact integers and roots of unity
/// times integers are shown symbolically (e.g. "3w", "-i", "2e(5/8)").
std::string display_value(Complex z);

}  // namespace u3g
