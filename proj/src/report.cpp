#include "u3groups/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace u3g {

double round_significant(double x, int digits) {
  if (!std::isfinite(x)) throw NumericalError("non-finite value in report");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json complex_json(Complex z) { return Json::array({round_significant(z.real()), round_significant(z.imag())}); }

GroupReport make_group_report(GroupPtr group, std::vector<std::string> expressions,
                              std::span<const ExpectedRow> expected) {
  const FiniteMatrixGroup& g = *group;
  const Representation rep = defining_rep(group);
  GroupReport r;
  r.input_expressions = std::move(expressions);
  r.order = g.order();
  r.fingerprint = fingerprint(g, rep);
  r.center_order = r.fingerprint.center_order;
  r.num_classes = g.classes().size();
  r.class_sizes = g.class_sizes();
  r.det_subgroup_order = r.fingerprint.det_subgroup_order;
  r.irreducible = is_irreducible(character_of(rep));
  r.faithful = is_faithful(rep);
  r.abelianization_invariants = r.fingerprint.abelianization;
  try {
    r.has_cyclic_direct_factor = find_cyclic_direct_factor(g).has_value();
  } catch (const GuardExceeded&) {
    r.has_cyclic_direct_factor.reset();
  }
  if (!expected.empty()) {
    const auto labels = match_expected(r.fingerprint, r.det_subgroup_order == 1, expected,
                                       VerifyOptions{g.tolerance(), kDefaultMaxOrder, true});
    if (!labels.empty()) {
      std::string joined;
      for (const auto& l : labels) joined += (joined.empty() ? "" : " | ") + l;
      r.matched_expected_label = joined;
    }
  }
  return r;
}

GroupReport make_group_report(std::span<const std::string> expressions, const ToleranceConfig& cfg,
                              std::size_t max_order, std::span<const ExpectedRow> expected) {
  std::vector<GeneratorExpr> parsed;
  std::vector<std::string> canonical;
  for (const auto& e : expressions) {
    parsed.push_back(parse_expression(e));
    canonical.push_back(render(parsed.back()));
  }
  std::vector<Matrix> gens;
  for (const auto& p : parsed) gens.push_back(evaluate(p));
  return make_group_report(generate_group(std::move(gens), cfg, max_order), std::move(canonical), expected);
}

Json to_json(const Fingerprint& f) {
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t o : f.element_orders) ++hist[o];
  Json orders = Json::array();
  for (const auto& [o, c] : hist) orders.push_back(Json::array({o, c}));
  return Json{{"order", f.order},
              {"center_order", f.center_order},
              {"class_sizes", f.class_sizes},
              {"abelianization", f.abelianization},
              {"det_subgroup_order", f.det_subgroup_order},
              {"element_orders", orders}};
}

Json to_json(const GroupReport& r) {
  Json j;
  j["input_expressions"] = r.input_expressions;
  j["order"] = r.order;
  j["center_order"] = r.center_order;
  j["num_classes"] = r.num_classes;
  j["class_sizes"] = r.class_sizes;
  j["det_subgroup_order"] = r.det_subgroup_order;
  j["irreducible"] = r.irreducible;
  j["faithful"] = r.faithful;
  j["abelianization_invariants"] = r.abelianization_invariants;
  j["has_cyclic_direct_factor"] = r.has_cyclic_direct_factor ? Json(*r.has_cyclic_direct_factor) : Json(nullptr);
  j["fingerprint"] = to_json(r.fingerprint);
  j["matched_expected_label"] = r.matched_expected_label ? Json(*r.matched_expected_label) : Json(nullptr);
  return j;
}

Json to_json(const CharacterTable& t) {
  const FiniteMatrixGroup& g = *t.group;
  Json classes = Json::array();
  for (const auto& cls : g.classes())
    classes.push_back(Json{{"size", cls.size()}, {"element_order", g.element_order(cls.front())}});
  Json chars = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json values = Json::array();
    for (const Complex& v : t.characters[i].values) values.push_back(complex_json(v));
    chars.push_back(Json{{"index", i},
                         {"dimension", std::lround(t.characters[i].degree())},
                         {"realized", t.realizations[i].has_value()},
                         {"values", values}});
  }
  std::size_t sum_sq = 0;
  for (std::size_t d : t.dimensions()) sum_sq += d * d;
  return Json{{"order", g.order()},
              {"complete", t.complete},
              {"sum_of_squares", sum_sq},
              {"classes", classes},
              {"characters", chars}};
}

Json to_json(const RowResult& r) {
  Json j;
  j["label"] = r.label;
  j["pass"] = r.pass;
  j["order"] = r.order;
  j["center_order"] = r.center_order;
  j["irreducible"] = r.irreducible;
  j["faithful"] = r.faithful;
  j["det_subgroup_order"] = r.det_subgroup_order;
  j["has_cyclic_direct_factor"] = r.cyclic_factor_checked ? Json(r.has_cyclic_direct_factor) : Json(nullptr);
  j["fingerprint"] = r.fingerprint ? to_json(*r.fingerprint) : Json(nullptr);
  j["failures"] = r.failures;
  return j;
}

Json to_json(const TheoremVerdict& v) {
  Json j;
  j["b"] = v.b;
  j["skipped"] = v.skipped;
  if (v.skipped) {
    j["note"] = v.note;
    return j;
  }
  j["order"] = v.order;
  j["predicted_no_factor"] = v.predicted_no_factor;
  j["computed_no_factor"] = v.computed_no_factor;
  j["predicted_center"] = v.predicted_center ? Json(*v.predicted_center) : Json(nullptr);
  j["computed_center"] = v.computed_center;
  j["center_cyclic"] = v.center_cyclic;
  j["lemma_bound"] = v.lemma_bound;
  j["agree"] = v.agree;
  return j;
}

Json to_json(const ProductVerdict& v) {
  return Json{{"group", v.group},           {"n", v.n},
              {"center_order", v.center_order}, {"predicted", v.predicted},
              {"faithful", v.faithful},     {"irreducible", v.irreducible},
              {"product_order", v.product_order}, {"agree", v.agree}};
}

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "unknown"; }

}  // namespace

std::string to_text(const GroupReport& r) {
  std::ostringstream os;
  os << "generators:          " << join(r.input_expressions, ", ") << "\n"
     << "order:               " << r.order << "\n"
     << "center order:        " << r.center_order << "\n"
     << "classes:             " << r.num_classes << "\n"
     << "class sizes:         " << join(r.class_sizes, " ") << "\n"
     << "det subgroup order:  " << r.det_subgroup_order << "\n"
     << "irreducible:         " << (r.irreducible ? "yes" : "no") << "\n"
     << "faithful:            " << (r.faithful ? "yes" : "no") << "\n"
     << "abelianization:      [" << join(r.abelianization_invariants, ",") << "]\n"
     << "cyclic direct factor: " << opt_bool(r.has_cyclic_direct_factor) << "\n"
     << "fingerprint:         " << to_string(r.fingerprint) << "\n"
     << "matched label:       " << r.matched_expected_label.value_or("none") << "\n";
  return os.str();
}

std::string to_csv(const GroupReport& r) {
  std::ostringstream os;
  os << "input_expressions,order,center_order,num_classes,class_sizes,det_subgroup_order,irreducible,faithful,"
        "abelianization_invariants,has_cyclic_direct_factor,fingerprint,matched_expected_label\n";
  os << csv_field(join(r.input_expressions, ";")) << "," << r.order << "," << r.center_order << "," << r.num_classes
     << "," << join(r.class_sizes, ";") << "," << r.det_subgroup_order << "," << (r.irreducible ? "true" : "false")
     << "," << (r.faithful ? "true" : "false") << "," << join(r.abelianization_invariants, ";") << ","
     << opt_bool(r.has_cyclic_direct_factor) << "," << csv_field(to_string(r.fingerprint)) << ","
     << csv_field(r.matched_expected_label.value_or("")) << "\n";
  return os.str();
}

std::string display_value(Complex z) {
  constexpr double tol = 1e-6;
  const double mag = std::abs(z);
  if (mag < tol) return "0";
  const double m = std::round(mag);
  if (m >= 1 && std::abs(mag - m) < tol) {
    const double turns = std::arg(z) / (2 * std::numbers::pi);
    for (long q = 1; q <= 48; ++q) {
      const double kq = turns * static_cast<double>(q);
      if (std::abs(kq - std::round(kq)) > tol * static_cast<double>(q)) continue;
      long k = static_cast<long>(std::round(kq)) % q;
      if (k < 0) k += q;
      const long g = std::gcd(k, q);
      k /= g;
      const long qq = q / g;
      const std::string coef = m == 1 ? "" : std::to_string(static_cast<long>(m));
      if (qq == 1) return std::to_string(static_cast<long>(m));
      if (qq == 2) return "-" + std::to_string(static_cast<long>(m));
      if (qq == 4) return (k == 1 ? "" : "-") + coef + "i";
      if (qq == 3) return coef + (k == 1 ? "w" : "w2");
      if (qq == 6) return "-" + coef + (k == 1 ? "w2" : "w");
      return coef + "e(" + std::to_string(k) + "/" + std::to_string(qq) + ")";
    }
  }
  char buf[64];
  const double re = std::abs(z.real()) < tol ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < tol ? 0.0 : z.imag();
  if (im == 0.0)
    std::snprintf(buf, sizeof buf, "%.4f", re);
  else if (re == 0.0)
    std::snprintf(buf, sizeof buf, "%.4fi", im);
  else
    std::snprintf(buf, sizeof buf, "%.4f%+.4fi", re, im);
  return buf;
}

std::string to_text(const CharacterTable& t) {
  const FiniteMatrixGroup& g = *t.group;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"", "size"};
  std::vector<std::string> orders{"", "ord"};
  for (const auto& cls : g.classes()) {
    header.push_back(std::to_string(cls.size()));
    orders.push_back(std::to_string(g.element_order(cls.front())));
  }
  cells.push_back(std::move(orders));
  cells.push_back(std::move(header));
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"chi" + std::to_string(i), "d=" + std::to_string(std::lround(t.characters[i].degree()))};
    for (const Complex& v : t.characters[i].values) row.push_back(display_value(v));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  os << "order " << g.order() << ", " << g.classes().size() << " classes, " << t.size() << " irreducibles"
     << (t.complete ? "" : " (incomplete)") << "\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << std::string(width[c] - row[c].size(), ' ') << row[c];
      if (c + 1 < row.size()) os << "  ";
    }
    os << "\n";
  }
  return os.str();
}

std::string to_csv(const CharacterTable& t) {
  std::ostringstream os;
  const FiniteMatrixGroup& g = *t.group;
  os << "character,dimension";
  for (std::size_t c = 0; c < g.classes().size(); ++c) os << ",class" << c << "_size" << g.classes()[c].size();
  os << "\n";
  char buf[96];
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << i << "," << std::lround(t.characters[i].degree());
    for (const Complex& v : t.characters[i].values) {
      std::snprintf(buf, sizeof buf, "%.12g%+.12gi", round_significant(v.real()), round_significant(v.imag()));
      os << "," << buf;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace u3g
