#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "u3groups/catalog.hpp"
#include "u3groups/report.hpp"
#include "u3groups/series_lab.hpp"

using namespace u3g;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitNotClosed = 2;
constexpr int kExitParse = 3;
constexpr int kExitIncomplete = 4;

struct Global {
  double tol = 1e-7;
  std::size_t max_order = kDefaultMaxOrder;
  std::string format = "text";
  bool extended = false;
  std::string tables;

  ToleranceConfig tolerance() const {
    ToleranceConfig cfg;
    cfg.eq_tol = tol;
    cfg.validate();
    return cfg;
  }
};

std::vector<ExpectedRow> load_rows(const Global& o, bool required) {
  const std::string path = o.tables.empty() ? default_expected_rows_path() : o.tables;
  std::ifstream probe(path);
  if (!probe) {
    if (required) throw std::runtime_error("cannot open expected rows: " + path);
    return {};
  }
  std::vector<ExpectedRow> rows = read_expected_rows(path);
  if (o.extended)
    for (auto& r : extended_rows()) rows.push_back(std::move(r));
  return rows;
}

GroupPtr build_from(const std::vector<std::string>& exprs, const Global& o, std::vector<std::string>* canonical) {
  std::vector<Matrix> gens;
  for (const auto& e : exprs) {
    const GeneratorExpr parsed = parse_expression(e);
    if (canonical) canonical->push_back(render(parsed));
    gens.push_back(evaluate(parsed));
  }
  return generate_group(std::move(gens), o.tolerance(), o.max_order);
}

void emit_report(const GroupReport& r, const Global& o, const Json* extra = nullptr) {
  if (o.format == "json") {
    Json j = to_json(r);
    if (extra)
      for (const auto& [k, v] : extra->items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << to_csv(r);
  } else {
    if (extra)
      for (const auto& [k, v] : extra->items()) std::cout << k << ": " << v.dump() << "\n";
    std::cout << to_text(r);
  }
}

CharacterTable character_table_for(GroupPtr g) {
  const Representation seed = defining_rep(g);
  return discover_irreducibles(g, std::span<const Representation>(&seed, 1));
}

void emit_table(const CharacterTable& t, const Global& o) {
  if (o.format == "json")
    std::cout << to_json(t).dump(2) << "\n";
  else if (o.format == "csv")
    std::cout << to_csv(t);
  else
    std::cout << to_text(t);
}

Representation select_rep(const std::string& which, GroupPtr g, const CharacterTable& t) {
  if (which == "def") return defining_rep(g);
  if (which == "conj") return conjugate_rep(defining_rep(g));
  std::size_t pos = 0;
  long idx = -1;
  try {
    idx = std::stol(which, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != which.size() || idx < 0 || static_cast<std::size_t>(idx) >= t.size())
    throw ParseError("representation selector must be def, conj or an irreducible index below " +
                         std::to_string(t.size()),
                     0);
  if (!t.realizations[idx])
    throw IncompleteTable("irreducible " + which + " has no matrix realization", t);
  return *t.realizations[idx];
}

int run_tensor(const std::vector<std::string>& exprs, const std::string& left, const std::string& right,
               const Global& o) {
  GroupPtr g = build_from(exprs, o, nullptr);
  const CharacterTable t = character_table_for(g);
  const Representation a = select_rep(left, g, t);
  const Representation b = select_rep(right, g, t);
  const Representation prod = tensor_rep(a, b);
  const Character chi = character_of(prod);
  const std::vector<long> mult = decompose(chi, t);

  Json comps = Json::array();
  std::string text;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (mult[i] == 0) continue;
    const auto d = static_cast<std::size_t>(std::lround(t.characters[i].degree()));
    const IsotypicComponent iso = isotypic_projector(prod, t.characters[i], d);
    Json basis = Json::array();
    for (Eigen::Index c = 0; c < iso.basis.cols(); ++c) {
      Json v = Json::array();
      for (Eigen::Index r = 0; r < iso.basis.rows(); ++r) v.push_back(complex_json(iso.basis(r, c)));
      basis.push_back(v);
    }
    comps.push_back(Json{{"index", i}, {"dimension", d}, {"multiplicity", mult[i]}, {"basis", basis}});
    text += (text.empty() ? "" : " + ") + (mult[i] > 1 ? std::to_string(mult[i]) + "*" : std::string()) + "chi" +
            std::to_string(i) + "[" + std::to_string(d) + "]";
  }
  if (o.format == "json") {
    Json j{{"left", left}, {"right", right}, {"dimension", prod.dim()}, {"components", comps}};
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "index,dimension,multiplicity\n";
    for (const auto& c : comps) std::cout << c["index"] << "," << c["dimension"] << "," << c["multiplicity"] << "\n";
  } else {
    std::cout << left << " x " << right << " (dim " << prod.dim() << ") = " << text << "\n";
  }
  return 0;
}

int run_verify(const Global& o) {
  const std::vector<ExpectedRow> rows = load_rows(o, true);
  VerifyOptions vo;
  vo.tolerance = o.tolerance();
  vo.max_order = o.max_order;
  VerifyReport rep = verify_expected_rows(rows, vo);
  std::stable_sort(rep.rows.begin(), rep.rows.end(),
                   [](const RowResult& a, const RowResult& b) { return a.label < b.label; });

  bool ok = rep.all_passed();
  Json theorems = Json::array();
  std::vector<SemidirectPackage> packages{package_s4(), package_tn(7), package_tn(13), package_delta6(3)};
  for (const auto& pkg : packages) {
    const PackageCheck check = validate_package(pkg, vo.tolerance);
    Json verdicts = Json::array();
    bool pkg_ok = check.ok();
    for (const TheoremVerdict& v : cross_validate(pkg, 1, 12, vo.tolerance)) {
      if (!v.skipped) pkg_ok = pkg_ok && v.agree;
      verdicts.push_back(to_json(v));
    }
    ok = ok && pkg_ok;
    theorems.push_back(Json{{"package", pkg.name}, {"package_ok", check.ok()}, {"agree", pkg_ok}, {"verdicts", verdicts}});
  }

  Json products = Json::array();
  const std::vector<std::pair<std::string, std::vector<std::string>>> product_groups{
      {"A4", {"F(2,0,1)", "E"}}, {"Delta(27)", {"E", "F(3,0,1)"}}, {"T7", {"F(7,1,2)", "E"}}};
  for (const auto& [name, exprs] : product_groups) {
    GroupPtr g = build_from(exprs, o, nullptr);
    const Representation r = defining_rep(g);
    for (long n = 2; n <= 5; ++n) {
      const ProductVerdict v = product_theorem_check(name, r, n);
      ok = ok && v.agree;
      products.push_back(to_json(v));
    }
  }

  if (o.format == "json") {
    Json rj = Json::array();
    for (const auto& r : rep.rows) rj.push_back(to_json(r));
    Json j{{"total", rep.rows.size()},   {"passed", rep.passed()},  {"rows", rj},
           {"collisions", rep.collisions}, {"theorems", theorems}, {"products", products},
           {"ok", ok}};
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "label,pass,order,center_order,irreducible,faithful,det_subgroup_order,failures\n";
    for (const auto& r : rep.rows) {
      std::string f;
      for (const auto& s : r.failures) f += (f.empty() ? "" : "; ") + s;
      std::cout << '"' << r.label << "\"," << (r.pass ? "true" : "false") << "," << r.order << "," << r.center_order
                << "," << (r.irreducible ? "true" : "false") << "," << (r.faithful ? "true" : "false") << ","
                << r.det_subgroup_order << ",\"" << f << "\"\n";
    }
  } else {
    for (const auto& r : rep.rows) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.label << " order=" << r.order << " center=" << r.center_order;
      for (const auto& f : r.failures) std::cout << " [" << f << "]";
      std::cout << "\n";
    }
    for (const auto& c : rep.collisions) {
      std::cout << "fingerprint collision:";
      for (const auto& l : c) std::cout << " " << l;
      std::cout << "\n";
    }
    for (const auto& t : theorems)
      std::cout << (t["agree"].get<bool>() ? "PASS " : "FAIL ") << "series theorem " << t["package"].get<std::string>()
                << " b=1..12\n";
    for (const auto& p : products)
      std::cout << (p["agree"].get<bool>() ? "PASS " : "FAIL ") << "product theorem " << p["group"].get<std::string>()
                << " n=" << p["n"] << "\n";
    std::cout << rep.passed() << "/" << rep.rows.size() << " rows passed\n";
  }
  if (!ok) std::cerr << "verification failed\n";
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite subgroups of U(3): closure, characters, series and classification checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Global o;
  app.add_option("--tol", o.tol, "Componentwise equality tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-order", o.max_order, "Abort closure above this order")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--extended", o.extended, "Include rows beyond the tabulated range");

  std::vector<std::string> exprs;
  auto* build = app.add_subcommand("build", "Generate a group and report its invariants");
  build->add_option("generators", exprs, "Generator expressions")->required();
  bool no_match = false;
  build->add_flag("--no-match", no_match, "Skip matching against the expected rows");
  build->add_option("--tables", o.tables, "Expected rows CSV");

  auto* chartab = app.add_subcommand("chartab", "Character table by tensor peeling");
  chartab->add_option("generators", exprs, "Generator expressions")->required();

  std::string left = "def", right = "def";
  auto* tensor = app.add_subcommand("tensor", "Decompose a tensor product of representations");
  tensor->add_option("generators", exprs, "Generator expressions")->required();
  tensor->add_option("--left", left, "def, conj or an irreducible index");
  tensor->add_option("--right", right, "def, conj or an irreducible index");

  std::string series_id;
  std::vector<long long> params;
  bool series_table = false;
  auto* series = app.add_subcommand("series", "Build a series member, e.g. 'series S4M 3' or 'series TnM 7 1'");
  series->add_option("name", series_id, "Series name")->required();
  series->add_option("params", params, "Integer parameters");
  series->add_flag("--chartab", series_table, "Print the character table instead of the report");

  auto* verify = app.add_subcommand("verify", "Check every expected row and the series theorems");
  verify->add_option("--tables", o.tables, "Expected rows CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      std::vector<std::string> canonical;
      GroupPtr g = build_from(exprs, o, &canonical);
      const std::vector<ExpectedRow> rows = no_match ? std::vector<ExpectedRow>{} : load_rows(o, false);
      emit_report(make_group_report(g, canonical, rows), o);
    } else if (*chartab) {
      emit_table(character_table_for(build_from(exprs, o, nullptr)), o);
    } else if (*tensor) {
      return run_tensor(exprs, left, right, o);
    } else if (*series) {
      SeriesId id{};
      try {
        id = parse_series_id(series_id);
      } catch (const ContractViolation& e) {
        throw ParseError(e.what(), 0);
      }
      const SeriesSpec spec{id, params};
      std::vector<std::string> rendered;
      for (const auto& e : series_expressions(spec)) rendered.push_back(render(e));
      GroupPtr g = build_from(rendered, o, nullptr);
      if (series_table) {
        emit_table(character_table_for(g), o);
      } else {
        std::vector<long long> p = params;
        const Json extra{{"series", series_name(spec.id)}, {"params", p}};
        emit_report(make_group_report(g, rendered, load_rows(o, false)), o, &extra);
      }
    } else if (*verify) {
      return run_verify(o);
    }
  } catch (const GroupNotClosed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotClosed;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NoSuchSeriesMember& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IncompleteTable& e) {
    std::cerr << "incomplete character table: " << e.what() << "\n";
    return kExitIncomplete;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
