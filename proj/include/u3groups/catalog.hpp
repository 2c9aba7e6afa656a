#pragma once

// Named generator matrices, the generator-expression grammar, series
// builders, classification fingerprints and the expected-rows data.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "u3groups/group.hpp"
#include "u3groups/rep.hpp"

namespace u3g {

/// Scalar constants of the generator tables. Powers are tabulated so that
/// every irrational entry comes from one evaluation of the closed form.
struct Constants {
  Complex omega, beta, epsilon, gamma, theta, phi, psi;
  double mu_plus, mu_minus;
  std::vector<Complex> omega_pow, beta_pow, ninth_pow, gamma_pow, theta_pow, phi_pow, psi_pow;

  static Complex at(const std::vector<Complex>& table, long long k);
};
/// Evaluated once on first use.
const Constants& constants();

namespace gen {
Matrix E();
Matrix F(long long n, long long a, long long b);
Matrix G(long long d, long long r, long long s);
Matrix H();
Matrix J();
Matrix K();
Matrix L();
Matrix M();
Matrix N();
Matrix P();
Matrix Q();
Matrix R(long long n, long long a, long long b, long long c);
Matrix S(long long n, long long a, long long b, long long c);
Matrix T(long long n, long long a, long long b, long long c);
Matrix U(long long n, long long a, long long b, long long c);
Matrix V(long long n, long long a, long long b, long long c);
Matrix W(long long n, long long a, long long b, long long c);
Matrix X(int i);  // X1 … X10
Matrix phase(long long p, long long q, std::size_t dim = 3);
}  // namespace gen

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct GeneratorExpr {
  std::string name;
  std::vector<long long> args;
  std::optional<std::pair<long long, long long>> phase;  // PHASE(p,q) prefix

  friend bool operator==(const GeneratorExpr&, const GeneratorExpr&) = default;
};

/// term := [ "PHASE(" int "," int ")" "*" ] NAME [ "(" int {"," int} ")" ]
GeneratorExpr parse_expression(std::string_view text);
std::string render(const GeneratorExpr& expr);
Matrix evaluate(const GeneratorExpr& expr);
Matrix parse_generator(std::string_view text);
std::vector<Matrix> parse_generators(std::span<const std::string> texts);
/// Names accepted by the grammar with their arity.
const std::vector<std::pair<std::string, int>>& generator_names();

class NoSuchSeriesMember : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SeriesId {
  C, D, Delta3, Delta6, Tn,
  Sigma60, Sigma168, Sigma36phi, Sigma72phi, Sigma216phi, Sigma360phi,
  TnM, Delta3M, S4M, Delta6M, Delta6Prime,
  Sigma3N3,
};

struct SeriesSpec {
  SeriesId id;
  std::vector<long long> params;
};

SeriesId parse_series_id(std::string_view name);
std::string series_name(SeriesId id);
/// Parameter names in order, for help text.
std::string series_signature(SeriesId id);

/// Generator expressions of a series member. Throws NoSuchSeriesMember for
/// unsatisfiable parameters and ContractViolation for out-of-scope series.
std::vector<GeneratorExpr> series_expressions(const SeriesSpec& spec);
std::vector<Matrix> build_series(const SeriesSpec& spec);

struct TnSolutions {
  std::vector<long long> solutions;                          // ascending
  std::vector<std::pair<long long, long long>> pairs;        // {a, a² mod n}, a ≤ a²
};
TnSolutions solve_tn(long long n);

struct Fingerprint {
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::vector<std::size_t> class_sizes;     // sorted
  std::vector<long> abelianization;         // invariant factors of G/[G,G]
  std::size_t det_subgroup_order = 1;
  std::vector<std::size_t> element_orders;  // sorted multiset

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const FiniteMatrixGroup& g, const Representation& rep);
std::string to_string(const Fingerprint& f);

struct ExpectedRow {
  std::string label;
  std::string classification;
  std::vector<std::string> generators;
  std::size_t order = 0;
  std::size_t center_order = 0;
  bool det_one = false;
};

std::vector<ExpectedRow> read_expected_rows(const std::string& path);
std::vector<ExpectedRow> parse_expected_rows(std::string_view csv_text);
std::string default_expected_rows_path();
/// Σ(216φ) and Σ(360φ), outside the tabulated range; center order 0 means
/// "not tabulated" and is not checked.
std::vector<ExpectedRow> extended_rows();

/// Series spec for a classification string such as "C(7,1,2)",
/// "Delta(27)=Delta(3x3^2)", "D(9,1,1;2,1,1)", "A5", "PSL(2,7)",
/// "Sigma(36phi)" or "S_4(3)"; nullopt when none applies.
std::optional<SeriesSpec> series_for_classification(std::string_view classification);

struct RowResult {
  std::string label;
  bool pass = false;
  std::size_t order = 0;
  std::size_t center_order = 0;
  bool irreducible = false;
  bool faithful = false;
  std::size_t det_subgroup_order = 0;
  bool has_cyclic_direct_factor = false;
  bool cyclic_factor_checked = false;
  std::optional<Fingerprint> fingerprint;
  std::vector<std::string> failures;
};

struct VerifyOptions {
  ToleranceConfig tolerance{};
  std::size_t max_order = kDefaultMaxOrder;
  bool fingerprints = true;
};

RowResult verify_row(const ExpectedRow& row, const VerifyOptions& options = {});

struct VerifyReport {
  std::vector<RowResult> rows;  // in input order
  /// Groups of labels whose fingerprints coincide (only rows of equal order
  /// are compared).
  std::vector<std::vector<std::string>> collisions;
  std::size_t passed() const;
  bool all_passed() const { return passed() == rows.size(); }
};
VerifyReport verify_expected_rows(std::span<const ExpectedRow> rows, const VerifyOptions& options = {});

/// Labels of expected rows (same order, center order and det status) whose
/// fingerprint equals `fp`.
std::vector<std::string> match_expected(const Fingerprint& fp, bool det_one, std::span<const ExpectedRow> rows,
                                        const VerifyOptions& options = {});

}  // namespace u3g
