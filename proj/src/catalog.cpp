#include "u3groups/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

namespace u3g {

namespace {

std::vector<Complex> powers(long long n) {
  std::vector<Complex> out;
  for (long long k = 0; k < n; ++k) out.push_back(root_of_unity(n, k));
  return out;
}

Matrix m3(std::initializer_list<Complex> entries) {
  Matrix m(3, 3);
  auto it = entries.begin();
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) m(i, j) = *it++;
  return m;
}

void require_order(long long n, const char* what) {
  if (n < 1) throw ContractViolation(std::string(what) + ": root-of-unity order must be >= 1");
}

}  // namespace

Complex Constants::at(const std::vector<Complex>& table, long long k) {
  const auto n = static_cast<long long>(table.size());
  long long r = k % n;
  if (r < 0) r += n;
  return table[static_cast<std::size_t>(r)];
}

const Constants& constants() {
  static const Constants c = [] {
    Constants k;
    k.omega_pow = powers(3);
    k.beta_pow = powers(7);
    k.ninth_pow = powers(9);
    k.gamma_pow = powers(24);
    k.theta_pow = powers(36);
    k.phi_pow = powers(16);
    k.psi_pow = powers(12);
    k.omega = k.omega_pow[1];
    k.beta = k.beta_pow[1];
    k.epsilon = k.ninth_pow[2];  // e^{4πi/9}
    k.gamma = k.gamma_pow[1];
    k.theta = k.theta_pow[1];
    k.phi = k.phi_pow[1];
    k.psi = k.psi_pow[1];
    k.mu_plus = (-1.0 + std::sqrt(5.0)) / 2.0;
    k.mu_minus = (-1.0 - std::sqrt(5.0)) / 2.0;
    return k;
  }();
  return c;
}

namespace gen {

namespace {
Complex om(long long k) { return Constants::at(constants().omega_pow, k); }
Complex be(long long k) { return Constants::at(constants().beta_pow, k); }
Complex ga(long long k) { return Constants::at(constants().gamma_pow, k); }
Complex th(long long k) { return Constants::at(constants().theta_pow, k); }
Complex ph(long long k) { return Constants::at(constants().phi_pow, k); }
Complex ps(long long k) { return Constants::at(constants().psi_pow, k); }
const double s2 = std::sqrt(2.0);
const double s3 = std::sqrt(3.0);
const double s6 = std::sqrt(6.0);
const double s23 = std::sqrt(2.0 / 3.0);
}  // namespace

Matrix E() { return m3({0, 1, 0, 0, 0, 1, 1, 0, 0}); }

Matrix F(long long n, long long a, long long b) {
  require_order(n, "F");
  return m3({root_of_unity(n, a), 0, 0, 0, root_of_unity(n, b), 0, 0, 0, root_of_unity(n, -a - b)});
}

Matrix G(long long d, long long r, long long s) {
  require_order(d, "G");
  return m3({root_of_unity(d, r), 0, 0, 0, 0, root_of_unity(d, s), 0, -root_of_unity(d, -r - s), 0});
}

Matrix H() {
  const double mp = constants().mu_plus, mm = constants().mu_minus;
  return 0.5 * m3({-1, mm, mp, mm, mp, -1, mp, -1, mm});
}

Matrix J() { return m3({1, 0, 0, 0, om(1), 0, 0, 0, om(2)}); }

Matrix K() {
  const Complex f = 1.0 / (s3 * Complex(0, 1));
  return f * m3({1, 1, 1, 1, om(1), om(2), 1, om(2), om(1)});
}

Matrix L() {
  const Complex f = 1.0 / (s3 * Complex(0, 1));
  return f * m3({1, 1, om(2), 1, om(1), om(1), om(1), 1, om(1)});
}

Matrix M() { return m3({be(1), 0, 0, 0, be(2), 0, 0, 0, be(4)}); }

Matrix N() {
  const Complex f = Complex(0, 1) / std::sqrt(7.0);
  const Complex x = be(4) - be(3), y = be(2) - be(5), z = be(1) - be(6);
  return f * m3({x, y, z, y, z, x, z, x, y});
}

Matrix P() {
  const Complex e = constants().epsilon;
  return m3({e, 0, 0, 0, e, 0, 0, 0, e * om(1)});
}

Matrix Q() { return m3({-1, 0, 0, 0, 0, -om(1), 0, -om(2), 0}); }

Matrix R(long long n, long long a, long long b, long long c) {
  require_order(n, "R");
  return m3({0, 0, root_of_unity(n, a), root_of_unity(n, b), 0, 0, 0, root_of_unity(n, c), 0});
}

Matrix S(long long n, long long a, long long b, long long c) {
  require_order(n, "S");
  return m3({root_of_unity(n, a), 0, 0, 0, 0, root_of_unity(n, b), 0, root_of_unity(n, c), 0});
}

Matrix T(long long n, long long a, long long b, long long c) {
  require_order(n, "T");
  return m3({0, 0, root_of_unity(n, a), 0, root_of_unity(n, b), 0, root_of_unity(n, c), 0, 0});
}

Matrix U(long long n, long long a, long long b, long long c) {
  require_order(n, "U");
  return m3({0, root_of_unity(n, a), 0, root_of_unity(n, b), 0, 0, 0, 0, root_of_unity(n, c)});
}

Matrix V(long long n, long long a, long long b, long long c) {
  require_order(n, "V");
  return m3({0, root_of_unity(n, a), 0, 0, 0, root_of_unity(n, b), root_of_unity(n, c), 0, 0});
}

Matrix W(long long n, long long a, long long b, long long c) {
  require_order(n, "W");
  return m3({root_of_unity(n, a), 0, 0, 0, root_of_unity(n, b), 0, 0, 0, root_of_unity(n, c)});
}

Matrix X(int i) {
  switch (i) {
    case 1:
      return m3({0, ga(11) / s2, ga(14) / s2, ga(5) / s2, ga(20) / 2.0, ga(11) / 2.0, ga(14) / s2, ga(17) / 2.0,
                 ga(8) / 2.0});
    case 2:
      return m3({ga(21) / s3, ga(16) / s6, ga(13) / s2, s23 * ga(14), ga(21) / (2.0 * s3), ga(18) / 2.0, 0,
                 s3 / 2.0 * ga(18), ga(3) / 2.0});
    case 3:
      return m3({th(31) / s3, th(14) / s6, th(4) / s2, s23 * th(30), th(31) / (2.0 * s3), th(21) / 2.0, 0,
                 s3 / 2.0 * th(32), th(4) / 2.0});
    case 4:
      return m3({0, th(13) / s2, th(12) / s2, th(35) / s2, th(24) / 2.0, th(5) / 2.0, th(18) / s2, th(25) / 2.0,
                 th(6) / 2.0});
    case 5:
      return m3({ph(9) / s3, s23, 0, s23 * ph(2), ph(1) / s3, 0, 0, 0, ph(5)});
    case 6:
      return m3({ga(22), 0, 0, 0, ga(10) / 2.0, s3 / 2.0 * ga(11), 0, s3 / 2.0 * ga(21), ga(10) / 2.0});
    case 7:
      return m3({ps(9) / s3, ps(2) / s6, ps(7) / s2, ps(4) / s6, Complex(9.0, s3) / 12.0, ps(10) / 2.0,
                 ps(11) / s2, 0.5, ps(2) / 2.0});
    case 8:
      return m3({ps(6) / s3, s23 * ps(1), 0, s23 * ps(11), 1.0 / s3, 0, 0, 0, ps(3)});
    case 9:
      return m3({ga(13) / s3, s23 * ga(14), 0, s23 * ga(12), ga(1) / s3, 0, 0, 0, ga(19)});
    case 10:
      return m3({0, ga(3) / s2, ga(19) / s2, ga(1) / s2, ga(2) / 2.0, ga(6) / 2.0, ga(21) / s2, ga(10) / 2.0,
                 ga(14) / 2.0});
    default:
      throw ContractViolation("X index must lie in 1..10");
  }
}

Matrix phase(long long p, long long q, std::size_t dim) {
  require_order(q, "PHASE");
  return root_of_unity(q, p) * identity(dim);
}

}  // namespace gen

const std::vector<std::pair<std::string, int>>& generator_names() {
  static const std::vector<std::pair<std::string, int>> names = [] {
    std::vector<std::pair<std::string, int>> v = {
        {"E", 0}, {"F", 3}, {"G", 3}, {"H", 0}, {"J", 0}, {"K", 0}, {"L", 0}, {"M", 0}, {"N", 0},
        {"P", 0}, {"Q", 0}, {"R", 4}, {"S", 4}, {"T", 4}, {"U", 4}, {"V", 4}, {"W", 4}, {"PHASE", 2}};
    for (int i = 1; i <= 10; ++i) v.emplace_back("X" + std::to_string(i), 0);
    return v;
  }();
  return names;
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  std::string name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a generator name", start);
    return std::string(text_.substr(start, pos_ - start));
  }
  long long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) throw ParseError("expected an integer", start);
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", start);
    }
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<long long> arguments(Lexer& lx) {
  std::vector<long long> args;
  if (!lx.peek('(')) return args;
  lx.expect('(');
  args.push_back(lx.integer());
  while (lx.peek(',')) {
    lx.expect(',');
    args.push_back(lx.integer());
  }
  lx.expect(')');
  return args;
}

void check_arity(const std::string& name, const std::vector<long long>& args, std::size_t pos) {
  const auto& names = generator_names();
  auto it = std::find_if(names.begin(), names.end(), [&](const auto& p) { return p.first == name; });
  if (it == names.end()) throw ParseError("unknown generator name '" + name + "'", pos);
  if (static_cast<int>(args.size()) != it->second)
    throw ParseError(name + " takes " + std::to_string(it->second) + " arguments, got " + std::to_string(args.size()),
                     pos);
  if ((name == "F" || name == "G" || name.size() == 1) && !args.empty() && args.front() < 1)
    throw ParseError(name + ": root-of-unity order must be >= 1", pos);
  if (name == "PHASE" && args[1] < 1) throw ParseError("PHASE: denominator must be >= 1", pos);
}

}  // namespace

GeneratorExpr parse_expression(std::string_view text) {
  Lexer lx(text);
  GeneratorExpr e;
  std::size_t at = (lx.skip(), lx.pos());
  std::string name = lx.name();
  std::vector<long long> args = arguments(lx);
  check_arity(name, args, at);
  if (lx.peek('*')) {
    if (name != "PHASE" || e.phase) throw ParseError("only a PHASE(p,q) factor may precede '*'", lx.pos());
    lx.expect('*');
    e.phase = std::make_pair(args[0], args[1]);
    at = (lx.skip(), lx.pos());
    name = lx.name();
    args = arguments(lx);
    check_arity(name, args, at);
  }
  if (!lx.at_end()) throw ParseError("unexpected trailing input", lx.pos());
  e.name = std::move(name);
  e.args = std::move(args);
  return e;
}

std::string render(const GeneratorExpr& e) {
  std::ostringstream os;
  if (e.phase) os << "PHASE(" << e.phase->first << "," << e.phase->second << ")*";
  os << e.name;
  if (!e.args.empty()) {
    os << "(";
    for (std::size_t i = 0; i < e.args.size(); ++i) os << (i ? "," : "") << e.args[i];
    os << ")";
  }
  return os.str();
}

Matrix evaluate(const GeneratorExpr& e) {
  const auto& a = e.args;
  Matrix m;
  const std::string& n = e.name;
  check_arity(n, a, 0);
  if (n == "E") m = gen::E();
  else if (n == "F") m = gen::F(a[0], a[1], a[2]);
  else if (n == "G") m = gen::G(a[0], a[1], a[2]);
  else if (n == "H") m = gen::H();
  else if (n == "J") m = gen::J();
  else if (n == "K") m = gen::K();
  else if (n == "L") m = gen::L();
  else if (n == "M") m = gen::M();
  else if (n == "N") m = gen::N();
  else if (n == "P") m = gen::P();
  else if (n == "Q") m = gen::Q();
  else if (n == "R") m = gen::R(a[0], a[1], a[2], a[3]);
  else if (n == "S") m = gen::S(a[0], a[1], a[2], a[3]);
  else if (n == "T") m = gen::T(a[0], a[1], a[2], a[3]);
  else if (n == "U") m = gen::U(a[0], a[1], a[2], a[3]);
  else if (n == "V") m = gen::V(a[0], a[1], a[2], a[3]);
  else if (n == "W") m = gen::W(a[0], a[1], a[2], a[3]);
  else if (n == "PHASE") m = gen::phase(a[0], a[1]);
  else m = gen::X(std::stoi(n.substr(1)));
  if (e.phase) m *= root_of_unity(e.phase->second, e.phase->first);
  return m;
}

Matrix parse_generator(std::string_view text) { return evaluate(parse_expression(text)); }

std::vector<Matrix> parse_generators(std::span<const std::string> texts) {
  std::vector<Matrix> out;
  for (const std::string& t : texts) out.push_back(parse_generator(t));
  return out;
}

namespace {

const std::vector<std::pair<SeriesId, std::string>>& series_table() {
  static const std::vector<std::pair<SeriesId, std::string>> t = {
      {SeriesId::C, "C"},
      {SeriesId::D, "D"},
      {SeriesId::Delta3, "Delta3"},
      {SeriesId::Delta6, "Delta6"},
      {SeriesId::Tn, "Tn"},
      {SeriesId::Sigma60, "Sigma60"},
      {SeriesId::Sigma168, "Sigma168"},
      {SeriesId::Sigma36phi, "Sigma36phi"},
      {SeriesId::Sigma72phi, "Sigma72phi"},
      {SeriesId::Sigma216phi, "Sigma216phi"},
      {SeriesId::Sigma360phi, "Sigma360phi"},
      {SeriesId::TnM, "TnM"},
      {SeriesId::Delta3M, "Delta3M"},
      {SeriesId::S4M, "S4M"},
      {SeriesId::Delta6M, "Delta6M"},
      {SeriesId::Delta6Prime, "Delta6Prime"},
      {SeriesId::Sigma3N3, "Sigma3N3"},
  };
  return t;
}

GeneratorExpr ex(std::string name, std::vector<long long> args = {},
                 std::optional<std::pair<long long, long long>> phase = std::nullopt) {
  return GeneratorExpr{std::move(name), std::move(args), phase};
}

long long ipow(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) {
    if (r > (1LL << 40) / std::max(1LL, b)) throw NoSuchSeriesMember("series parameter too large");
    r *= b;
  }
  return r;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw NoSuchSeriesMember(what);
}

long long tn_parameter(long long n, const std::vector<long long>& p, std::size_t idx) {
  if (p.size() > idx) {
    need(((1 + p[idx] + p[idx] * p[idx]) % n + n) % n == 0,
         "Tn: (1+a+a^2) mod n != 0 for n=" + std::to_string(n) + ", a=" + std::to_string(p[idx]));
    return p[idx];
  }
  const TnSolutions s = solve_tn(n);
  need(!s.solutions.empty(), "Tn: no solution of (1+a+a^2) mod n = 0 for n=" + std::to_string(n));
  return s.solutions.front();
}

void arity(const SeriesSpec& s, std::size_t lo, std::size_t hi) {
  if (s.params.size() < lo || s.params.size() > hi)
    throw ContractViolation(series_name(s.id) + " expects parameters " + series_signature(s.id));
}

}  // namespace

SeriesId parse_series_id(std::string_view name) {
  for (const auto& [id, n] : series_table())
    if (n == name) return id;
  throw ContractViolation("unknown series id '" + std::string(name) + "'");
}

std::string series_name(SeriesId id) {
  for (const auto& [i, n] : series_table())
    if (i == id) return n;
  return "?";
}

std::string series_signature(SeriesId id) {
  switch (id) {
    case SeriesId::C: return "n a b";
    case SeriesId::D: return "n a b d r s";
    case SeriesId::Delta3:
    case SeriesId::Delta6: return "n";
    case SeriesId::Tn: return "n [a]";
    case SeriesId::TnM: return "n m [a]";
    case SeriesId::Delta3M:
    case SeriesId::Delta6M: return "n m";
    case SeriesId::S4M: return "m";
    case SeriesId::Delta6Prime: return "n j k";
    default: return "(none)";
  }
}

std::vector<GeneratorExpr> series_expressions(const SeriesSpec& s) {
  const auto& p = s.params;
  switch (s.id) {
    case SeriesId::C:
      arity(s, 3, 3);
      need(p[0] >= 1, "C: n >= 1 required");
      return {ex("E"), ex("F", {p[0], p[1], p[2]})};
    case SeriesId::D:
      arity(s, 6, 6);
      need(p[0] >= 1 && p[3] >= 1, "D: n, d >= 1 required");
      return {ex("E"), ex("F", {p[0], p[1], p[2]}), ex("G", {p[3], p[4], p[5]})};
    case SeriesId::Delta3:
      arity(s, 1, 1);
      need(p[0] >= 2, "Delta(3n^2): n >= 2 required");
      return {ex("E"), ex("F", {p[0], 0, 1})};
    case SeriesId::Delta6:
      arity(s, 1, 1);
      need(p[0] >= 2, "Delta(6n^2): n >= 2 required");
      return {ex("E"), ex("F", {p[0], 0, 1}), ex("G", {2, 1, 1})};
    case SeriesId::Tn: {
      arity(s, 1, 2);
      need(p[0] >= 2, "Tn: n >= 2 required");
      return {ex("E"), ex("F", {p[0], 1, tn_parameter(p[0], p, 1)})};
    }
    case SeriesId::Sigma60:
      arity(s, 0, 0);
      return {ex("E"), ex("F", {2, 0, 1}), ex("H")};
    case SeriesId::Sigma168:
      arity(s, 0, 0);
      return {ex("E"), ex("M"), ex("N")};
    case SeriesId::Sigma36phi:
      arity(s, 0, 0);
      return {ex("E"), ex("J"), ex("K")};
    case SeriesId::Sigma72phi:
      arity(s, 0, 0);
      return {ex("E"), ex("J"), ex("K"), ex("L")};
    case SeriesId::Sigma216phi:
      arity(s, 0, 0);
      return {ex("E"), ex("J"), ex("K"), ex("P")};
    case SeriesId::Sigma360phi:
      arity(s, 0, 0);
      return {ex("E"), ex("F", {2, 0, 1}), ex("H"), ex("Q")};
    case SeriesId::TnM: {
      arity(s, 2, 3);
      need(p[0] >= 2 && p[1] >= 1, "Tn(m): n >= 2, m >= 1 required");
      const long long a = tn_parameter(p[0], p, 2);
      return {ex("E", {}, std::make_pair(1LL, ipow(3, p[1]))), ex("F", {p[0], 1, a})};
    }
    case SeriesId::Delta3M:
      arity(s, 2, 2);
      need(p[0] >= 2 && p[1] >= 1 && std::gcd(3LL, p[0]) == 1, "Delta(3n^2,m): n >= 2, gcd(3,n) = 1, m >= 1 required");
      return {ex("E", {}, std::make_pair(1LL, ipow(3, p[1]))), ex("F", {p[0], 0, 1})};
    case SeriesId::S4M:
      arity(s, 1, 1);
      need(p[0] >= 1, "S4(m): m >= 1 required");
      // A = diag(1,-1,-1), B = [[0,0,-1],[-1,0,0],[0,1,0]], C = [[1,0,0],[0,0,1],[0,1,0]]
      return {ex("F", {2, 0, 1}), ex("R", {2, 1, 1, 0}), ex("S", {1, 0, 0, 0}, std::make_pair(1LL, ipow(2, p[0])))};
    case SeriesId::Delta6M:
      arity(s, 2, 2);
      need(p[0] >= 2 && p[1] >= 1 && std::gcd(3LL, p[0]) == 1, "Delta(6n^2,m): n >= 2, gcd(3,n) = 1, m >= 1 required");
      // A = E, B = [[0,0,-1],[0,-1,0],[-1,0,0]], C = diag(1, eta, eta*)
      return {ex("E"), ex("T", {2, 1, 1, 1}, std::make_pair(1LL, ipow(2, p[1]))), ex("F", {p[0], 0, 1})};
    case SeriesId::Delta6Prime:
      arity(s, 3, 3);
      need(p[0] >= 3 && std::gcd(3LL, p[0]) == 3 && p[1] >= 0 && p[2] >= 0 && p[1] + p[2] >= 1,
           "Delta'(6n^2,j,k): gcd(3,n) = 3, j, k >= 0, j + k >= 1 required");
      return {ex("E"), ex("T", {2, 1, 1, 1}, std::make_pair(1LL, ipow(3, p[1]) * ipow(2, p[2]))),
              ex("F", {p[0], 0, 1})};
    case SeriesId::Sigma3N3:
      throw ContractViolation("Sigma(3N^3) is out of scope: no generators are defined for it");
  }
  throw ContractViolation("unknown series");
}

std::vector<Matrix> build_series(const SeriesSpec& spec) {
  std::vector<Matrix> out;
  for (const GeneratorExpr& e : series_expressions(spec)) out.push_back(evaluate(e));
  return out;
}

TnSolutions solve_tn(long long n) {
  if (n < 2) throw ContractViolation("solve_tn: n >= 2 required");
  TnSolutions s;
  for (long long a = 1; a < n; ++a)
    if ((1 + a + a * a) % n == 0) s.solutions.push_back(a);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (long long a : s.solutions) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    const long long b = a * a % n;
    seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
    s.pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  return s;
}

Fingerprint fingerprint(const FiniteMatrixGroup& g, const Representation& rep) {
  if (rep.group().get() != &g) throw ContractViolation("fingerprint: representation of another group");
  Fingerprint f;
  f.order = g.order();
  f.center_order = center(g).order();
  f.class_sizes = g.class_sizes();
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  f.abelianization = abelian_invariants(quotient_group(g, commutator_subgroup(g)));
  f.det_subgroup_order = determinant_character(rep).subgroup_order;
  for (ElementIndex x = 0; x < g.order(); ++x) f.element_orders.push_back(g.element_order(x));
  std::sort(f.element_orders.begin(), f.element_orders.end());
  return f;
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  auto list = [&](const auto& v) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
  };
  os << "order=" << f.order << " center=" << f.center_order << " classes=";
  list(f.class_sizes);
  os << " ab=";
  list(f.abelianization);
  os << " det=" << f.det_subgroup_order << " element_orders=";
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t o : f.element_orders) ++hist[o];
  os << "{";
  bool first = true;
  for (const auto& [o, c] : hist) {
    os << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw ContractViolation("expected rows: unterminated quoted field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::size_t to_size(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ContractViolation("expected rows: bad " + what + " '" + s + "'");
  }
}

}  // namespace

std::vector<ExpectedRow> parse_expected_rows(std::string_view text) {
  const auto rows = parse_csv(text);
  if (rows.empty()) throw ContractViolation("expected rows: missing header");
  const std::vector<std::string> header = {"label", "classification", "generators", "order", "center_order", "det_one"};
  if (rows.front() != header) throw ContractViolation("expected rows: unexpected header");
  std::vector<ExpectedRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != header.size())
      throw ContractViolation("expected rows: line " + std::to_string(i + 1) + " has " + std::to_string(r.size()) +
                              " fields");
    ExpectedRow e;
    e.label = r[0];
    e.classification = r[1];
    e.generators = split(r[2], ';');
    e.order = to_size(r[3], "order");
    e.center_order = to_size(r[4], "center_order");
    if (r[5] != "true" && r[5] != "false") throw ContractViolation("expected rows: det_one must be true/false");
    e.det_one = r[5] == "true";
    for (const std::string& g : e.generators) parse_expression(g);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ExpectedRow> read_expected_rows(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open expected rows file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_expected_rows(ss.str());
}

std::string default_expected_rows_path() {
  if (const char* env = std::getenv("U3G_DATA_DIR")) return std::string(env) + "/expected_rows.csv";
#ifdef U3G_DATA_DIR
  return std::string(U3G_DATA_DIR) + "/expected_rows.csv";
#else
  return "data/expected_rows.csv";
#endif
}

std::vector<ExpectedRow> extended_rows() {
  return {
      ExpectedRow{"Sigma(216phi)", "Sigma(216phi)", {"E", "J", "K", "P"}, 648, 0, true},
      ExpectedRow{"Sigma(360phi)", "Sigma(360phi)", {"E", "F(2,0,1)", "H", "Q"}, 1080, 0, true},
  };
}

std::optional<SeriesSpec> series_for_classification(std::string_view text) {
  const std::string s(text);
  std::smatch m;
  auto num = [&](int i) { return std::stoll(m[i].str()); };
  static const std::regex c_re(R"(^C\((\d+),(-?\d+),(-?\d+)\)$)");
  static const std::regex d_re(R"(^D\((\d+),(-?\d+),(-?\d+);(\d+),(-?\d+),(-?\d+)\)$)");
  static const std::regex d3_re(R"(^Delta\(\d+\)=Delta\(3x(\d+)\^2\)$)");
  static const std::regex d6_re(R"(^Delta\(\d+\)=Delta\(6x(\d+)\^2\)$)");
  static const std::regex d3m_re(R"(^Delta\(3x(\d+)\^2,(\d+)\)$)");
  static const std::regex d6m_re(R"(^Delta\(6x(\d+)\^2,(\d+)\)$)");
  static const std::regex d6p_re(R"(^Delta'\(6x(\d+)\^2,(\d+),(\d+)\)$)");
  static const std::regex s4_re(R"(^S_4\((\d+)\)$)");
  static const std::regex tm_re(R"(^T_(\d+)\((\d+)\)$)");
  if (std::regex_match(s, m, c_re)) return SeriesSpec{SeriesId::C, {num(1), num(2), num(3)}};
  if (std::regex_match(s, m, d_re))
    return SeriesSpec{SeriesId::D, {num(1), num(2), num(3), num(4), num(5), num(6)}};
  if (std::regex_match(s, m, d3_re)) return SeriesSpec{SeriesId::Delta3, {num(1)}};
  if (std::regex_match(s, m, d6_re)) return SeriesSpec{SeriesId::Delta6, {num(1)}};
  if (std::regex_match(s, m, d3m_re)) return SeriesSpec{SeriesId::Delta3M, {num(1), num(2)}};
  if (std::regex_match(s, m, d6m_re)) {
    // for 3 | n the phase series is the j = 0 member of the primed family
    if (num(1) % 3 == 0) return SeriesSpec{SeriesId::Delta6Prime, {num(1), 0, num(2)}};
    return SeriesSpec{SeriesId::Delta6M, {num(1), num(2)}};
  }
  if (std::regex_match(s, m, d6p_re)) return SeriesSpec{SeriesId::Delta6Prime, {num(1), num(2), num(3)}};
  if (std::regex_match(s, m, s4_re)) return SeriesSpec{SeriesId::S4M, {num(1)}};
  if (std::regex_match(s, m, tm_re)) return SeriesSpec{SeriesId::TnM, {num(1), num(2)}};
  if (s == "A5") return SeriesSpec{SeriesId::Sigma60, {}};
  if (s == "PSL(2,7)") return SeriesSpec{SeriesId::Sigma168, {}};
  if (s == "Sigma(36phi)") return SeriesSpec{SeriesId::Sigma36phi, {}};
  if (s == "Sigma(72phi)") return SeriesSpec{SeriesId::Sigma72phi, {}};
  if (s == "Sigma(216phi)") return SeriesSpec{SeriesId::Sigma216phi, {}};
  if (s == "Sigma(360phi)") return SeriesSpec{SeriesId::Sigma360phi, {}};
  return std::nullopt;
}

RowResult verify_row(const ExpectedRow& row, const VerifyOptions& options) {
  RowResult r;
  r.label = row.label;
  auto fail = [&](std::string msg) { r.failures.push_back(std::move(msg)); };
  GroupPtr g;
  try {
    g = generate_group(parse_generators(row.generators), options.tolerance, options.max_order);
  } catch (const std::exception& e) {
    fail(std::string("build: ") + e.what());
    return r;
  }
  try {
    r.order = g->order();
    r.center_order = center(*g).order();
    if (r.order != row.order) fail("order " + std::to_string(r.order) + " != " + std::to_string(row.order));
    if (row.center_order != 0 && r.center_order != row.center_order)
      fail("center order " + std::to_string(r.center_order) + " != " + std::to_string(row.center_order));
    const Representation rep = defining_rep(g);
    r.irreducible = is_irreducible(rep);
    r.faithful = is_faithful(rep);
    r.det_subgroup_order = determinant_character(rep).subgroup_order;
    if (!r.irreducible) fail("defining representation is reducible");
    if (!r.faithful) fail("defining representation is not faithful");
    if (row.det_one != (r.det_subgroup_order == 1))
      fail("det subgroup order " + std::to_string(r.det_subgroup_order) + " contradicts det_one=" +
           (row.det_one ? "true" : "false"));
    if (g->order() <= kNormalSubgroupGuard) {
      r.cyclic_factor_checked = true;
      r.has_cyclic_direct_factor = find_cyclic_direct_factor(*g).has_value();
      if (r.has_cyclic_direct_factor) fail("group has a cyclic direct factor");
    }
    if (options.fingerprints) r.fingerprint = fingerprint(*g, rep);
    if (row.det_one)
      if (const auto spec = series_for_classification(row.classification)) {
        const GroupPtr b = generate_group(build_series(*spec), options.tolerance, options.max_order);
        if (b->order() != row.order || center(*b).order() != r.center_order)
          fail("classification builder gives order " + std::to_string(b->order()));
      }
  } catch (const std::exception& e) {
    fail(std::string("analysis: ") + e.what());
  }
  r.pass = r.failures.empty();
  return r;
}

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowResult& r) { return r.pass; }));
}

VerifyReport verify_expected_rows(std::span<const ExpectedRow> rows, const VerifyOptions& options) {
  VerifyReport report;
  for (const ExpectedRow& row : rows) report.rows.push_back(verify_row(row, options));
  std::vector<bool> grouped(report.rows.size(), false);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& fi = report.rows[i].fingerprint;
    if (grouped[i] || !fi) continue;
    std::vector<std::string> same{report.rows[i].label};
    for (std::size_t j = i + 1; j < report.rows.size(); ++j) {
      const auto& fj = report.rows[j].fingerprint;
      if (!grouped[j] && fj && *fj == *fi) {
        grouped[j] = true;
        same.push_back(report.rows[j].label);
      }
    }
    if (same.size() > 1) report.collisions.push_back(std::move(same));
  }
  return report;
}

std::vector<std::string> match_expected(const Fingerprint& fp, bool det_one, std::span<const ExpectedRow> rows,
                                        const VerifyOptions& options) {
  std::vector<std::string> labels;
  for (const ExpectedRow& row : rows) {
    if (row.order != fp.order || row.det_one != det_one) continue;
    if (row.center_order != 0 && row.center_order != fp.center_order) continue;
    try {
      GroupPtr g = generate_group(parse_generators(row.generators), options.tolerance, options.max_order);
      if (fingerprint(*g, defining_rep(g)) == fp) labels.push_back(row.label);
    } catch (const std::exception&) {
      // unbuildable rows cannot match
    }
  }
  return labels;
}

}  // namespace u3g
