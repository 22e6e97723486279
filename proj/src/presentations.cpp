#include "etq/presentations.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

#include "etq/abelian.hpp"
#include "etq/error.hpp"
#include "etq/mod2_model.hpp"
#include "etq/quadric_engine.hpp"

namespace etq {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::monomial(std::size_t variables, Exponents exponents, const Integer& coefficient) {
  Polynomial p(variables);
  p.add_term(exponents, coefficient);
  return p;
}

void Polynomial::add_term(const Exponents& exponents, const Integer& coefficient) {
  if (exponents.size() != variables_)
    throw Error(Errc::invalid_argument, "exponent vector has the wrong number of variables");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_) throw Error(Errc::invalid_argument, "polynomials over different generators");
  Polynomial out(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// RingPresentation

int RingPresentation::monomial_degree(const Polynomial::Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * generators[i].degree;
  return d;
}

int RingPresentation::relation_degree(const Polynomial& p) const {
  if (p.is_zero()) throw Error(Errc::non_homogeneous_relation, "the zero relation has no degree");
  const int d = monomial_degree(p.terms().begin()->first);
  for (const auto& [e, c] : p.terms())
    if (monomial_degree(e) != d)
      throw Error(Errc::non_homogeneous_relation, "relation '" + polynomial_string(p) + "' mixes degrees " +
                                                      std::to_string(d) + " and " +
                                                      std::to_string(monomial_degree(e)));
  return d;
}

std::string RingPresentation::monomial_string(const Polynomial::Exponents& e) const {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += generators[i].name;
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string RingPresentation::polynomial_string(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest exponent vector first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Integer a = abs(c);
    const std::string mono = monomial_string(e);
    if (mono == "1")
      out += a.to_string();
    else if (a == Integer(1))
      out += mono;
    else
      out += a.to_string() + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(Errc::parse_error, (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + what);
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class PolynomialParser {
 public:
  PolynomialParser(const RingPresentation& p, std::string_view text, int line) : p_(p), text_(text), line_(line) {}

  Polynomial parse() {
    Polynomial out(p_.generators.size());
    skip_space();
    if (at_end()) parse_fail(line_, "empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        parse_fail(line_, "expected '+' or '-' at column " + std::to_string(pos_ + 1));
      }
      out = out + parse_term(sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  // term := factor (['*'] factor)*,  factor := integer | name ['^' integer]
  Polynomial parse_term(int sign) {
    Integer coefficient(sign);
    Polynomial::Exponents e(p_.generators.size(), 0);
    bool any = false;
    for (;;) {
      skip_space();
      if (at_end() || peek() == '+' || peek() == '-') break;
      if (any && peek() == '*') {
        ++pos_;
        skip_space();
      }
      if (at_end()) parse_fail(line_, "dangling '*'");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient *= Integer(read_int());
      } else if (is_name_start(peek())) {
        const std::string name = read_name();
        const auto it = std::find_if(p_.generators.begin(), p_.generators.end(),
                                     [&](const PresentationGenerator& g) { return g.name == name; });
        if (it == p_.generators.end()) parse_fail(line_, "unknown generator '" + name + "'");
        int power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            parse_fail(line_, "expected an exponent after '^'");
          power = static_cast<int>(read_int());
        }
        e[static_cast<std::size_t>(it - p_.generators.begin())] += power;
      } else {
        parse_fail(line_, std::string("unexpected character '") + peek() + "' at column " + std::to_string(pos_ + 1));
      }
      any = true;
    }
    if (!any) parse_fail(line_, "empty term");
    return Polynomial::monomial(p_.generators.size(), e, coefficient);
  }

  long long read_int() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || v > (1LL << 30)) parse_fail(line_, "integer out of range");
    return v;
  }

  std::string read_name() {
    const std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  const RingPresentation& p_;
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPresentation& p, std::string_view text) {
  return PolynomialParser(p, text, 0).parse();
}

RingPresentation parse_presentation(std::string_view text) {
  RingPresentation out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool seen_relation = false;
  bool seen_coefficients = false;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword == "coefficients") {
      std::string ring, extra;
      if (!(words >> ring) || (words >> extra)) parse_fail(line, "expected 'coefficients 2adic' or 'coefficients mod2'");
      if (seen_coefficients) parse_fail(line, "coefficients given twice");
      if (ring == "2adic")
        out.coefficients = CoefficientRing::two_adic;
      else if (ring == "mod2")
        out.coefficients = CoefficientRing::mod2;
      else
        parse_fail(line, "unknown coefficient ring '" + ring + "'");
      seen_coefficients = true;
    } else if (keyword == "gen") {
      std::string name, extra;
      long long degree = 0;
      if (!(words >> name >> degree) || (words >> extra)) parse_fail(line, "expected 'gen <name> <degree>'");
      if (seen_relation) parse_fail(line, "generators must precede relations");
      if (name.empty() || !is_name_start(name[0]) || !std::all_of(name.begin(), name.end(), is_name_char))
        parse_fail(line, "invalid generator name '" + name + "'");
      if (degree < 1 || degree > 1024) parse_fail(line, "generator degree must lie in [1, 1024]");
      for (const auto& g : out.generators)
        if (g.name == name) parse_fail(line, "generator '" + name + "' declared twice");
      out.generators.push_back({name, static_cast<int>(degree)});
    } else if (keyword == "rel") {
      std::string rest;
      std::getline(words, rest);
      Polynomial r = PolynomialParser(out, rest, line).parse();
      if (r.is_zero()) parse_fail(line, "relation is identically zero");
      out.relation_degree(r);
      out.relations.push_back(std::move(r));
      seen_relation = true;
    } else {
      parse_fail(line, "unknown keyword '" + keyword + "'");
    }
  }
  return out;
}

std::string format_presentation(const RingPresentation& p) {
  std::ostringstream os;
  os << "coefficients " << (p.coefficients == CoefficientRing::two_adic ? "2adic" : "mod2") << "\n";
  for (const auto& g : p.generators) os << "gen " << g.name << " " << g.degree << "\n";
  for (const auto& r : p.relations) os << "rel " << p.polynomial_string(r) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Graded ranks

namespace {

void enumerate_monomials(const RingPresentation& p, int degree, std::size_t index, Polynomial::Exponents& current,
                         std::vector<Polynomial::Exponents>& out) {
  if (index == p.generators.size()) {
    if (degree == 0) out.push_back(current);
    return;
  }
  const int g = p.generators[index].degree;
  for (int k = 0; k * g <= degree; ++k) {
    current[index] = k;
    enumerate_monomials(p, degree - k * g, index + 1, current, out);
  }
  current[index] = 0;
}

std::vector<Polynomial::Exponents> monomials_of_degree(const RingPresentation& p, int degree) {
  std::vector<Polynomial::Exponents> out;
  if (degree < 0) return out;
  Polynomial::Exponents current(p.generators.size(), 0);
  enumerate_monomials(p, degree, 0, current, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

Graded2Group graded_ranks(const RingPresentation& p, int max_degree) {
  if (max_degree < 0) throw Error(Errc::invalid_argument, "max_degree must be >= 0");
  for (const auto& g : p.generators)
    if (g.degree < 1) throw Error(Errc::invalid_argument, "generator '" + g.name + "' needs a positive degree");
  std::vector<int> relation_degrees;
  for (const auto& r : p.relations) relation_degrees.push_back(p.relation_degree(r));

  Graded2Group out;
  for (int k = 0; k <= max_degree; ++k) {
    const auto basis = monomials_of_degree(p, k);
    if (basis.empty()) continue;
    std::map<Polynomial::Exponents, Eigen::Index> row_of;
    std::vector<std::string> labels;
    for (const auto& e : basis) {
      row_of.emplace(e, static_cast<Eigen::Index>(labels.size()));
      labels.push_back(p.monomial_string(e));
    }

    std::vector<IntVector> columns;
    const auto rows = static_cast<Eigen::Index>(basis.size());
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
      for (const auto& u : monomials_of_degree(p, k - relation_degrees[r])) {
        IntVector col = IntVector::Zero(rows);
        const Polynomial product = p.relations[r] * Polynomial::monomial(p.generators.size(), u);
        for (const auto& [e, c] : product.terms())
          col(row_of.at(e)) = c;
        columns.push_back(std::move(col));
      }
    }
    if (p.coefficients == CoefficientRing::mod2) {
      for (Eigen::Index i = 0; i < rows; ++i) {
        IntVector col = IntVector::Zero(rows);
        col(i) = 2;
        columns.push_back(std::move(col));
      }
    }

    IntMatrix m(rows, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = columns[j];
    std::vector<std::string> domain_labels;
    for (std::size_t j = 0; j < columns.size(); ++j) domain_labels.push_back("x" + std::to_string(j));
    const GroupHom relations_map(FinAb2Group::free_module(domain_labels), FinAb2Group::free_module(labels), m);
    out.add(k, cokernel(relations_map).group, (k / 2) % 2, false, std::nullopt);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Built-in families

namespace {

RingPresentation make(CoefficientRing ring, std::vector<PresentationGenerator> gens,
                      const std::vector<std::string>& relations) {
  RingPresentation p;
  p.coefficients = ring;
  p.generators = std::move(gens);
  for (const auto& r : relations) {
    Polynomial poly = parse_polynomial(p, r);
    p.relation_degree(poly);
    p.relations.push_back(std::move(poly));
  }
  return p;
}

std::string pw(const std::string& name, int e) { return e == 1 ? name : name + "^" + std::to_string(e); }

}  // namespace

std::vector<std::string> builtin_families() {
  return {"Q3", "Q5", "Q6", "Q7", "norm", "G2_flag_etale", "G2_flag_chow_mod2", "G2_GT_mod2"};
}

RingPresentation builtin_presentation(std::string_view family_in, std::optional<int> param) {
  std::string family(family_in);
  if (family.starts_with("norm(") && family.ends_with(")")) {
    const std::string inner = family.substr(5, family.size() - 6);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), n);
    if (ec != std::errc() || ptr != inner.data() + inner.size() || inner.empty())
      throw Error(Errc::unknown_family, "cannot read the index in '" + family + "'");
    family = "norm";
    param = n;
  }

  const auto two_adic = CoefficientRing::two_adic;
  const auto mod2 = CoefficientRing::mod2;
  // b1 = t1^2 + t1 t2 + t2^2 and b2 = t2^3 expanded by hand.
  const std::string b1 = "t1^2 + t1*t2 + t2^2";
  const std::string b1sq = "t1^4 + 2*t1^3*t2 + 3*t1^2*t2^2 + 2*t1*t2^3 + t2^4";
  const std::string b2sq = "t2^6";
  const std::string b1b2 = "t1^2*t2^3 + t1*t2^4 + t2^5";

  if (family == "Q3") return make(two_adic, {{"h", 2}, {"c1", 4}}, {"h^4", "2*c1", "c1*h", "c1^2"});
  if (family == "Q5") return make(two_adic, {{"h", 2}, {"c1", 4}}, {"h^6", "2*c1", "c1*h^3", "c1^2"});
  if (family == "Q6")
    return make(two_adic, {{"h", 2}, {"c1", 4}, {"c0", 6}},
                {"h^7", "2*c1", "c1*h^4", "c1^2", "h*c0 - h^4", "c0*c1", "c0^2"});
  if (family == "Q7")
    return make(two_adic, {{"h", 2}, {"rhobar4", 4}},
                {"h^8", "2*rhobar4", "h^4*rhobar4", "h*rhobar4^2", "rhobar4^4"});
  if (family == "norm") {
    if (!param) throw Error(Errc::unknown_family, "family norm needs an index n");
    const int n = *param;
    if (n < 2 || n > kMaxRostIndex)
      throw Error(Errc::unknown_family, "family norm needs 2 <= n <= " + std::to_string(kMaxRostIndex));
    return make(two_adic, {{"h", 2}, {"rhobar4", 4}},
                {pw("h", 1 << n), "2*rhobar4", "h*" + pw("rhobar4", 1 << (n - 2)), "rhobar4*" + pw("h", 1 << (n - 1)),
                 pw("rhobar4", 1 << (n - 1))});
  }
  if (family == "G2_flag_etale")
    return make(two_adic, {{"t1", 2}, {"t2", 2}}, {"2*t1^2 + 2*t1*t2 + 2*t2^2", b1sq, b2sq, b1b2});
  if (family == "G2_flag_chow_mod2") return make(mod2, {{"t1", 2}, {"t2", 2}}, {b1sq, b2sq, b1b2});
  if (family == "G2_GT_mod2") return make(mod2, {{"t1", 2}, {"t2", 2}, {"y", 6}}, {b1, "t2^3", "y^2"});
  throw Error(Errc::unknown_family, "unknown presentation family '" + family + "'");
}

PresentationComparison compare_with_assembly(int d) {
  PresentationComparison out;
  out.d = d;
  if (d == 3 || d == 5 || d == 6 || d == 7) {
    out.family = "Q" + std::to_string(d);
  } else if (d >= 1 && ((d + 1) & d) == 0 && d >= 3) {
    const int n = std::bit_width(static_cast<unsigned>(d));
    out.family = "norm(" + std::to_string(n) + ")";
  } else {
    throw Error(Errc::unknown_family, "no built-in presentation for Q^" + std::to_string(d));
  }
  out.presented = graded_ranks(builtin_presentation(out.family), 2 * d);
  out.assembled = assemble_cohomology(d);
  out.diffs = diff_ranks(out.assembled, out.presented, 2 * d);
  out.equal = out.diffs.empty();
  return out;
}

}  // namespace etq
