#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etq/graded.hpp"
#include "etq/integer.hpp"

namespace etq {

/// Polynomial with integer coefficients in a fixed list of generators.
/// Keys are exponent vectors; zero coefficients are never stored.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(std::size_t variables) : variables_(variables) {}

  static Polynomial monomial(std::size_t variables, Exponents exponents, const Integer& coefficient = Integer(1));

  std::size_t variables() const { return variables_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exponents, const Integer& coefficient);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t variables_ = 0;
  std::map<Exponents, Integer> terms_;
};

enum class CoefficientRing { two_adic, mod2 };

struct PresentationGenerator {
  std::string name;
  int degree = 0;
  friend bool operator==(const PresentationGenerator&, const PresentationGenerator&) = default;
};

/// Commutative graded ring: coefficients[generators] / (relations).
struct RingPresentation {
  CoefficientRing coefficients = CoefficientRing::two_adic;
  std::vector<PresentationGenerator> generators;
  std::vector<Polynomial> relations;

  /// Degree of every term, throwing NonHomogeneousRelation when they differ.
  int relation_degree(const Polynomial& p) const;
  int monomial_degree(const Polynomial::Exponents& e) const;
  std::string monomial_string(const Polynomial::Exponents& e) const;
  std::string polynomial_string(const Polynomial& p) const;
};

/// Reads the presentation text format (grammar in README):
///   coefficients 2adic|mod2
///   gen <name> <degree>
///   rel <polynomial>
/// Throws ParseError with a line number, or NonHomogeneousRelation.
RingPresentation parse_presentation(std::string_view text);
/// Inverse of parse_presentation up to term order and whitespace.
std::string format_presentation(const RingPresentation& p);

/// Parses one polynomial in the generators of p.
Polynomial parse_polynomial(const RingPresentation& p, std::string_view text);

/// Degreewise additive structure in degrees 0..max_degree: the degree-k part
/// is the cokernel of (relation × monomial) products, read off by Smith
/// normal form and localized at 2. Generators are labelled by monomials.
Graded2Group graded_ranks(const RingPresentation& p, int max_degree);

/// Q3, Q5, Q6, Q7, norm (param n >= 2), G2_flag_etale, G2_flag_chow_mod2,
/// G2_GT_mod2. "norm(4)" is accepted as shorthand for family norm, param 4.
/// Throws UnknownFamily.
RingPresentation builtin_presentation(std::string_view family, std::optional<int> param = std::nullopt);
std::vector<std::string> builtin_families();

struct PresentationComparison {
  int d = 0;
  std::string family;
  bool equal = false;
  std::vector<DegreeDiff> diffs;
  Graded2Group presented;
  Graded2Group assembled;
};

/// Graded ranks of the built-in presentation of Q^d against the additive
/// assembly, degrees 0..2d. d in {3, 5, 6, 7} or 2^n - 1; UnknownFamily otherwise.
PresentationComparison compare_with_assembly(int d);

}  // namespace etq
