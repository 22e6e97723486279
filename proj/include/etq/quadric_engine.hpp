#pragma once

#include <compare>
#include <string>
#include <vector>

#include "etq/coefficients.hpp"
#include "etq/graded.hpp"
#include "etq/mod2_model.hpp"

namespace etq {

/// Largest quadric dimension whose decomposition stays within kMaxRostIndex.
inline constexpr int kMaxQuadricDimension = (1 << (kMaxRostIndex + 1)) - 2;

/// Validates 1 <= d <= kMaxQuadricDimension, throwing InvalidDimension otherwise.
void require_quadric_dimension(int d);

/// Summand M_n ⊗ T^j; n == 0 stands for the point Spec C.
struct MotiveTerm {
  int n = 0;
  int j = 0;
  friend auto operator<=>(const MotiveTerm&, const MotiveTerm&) = default;
};

/// d + 2 = 2^{n_0+1} - 2^{n_1+1} + ... + (-1)^r 2^{n_r+1} + (-1)^{r+1} residual,
/// n_0 > n_1 > ... > n_r, residual in {0, 1}.
struct AlternatingExpansion {
  std::vector<int> exponents;
  int residual = 0;

  long long reconstruct() const;
};

AlternatingExpansion alternating_expansion(int d);

struct MotiveDecomposition {
  int d = 0;
  std::vector<MotiveTerm> terms;  // in emission order: n descending, j ascending
  AlternatingExpansion expansion;

  /// Each term has complex realization of rank 2.
  int complex_rank() const { return 2 * static_cast<int>(terms.size()); }
  int max_rost_index() const;

  /// "M3 + M2*T1 + M2*T2 + M2*T3"
  std::string to_string() const;
  /// Runs of consecutive twists collapsed: "M3 + M2*T1..T3".
  std::string compact() const;
};

/// Greedy recursion on D = d + 2: pick 2^n < D <= 2^{n+1}, emit
/// M_n ⊗ T^{shift}, ..., M_n ⊗ T^{shift+m-1} with m = D - 2^n, then continue
/// with D' = 2^{n+1} - D and shift + m until D' <= 1.
MotiveDecomposition decompose_motive(int d);

/// Direct sum over the decomposition of the Rost tables, Tate-twisted.
/// Summands carry their source term; algebraic flags come from the tables.
Graded2Group assemble_cohomology(int d, const Coefficients& coefficients = Coefficients::two_adic_integers());

struct NonalgebraicEntry {
  int degree = 0;
  int dimension = 0;      // dim over Z/2 of torsion / algebraic torsion
  int free_quotient = 0;  // rank of free part / algebraic free part
  std::vector<std::string> witnesses;  // "rhobar_4@M3*T0"
};

struct NonalgebraicReport {
  int d = 0;
  std::vector<NonalgebraicEntry> entries;  // every even degree 0..2d

  bool has_nonalgebraic() const;
  /// Degrees with a nonzero quotient, split by degree mod 4. Classes in
  /// degrees 2 mod 4 come from odd Tate twists.
  std::vector<int> degrees_mod4() const;
  std::vector<int> degrees_odd_twist() const;
  const NonalgebraicEntry& at(int degree) const;
};

NonalgebraicReport nonalgebraic_report(int d);

/// Independent predicates for "the 2-adic cohomology of Q^d has a
/// non-algebraic class"; all three must agree.
bool has_nonalgebraic_by_report(int d);
bool has_nonalgebraic_by_terms(int d);
bool has_nonalgebraic_closed_form(int d);

enum class QuadricFamily {
  norm,              // Q^{2^n - 1}, nonzero quotient for 4 <= c <= 2^{n+1} - 12, c = 0 mod 4
  minimal_neighbor,  // Q^{2^n - 1}, nonzero quotient for 0 < c < 2d - 8, c = 0 mod 4
  maximal_neighbor,  // Q^{2^{n+1} - 3}, same range as the minimal neighbor
};

int family_dimension(QuadricFamily family, int n);
std::string to_string(QuadricFamily family);

struct ClaimVerdict {
  std::string claim;
  int d = 0;
  bool pass = false;
  std::vector<int> claimed;   // degrees asserted to carry a non-algebraic class
  std::vector<int> witnessed; // claimed degrees where the report is nonzero
  std::vector<int> missing;   // claimed degrees where it is zero
  std::string detail;
};

/// Subset checks of the claimed degrees against nonalgebraic_report. For
/// the norm family a second verdict checks that the free quotient vanishes.
std::vector<ClaimVerdict> check_theorem_claims(QuadricFamily family, int n);

/// has-nonalgebraic(d) for d in [1, d_max], checked against d >= 7.
ClaimVerdict check_boundary_claim(int d_max);

}  // namespace etq
