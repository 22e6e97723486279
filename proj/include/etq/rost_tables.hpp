#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etq/abelian.hpp"
#include "etq/coefficients.hpp"
#include "etq/graded.hpp"

namespace etq {

// Closed-form tables for the Rost motive M_n, independent of the Bockstein
// tower. Both must agree summand by summand.

struct RostGenerator {
  std::string label;
  int degree = 0;
  Integer order;  // 0 = free
  int twist = 0;
  bool algebraic = false;
  friend bool operator==(const RostGenerator&, const RostGenerator&) = default;
};

/// H^{2*}_et(M_n; Z_2(*)) = Z_2{1, pi} + Z/2{rhobar_4, rhobar_8, ..., rhobar_{N-2}}.
/// Generators in increasing degree.
struct RostTable {
  int n = 0;
  std::vector<RostGenerator> generators;

  /// Every generator tagged with source term (n, 0).
  Graded2Group graded() const;
};

/// CH^*(M_n) = Z{1, c_0} + Z/2{c_1, ..., c_{n-1}}, c_i in degree 2^{n+1} - 2^{i+1}.
/// Chow classes are untwisted and algebraic by definition.
Graded2Group chow_ring(int n);

RostTable rost_etale_table(int n);

/// Algebraic part of the 2-adic table: 1, pi and rhobar_c for each Chow
/// torsion degree c.
struct CycleImage {
  std::vector<RostGenerator> free;
  std::vector<RostGenerator> torsion;
  std::vector<int> torsion_degrees;
};
CycleImage cycle_image_2adic(int n);

/// Degrees 4m whose rhobar_{4m} is not a cycle class.
std::vector<int> nonalgebraic_quotient(int n);

/// rhobar_4^m in the ring Z/2[rhobar_4]^+: the label rhobar_{4m}, or nullopt
/// once the power vanishes. Evaluated through the mod-2 reduction rho^{4m},
/// which is injective on the torsion.
std::optional<std::string> rhobar4_power(int n, int m);

struct ComplexRealization {
  FinAb2Group singular;         // H^*(M_n(C); Z) = Z{1, y}, 2-locally
  int y_degree = 0;
  GroupHom chow_restriction;    // CH^*(M_n) -> H^*(M_n(C)): 1 -> 1, c_0 -> 2y, torsion -> 0
  GroupHom etale_restriction;   // 2-adic table -> H^*(M_n(C)): 1 -> 1, pi -> 2y, rhobar -> 0
  FinAb2Group mod2_image;       // image of the restriction after reduction mod 2
  int rational_rank = 0;        // rank of CH^*(M_n) ⊗ Q
  std::vector<std::string> rational_basis;
};
ComplexRealization complex_realization(int n);

/// H^*(M_n) with the given coefficients. mod2 lists every degree 0..N with
/// classes rho^c; mod2s and 2adic list the even degrees of H^{2*}(-; (*)).
Graded2Group rost_cohomology(int n, const Coefficients& coefficients);

}  // namespace etq
