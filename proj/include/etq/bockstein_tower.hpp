#pragma once

#include <string>
#include <vector>

#include "etq/abelian.hpp"
#include "etq/graded.hpp"

namespace etq {

// Integral and Z/2^s cohomology of the Rost motive M_n, derived from the
// mod-2 model and its Bockstein alone.
//
// Per weight q the cochain complex splits into elementary pieces: a lone
// class (free over the 2-adic integers) or a pair Z --2--> Z joining a
// mod-2 class x to beta(x). Integral cohomology, universal coefficients and
// every coefficient-change map are read off those pieces.

struct BockPair {
  int source = 0;  // degree of x
  int target = 0;  // degree of beta(x) = source + 1
  friend bool operator==(const BockPair&, const BockPair&) = default;
};

struct PairingResult {
  int n = 0;
  int weight = 0;
  std::vector<BockPair> pairs;
  std::vector<int> free_classes;

  /// Integral classes in one degree: the free classes there plus one Z/2 per
  /// pair whose target is that degree.
  FinAb2Group integral(int degree) const;
};

/// Matches rho^a tau^{q-a} with rho^{a+1} tau^{q-a-1} whenever q-a is odd and
/// a+1 <= N; whatever is left over is a free class.
PairingResult pair_weight(int n, int q);

/// 2-local H^{p,q}(M_n; Z) for p <= q + 1; zero in negative degrees.
/// Throws HigherTorsionAmbiguity if the Bockstein homology disagrees with the
/// free-class count, which would mean the pairing misses higher torsion.
FinAb2Group integral_cohomology(int n, int p, int q);

/// H^{p,q}(M_n; Z/2^s) = H^{p,q}(Z) ⊗ Z/2^s ⊕ Tor(H^{p+1,q}(Z), Z/2^s), p <= q.
///
/// The tensor summands come first and keep the integral labels; the Tor
/// summands follow and are labelled ghost(<source monomial>).
FinAb2Group mod_2s_group(int n, int p, int q, int s);

/// Number of leading summands of mod_2s_group(n, p, q, s) that come from the
/// tensor part; the rest are Tor (ghost) summands.
std::size_t tensor_part_size(int n, int p, int q);

struct TransitionMaps {
  GroupHom inclusion;   // t_s : H^{p,q}(Z/2^{s-1}) -> H^{p,q}(Z/2^s), coefficient map x -> 2x
  GroupHom reduction;   // r_s : H^{p,q}(Z/2^s) -> H^{p,q}(Z/2^{s-1})
  GroupHom connecting;  // δ_s : H^{p-1,q}(Z/2) -> H^{p,q}(Z/2^{s-1})
};

/// Maps attached to 0 -> Z/2^{s-1} -> Z/2^s -> Z/2 -> 0 at bidegree (p, q), s >= 2.
TransitionMaps transition_maps(int n, int p, int q, int s);

/// Reduction H^{p,q}(Z/2^s) -> H^{p,q}(Z/2), s >= 1.
GroupHom mod2_reduction(int n, int p, int q, int s);

/// δ_s : H^{p-1,q}(Z/2) -> H^{p,q}(Z/2^{s-1}) for p <= q + 1, s >= 2. At p = q + 1
/// the codomain is the tensor part only, which the model makes zero.
GroupHom connecting_map(int n, int p, int q, int s);

/// Order bookkeeping and composition checks for the long exact sequence
///   H^{p-1}(Z/2) -δ-> H^p(Z/2^{s-1}) -t-> H^p(Z/2^s) -r-> H^p(Z/2) -δ-> H^{p+1}(Z/2^{s-1})
struct LesCheck {
  bool holds = false;
  GroupOrder middle;         // |H^p(Z/2^s)|
  GroupOrder coker_incoming; // |coker(δ into degree p)|
  GroupOrder ker_outgoing;   // |ker(δ out of degree p)|
  std::string detail;
};
LesCheck check_long_exact_sequence(int n, int p, int q, int s);

struct TowerOptions {
  int max_level = 8;
  int window = kDefaultStabilizationWindow;
};

struct Bidegree {
  int p = 0;
  int q = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Bidegree carrying H^c(-; Z_2(c/2)): (c, c) when c/2 is even, (c, c+1) when odd.
Bidegree twisted_bidegree(int c);

/// The tower of groups H^{p,q}(M_n; Z/2^s), s = 1..max_level, with the
/// reduction maps between consecutive levels.
struct CoefficientTower {
  int n = 0;
  Bidegree bidegree;
  std::vector<FinAb2Group> levels;  // levels[s-1] = H^{p,q}(Z/2^s)
  std::vector<GroupHom> reductions; // reductions[s-1] : levels[s] -> levels[s-1]
};
CoefficientTower coefficient_tower(int n, Bidegree b, const TowerOptions& options = {});

/// Inverse limit of the coefficient tower at one bidegree.
FinAb2Group tower_limit(int n, Bidegree b, const TowerOptions& options = {});

/// H^{2*}(M_n; Z/2^s(*)) in even degrees 0..N, with algebraic flags on the
/// reductions of cycle classes.
Graded2Group etale_mod_2s(int n, int s);

/// H^{2*}_et(M_n; Z_2(*)) as the inverse limit over s of etale_mod_2s.
Graded2Group etale_2adic(int n, const TowerOptions& options = {});

}  // namespace etq
