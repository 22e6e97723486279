#pragma once

#include <optional>
#include <string>
#include <vector>

namespace etq {

/// Largest Rost index accepted by the table generators.
inline constexpr int kMaxRostIndex = 10;

/// Validates 1 <= n <= kMaxRostIndex, throwing InvalidIndex otherwise.
void require_rost_index(int n);

/// Top rho-exponent 2^{n+1} - 2 of the Rost motive M_n.
int rost_top_degree(int n);

/// rho^a tau^b: cohomological degree a, weight a + b.
struct Monomial {
  int rho = 0;
  int tau = 0;

  int degree() const { return rho; }
  int weight() const { return rho + tau; }
  std::string to_string() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Bigraded mod-2 motivic cohomology of M_n in the range degree <= weight:
/// Z/2[tau]{1, rho, ..., rho^N}. One basis monomial per bidegree (p, q)
/// with 0 <= p <= min(q, N).
class RostMod2Model {
 public:
  explicit RostMod2Model(int n);

  int n() const { return n_; }
  int top() const { return top_; }

  bool contains(const Monomial& m) const { return m.rho >= 0 && m.tau >= 0 && m.rho <= top_; }
  /// Throws OutOfRegion for p > q.
  int dimension(int p, int q) const;
  /// Throws OutOfRegion for p > q.
  std::optional<Monomial> basis(int p, int q) const;

 private:
  int n_;
  int top_;
};

/// Bockstein as a derivation with beta(tau) = rho: rho^a tau^b -> b rho^{a+1} tau^{b-1}
/// over F_2, and zero once rho^{N+1} = 0 truncates.
std::optional<Monomial> bockstein(const Monomial& m, int n);

/// Mod-2 etale ring Z/2[rho]/(rho^{N+1}): one class per degree 0..N.
struct Mod2EtaleRing {
  int n = 0;
  std::vector<int> degrees;
  std::vector<std::string> labels;
};
Mod2EtaleRing rost_etale_mod2(int n);

/// Mod-2 cycle class of a Chow generator. c_i sits in etale degree
/// 2^{n+1} - 2^{i+1} with Chow weight 2^n - 2^i and tau-exponent -2^n + 2^i.
struct Mod2CycleClass {
  std::string chow_label;  // "1" or "c<i>"
  int degree = 0;
  int chow_weight = 0;
  int tau_exponent = 0;
};

/// Degree-0 unit first, then c_{n-1}, ..., c_0 in increasing degree.
std::vector<Mod2CycleClass> cycle_image_mod2(int n);
std::vector<int> cycle_image_mod2_degrees(int n);

enum class Mod2Range {
  motive,   // 1 <= c <= 2^{n+1} - 2, rho^c in the Rost motive itself
  quadric,  // 1 <= c <= 2^{n+1} - 3, as seen inside the norm quadric
};

/// Degrees c in the range whose class rho^c is not a cycle class.
std::vector<int> nonalgebraic_mod2_degrees(int n, Mod2Range range = Mod2Range::motive);

}  // namespace etq
