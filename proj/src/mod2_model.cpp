#include "etq/mod2_model.hpp"

#include <algorithm>

#include "etq/error.hpp"

namespace etq {

void require_rost_index(int n) {
  if (n < 1 || n > kMaxRostIndex)
    throw Error(Errc::invalid_index,
                "Rost index must lie in [1, " + std::to_string(kMaxRostIndex) + "], got " + std::to_string(n));
}

int rost_top_degree(int n) { return (1 << (n + 1)) - 2; }

std::string Monomial::to_string() const {
  if (rho == 0 && tau == 0) return "1";
  std::string out;
  if (rho > 0) out += rho == 1 ? "rho" : "rho^" + std::to_string(rho);
  if (tau > 0) out += tau == 1 ? "tau" : "tau^" + std::to_string(tau);
  return out;
}

RostMod2Model::RostMod2Model(int n) : n_(n) {
  require_rost_index(n);
  top_ = rost_top_degree(n);
}

int RostMod2Model::dimension(int p, int q) const { return basis(p, q) ? 1 : 0; }

std::optional<Monomial> RostMod2Model::basis(int p, int q) const {
  if (p > q)
    throw Error(Errc::out_of_region, "bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                                         ") lies outside the region p <= q");
  if (p < 0 || p > std::min(q, top_)) return std::nullopt;
  return Monomial{p, q - p};
}

std::optional<Monomial> bockstein(const Monomial& m, int n) {
  const int top = rost_top_degree(n);
  if (m.tau % 2 == 0 || m.rho + 1 > top) return std::nullopt;
  return Monomial{m.rho + 1, m.tau - 1};
}

Mod2EtaleRing rost_etale_mod2(int n) {
  require_rost_index(n);
  Mod2EtaleRing ring{n, {}, {}};
  for (int c = 0; c <= rost_top_degree(n); ++c) {
    ring.degrees.push_back(c);
    ring.labels.push_back(Monomial{c, 0}.to_string());
  }
  return ring;
}

std::vector<Mod2CycleClass> cycle_image_mod2(int n) {
  require_rost_index(n);
  std::vector<Mod2CycleClass> out{{"1", 0, 0, 0}};
  for (int i = n - 1; i >= 0; --i) {
    const int degree = (1 << (n + 1)) - (1 << (i + 1));
    const int weight = (1 << n) - (1 << i);
    out.push_back({"c" + std::to_string(i), degree, weight, weight - degree});
  }
  return out;
}

std::vector<int> cycle_image_mod2_degrees(int n) {
  std::vector<int> out;
  for (const auto& c : cycle_image_mod2(n)) out.push_back(c.degree);
  return out;
}

std::vector<int> nonalgebraic_mod2_degrees(int n, Mod2Range range) {
  require_rost_index(n);
  const auto algebraic = cycle_image_mod2_degrees(n);
  const int hi = rost_top_degree(n) - (range == Mod2Range::quadric ? 1 : 0);
  std::vector<int> out;
  for (int c = 1; c <= hi; ++c)
    if (std::find(algebraic.begin(), algebraic.end(), c) == algebraic.end()) out.push_back(c);
  return out;
}

}  // namespace etq
