#include "etq/bockstein_tower.hpp"

#include <algorithm>

#include "etq/error.hpp"
#include "etq/mod2_model.hpp"

namespace etq {

namespace {

std::string bidegree_string(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

void require_level(int s, int minimum) {
  if (s < minimum)
    throw Error(Errc::invalid_argument,
                "coefficient level s must be >= " + std::to_string(minimum) + ", got " + std::to_string(s));
}

std::string free_label(int degree, int top) {
  if (degree == 0) return "1";
  if (degree == top) return "pi";
  return "free_" + std::to_string(degree);
}

// Cross-check of the pairing against the Bockstein itself: in every degree
// the mod-2 Bockstein homology must equal the number of free classes, or the
// spectral sequence has a higher differential the pairing cannot see.
void check_degeneration(const PairingResult& pr) {
  const int top = rost_top_degree(pr.n);
  const int hi = std::min(pr.weight, top);
  for (int a = 0; a <= hi; ++a) {
    const Monomial x{a, pr.weight - a};
    const int cycles = bockstein(x, pr.n) ? 0 : 1;
    int boundaries = 0;
    if (a >= 1) {
      const auto image = bockstein(Monomial{a - 1, pr.weight - a + 1}, pr.n);
      if (image && *image == x) boundaries = 1;
    }
    const int free_here = static_cast<int>(std::count(pr.free_classes.begin(), pr.free_classes.end(), a));
    if (cycles - boundaries != free_here)
      throw Error(Errc::higher_torsion_ambiguity,
                  "Bockstein homology at " + bidegree_string(a, pr.weight) + " is " +
                      std::to_string(cycles - boundaries) + " but the pairing leaves " + std::to_string(free_here) +
                      " free classes");
  }
}

// One summand of H^{p,q}(Z/2^s) together with the integral summand it comes from.
struct UctEntry {
  Integer integral_order;  // order of the integral summand (0 = free)
  Integer order;           // order at this level
  std::string label;
  bool ghost = false;
};

Integer level_order(const Integer& integral_order, int s) {
  const Integer cap = pow2(s);
  if (integral_order.is_zero()) return cap;
  return integral_order < cap ? integral_order : cap;
}

std::vector<UctEntry> uct_entries(int n, int p, int q, int s) {
  std::vector<UctEntry> out;
  const FinAb2Group here = integral_cohomology(n, p, q);
  const FinAb2Group above = integral_cohomology(n, p + 1, q);
  for (const auto& c : here.summands()) out.push_back({c.order, level_order(c.order, s), c.label, false});
  for (const auto& c : above.summands()) {
    if (c.is_free()) continue;
    out.push_back({c.order, level_order(c.order, s), "ghost(" + Monomial{p, q - p}.to_string() + ")", true});
  }
  return out;
}

FinAb2Group group_of(const std::vector<UctEntry>& entries) {
  std::vector<CyclicSummand> summands;
  summands.reserve(entries.size());
  for (const auto& e : entries) summands.push_back({e.order, e.label});
  return FinAb2Group(std::move(summands));
}

// Diagonal hom between two entry lists of the same shape.
template <typename Coefficient>
GroupHom diagonal_hom(const std::vector<UctEntry>& from, const std::vector<UctEntry>& to, Coefficient coefficient) {
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
  for (std::size_t i = 0; i < from.size(); ++i)
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = coefficient(from[i], to[i]);
  return GroupHom(group_of(from), group_of(to), std::move(m));
}

bool is_even(int x) { return x % 2 == 0; }

}  // namespace

FinAb2Group PairingResult::integral(int degree) const {
  const int top = rost_top_degree(n);
  std::vector<CyclicSummand> out;
  for (int a : free_classes)
    if (a == degree) out.push_back({Integer(0), free_label(a, top)});
  for (const auto& pr : pairs)
    if (pr.target == degree) out.push_back({Integer(2), "rhobar_" + std::to_string(pr.target)});
  return FinAb2Group(std::move(out));
}

PairingResult pair_weight(int n, int q) {
  require_rost_index(n);
  if (q < 0) throw Error(Errc::invalid_argument, "weight must be non-negative, got " + std::to_string(q));
  const int top = rost_top_degree(n);
  const int hi = std::min(q, top);
  PairingResult out{n, q, {}, {}};
  std::vector<bool> used(static_cast<std::size_t>(hi + 1), false);
  for (int a = 0; a <= hi; ++a) {
    if (used[static_cast<std::size_t>(a)]) continue;
    if (!is_even(q - a) && a + 1 <= top) {
      out.pairs.push_back({a, a + 1});
      used[static_cast<std::size_t>(a + 1)] = true;
    } else {
      out.free_classes.push_back(a);
    }
  }
  return out;
}

FinAb2Group integral_cohomology(int n, int p, int q) {
  require_rost_index(n);
  if (p > q + 1)
    throw Error(Errc::out_of_region, "bidegree " + bidegree_string(p, q) + " lies outside the region p <= q + 1");
  if (p < 0 || q < 0) return {};
  const PairingResult pr = pair_weight(n, q);
  check_degeneration(pr);
  return pr.integral(p);
}

FinAb2Group mod_2s_group(int n, int p, int q, int s) {
  require_rost_index(n);
  require_level(s, 1);
  if (p > q)
    throw Error(Errc::out_of_region, "bidegree " + bidegree_string(p, q) + " lies outside the region p <= q");
  return group_of(uct_entries(n, p, q, s));
}

std::size_t tensor_part_size(int n, int p, int q) { return integral_cohomology(n, p, q).generator_count(); }

GroupHom connecting_map(int n, int p, int q, int s) {
  require_rost_index(n);
  require_level(s, 2);
  if (p > q + 1)
    throw Error(Errc::out_of_region, "bidegree " + bidegree_string(p, q) + " lies outside the region p <= q + 1");
  const FinAb2Group domain = mod_2s_group(n, p - 1, q, 1);
  const std::size_t domain_tensor = tensor_part_size(n, p - 1, q);

  // Codomain: H^{p,q}(Z/2^{s-1}); at p = q + 1 only its tensor part is in range.
  const FinAb2Group integral = integral_cohomology(n, p, q);
  const FinAb2Group codomain = p <= q ? mod_2s_group(n, p, q, s - 1) : [&] {
    std::vector<CyclicSummand> t;
    for (const auto& c : integral.summands()) t.push_back({level_order(c.order, s - 1), c.label});
    return FinAb2Group(std::move(t));
  }();

  // The Tor generator of an integral summand of order o lands on o/2 times the
  // matching tensor generator; the tensor part of the domain dies.
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(codomain.generator_count()),
                                static_cast<Eigen::Index>(domain.generator_count()));
  std::size_t col = domain_tensor;
  for (std::size_t k = 0; k < integral.generator_count(); ++k) {
    if (integral[k].is_free()) continue;
    m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(col)) = integral[k].order / Integer(2);
    ++col;
  }
  return GroupHom(domain, codomain, std::move(m));
}

TransitionMaps transition_maps(int n, int p, int q, int s) {
  require_rost_index(n);
  require_level(s, 2);
  if (p > q)
    throw Error(Errc::out_of_region, "bidegree " + bidegree_string(p, q) + " lies outside the region p <= q");
  const auto lower = uct_entries(n, p, q, s - 1);
  const auto upper = uct_entries(n, p, q, s);

  GroupHom inclusion = diagonal_hom(lower, upper, [](const UctEntry& from, const UctEntry& to) {
    return from.ghost ? Integer(to.order / from.order) : Integer(2);
  });
  GroupHom reduction = diagonal_hom(upper, lower, [](const UctEntry& from, const UctEntry& to) {
    return from.ghost ? Integer(Integer(2) * to.order / from.order) : Integer(1);
  });
  return {std::move(inclusion), std::move(reduction), connecting_map(n, p, q, s)};
}

GroupHom mod2_reduction(int n, int p, int q, int s) {
  require_rost_index(n);
  require_level(s, 1);
  if (p > q)
    throw Error(Errc::out_of_region, "bidegree " + bidegree_string(p, q) + " lies outside the region p <= q");
  const auto from = uct_entries(n, p, q, s);
  const auto to = uct_entries(n, p, q, 1);
  return diagonal_hom(from, to, [s](const UctEntry& a, const UctEntry&) {
    return a.ghost ? mod(pow2(s) / a.order, Integer(2)) : Integer(1);
  });
}

LesCheck check_long_exact_sequence(int n, int p, int q, int s) {
  const GroupHom incoming = connecting_map(n, p, q, s);
  const GroupHom outgoing = connecting_map(n, p + 1, q, s);
  const TransitionMaps maps = transition_maps(n, p, q, s);
  const GroupHom to_mod2 = mod2_reduction(n, p, q, s);

  LesCheck out;
  out.middle = maps.inclusion.codomain().order();
  out.coker_incoming = cokernel(incoming).group.order();
  out.ker_outgoing = kernel(outgoing).group.order();

  std::vector<std::string> problems;
  if (!(out.middle == out.coker_incoming * out.ker_outgoing))
    problems.push_back("order " + out.middle.to_string() + " != " + out.coker_incoming.to_string() + " * " +
                       out.ker_outgoing.to_string());
  if (!compose(maps.inclusion, incoming).is_zero()) problems.push_back("t o delta != 0");
  if (!compose(to_mod2, maps.inclusion).is_zero()) problems.push_back("rho o t != 0");
  if (!compose(outgoing, to_mod2).is_zero()) problems.push_back("delta o rho != 0");
  if (!(image(maps.inclusion).group.order() == out.coker_incoming)) problems.push_back("inexact at H(Z/2^{s-1})");
  if (!(kernel(to_mod2).group.order() == image(maps.inclusion).group.order()))
    problems.push_back("inexact at H(Z/2^s)");
  if (!(image(to_mod2).group.order() == out.ker_outgoing)) problems.push_back("inexact at H(Z/2)");

  out.holds = problems.empty();
  for (std::size_t i = 0; i < problems.size(); ++i) out.detail += (i ? "; " : "") + problems[i];
  return out;
}

Bidegree twisted_bidegree(int c) {
  if (c < 0 || c % 2 != 0)
    throw Error(Errc::invalid_argument, "twisted bidegree needs an even degree >= 0, got " + std::to_string(c));
  return {c, (c / 2) % 2 == 0 ? c : c + 1};
}

CoefficientTower coefficient_tower(int n, Bidegree b, const TowerOptions& options) {
  require_level(options.max_level, 1);
  CoefficientTower out{n, b, {}, {}};
  for (int s = 1; s <= options.max_level; ++s) {
    out.levels.push_back(mod_2s_group(n, b.p, b.q, s));
    if (s >= 2) out.reductions.push_back(transition_maps(n, b.p, b.q, s).reduction);
  }
  return out;
}

FinAb2Group tower_limit(int n, Bidegree b, const TowerOptions& options) {
  const CoefficientTower tower = coefficient_tower(n, b, options);
  return inverse_limit(tower.levels, tower.reductions, options.window);
}

Graded2Group etale_mod_2s(int n, int s) {
  require_rost_index(n);
  const auto algebraic = cycle_image_mod2_degrees(n);
  Graded2Group out;
  for (int c = 0; c <= rost_top_degree(n); c += 2) {
    const Bidegree b = twisted_bidegree(c);
    const FinAb2Group g = mod_2s_group(n, b.p, b.q, s);
    const std::size_t tensor = tensor_part_size(n, b.p, b.q);
    const bool cycle = std::find(algebraic.begin(), algebraic.end(), c) != algebraic.end();
    for (std::size_t i = 0; i < g.generator_count(); ++i)
      out.add(c, GradedSummand{g[i].order, g[i].label, (c / 2) % 2, cycle && i < tensor, SourceTerm{n, 0}});
  }
  return out;
}

Graded2Group etale_2adic(int n, const TowerOptions& options) {
  require_rost_index(n);
  const auto algebraic = cycle_image_mod2_degrees(n);
  Graded2Group out;
  for (int c = 0; c <= rost_top_degree(n); c += 2) {
    const bool cycle = std::find(algebraic.begin(), algebraic.end(), c) != algebraic.end();
    out.add(c, tower_limit(n, twisted_bidegree(c), options), (c / 2) % 2, cycle, SourceTerm{n, 0});
  }
  return out;
}

}  // namespace etq
