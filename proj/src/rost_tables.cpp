#include "etq/rost_tables.hpp"

#include <algorithm>

#include "etq/bockstein_tower.hpp"
#include "etq/error.hpp"
#include "etq/mod2_model.hpp"

namespace etq {

namespace {

// Degrees 2^{n+1} - 2^{i+1}, 1 <= i <= n-1, ascending.
std::vector<int> chow_torsion_degrees(int n) {
  std::vector<int> out;
  for (int i = n - 1; i >= 1; --i) out.push_back((1 << (n + 1)) - (1 << (i + 1)));
  return out;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

FinAb2Group table_group(const RostTable& t) {
  std::vector<CyclicSummand> s;
  for (const auto& g : t.generators) s.push_back({g.order, g.label});
  return FinAb2Group(std::move(s));
}

}  // namespace

Graded2Group RostTable::graded() const {
  Graded2Group out;
  for (const auto& g : generators) out.add(g.degree, {g.order, g.label, g.twist, g.algebraic, SourceTerm{n, 0}});
  return out;
}

Graded2Group chow_ring(int n) {
  require_rost_index(n);
  Graded2Group out;
  const SourceTerm src{n, 0};
  out.add(0, {Integer(0), "1", 0, true, src});
  for (int i = n - 1; i >= 1; --i)
    out.add((1 << (n + 1)) - (1 << (i + 1)), {Integer(2), "c" + std::to_string(i), 0, true, src});
  out.add(rost_top_degree(n), {Integer(0), "c0", 0, true, src});
  return out;
}

RostTable rost_etale_table(int n) {
  require_rost_index(n);
  const int top = rost_top_degree(n);
  const auto algebraic = chow_torsion_degrees(n);
  RostTable t{n, {}};
  t.generators.push_back({"1", 0, Integer(0), 0, true});
  for (int c = 4; c <= top - 2; c += 4)
    t.generators.push_back({"rhobar_" + std::to_string(c), c, Integer(2), 0, contains(algebraic, c)});
  t.generators.push_back({"pi", top, Integer(0), (top / 2) % 2, true});
  return t;
}

CycleImage cycle_image_2adic(int n) {
  const RostTable t = rost_etale_table(n);
  CycleImage out;
  for (const auto& g : t.generators) {
    if (!g.algebraic) continue;
    if (g.order.is_zero()) {
      out.free.push_back(g);
    } else {
      out.torsion.push_back(g);
      out.torsion_degrees.push_back(g.degree);
    }
  }
  return out;
}

std::vector<int> nonalgebraic_quotient(int n) {
  std::vector<int> out;
  for (const auto& g : rost_etale_table(n).generators)
    if (!g.algebraic) out.push_back(g.degree);
  return out;
}

std::optional<std::string> rhobar4_power(int n, int m) {
  const RostMod2Model model(n);
  if (m < 1) throw Error(Errc::invalid_argument, "power must be >= 1, got " + std::to_string(m));
  // rho^4 multiplies within the truncated polynomial ring; rho^{4m} = 0 past the top.
  if (!model.contains(Monomial{4 * m, 0})) return std::nullopt;
  return "rhobar_" + std::to_string(4 * m);
}

ComplexRealization complex_realization(int n) {
  require_rost_index(n);
  ComplexRealization out;
  out.y_degree = rost_top_degree(n);
  out.singular = FinAb2Group::free_module({"1", "y"});

  const Graded2Group chow_graded = chow_ring(n);
  std::vector<CyclicSummand> chow;
  for (const auto& [deg, list] : chow_graded.degrees())
    for (const auto& s : list) chow.push_back({s.order, s.label});
  const FinAb2Group chow_group(std::move(chow));
  IntMatrix cm = IntMatrix::Zero(2, static_cast<Eigen::Index>(chow_group.generator_count()));
  for (std::size_t i = 0; i < chow_group.generator_count(); ++i) {
    const auto col = static_cast<Eigen::Index>(i);
    if (chow_group[i].label == "1") cm(0, col) = 1;
    if (chow_group[i].label == "c0") cm(1, col) = 2;
  }
  out.chow_restriction = GroupHom(chow_group, out.singular, cm);

  const RostTable table = rost_etale_table(n);
  const FinAb2Group etale = table_group(table);
  IntMatrix em = IntMatrix::Zero(2, static_cast<Eigen::Index>(etale.generator_count()));
  for (std::size_t i = 0; i < etale.generator_count(); ++i) {
    const auto col = static_cast<Eigen::Index>(i);
    if (etale[i].label == "1") em(0, col) = 1;
    if (etale[i].label == "pi") em(1, col) = 2;
  }
  out.etale_restriction = GroupHom(etale, out.singular, em);

  const FinAb2Group singular_mod2({{Integer(2), "1"}, {Integer(2), "y"}});
  const GroupHom reduce(out.singular, singular_mod2, IntMatrix::Identity(2, 2));
  out.mod2_image = image(compose(reduce, out.chow_restriction)).group;

  out.rational_rank = chow_group.free_rank();
  for (const auto& s : chow_group.summands())
    if (s.is_free()) out.rational_basis.push_back(s.label);
  return out;
}

Graded2Group rost_cohomology(int n, const Coefficients& coefficients) {
  switch (coefficients.kind) {
    case Coefficients::Kind::two_adic: return rost_etale_table(n).graded();
    case Coefficients::Kind::mod2s: return etale_mod_2s(n, coefficients.s);
    case Coefficients::Kind::mod2: {
      const Mod2EtaleRing ring = rost_etale_mod2(n);
      const auto algebraic = cycle_image_mod2_degrees(n);
      Graded2Group out;
      for (std::size_t i = 0; i < ring.degrees.size(); ++i) {
        const int c = ring.degrees[i];
        out.add(c, {Integer(2), ring.labels[i], 0, contains(algebraic, c), SourceTerm{n, 0}});
      }
      return out;
    }
  }
  return {};
}

}  // namespace etq
