#include <doctest.h>

#include <map>
#include <set>

#include "etq/coefficients.hpp"
#include "etq/error.hpp"
#include "etq/quadric_engine.hpp"
#include "etq/rost_tables.hpp"
#include "oracles.hpp"

using etq::Integer;

namespace {

int top_of(int n) { return (1 << (n + 1)) - 2; }

struct Row {
  int degree;
  long long order;
  std::string label;
  bool algebraic;
  friend bool operator<(const Row& a, const Row& b) {
    return std::tie(a.degree, a.order, a.label, a.algebraic) < std::tie(b.degree, b.order, b.label, b.algebraic);
  }
  friend bool operator==(const Row&, const Row&) = default;
};

std::set<Row> rows_of(const etq::RostTable& t) {
  std::set<Row> out;
  for (const auto& g : t.generators) out.insert({g.degree, g.order.to_int64(), g.label, g.algebraic});
  return out;
}

// Chow torsion of M_n sits in degrees 2^{n+1} - 2^{i+1}, i = 1..n-1.
std::set<int> chow_torsion_degrees(int n) {
  std::set<int> out;
  for (int i = 1; i <= n - 1; ++i) out.insert((1 << (n + 1)) - (1 << (i + 1)));
  return out;
}

// Non-algebraic dimension per degree for a list of motive terms: each M_n * T^j
// contributes rhobar_{4m} in degree 4m + 2j unless 4m is a Chow torsion degree.
std::map<int, int> nonalgebraic_oracle(const std::vector<etq::MotiveTerm>& terms) {
  std::map<int, int> out;
  for (const auto& t : terms) {
    if (t.n == 0) continue;
    const auto chow = chow_torsion_degrees(t.n);
    for (int c = 4; c < top_of(t.n); c += 4)
      if (!chow.count(c)) ++out[c + 2 * t.j];
  }
  return out;
}

}  // namespace

TEST_SUITE("rost_tables") {
  TEST_CASE("2-adic etale table of M_2 and M_3") {
    const std::set<Row> m2{{0, 0, "1", true}, {4, 2, "rhobar_4", true}, {6, 0, "pi", true}};
    CHECK(rows_of(etq::rost_etale_table(2)) == m2);
    const std::set<Row> m3{{0, 0, "1", true},
                           {4, 2, "rhobar_4", false},
                           {8, 2, "rhobar_8", true},
                           {12, 2, "rhobar_12", true},
                           {14, 0, "pi", true}};
    CHECK(rows_of(etq::rost_etale_table(3)) == m3);
  }

  TEST_CASE("twists: pi is odd, rhobar classes even") {
    for (int n = 1; n <= 6; ++n)
      for (const auto& g : etq::rost_etale_table(n).generators) CHECK(g.twist == (g.label == "pi" ? 1 : 0));
  }

  TEST_CASE("Chow ring of M_3") {
    const auto ch = etq::chow_ring(3);
    CHECK(ch.free_rank(0) == 1);
    CHECK(ch.free_rank(14) == 1);
    CHECK(ch.torsion_orders(8) == std::vector<Integer>{2});
    CHECK(ch.torsion_orders(12) == std::vector<Integer>{2});
    CHECK(ch.total_torsion_count() == 2);
  }

  TEST_CASE("property: quotient by the cycle image is rhobar_{4m} off the Chow degrees") {
    for (int n = 1; n <= etq::kMaxRostIndex; ++n) {
      const auto chow = chow_torsion_degrees(n);
      std::vector<int> expected;
      for (int c = 4; c < top_of(n); c += 4)
        if (!chow.count(c)) expected.push_back(c);
      CHECK(etq::nonalgebraic_quotient(n) == expected);
      const auto img = etq::cycle_image_2adic(n);
      CHECK(img.free.size() == 2);
      CHECK(std::set<int>(img.torsion_degrees.begin(), img.torsion_degrees.end()) == chow);
    }
  }

  TEST_CASE("rhobar_4 powers") {
    CHECK(etq::rhobar4_power(3, 2) == std::optional<std::string>("rhobar_8"));
    CHECK(etq::rhobar4_power(3, 3) == std::optional<std::string>("rhobar_12"));
    CHECK_FALSE(etq::rhobar4_power(3, 4));
    CHECK_THROWS_AS(etq::rhobar4_power(3, 0), etq::Error);
  }

  TEST_CASE("complex realization") {
    const auto cr = etq::complex_realization(3);
    CHECK(cr.y_degree == 14);
    CHECK(cr.singular.free_rank() == 2);
    CHECK(cr.rational_rank == 2);
    CHECK(cr.mod2_image.to_string() == "Z/2{1}");
  }

  TEST_CASE("coefficient variants of M_2") {
    const auto mod2 = etq::rost_cohomology(2, etq::Coefficients::mod_two());
    for (int c = 0; c <= 6; ++c) CHECK(mod2.torsion_orders(c) == std::vector<Integer>{2});
    CHECK(mod2.at(4)[0].algebraic);
    CHECK_FALSE(mod2.at(2)[0].algebraic);
    const auto z4 = etq::rost_cohomology(2, etq::Coefficients::mod_power(2));
    CHECK(z4.torsion_orders(0) == std::vector<Integer>{4});
    CHECK(z4.torsion_orders(6) == std::vector<Integer>{4});
    const auto adic = etq::rost_cohomology(2, etq::Coefficients::two_adic_integers());
    CHECK(adic.free_rank(0) == 1);
    CHECK(adic.free_rank(6) == 1);
  }

  TEST_CASE("coefficient parsing") {
    CHECK(etq::Coefficients::parse("mod2") == etq::Coefficients::mod_two());
    CHECK(etq::Coefficients::parse("mod2s:5") == etq::Coefficients::mod_power(5));
    CHECK(etq::Coefficients::parse("2adic") == etq::Coefficients::two_adic_integers());
    CHECK(etq::Coefficients::mod_power(5).to_string() == "mod2s:5");
    for (const char* bad : {"mod3", "mod2s:", "mod2s:0", "mod2s:63", "mod2s:x", "2-adic", ""})
      CHECK_THROWS_AS(etq::Coefficients::parse(bad), etq::Error);
  }
}

TEST_SUITE("quadric_engine") {
  TEST_CASE("decomposition fixtures") {
    CHECK(etq::decompose_motive(7).to_string() == "M3 + M2*T1 + M2*T2 + M2*T3");
    CHECK(etq::decompose_motive(6).compact() == "M2*T0..T3");
    CHECK(etq::decompose_motive(1).to_string() == "M1");
    CHECK(etq::decompose_motive(4).to_string() == "M2 + M2*T1 + M0*T2");
    const auto m = etq::decompose_motive(7);
    CHECK(m.expansion.exponents == std::vector<int>{3, 2});
    CHECK(m.expansion.residual == 1);
    CHECK(m.max_rost_index() == 3);
  }

  TEST_CASE("dimension bounds") {
    CHECK_THROWS_AS(etq::decompose_motive(0), etq::Error);
    CHECK_THROWS_AS(etq::decompose_motive(-3), etq::Error);
    CHECK_THROWS_AS(etq::decompose_motive(etq::kMaxQuadricDimension + 1), etq::Error);
    CHECK_NOTHROW(etq::decompose_motive(etq::kMaxQuadricDimension));
  }

  TEST_CASE("property: realized term degrees reproduce the Betti numbers of the complex quadric") {
    for (int d = 1; d <= 600; ++d) {
      const auto m = etq::decompose_motive(d);
      std::multiset<int> degrees;
      for (const auto& t : m.terms) {
        degrees.insert(2 * t.j);
        degrees.insert(2 * t.j + top_of(t.n));
      }
      CAPTURE(d);
      CHECK(degrees == oracle::quadric_betti_degrees(d));
      CHECK(m.complex_rank() == static_cast<int>(degrees.size()));
      CHECK(m.expansion.reconstruct() == d + 2);
      CHECK(std::is_sorted(m.terms.begin(), m.terms.end(), [](const auto& a, const auto& b) {
        return a.n != b.n ? a.n > b.n : a.j < b.j;
      }));
    }
  }

  TEST_CASE("property: assembled 2-adic cohomology is the sum of twisted Rost tables") {
    for (int d : {3, 4, 5, 6, 7, 9, 12, 15, 22}) {
      const auto h = etq::assemble_cohomology(d);
      std::map<int, std::pair<int, int>> expected;  // degree -> (free, torsion)
      for (const auto& t : etq::decompose_motive(d).terms) {
        if (t.n == 0) {
          ++expected[2 * t.j].first;
          continue;
        }
        for (const auto& g : etq::rost_etale_table(t.n).generators) {
          auto& e = expected[g.degree + 2 * t.j];
          (g.order.is_zero() ? e.first : e.second)++;
        }
      }
      for (const auto& [deg, counts] : expected) {
        CAPTURE(d);
        CAPTURE(deg);
        CHECK(h.free_rank(deg) == counts.first);
        CHECK(static_cast<int>(h.torsion_orders(deg).size()) == counts.second);
      }
      CHECK(h.degrees().size() == expected.size());
    }
  }

  TEST_CASE("Q^7 additive table") {
    const auto h = etq::assemble_cohomology(7);
    const std::vector<std::pair<int, int>> free_torsion{{1, 0}, {1, 0}, {1, 1}, {1, 1}, {1, 2}, {1, 1}, {1, 1}, {1, 0}};
    for (int k = 0; k <= 7; ++k) {
      CAPTURE(k);
      CHECK(h.free_rank(2 * k) == free_torsion[static_cast<std::size_t>(k)].first);
      CHECK(static_cast<int>(h.torsion_orders(2 * k).size()) == free_torsion[static_cast<std::size_t>(k)].second);
    }
  }

  TEST_CASE("property: non-algebraic report agrees with the per-term oracle") {
    for (int d = 1; d <= 80; ++d) {
      const auto r = etq::nonalgebraic_report(d);
      const auto expected = nonalgebraic_oracle(etq::decompose_motive(d).terms);
      CAPTURE(d);
      CHECK(r.entries.size() == static_cast<std::size_t>(d + 1));
      for (const auto& e : r.entries) {
        const auto it = expected.find(e.degree);
        CHECK(e.dimension == (it == expected.end() ? 0 : it->second));
        CHECK(e.free_quotient == 0);
        CHECK(e.witnesses.size() == static_cast<std::size_t>(e.dimension));
      }
      CHECK(r.has_nonalgebraic() == (d >= 7));
      CHECK(etq::has_nonalgebraic_closed_form(d) == (d >= 7));
    }
  }

  TEST_CASE("non-algebraic fixtures") {
    const auto r7 = etq::nonalgebraic_report(7);
    CHECK(r7.degrees_mod4() == std::vector<int>{4});
    CHECK(r7.degrees_odd_twist().empty());
    CHECK(r7.at(4).witnesses == std::vector<std::string>{"rhobar_4@M3"});
    CHECK_FALSE(etq::nonalgebraic_report(5).has_nonalgebraic());
    CHECK(etq::nonalgebraic_report(15).degrees_mod4() == std::vector<int>{4, 8, 12, 16, 20});
    CHECK_THROWS_AS(r7.at(5), etq::Error);
  }

  TEST_CASE("family claims") {
    CHECK(etq::family_dimension(etq::QuadricFamily::norm, 4) == 15);
    CHECK(etq::family_dimension(etq::QuadricFamily::maximal_neighbor, 3) == 13);
    for (int n = 3; n <= 6; ++n)
      for (auto f : {etq::QuadricFamily::norm, etq::QuadricFamily::minimal_neighbor, etq::QuadricFamily::maximal_neighbor})
        for (const auto& v : etq::check_theorem_claims(f, n)) {
          CAPTURE(v.claim);
          CHECK(v.pass);
          CHECK(v.missing.empty());
        }
    const auto b = etq::check_boundary_claim(64);
    CHECK(b.pass);
  }
}
