#include <doctest.h>

#include "etq/error.hpp"
#include "etq/presentations.hpp"
#include "oracles.hpp"

using etq::Integer;

namespace {

std::vector<int> weights_of(const etq::RingPresentation& p) {
  std::vector<int> w;
  for (const auto& g : p.generators) w.push_back(g.degree);
  return w;
}

std::vector<oracle::Poly> relations_of(const etq::RingPresentation& p) {
  std::vector<oracle::Poly> out;
  for (const auto& r : p.relations) {
    oracle::Poly poly;
    for (const auto& [e, c] : r.terms()) poly[e] = c.to_int64();
    out.push_back(poly);
  }
  return out;
}

// Compares graded_ranks with the rank-over-Q / rank-over-F2 oracle degree by degree.
void check_against_oracle(const etq::RingPresentation& p, int max_degree) {
  const auto g = etq::graded_ranks(p, max_degree);
  const auto w = weights_of(p);
  const auto rels = relations_of(p);
  const bool mod2 = p.coefficients == etq::CoefficientRing::mod2;
  for (int k = 0; k <= max_degree; ++k) {
    const auto want = oracle::graded_piece(w, rels, k, mod2);
    CAPTURE(k);
    CHECK(g.free_rank(k) == want.free_rank);
    CHECK(static_cast<int>(g.torsion_orders(k).size()) == want.torsion_count);
    if (mod2)
      for (const auto& o : g.torsion_orders(k)) CHECK(o == Integer(2));
  }
}

std::string expect_parse_error(std::string_view text) {
  try {
    etq::parse_presentation(text);
  } catch (const etq::Error& e) {
    CHECK(e.code() == etq::Errc::parse_error);
    return e.what();
  }
  FAIL("no parse error for: " << text);
  return {};
}

}  // namespace

TEST_SUITE("presentations") {
  TEST_CASE("parse and format round trip") {
    const char* text =
        "# Q^7\n"
        "coefficients 2adic\n"
        "gen h 2\n"
        "gen r 4   # rhobar_4\n"
        "\n"
        "rel h^8\n"
        "rel 2 r\n"
        "rel h^4 * r - 3*h^6 + h^2 h^4\n";
    const auto p = etq::parse_presentation(text);
    REQUIRE(p.generators.size() == 2);
    CHECK(p.generators[1] == etq::PresentationGenerator{"r", 4});
    REQUIRE(p.relations.size() == 3);
    CHECK(p.polynomial_string(p.relations[1]) == "2*r");
    CHECK(p.relation_degree(p.relations[0]) == 16);
    const auto again = etq::parse_presentation(etq::format_presentation(p));
    CHECK(again.generators == p.generators);
    CHECK(again.relations == p.relations);
    CHECK(again.coefficients == p.coefficients);
  }

  TEST_CASE("polynomial arithmetic") {
    const auto p = etq::parse_presentation("gen x 2\ngen y 2\n");
    const auto a = etq::parse_polynomial(p, "x + y");
    const auto b = etq::parse_polynomial(p, "x - y");
    CHECK(a * b == etq::parse_polynomial(p, "x^2 - y^2"));
    CHECK((a - a).is_zero());
    CHECK(p.polynomial_string(a * a) == "x^2 + 2*x*y + y^2");
  }

  TEST_CASE("parse errors carry line numbers") {
    CHECK(expect_parse_error("gen x 2\nrel x^2 + z\n").find("line 2: unknown generator 'z'") != std::string::npos);
    CHECK(expect_parse_error("gen x 0\n").find("line 1:") != std::string::npos);
    CHECK(expect_parse_error("gen x 2\ngen x 4\n").find("declared twice") != std::string::npos);
    CHECK(expect_parse_error("gen x 2\nrel x\ngen y 2\n").find("line 3: generators must precede relations") !=
          std::string::npos);
    CHECK(expect_parse_error("coefficients mod3\n").find("unknown coefficient ring") != std::string::npos);
    CHECK(expect_parse_error("relation x\n").find("unknown keyword") != std::string::npos);
    CHECK(expect_parse_error("gen x 2\nrel x^\n").find("exponent") != std::string::npos);
    CHECK(expect_parse_error("gen x 2\nrel x - x\n").find("identically zero") != std::string::npos);
    CHECK(expect_parse_error("gen x 2\nrel x *\n").find("line 2:") != std::string::npos);
    CHECK(expect_parse_error("gen x 2\nrel x ! x\n").find("unexpected character") != std::string::npos);
  }

  TEST_CASE("non-homogeneous relations are rejected") {
    try {
      etq::parse_presentation("gen x 2\ngen y 4\nrel x + y\n");
      FAIL("accepted a non-homogeneous relation");
    } catch (const etq::Error& e) {
      CHECK(e.code() == etq::Errc::non_homogeneous_relation);
    }
  }

  TEST_CASE("Z[x]/(2x, x^3) by hand") {
    const auto g = etq::graded_ranks(etq::parse_presentation("gen x 2\nrel 2*x\nrel x^3\n"), 8);
    CHECK(g.free_rank(0) == 1);
    CHECK(g.torsion_orders(2) == std::vector<Integer>{2});
    CHECK(g.torsion_orders(4) == std::vector<Integer>{2});
    CHECK(g.at(6).empty());
    CHECK(g.at(4)[0].label == "x^2");
    CHECK(g.at(2)[0].twist == 1);
  }

  TEST_CASE("higher torsion: Z[x]/(8x) is Z/8 in every positive degree") {
    const auto g = etq::graded_ranks(etq::parse_presentation("gen x 4\nrel 8*x\n"), 8);
    CHECK(g.torsion_orders(4) == std::vector<Integer>{8});
    CHECK(g.torsion_orders(8) == std::vector<Integer>{8});
    CHECK(g.free_rank(0) == 1);
  }

  TEST_CASE("odd torsion is invisible 2-locally") {
    const auto g = etq::graded_ranks(etq::parse_presentation("gen x 2\nrel 3*x\n"), 2);
    CHECK(g.at(2).empty());
  }

  TEST_CASE("property: built-in presentations match the linear-algebra oracle") {
    for (const char* family : {"Q3", "Q5", "Q6", "Q7", "G2_flag_etale", "G2_flag_chow_mod2", "G2_GT_mod2"}) {
      CAPTURE(family);
      check_against_oracle(etq::builtin_presentation(family), 24);
    }
    for (int n = 2; n <= 4; ++n) {
      CAPTURE(n);
      check_against_oracle(etq::builtin_presentation("norm", n), 2 * ((1 << n) - 1));
    }
  }

  TEST_CASE("property: random presentations match the linear-algebra oracle") {
    std::uniform_int_distribution<int> coin(0, 1), small(0, 3), coeff(-4, 4), gens(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
      std::string text = coin(oracle::rng()) ? "coefficients mod2\n" : "coefficients 2adic\n";
      const int n = gens(oracle::rng());
      for (int i = 0; i < n; ++i) text += "gen x" + std::to_string(i) + " " + std::to_string(2 * (1 + small(oracle::rng()) % 2)) + "\n";
      const auto base = etq::parse_presentation(text);
      const int relations = 1 + small(oracle::rng());
      for (int r = 0; r < relations; ++r) {
        // A homogeneous relation: random combination of the monomials of one degree.
        const int degree = 2 * (1 + small(oracle::rng()));
        const auto monos = oracle::monomials(weights_of(base), degree);
        std::string rel;
        for (const auto& m : monos) {
          const int c = coeff(oracle::rng());
          if (c == 0) continue;
          rel += (c < 0 ? " - " : " + ") + std::to_string(std::abs(c));
          for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) rel += "*x" + std::to_string(i) + "^" + std::to_string(m[i]);
        }
        if (!rel.empty()) text += "rel " + rel + "\n";
      }
      CAPTURE(text);
      check_against_oracle(etq::parse_presentation(text), 12);
    }
  }

  TEST_CASE("built-in family names") {
    CHECK_THROWS_AS(etq::builtin_presentation("Q4"), etq::Error);
    CHECK_THROWS_AS(etq::builtin_presentation("norm"), etq::Error);
    CHECK_THROWS_AS(etq::builtin_presentation("norm", 1), etq::Error);
    CHECK(etq::builtin_presentation("norm(3)").relations == etq::builtin_presentation("norm", 3).relations);
    CHECK_FALSE(etq::builtin_families().empty());
  }

  TEST_CASE("comparison with the motivic assembly") {
    for (int d : {3, 5, 6, 7, 15, 31}) {
      const auto c = etq::compare_with_assembly(d);
      CAPTURE(d);
      CHECK(c.equal);
      CHECK(c.diffs.empty());
    }
    CHECK_THROWS_AS(etq::compare_with_assembly(4), etq::Error);
  }
}
