#include <doctest.h>

#include <set>

#include "etq/abelian.hpp"
#include "etq/error.hpp"
#include "etq/integer.hpp"
#include "etq/smith.hpp"
#include "oracles.hpp"

using etq::FinAb2Group;
using etq::GroupHom;
using etq::Integer;
using etq::IntMatrix;

namespace {

oracle::IntGrid random_grid(std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  oracle::IntGrid g(rows, std::vector<long long>(cols));
  for (auto& r : g)
    for (auto& v : r) v = dist(oracle::rng());
  return g;
}

IntMatrix to_matrix(const oracle::IntGrid& g) {
  IntMatrix m(static_cast<Eigen::Index>(g.size()), g.empty() ? 0 : static_cast<Eigen::Index>(g[0].size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g[i][j];
  return m;
}

oracle::IntGrid to_grid(const IntMatrix& m) {
  oracle::IntGrid g(static_cast<std::size_t>(m.rows()), std::vector<long long>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j).to_int64();
  return g;
}

FinAb2Group finite_group(const std::vector<long long>& orders, const std::string& prefix) {
  std::vector<etq::CyclicSummand> s;
  for (std::size_t i = 0; i < orders.size(); ++i) s.push_back({Integer(orders[i]), prefix + std::to_string(i)});
  return FinAb2Group(s);
}

std::vector<long long> random_orders(std::size_t max_count) {
  std::uniform_int_distribution<std::size_t> count(1, max_count);
  std::uniform_int_distribution<int> exponent(1, 3);
  std::vector<long long> out(count(oracle::rng()));
  for (auto& o : out) o = 1LL << exponent(oracle::rng());
  return out;
}

// Random homomorphism between finite 2-groups: entry (i, j) is a multiple of
// target_i / gcd(source_j, target_i), so relations are respected.
oracle::IntGrid random_hom_grid(const std::vector<long long>& src, const std::vector<long long>& dst) {
  std::uniform_int_distribution<int> k(0, 7);
  oracle::IntGrid g(dst.size(), std::vector<long long>(src.size()));
  for (std::size_t i = 0; i < dst.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j) g[i][j] = (k(oracle::rng()) * (dst[i] / std::gcd(src[j], dst[i]))) % dst[i];
  return g;
}

std::vector<long long> orders_of(const FinAb2Group& g) {
  std::vector<long long> out;
  for (const auto& s : g.summands()) out.push_back(s.order.to_int64());
  return out;
}

}  // namespace

TEST_SUITE("integer") {
  TEST_CASE("mod is non-negative and floor_div rounds down") {
    for (long long a = -20; a <= 20; ++a)
      for (long long b : {-7LL, -4LL, -1LL, 1LL, 3LL, 8LL}) {
        const Integer q = etq::floor_div(a, b), r = etq::mod(a, b);
        CHECK(r >= Integer(0));
        CHECK(r < etq::abs(Integer(b)));
        CHECK(etq::mod(Integer(a) - r, Integer(b)).is_zero());
        const long long expected = a / b - ((a % b != 0) && ((a < 0) != (b < 0)));
        CHECK(q == Integer(expected));
        if (b > 0) CHECK(q * Integer(b) + r == Integer(a));
      }
  }

  TEST_CASE("extended gcd returns a Bezout pair") {
    for (long long a = -15; a <= 15; ++a)
      for (long long b = -15; b <= 15; ++b) {
        Integer x, y;
        const Integer g = etq::extended_gcd(a, b, x, y);
        CHECK(g == Integer(std::gcd(a, b)));
        CHECK(x * Integer(a) + y * Integer(b) == g);
      }
  }

  TEST_CASE("powers of two and valuations") {
    CHECK(etq::pow2(70).to_string() == "1180591620717411303424");
    CHECK(etq::two_adic_valuation(Integer(96)) == 5);
    CHECK(etq::log2_exact(Integer(1024)) == 10);
    CHECK(etq::log2_exact(Integer(12)) == -1);
    CHECK(etq::is_power_of_two(Integer(1)));
    CHECK_FALSE(etq::is_power_of_two(Integer(-4)));
    CHECK_FALSE(etq::pow2(70).fits_int64());
    CHECK_THROWS_AS(etq::pow2(70).to_int64(), etq::Error);
  }
}

TEST_SUITE("smith") {
  TEST_CASE("known decomposition") {
    IntMatrix m(3, 3);
    m << 2, 4, 4, -6, 6, 12, 10, -4, -16;
    const auto snf = etq::smith_normal_form(m);
    CHECK(snf.rank == 3);
    CHECK(snf.diagonal() == std::vector<Integer>{2, 6, 12});
  }

  TEST_CASE("property: U m V = D, unimodular U, and diagonal matches gcd of minors") {
    for (int trial = 0; trial < 300; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 4);
      const auto grid = random_grid(dim(oracle::rng()), dim(oracle::rng()), 6);
      const IntMatrix m = to_matrix(grid);
      const auto snf = etq::smith_normal_form(m);
      CAPTURE(trial);
      CHECK(IntMatrix(snf.U * m * snf.V) == snf.D);
      CHECK(IntMatrix(snf.U * snf.U_inverse) == IntMatrix::Identity(m.rows(), m.rows()));
      CHECK(std::llabs(oracle::determinant(to_grid(snf.U))) == 1);
      CHECK(std::llabs(oracle::determinant(to_grid(snf.V))) == 1);

      const auto expected = oracle::invariant_factors(grid);
      REQUIRE(snf.rank == static_cast<Eigen::Index>(expected.size()));
      const auto diag = snf.diagonal();
      for (std::size_t i = 0; i < diag.size(); ++i) {
        if (i < expected.size())
          CHECK(diag[i] == Integer(expected[i]));
        else
          CHECK(diag[i].is_zero());
      }
      for (Eigen::Index i = 0; i < snf.D.rows(); ++i)
        for (Eigen::Index j = 0; j < snf.D.cols(); ++j)
          if (i != j) CHECK(snf.D(i, j).is_zero());
    }
  }

  TEST_CASE("works for built-in scalars") {
    Eigen::Matrix<long long, 2, 2> m;
    m << 4, 6, 6, 4;
    const auto snf = etq::smith_normal_form(m);
    CHECK(snf.diagonal() == std::vector<long long>{2, 10});
  }
}

TEST_SUITE("abelian") {
  TEST_CASE("construction validates orders and labels") {
    CHECK_THROWS_AS(finite_group({3}, "g"), etq::Error);
    CHECK_THROWS_AS(FinAb2Group({{Integer(2), "a"}, {Integer(4), "a"}}), etq::Error);
    CHECK(FinAb2Group().to_string() == "0");
    CHECK(FinAb2Group({{Integer(0), "1"}, {Integer(2), "r"}}).to_string() == "Z2{1} + Z/2{r}");
  }

  TEST_CASE("homomorphisms must respect relations") {
    const auto z2 = finite_group({2}, "a"), z4 = finite_group({4}, "b");
    IntMatrix one(1, 1);
    one << 1;
    CHECK_THROWS_AS(GroupHom(z2, z4, one), etq::Error);
    IntMatrix two(1, 1);
    two << 2;
    CHECK_NOTHROW(GroupHom(z2, z4, two));
  }

  TEST_CASE("property: kernel, image and cokernel agree with element enumeration") {
    for (int trial = 0; trial < 200; ++trial) {
      const auto src = random_orders(3), dst = random_orders(3);
      const auto grid = random_hom_grid(src, dst);
      const GroupHom h(finite_group(src, "x"), finite_group(dst, "y"), to_matrix(grid));
      CAPTURE(trial);

      const oracle::FiniteGroup S{src}, T{dst};
      const auto s_elems = S.elements(), t_elems = T.elements();
      std::vector<std::vector<long long>> ker_elems;
      std::set<std::vector<long long>> img;
      for (const auto& x : s_elems) {
        const auto y = oracle::apply(grid, x, dst);
        img.insert(y);
        if (std::all_of(y.begin(), y.end(), [](long long v) { return v == 0; })) ker_elems.push_back(x);
      }
      const std::vector<std::vector<long long>> img_elems(img.begin(), img.end());
      const int K = 4;

      const auto ker = etq::kernel(h);
      CHECK(oracle::profile_of_orders(orders_of(ker.group), K) == oracle::two_torsion_profile(ker_elems, src, K));
      const auto im = etq::image(h);
      CHECK(oracle::profile_of_orders(orders_of(im.group), K) == oracle::two_torsion_profile(img_elems, dst, K));

      // Cokernel profile: #{x + Im : 2^k x in Im} = #{x : 2^k x in Im} / |Im|.
      std::vector<long long> coker_profile;
      for (int k = 0; k <= K; ++k) {
        long long count = 0;
        for (const auto& x : t_elems) {
          std::vector<long long> y(x.size());
          for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] << k) % dst[i];
          count += img.count(y);
        }
        coker_profile.push_back(count / static_cast<long long>(img.size()));
      }
      const auto coker = etq::cokernel(h);
      CHECK(oracle::profile_of_orders(orders_of(coker.group), K) == coker_profile);

      // Structural maps: inclusion into the domain is killed by h, projection kills the image.
      CHECK(etq::compose(h, ker.inclusion).is_zero());
      CHECK(etq::compose(coker.projection, h).is_zero());
      CHECK(etq::compose(coker.projection, im.inclusion).is_zero());
    }
  }

  TEST_CASE("free summands: multiplication by 2 on Z2") {
    const auto z = FinAb2Group::free_module({"1"});
    IntMatrix two(1, 1);
    two << 2;
    const GroupHom h(z, z, two);
    CHECK(etq::kernel(h).group.is_trivial());
    CHECK(etq::image(h).group.free_rank() == 1);
    const auto c = etq::cokernel(h).group;
    CHECK(c.generator_count() == 1);
    CHECK(c[0].order == Integer(2));
  }

  TEST_CASE("group orders multiply additively") {
    const FinAb2Group g({{Integer(0), "a"}, {Integer(4), "b"}, {Integer(2), "c"}});
    CHECK(g.order() == etq::GroupOrder{1, 3});
    CHECK(g.torsion_orders() == std::vector<Integer>{2, 4});
    CHECK(g.isomorphic_to(FinAb2Group({{Integer(2), "x"}, {Integer(0), "y"}, {Integer(4), "z"}})));
  }

  TEST_CASE("inverse limit of Z/2^s with reduction maps is free of rank 1") {
    std::vector<FinAb2Group> tower;
    std::vector<GroupHom> maps;
    for (int s = 1; s <= 8; ++s) tower.push_back(FinAb2Group::cyclic(etq::pow2(s), "1"));
    IntMatrix one(1, 1);
    one << 1;
    for (int s = 1; s < 8; ++s) maps.emplace_back(tower[static_cast<std::size_t>(s)], tower[static_cast<std::size_t>(s - 1)], one);
    const auto lim = etq::inverse_limit(tower, maps);
    CHECK(lim.free_rank() == 1);
    CHECK(lim.generator_count() == 1);
  }

  TEST_CASE("inverse limit: constant Z/2 survives, zero maps kill everything") {
    std::vector<FinAb2Group> tower(8, FinAb2Group::cyclic(2, "a"));
    IntMatrix one(1, 1), zero(1, 1);
    one << 1;
    zero << 0;
    std::vector<GroupHom> identities, zeros;
    for (int s = 1; s < 8; ++s) {
      identities.emplace_back(tower[0], tower[0], one);
      zeros.emplace_back(tower[0], tower[0], zero);
    }
    CHECK(etq::inverse_limit(tower, identities).isomorphic_to(FinAb2Group::cyclic(2, "a")));
    CHECK(etq::inverse_limit(tower, zeros).is_trivial());
  }

  TEST_CASE("inverse limit rejects towers that are too short") {
    std::vector<FinAb2Group> tower(3, FinAb2Group::cyclic(2, "a"));
    IntMatrix one(1, 1);
    one << 1;
    std::vector<GroupHom> maps(2, GroupHom(tower[0], tower[0], one));
    CHECK_THROWS_AS(etq::inverse_limit(tower, maps), etq::Error);
  }
}
