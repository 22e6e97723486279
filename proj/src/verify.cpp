#include "etq/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>
#include <sstream>

#include "etq/bockstein_tower.hpp"
#include "etq/error.hpp"
#include "etq/mod2_model.hpp"
#include "etq/presentations.hpp"
#include "etq/quadric_engine.hpp"
#include "etq/rost_tables.hpp"

namespace etq {

namespace {

using Check = std::function<CheckResult()>;

struct Context {
  VerifyOptions options;
};

std::string ints(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

// Collects failure descriptions; the check passes when none were recorded.
class Failures {
 public:
  void add(std::string what) {
    if (list_.size() < kShown) list_.push_back(std::move(what));
    ++count_;
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    if (!ok) add(what());
  }
  CheckResult result(std::string id, const std::string& success) const {
    if (count_ == 0) return {std::move(id), true, success};
    std::string detail = std::to_string(count_) + " failure(s): ";
    for (std::size_t i = 0; i < list_.size(); ++i) detail += (i ? "; " : "") + list_[i];
    return {std::move(id), false, detail};
  }

 private:
  static constexpr std::size_t kShown = 5;
  std::vector<std::string> list_;
  std::size_t count_ = 0;
};

// Runs pred on [lo, hi] and returns the failing values in ascending order,
// splitting the range across threads when parallel is set.
std::vector<int> failing_values(int lo, int hi, bool parallel, const std::function<bool(int)>& pred) {
  auto scan = [&](int a, int b) {
    std::vector<int> bad;
    for (int x = a; x <= b; ++x)
      if (!pred(x)) bad.push_back(x);
    return bad;
  };
  if (!parallel || hi - lo < 16) return scan(lo, hi);
  const int chunks = 8;
  std::vector<std::future<std::vector<int>>> parts;
  const int span = (hi - lo + chunks) / chunks;
  for (int a = lo; a <= hi; a += span) parts.push_back(std::async(std::launch::async, scan, a, std::min(hi, a + span - 1)));
  std::vector<int> out;
  for (auto& p : parts) {
    auto v = p.get();
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::string orders_string(const FinAb2Group& g) {
  std::string out;
  for (const auto& s : g.summands()) out += (out.empty() ? "" : ",") + (s.is_free() ? std::string("Z2") : s.order.to_string());
  return "[" + out + "]";
}

bool is_cyclic(const FinAb2Group& g, const Integer& order) { return g.generator_count() == 1 && g[0].order == order; }

// ---------------------------------------------------------------------------

std::vector<Check> mod2_checks(const Context&) {
  return {
      [] {
        Failures f;
        for (int n = 1; n <= 6; ++n) {
          const Mod2EtaleRing ring = rost_etale_mod2(n);
          std::vector<int> expected;
          for (int c = 0; c <= (1 << (n + 1)) - 2; ++c) expected.push_back(c);
          f.expect(ring.degrees == expected, [&] { return "n=" + std::to_string(n) + " degrees " + ints(ring.degrees); });
          f.expect(ring.labels.size() == ring.degrees.size(), [&] { return "n=" + std::to_string(n) + " label count"; });
        }
        return f.result("mod2.ring", "one Z/2 in each degree 0..2^{n+1}-2 for n=1..6");
      },
      [] {
        Failures f;
        for (int n = 1; n <= 6; ++n) {
          std::vector<int> expected{0};
          for (int i = n - 1; i >= 0; --i) expected.push_back((1 << (n + 1)) - (1 << (i + 1)));
          const auto got = cycle_image_mod2_degrees(n);
          f.expect(got == expected, [&] { return "n=" + std::to_string(n) + " got " + ints(got); });
        }
        return f.result("mod2.cycle_image", "cycle image degrees {0} + {2^{n+1}-2^{i+1}} for n=1..6");
      },
  };
}

std::vector<Check> integral_checks(const Context&) {
  return {
      [] {
        Failures f;
        const auto p3 = pair_weight(2, 3);
        f.expect(p3.pairs == std::vector<BockPair>{{0, 1}, {2, 3}} && p3.free_classes.empty(), [] { return "n=2 q=3"; });
        const auto p7 = pair_weight(2, 7);
        f.expect(p7.pairs == std::vector<BockPair>{{0, 1}, {2, 3}, {4, 5}} && p7.free_classes == std::vector<int>{6},
                 [] { return "n=2 q=7"; });
        const auto p0 = pair_weight(2, 0);
        f.expect(p0.pairs.empty() && p0.free_classes == std::vector<int>{0}, [] { return "n=2 q=0"; });
        return f.result("integral.pairing", "weights 0, 3, 7 of M_2 pair as expected");
      },
      [] {
        Failures f;
        int bidegrees = 0;
        for (int n = 1; n <= 6; ++n) {
          const int top = rost_top_degree(n);
          for (int q = 0; q <= top + 2; ++q) {
            for (int p = 0; p <= q + 1; ++p) {
              try {
                integral_cohomology(n, p, q);
                ++bidegrees;
              } catch (const Error& e) {
                f.add("n=" + std::to_string(n) + " (" + std::to_string(p) + "," + std::to_string(q) + "): " + e.what());
              }
            }
          }
        }
        return f.result("integral.degeneration",
                        "Bockstein homology equals the free-class count at " + std::to_string(bidegrees) + " bidegrees");
      },
      [] {
        Failures f;
        f.expect(is_cyclic(integral_cohomology(2, 4, 4), 2), [] { return "(4,4) is not Z/2"; });
        const auto pi = integral_cohomology(2, 6, 7);
        f.expect(pi.free_rank() == 1 && pi.torsion_orders().empty(), [] { return "(6,7) is not free of rank 1"; });
        const auto unit = integral_cohomology(2, 0, 0);
        f.expect(unit.free_rank() == 1 && unit.generator_count() == 1, [] { return "(0,0) is not free of rank 1"; });
        return f.result("integral.fixtures", "H(4,4)=Z/2, H(6,7)=Z2, H(0,0)=Z2 for n=2");
      },
  };
}

std::vector<Check> z4_checks(const Context& ctx) {
  return {
      [] {
        Failures f;
        const std::vector<std::pair<int, int>> bidegrees{{0, 0}, {2, 3}, {4, 4}, {6, 7}};
        const std::vector<int> expected{4, 2, 2, 4};
        for (std::size_t i = 0; i < bidegrees.size(); ++i) {
          const auto g = mod_2s_group(2, bidegrees[i].first, bidegrees[i].second, 2);
          f.expect(is_cyclic(g, expected[i]), [&] {
            return "(" + std::to_string(bidegrees[i].first) + "," + std::to_string(bidegrees[i].second) + ") " +
                   orders_string(g);
          });
        }
        return f.result("z4.table", "orders 4, 2, 2, 4 at (0,0), (2,3), (4,4), (6,7)");
      },
      [ctx] {
        Failures f;
        int points = 0;
        for (int n = 1; n <= 4; ++n) {
          const int top = rost_top_degree(n);
          for (int q = 0; q <= top + 2; ++q)
            for (int p = 0; p <= q; ++p)
              for (int s = 2; s <= ctx.options.s_max; ++s) {
                const LesCheck c = check_long_exact_sequence(n, p, q, s);
                ++points;
                f.expect(c.holds, [&] {
                  return "n=" + std::to_string(n) + " (" + std::to_string(p) + "," + std::to_string(q) +
                         ") s=" + std::to_string(s) + ": " + c.detail;
                });
              }
        }
        return f.result("z4.exactness", "long exact sequence holds at " + std::to_string(points) + " points");
      },
  };
}

std::vector<Check> tower_checks(const Context& ctx) {
  const TowerOptions opts{ctx.options.s_max, ctx.options.window};
  return {
      [ctx] {
        Failures f;
        for (int s = 1; s <= ctx.options.s_max; ++s) {
          const Integer top = pow2(s);
          f.expect(is_cyclic(mod_2s_group(2, 0, 0, s), top), [&] { return "(0,0) s=" + std::to_string(s); });
          f.expect(is_cyclic(mod_2s_group(2, 2, 3, s), 2), [&] { return "(2,3) s=" + std::to_string(s); });
          f.expect(is_cyclic(mod_2s_group(2, 4, 4, s), 2), [&] { return "(4,4) s=" + std::to_string(s); });
          f.expect(is_cyclic(mod_2s_group(2, 6, 7, s), top), [&] { return "(6,7) s=" + std::to_string(s); });
        }
        return f.result("tower.pattern",
                        "Z/2^s, Z/2, Z/2, Z/2^s for s=1.." + std::to_string(ctx.options.s_max));
      },
      [ctx] {
        Failures f;
        for (int s = 2; s <= ctx.options.s_max; ++s) {
          const auto maps = transition_maps(2, 2, 3, s);
          f.expect(maps.reduction.is_zero(), [&] { return "r_s nonzero at s=" + std::to_string(s); });
          const auto id44 = transition_maps(2, 4, 4, s).reduction;
          f.expect(id44 == GroupHom::identity(id44.domain()), [&] { return "(4,4) r_s not identity at s=" + std::to_string(s); });
          const auto m67 = transition_maps(2, 6, 7, s);
          f.expect(compose(m67.inclusion, m67.reduction).matrix()(0, 0) == Integer(2),
                   [&] { return "(6,7) t_s r_s != 2 at s=" + std::to_string(s); });
        }
        return f.result("tower.maps", "ghost reductions vanish; (4,4) reductions are identities; t r = 2 on (6,7)");
      },
      [opts] {
        Failures f;
        const auto ghost = tower_limit(2, {2, 3}, opts);
        f.expect(ghost.is_trivial(), [&] { return "(2,3) limit " + ghost.to_string(); });
        const auto tors = tower_limit(2, {4, 4}, opts);
        f.expect(is_cyclic(tors, 2), [&] { return "(4,4) limit " + tors.to_string(); });
        const auto pi = tower_limit(2, {6, 7}, opts);
        f.expect(pi.free_rank() == 1 && pi.generator_count() == 1, [&] { return "(6,7) limit " + pi.to_string(); });
        return f.result("tower.limits", "limits 0, Z/2, Z2 at (2,3), (4,4), (6,7)");
      },
      [opts] {
        Failures f;
        for (int n = 1; n <= 5; ++n) {
          const int top = rost_top_degree(n);
          for (int c = 2; c < top; c += 4) {
            const Bidegree b = twisted_bidegree(c);
            f.expect(tensor_part_size(n, b.p, b.q) == 0,
                     [&] { return "n=" + std::to_string(n) + " c=" + std::to_string(c) + " has a tensor class"; });
            const auto lim = tower_limit(n, b, opts);
            f.expect(lim.is_trivial(), [&] { return "n=" + std::to_string(n) + " c=" + std::to_string(c) + " limit " + lim.to_string(); });
          }
        }
        return f.result("tower.odd_twist", "degrees 2 mod 4 below the top carry only ghosts and vanish in the limit");
      },
  };
}

std::vector<Check> rost_checks(const Context& ctx) {
  const TowerOptions opts{ctx.options.s_max, ctx.options.window};
  return {
      [opts] {
        Failures f;
        for (int n = 1; n <= 5; ++n) {
          const auto tower = etale_2adic(n, opts);
          const auto table = rost_etale_table(n).graded();
          for (const auto& d : diff_summands(table, tower))
            f.add("n=" + std::to_string(n) + " degree " + std::to_string(d.degree) + ": table " + d.expected +
                  " tower " + d.actual);
        }
        return f.result("rost.oracle", "tower limit equals the closed-form table for n=1..5");
      },
      [] {
        Failures f;
        for (int n = 1; n <= 5; ++n) {
          const int top = rost_top_degree(n);
          std::set<std::pair<int, int>> expected{{0, 0}, {top, 0}};
          for (int m = 1; m <= (1 << (n - 1)) - 1; ++m) expected.insert({4 * m, 2});
          std::set<std::pair<int, int>> got;
          for (const auto& g : rost_etale_table(n).generators)
            got.insert({g.degree, static_cast<int>(g.order.to_int64())});
          f.expect(got == expected, [&] { return "n=" + std::to_string(n); });
        }
        return f.result("rost.closed_form", "free {0, 2^{n+1}-2} and Z/2 at 4m, 1 <= m < 2^{n-1}");
      },
      [] {
        Failures f;
        for (int n = 1; n <= kMaxRostIndex; ++n) {
          const int got = static_cast<int>(nonalgebraic_quotient(n).size());
          const int expected = ((1 << (n - 1)) - 1) - (n - 1);
          f.expect(got == expected, [&] { return "n=" + std::to_string(n) + " got " + std::to_string(got); });
          auto chow_degrees = cycle_image_2adic(n).torsion_degrees;
          std::vector<int> chow;
          const Graded2Group ring = chow_ring(n);
          for (const auto& [deg, list] : ring.degrees())
            for (const auto& s : list)
              if (!s.is_free()) chow.push_back(deg);
          std::sort(chow.begin(), chow.end());
          std::sort(chow_degrees.begin(), chow_degrees.end());
          f.expect(chow_degrees == chow, [&] { return "n=" + std::to_string(n) + " cycle image " + ints(chow_degrees); });
        }
        return f.result("rost.quotient", "quotient sizes and cycle-image degrees for n=1.." + std::to_string(kMaxRostIndex));
      },
      [] {
        Failures f;
        for (int n = 1; n <= 6; ++n) {
          const int top_power = 1 << (n - 1);
          for (int m = 1; m < top_power; ++m) {
            const auto p = rhobar4_power(n, m);
            f.expect(p && *p == "rhobar_" + std::to_string(4 * m), [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
          }
          f.expect(!rhobar4_power(n, top_power), [&] { return "n=" + std::to_string(n) + " top power nonzero"; });
        }
        return f.result("rost.ring_form", "rhobar_4^m = rhobar_{4m} and rhobar_4^{2^{n-1}} = 0");
      },
      [] {
        Failures f;
        for (int n = 1; n <= 6; ++n) {
          const auto cr = complex_realization(n);
          f.expect(cr.y_degree == rost_top_degree(n), [&] { return "n=" + std::to_string(n) + " y degree"; });
          f.expect(cr.mod2_image.to_string() == "Z/2{1}", [&] { return "n=" + std::to_string(n) + " mod-2 image " + cr.mod2_image.to_string(); });
          f.expect(cr.rational_rank == 2, [&] { return "n=" + std::to_string(n) + " rational rank"; });
          const auto& m = cr.chow_restriction.matrix();
          bool torsion_dies = true;
          for (std::size_t i = 0; i < cr.chow_restriction.domain().generator_count(); ++i)
            if (!cr.chow_restriction.domain()[i].is_free())
              torsion_dies = torsion_dies && m.col(static_cast<Eigen::Index>(i)).isZero();
          f.expect(torsion_dies, [&] { return "n=" + std::to_string(n) + " torsion restricts nontrivially"; });
        }
        return f.result("rost.complex", "res(c0) = 2y, torsion restricts to 0, mod-2 image Z/2{1}");
      },
  };
}

std::vector<Check> quadric_checks(const Context& ctx) {
  const int d_max = ctx.options.d_max;
  const bool parallel = ctx.options.parallel;
  const TowerOptions opts{ctx.options.s_max, ctx.options.window};
  return {
      [] {
        Failures f;
        for (int n = 2; n <= 6; ++n) {
          std::vector<MotiveTerm> minimal{{n, 0}};
          for (int j = 1; j <= (1 << (n - 1)) - 1; ++j) minimal.push_back({n - 1, j});
          std::vector<MotiveTerm> maximal, pfister;
          for (int j = 0; j <= (1 << n) - 2; ++j) maximal.push_back({n, j});
          for (int j = 0; j <= (1 << n) - 1; ++j) pfister.push_back({n, j});
          f.expect(decompose_motive((1 << n) - 1).terms == minimal, [&] { return "minimal n=" + std::to_string(n); });
          f.expect(decompose_motive((1 << (n + 1)) - 3).terms == maximal, [&] { return "maximal n=" + std::to_string(n); });
          f.expect(decompose_motive((1 << (n + 1)) - 2).terms == pfister, [&] { return "Pfister n=" + std::to_string(n); });
        }
        return f.result("quadrics.closed_forms", "minimal, maximal and Pfister decompositions for n=2..6");
      },
      [d_max] {
        Failures f;
        for (int d = 1; d <= d_max; ++d) {
          const auto m = decompose_motive(d);
          const auto& e = m.expansion.exponents;
          f.expect(m.expansion.reconstruct() == d + 2, [&] { return "d=" + std::to_string(d) + " reconstructs wrongly"; });
          f.expect(std::adjacent_find(e.begin(), e.end(), std::less_equal<>()) == e.end(),
                   [&] { return "d=" + std::to_string(d) + " exponents " + ints(e); });
          const int rank = d % 2 ? d + 1 : d + 2;
          f.expect(m.complex_rank() == rank, [&] { return "d=" + std::to_string(d) + " rank " + std::to_string(m.complex_rank()); });
        }
        return f.result("quadrics.expansion", "expansion and complex rank rule for d=1.." + std::to_string(d_max));
      },
      [d_max, parallel] {
        const auto bad = failing_values(1, d_max, parallel, [](int d) {
          const bool closed = has_nonalgebraic_closed_form(d);
          return has_nonalgebraic_by_report(d) == closed && has_nonalgebraic_by_terms(d) == closed;
        });
        if (bad.empty()) return CheckResult{"quadrics.boundary", true, "non-algebraic classes exactly for 7 <= d <= " + std::to_string(d_max)};
        return CheckResult{"quadrics.boundary", false, "predicates disagree at d=" + ints(bad)};
      },
      [] {
        Failures f;
        for (int n = 3; n <= 6; ++n)
          for (auto family : {QuadricFamily::norm, QuadricFamily::minimal_neighbor, QuadricFamily::maximal_neighbor})
            for (const auto& v : check_theorem_claims(family, n)) f.expect(v.pass, [&] { return v.claim + ": " + v.detail; });
        return f.result("quadrics.claims", "norm, minimal and maximal neighbor claims for n=3..6");
      },
      [opts] {
        Failures f;
        for (int n = 2; n <= 6; ++n) {
          const auto h = assemble_cohomology((1 << n) - 1);
          Graded2Group restricted;
          for (const auto& [deg, list] : h.degrees())
            for (const auto& s : list)
              if (s.source && s.source->n == n && s.source->j == 0) restricted.add(deg, s);
          const auto tower = etale_2adic(n, opts);
          const auto diffs = diff_ranks(tower, restricted, rost_top_degree(n));
          f.expect(diffs.empty(), [&] { return "n=" + std::to_string(n) + " degree " + std::to_string(diffs[0].degree); });
        }
        return f.result("quadrics.norm_summand", "the M_n summand of Q^{2^n-1} matches the tower for n=2..6");
      },
  };
}

std::vector<Check> ring_checks(const Context&) {
  return {
      [] {
        Failures f;
        for (int d : {3, 5, 6, 7, 15, 31}) {
          const auto c = compare_with_assembly(d);
          for (const auto& diff : c.diffs)
            f.add("d=" + std::to_string(d) + " degree " + std::to_string(diff.degree) + ": assembly " + diff.expected +
                  " presentation " + diff.actual);
        }
        return f.result("rings.assembly", "presentations of Q^3, Q^5, Q^6, Q^7, Q^15, Q^31 match the assembly");
      },
      [] {
        const auto r = nonalgebraic_report(7);
        Failures f;
        for (const auto& e : r.entries) {
          const int expected = e.degree == 4 ? 1 : 0;
          f.expect(e.dimension == expected && e.free_quotient == 0, [&] { return "degree " + std::to_string(e.degree); });
        }
        return f.result("rings.q7_quotient", "Q^7 quotient is Z/2 in degree 4 only");
      },
      [] {
        const auto a = builtin_presentation("norm", 3);
        const auto b = builtin_presentation("Q7");
        std::set<std::string> ra, rb;
        for (const auto& r : a.relations) ra.insert(a.polynomial_string(r));
        for (const auto& r : b.relations) rb.insert(b.polynomial_string(r));
        const bool same = a.generators == b.generators && a.coefficients == b.coefficients && ra == rb;
        return CheckResult{"rings.norm3", same, same ? "norm(3) and Q7 have the same relations" : "norm(3) differs from Q7"};
      },
  };
}

std::vector<Check> flag_checks(const Context&) {
  return {
      [] {
        const auto p = parse_presentation("coefficients mod2\ngen t1 2\ngen t2 2\nrel t1^2 + t1*t2 + t2^2\nrel t2^3\n");
        const auto g = graded_ranks(p, 24);
        std::vector<int> series;
        for (int k = 0; k <= 24; k += 2) series.push_back(static_cast<int>(g.torsion_orders(k).size()));
        const std::vector<int> expected{1, 2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0};
        return CheckResult{"flag.coinvariants", series == expected, "Hilbert series " + ints(series)};
      },
      [] {
        const auto g = graded_ranks(builtin_presentation("G2_GT_mod2"), 24);
        const int total = g.total_torsion_count() + g.total_free_rank();
        return CheckResult{"flag.gt_mod2", total == 12 && g.total_free_rank() == 0, "total dimension " + std::to_string(total)};
      },
      [] {
        const auto g = graded_ranks(builtin_presentation("G2_flag_chow_mod2"), 24);
        const int total = g.total_torsion_count() + g.total_free_rank();
        return CheckResult{"flag.chow_mod2", total == 18 && g.total_free_rank() == 0, "total dimension " + std::to_string(total)};
      },
      [] {
        const auto g = graded_ranks(builtin_presentation("G2_flag_etale"), 64);
        Failures f;
        for (const auto& [deg, list] : g.degrees())
          for (const auto& s : list)
            f.expect(s.is_free() || s.order == Integer(2), [&] { return "degree " + std::to_string(deg) + " order " + s.order.to_string(); });
        f.expect(g.free_rank(4) == 2 && g.torsion_orders(4) == std::vector<Integer>{2},
                 [&] { return "degree 4 is " + describe(g.at(4)); });
        return f.result("flag.etale", "only Z/2 torsion up to degree 64; degree 4 is Z2^2 + Z/2");
      },
  };
}

std::vector<Check> checks_for(const std::string& scope, const Context& ctx) {
  if (scope == "mod2") return mod2_checks(ctx);
  if (scope == "integral") return integral_checks(ctx);
  if (scope == "z4") return z4_checks(ctx);
  if (scope == "tower") return tower_checks(ctx);
  if (scope == "rost") return rost_checks(ctx);
  if (scope == "quadrics") return quadric_checks(ctx);
  if (scope == "rings") return ring_checks(ctx);
  if (scope == "flag") return flag_checks(ctx);
  return {};
}

// A check that throws is reported as a failure, not propagated.
CheckResult run_guarded(const Check& check, const std::string& scope) {
  try {
    return check();
  } catch (const std::exception& e) {
    return {scope + ".error", false, e.what()};
  }
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int VerifyReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

std::vector<std::string> verify_scopes() { return {"mod2", "integral", "z4", "tower", "rost", "quadrics", "rings", "flag"}; }

std::vector<std::string> resolve_scope(std::string_view scope) {
  const auto all = verify_scopes();
  if (scope == "all") return all;
  for (const auto& s : all)
    if (s == scope) return {s};
  if (scope.size() == 2 && scope[0] == 's' && scope[1] >= '2' && scope[1] <= '9')
    return {all[static_cast<std::size_t>(scope[1] - '2')]};
  std::string names = "all";
  for (const auto& s : all) names += ", " + s;
  throw Error(Errc::invalid_argument, "unknown scope '" + std::string(scope) + "' (expected " + names + ", or s2..s9)");
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.window < 3) throw Error(Errc::invalid_argument, "window must be >= 3");
  if (options.s_max < options.window + 1)
    throw Error(Errc::invalid_argument, "smax must be at least window + 1 = " + std::to_string(options.window + 1));
  if (options.s_max > 62) throw Error(Errc::invalid_argument, "smax must be <= 62");
  require_quadric_dimension(options.d_max);

  VerifyReport report;
  report.options = options;
  report.scopes = resolve_scope(options.scope);
  const Context ctx{options};

  std::vector<std::pair<std::string, Check>> all;
  for (const auto& scope : report.scopes)
    for (auto& c : checks_for(scope, ctx)) all.emplace_back(scope, std::move(c));

  if (options.parallel) {
    std::vector<std::future<CheckResult>> futures;
    for (const auto& [scope, c] : all)
      futures.push_back(std::async(std::launch::async, [&scope, &c] { return run_guarded(c, scope); }));
    for (auto& fut : futures) report.checks.push_back(fut.get());
  } else {
    for (const auto& [scope, c] : all) report.checks.push_back(run_guarded(c, scope));
  }
  return report;
}

std::string render(const VerifyReport& report, Format format) {
  const auto& o = report.options;
  std::string scopes;
  for (std::size_t i = 0; i < report.scopes.size(); ++i) scopes += (i ? "," : "") + report.scopes[i];
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json checks = nlohmann::ordered_json::array();
      for (const auto& c : report.checks) checks.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
      nlohmann::ordered_json out;
      out["scope"] = o.scope;
      out["scopes"] = report.scopes;
      out["options"] = {{"smax", o.s_max}, {"dmax", o.d_max}, {"window", o.window}};
      out["checks"] = std::move(checks);
      out["passed"] = report.passed();
      out["failed"] = static_cast<int>(report.checks.size()) - report.passed();
      return out.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "id,pass,detail\n";
      for (const auto& c : report.checks) {
        std::string d = "\"";
        for (char ch : c.detail) d += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        os << c.id << "," << (c.pass ? "true" : "false") << "," << d << "\"\n";
      }
      return os.str();
    }
    case Format::text: {
      std::ostringstream os;
      os << "verify scope=" << o.scope << " (" << scopes << ") smax=" << o.s_max << " dmax=" << o.d_max
         << " window=" << o.window << "\n";
      for (const auto& c : report.checks) os << (c.pass ? "PASS  " : "FAIL  ") << c.id << "  " << c.detail << "\n";
      os << "passed " << report.passed() << "/" << report.checks.size() << "\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace etq
