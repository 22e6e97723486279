#include "etq/quadric_engine.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "etq/error.hpp"
#include "etq/rost_tables.hpp"

namespace etq {

namespace {

std::string term_string(int n, int j) { return j == 0 ? "M" + std::to_string(n) : "M" + std::to_string(n) + "*T" + std::to_string(j); }

// Cohomology of Spec C in the given coefficients: one class in degree 0.
Graded2Group point_cohomology(const Coefficients& c) {
  Graded2Group out;
  const Integer order = c.kind == Coefficients::Kind::two_adic ? Integer(0) : pow2(c.s);
  out.add(0, {order, "1", 0, true, SourceTerm{0, 0}});
  return out;
}

std::string list_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "}";
  return os.str();
}

}  // namespace

void require_quadric_dimension(int d) {
  if (d < 1 || d > kMaxQuadricDimension)
    throw Error(Errc::invalid_dimension, "quadric dimension must lie in [1, " +
                                             std::to_string(kMaxQuadricDimension) + "], got " + std::to_string(d));
}

long long AlternatingExpansion::reconstruct() const {
  long long total = 0;
  long long sign = 1;
  for (int e : exponents) {
    total += sign * (1LL << (e + 1));
    sign = -sign;
  }
  return total + sign * residual;
}

MotiveDecomposition decompose_motive(int d) {
  require_quadric_dimension(d);
  MotiveDecomposition out;
  out.d = d;
  unsigned D = static_cast<unsigned>(d) + 2;
  int shift = 0;
  while (D > 1) {
    // 2^n < D <= 2^{n+1}
    const int n = std::bit_width(D - 1) - 1;
    const int m = static_cast<int>(D - (1u << n));
    for (int i = 0; i < m; ++i) out.terms.push_back({n, shift + i});
    out.expansion.exponents.push_back(n);
    D = (1u << (n + 1)) - D;
    shift += m;
  }
  out.expansion.residual = static_cast<int>(D);
  return out;
}

AlternatingExpansion alternating_expansion(int d) { return decompose_motive(d).expansion; }

int MotiveDecomposition::max_rost_index() const {
  int best = 0;
  for (const auto& t : terms) best = std::max(best, t.n);
  return best;
}

std::string MotiveDecomposition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + term_string(terms[i].n, terms[i].j);
  return out;
}

std::string MotiveDecomposition::compact() const {
  std::string out;
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t k = i;
    while (k + 1 < terms.size() && terms[k + 1].n == terms[i].n && terms[k + 1].j == terms[k].j + 1) ++k;
    if (!out.empty()) out += " + ";
    if (k == i)
      out += term_string(terms[i].n, terms[i].j);
    else
      out += "M" + std::to_string(terms[i].n) + "*T" + std::to_string(terms[i].j) + "..T" + std::to_string(terms[k].j);
    i = k + 1;
  }
  return out;
}

Graded2Group assemble_cohomology(int d, const Coefficients& coefficients) {
  const MotiveDecomposition dec = decompose_motive(d);
  // Terms repeat the same motive under many twists, so each base table is built once.
  std::map<int, Graded2Group> bases;
  Graded2Group out;
  for (const auto& t : dec.terms) {
    auto it = bases.find(t.n);
    if (it == bases.end())
      it = bases.emplace(t.n, t.n == 0 ? point_cohomology(coefficients) : rost_cohomology(t.n, coefficients)).first;
    out.append(it->second.tate_twisted(t.j));
  }
  out.sort();
  return out;
}

bool NonalgebraicReport::has_nonalgebraic() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const NonalgebraicEntry& e) { return e.dimension > 0 || e.free_quotient > 0; });
}

std::vector<int> NonalgebraicReport::degrees_mod4() const {
  std::vector<int> out;
  for (const auto& e : entries)
    if (e.dimension > 0 && e.degree % 4 == 0) out.push_back(e.degree);
  return out;
}

std::vector<int> NonalgebraicReport::degrees_odd_twist() const {
  std::vector<int> out;
  for (const auto& e : entries)
    if (e.dimension > 0 && e.degree % 4 == 2) out.push_back(e.degree);
  return out;
}

const NonalgebraicEntry& NonalgebraicReport::at(int degree) const {
  for (const auto& e : entries)
    if (e.degree == degree) return e;
  throw Error(Errc::out_of_region, "degree " + std::to_string(degree) + " is not in the report for Q^" +
                                       std::to_string(d));
}

NonalgebraicReport nonalgebraic_report(int d) {
  const Graded2Group h = assemble_cohomology(d);
  NonalgebraicReport out;
  out.d = d;
  for (int c = 0; c <= 2 * d; c += 2) {
    NonalgebraicEntry e;
    e.degree = c;
    const auto it = h.degrees().find(c);
    if (it == h.degrees().end()) {
      out.entries.push_back(std::move(e));
      continue;
    }
    for (const auto& s : it->second) {
      if (s.algebraic) continue;
      // Every torsion summand has order 2, so each one adds one dimension.
      if (s.is_free())
        ++e.free_quotient;
      else
        ++e.dimension;
      e.witnesses.push_back(s.label + "@" + term_string(s.source->n, s.source->j));
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

bool has_nonalgebraic_by_report(int d) { return nonalgebraic_report(d).has_nonalgebraic(); }

bool has_nonalgebraic_by_terms(int d) { return decompose_motive(d).max_rost_index() >= 3; }

bool has_nonalgebraic_closed_form(int d) {
  require_quadric_dimension(d);
  return d >= 7;
}

int family_dimension(QuadricFamily family, int n) {
  require_rost_index(n);
  switch (family) {
    case QuadricFamily::norm:
    case QuadricFamily::minimal_neighbor: return (1 << n) - 1;
    case QuadricFamily::maximal_neighbor: return (1 << (n + 1)) - 3;
  }
  return 0;
}

std::string to_string(QuadricFamily family) {
  switch (family) {
    case QuadricFamily::norm: return "norm";
    case QuadricFamily::minimal_neighbor: return "minimal_neighbor";
    case QuadricFamily::maximal_neighbor: return "maximal_neighbor";
  }
  return {};
}

std::vector<ClaimVerdict> check_theorem_claims(QuadricFamily family, int n) {
  const int d = family_dimension(family, n);
  require_quadric_dimension(d);
  const NonalgebraicReport report = nonalgebraic_report(d);

  ClaimVerdict subset;
  subset.d = d;
  if (family == QuadricFamily::norm) {
    subset.claim = "norm n=" + std::to_string(n) + ": nonzero quotient for c = 0 mod 4, 4 <= c <= " +
                   std::to_string((1 << (n + 1)) - 12);
    for (int c = 4; c <= (1 << (n + 1)) - 12; c += 4) subset.claimed.push_back(c);
  } else {
    subset.claim = to_string(family) + " n=" + std::to_string(n) + ": nonzero quotient for c = 0 mod 4, 0 < c < " +
                   std::to_string(2 * d - 8);
    for (int c = 4; c < 2 * d - 8; c += 4) subset.claimed.push_back(c);
  }
  for (int c : subset.claimed) (report.at(c).dimension > 0 ? subset.witnessed : subset.missing).push_back(c);
  subset.pass = subset.missing.empty();
  subset.detail = "claimed " + list_string(subset.claimed) + ", missing " + list_string(subset.missing);

  std::vector<ClaimVerdict> out{subset};
  if (family == QuadricFamily::norm) {
    ClaimVerdict free_part;
    free_part.d = d;
    free_part.claim = "norm n=" + std::to_string(n) + ": free part fully algebraic";
    for (const auto& e : report.entries)
      if (e.free_quotient > 0) free_part.missing.push_back(e.degree);
    free_part.pass = free_part.missing.empty();
    free_part.detail = "degrees with a non-algebraic free class " + list_string(free_part.missing);
    out.push_back(free_part);
  }
  return out;
}

ClaimVerdict check_boundary_claim(int d_max) {
  require_quadric_dimension(d_max);
  ClaimVerdict v;
  v.claim = "has-nonalgebraic(d) iff d >= 7 for 1 <= d <= " + std::to_string(d_max);
  v.d = d_max;
  for (int d = 1; d <= d_max; ++d) {
    const bool by_report = has_nonalgebraic_by_report(d);
    const bool by_terms = has_nonalgebraic_by_terms(d);
    const bool closed = has_nonalgebraic_closed_form(d);
    if (by_report == closed && by_terms == closed) {
      v.witnessed.push_back(d);
    } else {
      v.missing.push_back(d);
    }
  }
  v.pass = v.missing.empty();
  v.detail = std::to_string(v.witnessed.size()) + " dimensions agree, disagreeing: " + list_string(v.missing);
  return v;
}

}  // namespace etq
