#include "etq/abelian.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <sstream>

#include "etq/error.hpp"
#include "etq/smith.hpp"

namespace etq {

namespace {

IntMatrix diagonal_matrix(const std::vector<Integer>& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

std::vector<Integer> orders_of(const FinAb2Group& g) {
  std::vector<Integer> out;
  out.reserve(g.generator_count());
  for (const auto& s : g.summands()) out.push_back(s.order);
  return out;
}

// Append primes until every label is distinct.
void make_labels_unique(std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (auto& l : labels) {
    while (seen.count(l)) l += "'";
    seen.insert(l);
  }
}

std::string combination_label(const FinAb2Group& target, const IntVector& coords) {
  std::string out;
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    const Integer& c = coords(i);
    if (c.is_zero()) continue;
    const std::string& name = target[static_cast<std::size_t>(i)].label;
    if (!out.empty()) out += c.sign() < 0 ? "-" : "+";
    else if (c.sign() < 0) out += "-";
    Integer a = abs(c);
    if (a != Integer(1)) out += a.to_string() + "*";
    out += name;
  }
  return out.empty() ? "0" : out;
}

// Smallest contributing label, preferring one not in `taken`.
std::string dominant_label(const FinAb2Group& target, const IntVector& coords, const std::set<std::string>& taken = {}) {
  std::string best, best_free;
  bool found = false, found_free = false;
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    if (coords(i).is_zero()) continue;
    const std::string& name = target[static_cast<std::size_t>(i)].label;
    if (!found || name < best) {
      best = name;
      found = true;
    }
    if (!taken.count(name) && (!found_free || name < best_free)) {
      best_free = name;
      found_free = true;
    }
  }
  if (found_free) return best_free;
  return found ? best : "0";
}

// Split an invariant factor into its 2-primary order and odd cofactor.
std::pair<Integer, Integer> two_primary(const Integer& d) {
  if (d.is_zero()) return {Integer(0), Integer(1)};
  const int v = two_adic_valuation(d);
  Integer p = pow2(v);
  return {p, abs(d) / p};
}

// Basis (as columns) of the lattice {x in Z^n : h.matrix() * x lies in the
// relation lattice of the codomain}. Always contains the domain relations.
IntMatrix preimage_lattice_basis(const GroupHom& h) {
  const IntMatrix& A = h.matrix();
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  IntMatrix M(m, n + m);
  M.leftCols(n) = A;
  M.rightCols(m) = -diagonal_matrix(orders_of(h.codomain()));
  auto snf = smith_normal_form(M);
  const Eigen::Index nullity = (n + m) - snf.rank;
  IntMatrix generators = snf.V.block(0, snf.rank, n, nullity);
  if (generators.cols() == 0) return IntMatrix(n, 0);

  auto gs = smith_normal_form(generators);
  IntMatrix basis(n, gs.rank);
  for (Eigen::Index i = 0; i < gs.rank; ++i) basis.col(i) = gs.U_inverse.col(i) * gs.D(i, i);
  return basis;
}

}  // namespace

std::string GroupOrder::to_string() const {
  std::ostringstream os;
  os << "(free " << free_rank << ", 2^" << torsion_log2 << ")";
  return os.str();
}

FinAb2Group::FinAb2Group(std::vector<CyclicSummand> summands) : summands_(std::move(summands)) {
  std::set<std::string> labels;
  for (const auto& s : summands_) {
    if (!s.order.is_zero() && (log2_exact(s.order) < 1 || s.order.sign() < 0))
      throw Error(Errc::invalid_argument, "summand order must be 0 or a power of two >= 2, got " + s.order.to_string());
    if (!labels.insert(s.label).second)
      throw Error(Errc::invalid_argument, "duplicate generator label '" + s.label + "'");
  }
}

FinAb2Group FinAb2Group::free_module(const std::vector<std::string>& labels) {
  std::vector<CyclicSummand> s;
  s.reserve(labels.size());
  for (const auto& l : labels) s.push_back({Integer(0), l});
  return FinAb2Group(std::move(s));
}

FinAb2Group FinAb2Group::cyclic(const Integer& order, std::string label) {
  if (order == Integer(1)) return {};
  return FinAb2Group({{order, std::move(label)}});
}

int FinAb2Group::free_rank() const {
  return static_cast<int>(std::count_if(summands_.begin(), summands_.end(), [](const auto& s) { return s.is_free(); }));
}

std::vector<Integer> FinAb2Group::torsion_orders() const {
  std::vector<Integer> out;
  for (const auto& s : summands_)
    if (!s.is_free()) out.push_back(s.order);
  std::sort(out.begin(), out.end());
  return out;
}

GroupOrder FinAb2Group::order() const {
  GroupOrder o;
  for (const auto& s : summands_) {
    if (s.is_free()) ++o.free_rank;
    else o.torsion_log2 += log2_exact(s.order);
  }
  return o;
}

bool FinAb2Group::isomorphic_to(const FinAb2Group& other) const {
  return free_rank() == other.free_rank() && torsion_orders() == other.torsion_orders();
}

IntVector FinAb2Group::reduce(const IntVector& x) const {
  IntVector out = x;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const Integer& o = summands_[static_cast<std::size_t>(i)].order;
    if (!o.is_zero()) out(i) = mod(out(i), o);
  }
  return out;
}

std::string FinAb2Group::to_string() const {
  if (summands_.empty()) return "0";
  // Group consecutive summands of equal order: Z2{1,pi} + Z/2{rhobar_4}.
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < summands_.size()) {
    std::size_t j = i;
    while (j < summands_.size() && summands_[j].order == summands_[i].order) ++j;
    if (!first) os << " + ";
    first = false;
    if (summands_[i].is_free()) os << "Z2{";
    else os << "Z/" << summands_[i].order << "{";
    for (std::size_t k = i; k < j; ++k) os << (k > i ? "," : "") << summands_[k].label;
    os << "}";
    i = j;
  }
  return os.str();
}

GroupHom::GroupHom(FinAb2Group domain, FinAb2Group codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  const auto rows = static_cast<Eigen::Index>(codomain_.generator_count());
  const auto cols = static_cast<Eigen::Index>(domain_.generator_count());
  if (matrix_.rows() != rows || matrix_.cols() != cols)
    throw Error(Errc::invalid_hom, "matrix shape does not match domain and codomain");
  for (Eigen::Index j = 0; j < cols; ++j) {
    matrix_.col(j) = codomain_.reduce(matrix_.col(j));
    const Integer& o = domain_[static_cast<std::size_t>(j)].order;
    if (o.is_zero()) continue;
    IntVector killed = codomain_.reduce(IntVector(matrix_.col(j) * o));
    for (Eigen::Index i = 0; i < rows; ++i)
      if (!killed(i).is_zero())
        throw Error(Errc::invalid_hom, "generator '" + domain_[static_cast<std::size_t>(j)].label +
                                           "' of order " + o.to_string() + " has an image of larger order");
  }
}

GroupHom GroupHom::zero(FinAb2Group domain, FinAb2Group codomain) {
  const auto rows = static_cast<Eigen::Index>(codomain.generator_count());
  const auto cols = static_cast<Eigen::Index>(domain.generator_count());
  return GroupHom(std::move(domain), std::move(codomain), IntMatrix::Zero(rows, cols));
}

GroupHom GroupHom::identity(const FinAb2Group& group) {
  const auto n = static_cast<Eigen::Index>(group.generator_count());
  return GroupHom(group, group, IntMatrix::Identity(n, n));
}

IntVector GroupHom::apply(const IntVector& x) const { return codomain_.reduce(IntVector(matrix_ * x)); }

bool GroupHom::is_zero() const {
  for (Eigen::Index j = 0; j < matrix_.cols(); ++j)
    for (Eigen::Index i = 0; i < matrix_.rows(); ++i)
      if (!matrix_(i, j).is_zero()) return false;
  return true;
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!(inner.codomain() == outer.domain()))
    throw Error(Errc::invalid_hom, "composition of maps with mismatched groups");
  return GroupHom(inner.domain(), outer.codomain(), outer.matrix() * inner.matrix());
}

Subgroup kernel(const GroupHom& h) {
  const FinAb2Group& G = h.domain();
  const auto n = static_cast<Eigen::Index>(G.generator_count());
  IntMatrix B = preimage_lattice_basis(h);
  const Eigen::Index k = B.cols();

  // Express the domain relations in the basis B: B * C = diag(orders).
  auto bs = smith_normal_form(B);
  IntMatrix rel = diagonal_matrix(orders_of(G));
  IntMatrix y = bs.U * rel;
  IntMatrix w(k, n);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < n; ++j) w(i, j) = y(i, j) / bs.D(i, i);
  IntMatrix C = bs.V * w;

  auto cs = smith_normal_form(C);
  std::vector<CyclicSummand> summands;
  std::vector<IntVector> gens;
  for (Eigen::Index i = 0; i < k; ++i) {
    Integer d = i < cs.rank ? cs.D(i, i) : Integer(0);
    auto [order, odd] = two_primary(d);
    if (order == Integer(1)) continue;
    IntVector g = G.reduce(IntVector(B * cs.U_inverse.col(i) * odd));
    gens.push_back(g);
    summands.push_back({order, combination_label(G, g)});
  }
  std::vector<std::string> labels;
  for (auto& s : summands) labels.push_back(s.label);
  make_labels_unique(labels);
  for (std::size_t i = 0; i < summands.size(); ++i) summands[i].label = labels[i];

  FinAb2Group K(std::move(summands));
  IntMatrix incl(n, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) incl.col(static_cast<Eigen::Index>(i)) = gens[i];
  GroupHom inclusion(K, G, incl);
  return {std::move(K), std::move(inclusion)};
}

Subgroup image(const GroupHom& h) {
  const FinAb2Group& H = h.codomain();
  const auto n = static_cast<Eigen::Index>(h.domain().generator_count());
  IntMatrix B = preimage_lattice_basis(h);

  // Image = Z^n / span(B), generated by the images of U^{-1} columns.
  std::vector<CyclicSummand> summands;
  std::vector<IntVector> gens;
  auto bs = smith_normal_form(B);
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer d = i < bs.rank ? bs.D(i, i) : Integer(0);
    auto [order, odd] = two_primary(d);
    if (order == Integer(1)) continue;
    IntVector g = h.apply(IntVector(bs.U_inverse.col(i) * odd));
    gens.push_back(g);
    summands.push_back({order, combination_label(H, g)});
  }
  std::vector<std::string> labels;
  for (auto& s : summands) labels.push_back(s.label);
  make_labels_unique(labels);
  for (std::size_t i = 0; i < summands.size(); ++i) summands[i].label = labels[i];

  FinAb2Group I(std::move(summands));
  IntMatrix incl(static_cast<Eigen::Index>(H.generator_count()), static_cast<Eigen::Index>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) incl.col(static_cast<Eigen::Index>(i)) = gens[i];
  GroupHom inclusion(I, H, incl);
  return {std::move(I), std::move(inclusion)};
}

Quotient cokernel(const GroupHom& h) {
  const FinAb2Group& H = h.codomain();
  const auto m = static_cast<Eigen::Index>(H.generator_count());
  const auto n = static_cast<Eigen::Index>(h.domain().generator_count());
  IntMatrix R(m, n + m);
  R.leftCols(n) = h.matrix();
  R.rightCols(m) = diagonal_matrix(orders_of(H));
  auto snf = smith_normal_form(R);

  std::vector<CyclicSummand> summands;
  std::vector<Eigen::Index> rows;
  std::set<std::string> taken;
  for (Eigen::Index i = 0; i < m; ++i) {
    Integer d = i < snf.rank ? snf.D(i, i) : Integer(0);
    auto [order, odd] = two_primary(d);
    if (order == Integer(1)) continue;
    summands.push_back({order, dominant_label(H, H.reduce(IntVector(snf.U_inverse.col(i))), taken)});
    taken.insert(summands.back().label);
    rows.push_back(i);
  }
  std::vector<std::string> labels;
  for (auto& s : summands) labels.push_back(s.label);
  make_labels_unique(labels);
  for (std::size_t i = 0; i < summands.size(); ++i) summands[i].label = labels[i];

  FinAb2Group Q(std::move(summands));
  IntMatrix proj(static_cast<Eigen::Index>(rows.size()), m);
  for (std::size_t r = 0; r < rows.size(); ++r) proj.row(static_cast<Eigen::Index>(r)) = snf.U.row(rows[r]);
  GroupHom projection(H, Q, proj);
  return {std::move(Q), std::move(projection)};
}

FinAb2Group inverse_limit(std::span<const FinAb2Group> tower, std::span<const GroupHom> maps, int window) {
  if (window < 3) throw Error(Errc::invalid_argument, "stabilization window must be >= 3");
  const auto depth = static_cast<int>(tower.size());
  if (static_cast<int>(maps.size()) + 1 != depth)
    throw Error(Errc::invalid_argument, "a tower of depth S needs exactly S-1 maps");
  for (int s = 0; s + 1 < depth; ++s) {
    if (!maps[s].domain().isomorphic_to(tower[s + 1]) || !maps[s].codomain().isomorphic_to(tower[s]))
      throw Error(Errc::invalid_argument, "tower map " + std::to_string(s) + " does not match the tower groups");
  }
  if (depth < window + 1)
    throw Error(Errc::not_stabilized, "tower depth " + std::to_string(depth) + " too small for window " +
                                          std::to_string(window));

  // Every analysed level k sits strictly below the window of source levels j.
  const int top = depth - 1;
  const int k_hi = top - window;
  const int k_lo = std::max(0, k_hi - window + 1);

  // reach[k] = composite map tower[j] -> tower[k], built downward for each j.
  auto composite = [&](int j, int k) {
    GroupHom f = GroupHom::identity(tower[j]);
    for (int s = j - 1; s >= k; --s) f = compose(maps[s], f);
    return f;
  };

  constexpr int kFreeExponent = INT_MAX;
  auto exponents = [&](const FinAb2Group& g) {
    std::multiset<int> e;
    for (const auto& s : g.summands()) e.insert(s.is_free() ? kFreeExponent : log2_exact(s.order));
    return e;
  };

  std::vector<std::multiset<int>> levels;
  Subgroup last_image;
  for (int k = k_lo; k <= k_hi; ++k) {
    GroupOrder stable;
    for (int j = top - window + 1; j <= top; ++j) {
      GroupOrder o = image(composite(j, k)).group.order();
      if (j == top - window + 1) stable = o;
      else if (!(o == stable))
        throw Error(Errc::not_stabilized, "images into level " + std::to_string(k + 1) + " still shrink at level " +
                                              std::to_string(j + 1));
    }
    Subgroup im = image(composite(top, k));
    levels.push_back(exponents(im.group));
    if (k == k_hi) last_image = std::move(im);
  }

  // Summand orders shared by every analysed level are the torsion of the
  // limit; the remainder must grow by exactly one power of 2 per level.
  std::multiset<int> constant = levels.front();
  for (const auto& e : levels) {
    std::multiset<int> both;
    std::set_intersection(constant.begin(), constant.end(), e.begin(), e.end(), std::inserter(both, both.begin()));
    constant = std::move(both);
  }
  std::vector<std::vector<int>> growing;
  for (const auto& e : levels) {
    std::vector<int> rest;
    std::set_difference(e.begin(), e.end(), constant.begin(), constant.end(), std::back_inserter(rest));
    growing.push_back(std::move(rest));
  }
  for (std::size_t i = 0; i + 1 < growing.size(); ++i) {
    bool ok = growing[i].size() == growing[i + 1].size();
    for (std::size_t r = 0; ok && r < growing[i].size(); ++r)
      ok = growing[i][r] != kFreeExponent && growing[i + 1][r] == growing[i][r] + 1;
    if (!ok)
      throw Error(Errc::not_stabilized, "stable images do not follow a constant-or-doubling pattern");
  }

  // Name the limit summands after the stable image at the deepest analysed level.
  const FinAb2Group& base = tower[k_hi];
  std::multiset<int> torsion_left = constant;
  std::vector<CyclicSummand> torsion, free;
  const auto& img = last_image.group;
  for (std::size_t i = 0; i < img.generator_count(); ++i) {
    IntVector coords = last_image.inclusion.matrix().col(static_cast<Eigen::Index>(i));
    std::string label = dominant_label(base, coords);
    const int e = img[i].is_free() ? kFreeExponent : log2_exact(img[i].order);
    auto it = torsion_left.find(e);
    if (it != torsion_left.end()) {
      torsion_left.erase(it);
      torsion.push_back({e == kFreeExponent ? Integer(0) : pow2(e), label});
    } else {
      free.push_back({Integer(0), label});
    }
  }
  std::vector<CyclicSummand> all = std::move(free);
  all.insert(all.end(), torsion.begin(), torsion.end());
  std::vector<std::string> labels;
  for (auto& s : all) labels.push_back(s.label);
  make_labels_unique(labels);
  for (std::size_t i = 0; i < all.size(); ++i) all[i].label = labels[i];
  return FinAb2Group(std::move(all));
}

}  // namespace etq
