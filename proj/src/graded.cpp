#include "etq/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace etq {

void Graded2Group::add(int degree, GradedSummand summand) { by_degree_[degree].push_back(std::move(summand)); }

void Graded2Group::add(int degree, const FinAb2Group& group, int twist, bool algebraic,
                       std::optional<SourceTerm> source) {
  for (const auto& s : group.summands()) add(degree, {s.order, s.label, twist, algebraic, source});
}

std::vector<GradedSummand> Graded2Group::at(int degree) const {
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? std::vector<GradedSummand>{} : it->second;
}

const std::vector<GradedSummand>& Graded2Group::summands_in(int degree) const {
  static const std::vector<GradedSummand> kEmpty;
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? kEmpty : it->second;
}

int Graded2Group::free_rank(int degree) const {
  const auto& list = summands_in(degree);
  return static_cast<int>(std::count_if(list.begin(), list.end(), [](const GradedSummand& s) { return s.is_free(); }));
}

std::vector<Integer> Graded2Group::torsion_orders(int degree) const {
  std::vector<Integer> out;
  for (const auto& s : summands_in(degree))
    if (!s.is_free()) out.push_back(s.order);
  std::sort(out.begin(), out.end());
  return out;
}

int Graded2Group::total_free_rank() const {
  int r = 0;
  for (const auto& [deg, list] : by_degree_) r += free_rank(deg);
  return r;
}

int Graded2Group::total_torsion_count() const {
  int r = 0;
  for (const auto& [deg, list] : by_degree_)
    r += static_cast<int>(std::count_if(list.begin(), list.end(), [](const GradedSummand& s) { return !s.is_free(); }));
  return r;
}

Graded2Group Graded2Group::tate_twisted(int j) const {
  Graded2Group out;
  for (const auto& [deg, list] : by_degree_) {
    for (auto s : list) {
      s.twist = (s.twist + j) % 2;
      if (s.source) s.source->j += j;
      out.add(deg + 2 * j, std::move(s));
    }
  }
  return out;
}

void Graded2Group::append(Graded2Group other) {
  for (auto& [deg, list] : other.by_degree_) {
    auto& target = by_degree_[deg];
    std::move(list.begin(), list.end(), std::back_inserter(target));
  }
}

void Graded2Group::sort() {
  for (auto& [deg, list] : by_degree_) {
    std::stable_sort(list.begin(), list.end(), [](const GradedSummand& a, const GradedSummand& b) {
      const int an = a.source ? a.source->n : -1, bn = b.source ? b.source->n : -1;
      const int aj = a.source ? a.source->j : -1, bj = b.source ? b.source->j : -1;
      if (an != bn) return an > bn;
      if (aj != bj) return aj < bj;
      return a.label < b.label;
    });
  }
}

bool Graded2Group::same_ranks(const Graded2Group& other) const {
  std::set<int> degs;
  for (const auto& [d, l] : by_degree_) degs.insert(d);
  for (const auto& [d, l] : other.by_degree_) degs.insert(d);
  for (int d : degs)
    if (free_rank(d) != other.free_rank(d) || torsion_orders(d) != other.torsion_orders(d)) return false;
  return true;
}

std::string describe(const std::vector<GradedSummand>& summands) {
  if (summands.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    if (i) os << " + ";
    if (s.is_free()) os << "Z2{" << s.label << "}";
    else os << "Z/" << s.order << "{" << s.label << "}";
    if (s.algebraic) os << "*";
  }
  return os.str();
}

std::string describe_ranks(int free_rank, const std::vector<Integer>& torsion) {
  std::ostringstream os;
  os << "free " << free_rank << ", torsion [";
  for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? ", " : "") << torsion[i];
  os << "]";
  return os.str();
}

std::vector<DegreeDiff> diff_summands(const Graded2Group& expected, const Graded2Group& actual) {
  std::set<int> degs;
  for (const auto& [d, l] : expected.degrees()) degs.insert(d);
  for (const auto& [d, l] : actual.degrees()) degs.insert(d);
  std::vector<DegreeDiff> out;
  for (int d : degs) {
    auto e = expected.at(d), a = actual.at(d);
    auto key = [](const GradedSummand& s) { return std::tie(s.label, s.order, s.twist, s.algebraic); };
    auto by_key = [&](const GradedSummand& x, const GradedSummand& y) { return key(x) < key(y); };
    std::sort(e.begin(), e.end(), by_key);
    std::sort(a.begin(), a.end(), by_key);
    if (e != a) out.push_back({d, describe(e), describe(a)});
  }
  return out;
}

std::vector<DegreeDiff> diff_ranks(const Graded2Group& expected, const Graded2Group& actual, int max_degree) {
  std::vector<DegreeDiff> out;
  for (int d = 0; d <= max_degree; ++d) {
    const int ef = expected.free_rank(d), af = actual.free_rank(d);
    auto et = expected.torsion_orders(d), at = actual.torsion_orders(d);
    if (ef != af || et != at) out.push_back({d, describe_ranks(ef, et), describe_ranks(af, at)});
  }
  return out;
}

}  // namespace etq
