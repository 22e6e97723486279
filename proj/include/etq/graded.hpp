#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etq/abelian.hpp"

namespace etq {

/// Summand M_n ⊗ T^j of a motive; n == 0 is the point Spec C.
struct SourceTerm {
  int n = 0;
  int j = 0;
  friend auto operator<=>(const SourceTerm&, const SourceTerm&) = default;
};

struct GradedSummand {
  Integer order;  // 0 = free over the 2-adic integers
  std::string label;
  int twist = 0;  // coefficient twist parity, 0 or 1
  bool algebraic = false;
  std::optional<SourceTerm> source;

  bool is_free() const { return order.is_zero(); }
  friend bool operator==(const GradedSummand&, const GradedSummand&) = default;
};

/// Cohomological degree -> cyclic summands living in that degree.
class Graded2Group {
 public:
  void add(int degree, GradedSummand summand);
  void add(int degree, const FinAb2Group& group, int twist, bool algebraic, std::optional<SourceTerm> source);

  const std::map<int, std::vector<GradedSummand>>& degrees() const { return by_degree_; }
  std::vector<GradedSummand> at(int degree) const;

  int free_rank(int degree) const;
  std::vector<Integer> torsion_orders(int degree) const;
  int total_free_rank() const;
  int total_torsion_count() const;

  /// Degree shift by 2j, twist by j, and source term j offset (Tate twist).
  Graded2Group tate_twisted(int j) const;
  void append(Graded2Group other);

  /// Canonical summand order inside each degree: source n descending,
  /// j ascending, then label.
  void sort();

  /// Only free ranks and torsion orders per degree are compared.
  bool same_ranks(const Graded2Group& other) const;

  friend bool operator==(const Graded2Group&, const Graded2Group&) = default;

 private:
  const std::vector<GradedSummand>& summands_in(int degree) const;

  std::map<int, std::vector<GradedSummand>> by_degree_;
};

/// Difference between two graded groups in one degree, for failure reports.
struct DegreeDiff {
  int degree = 0;
  std::string expected;
  std::string actual;
};

std::vector<DegreeDiff> diff_summands(const Graded2Group& expected, const Graded2Group& actual);
std::vector<DegreeDiff> diff_ranks(const Graded2Group& expected, const Graded2Group& actual, int max_degree);

/// "Z2{1} + Z/2{rhobar_4}"-style rendering of one degree.
std::string describe(const std::vector<GradedSummand>& summands);
/// "free 1, torsion [2, 2]"
std::string describe_ranks(int free_rank, const std::vector<Integer>& torsion);

}  // namespace etq
