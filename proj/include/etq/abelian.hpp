#pragma once

#include <span>
#include <string>
#include <vector>

#include "etq/integer.hpp"

namespace etq {

inline constexpr int kDefaultStabilizationWindow = 4;

/// One cyclic summand of a finitely generated 2-local abelian group.
/// order == 0 means a free summand (a copy of the 2-adic integers); otherwise
/// order is a power of two, at least 2.
struct CyclicSummand {
  Integer order;
  std::string label;

  bool is_free() const { return order.is_zero(); }
  friend bool operator==(const CyclicSummand&, const CyclicSummand&) = default;
};

/// Size of a group: free rank plus log2 of the torsion order.
/// Orders of direct sums and extensions multiply, which here means adding.
struct GroupOrder {
  int free_rank = 0;
  int torsion_log2 = 0;

  friend GroupOrder operator*(GroupOrder a, GroupOrder b) {
    return {a.free_rank + b.free_rank, a.torsion_log2 + b.torsion_log2};
  }
  friend bool operator==(const GroupOrder&, const GroupOrder&) = default;
  std::string to_string() const;
};

class FinAb2Group {
 public:
  FinAb2Group() = default;
  /// Throws InvalidArgument on a bad order or a repeated label.
  explicit FinAb2Group(std::vector<CyclicSummand> summands);

  static FinAb2Group free_module(const std::vector<std::string>& labels);
  static FinAb2Group cyclic(const Integer& order, std::string label);

  const std::vector<CyclicSummand>& summands() const { return summands_; }
  const CyclicSummand& operator[](std::size_t i) const { return summands_[i]; }
  std::size_t generator_count() const { return summands_.size(); }

  int free_rank() const;
  /// Finite summand orders, ascending.
  std::vector<Integer> torsion_orders() const;
  GroupOrder order() const;
  bool is_trivial() const { return summands_.empty(); }

  /// Same free rank and torsion orders; labels ignored.
  bool isomorphic_to(const FinAb2Group& other) const;

  /// Reduce a coordinate vector into canonical range.
  IntVector reduce(const IntVector& x) const;

  /// e.g. "Z2{1} + Z/2{rhobar_4}"; "0" when trivial.
  std::string to_string() const;

  friend bool operator==(const FinAb2Group&, const FinAb2Group&) = default;

 private:
  std::vector<CyclicSummand> summands_;
};

/// Homomorphism given on generators: column j is the image of domain
/// generator j in codomain coordinates.
class GroupHom {
 public:
  GroupHom() = default;
  /// Reduces entries modulo codomain orders; throws InvalidHom when the matrix
  /// does not respect the relations of the domain.
  GroupHom(FinAb2Group domain, FinAb2Group codomain, IntMatrix matrix);

  static GroupHom zero(FinAb2Group domain, FinAb2Group codomain);
  static GroupHom identity(const FinAb2Group& group);

  const FinAb2Group& domain() const { return domain_; }
  const FinAb2Group& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& x) const;
  bool is_zero() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.matrix_ == b.matrix_;
  }

 private:
  FinAb2Group domain_;
  FinAb2Group codomain_;
  IntMatrix matrix_;
};

/// outer ∘ inner.
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

struct Subgroup {
  FinAb2Group group;
  GroupHom inclusion;
};

struct Quotient {
  FinAb2Group group;
  GroupHom projection;
};

/// Kernel with its inclusion into h.domain(). Generator labels are the
/// generator's expression in domain labels, e.g. "2*g".
Subgroup kernel(const GroupHom& h);

/// Image with its inclusion into h.codomain(); labels as for kernel().
Subgroup image(const GroupHom& h);

/// Cokernel with the projection from h.codomain(). Each cokernel generator
/// keeps the lexicographically smallest codomain label contributing to it.
Quotient cokernel(const GroupHom& h);

/// Inverse limit of tower[0] <- tower[1] <- ..., with maps[s] : tower[s+1] -> tower[s].
///
/// Uses Mittag-Leffler stabilization: for each analysed level k the images
/// Im(tower[j] -> tower[k]) must be constant over the last `window` levels j.
/// The stable images must then settle into a pattern of constant-order
/// summands (torsion of the limit) and summands whose order doubles per level
/// (free summands of the limit). Anything else throws NotStabilized. Needs
/// window >= 3 and a tower depth of at least window + 1.
FinAb2Group inverse_limit(std::span<const FinAb2Group> tower, std::span<const GroupHom> maps,
                          int window = kDefaultStabilizationWindow);

}  // namespace etq
