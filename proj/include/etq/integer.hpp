#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace etq {

/// Arbitrary-precision signed integer.
///
/// A thin value wrapper over boost's cpp_int. The wrapper exists so Eigen sees
/// a plain scalar with ordinary operators; the bare multiprecision number trips
/// template detection inside Eigen's expression machinery.
class Integer {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Integer() = default;
  Integer(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(Rep v) : v_(std::move(v)) {}

  const Rep& rep() const { return v_; }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(Rep(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(Rep(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(Rep(a.v_ * b.v_)); }
  /// Truncating division, as for built-in integers.
  friend Integer operator/(const Integer& a, const Integer& b) { return Integer(Rep(a.v_ / b.v_)); }
  friend Integer operator%(const Integer& a, const Integer& b) { return Integer(Rep(a.v_ % b.v_)); }
  Integer operator-() const { return Integer(Rep(-v_)); }

  Integer& operator+=(const Integer& b) { v_ += b.v_; return *this; }
  Integer& operator-=(const Integer& b) { v_ -= b.v_; return *this; }
  Integer& operator*=(const Integer& b) { v_ *= b.v_; return *this; }
  Integer& operator/=(const Integer& b) { v_ /= b.v_; return *this; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ == b.v_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  bool fits_int64() const;
  /// Throws InvalidArgument when the value does not fit.
  std::int64_t to_int64() const;
  std::string to_string() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

 private:
  Rep v_;
};

Integer abs(const Integer& a);

/// Floor-mod: result in [0, |m|) for m != 0.
Integer mod(const Integer& a, const Integer& m);

/// Floor division; a = floor_div(a, b) * b + mod(a, b) when b > 0.
Integer floor_div(const Integer& a, const Integer& b);

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

/// Extended gcd: returns g = gcd(a, b) >= 0 with x*a + y*b = g.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

Integer pow2(int k);

/// Exponent of 2 in a nonzero integer.
int two_adic_valuation(const Integer& a);

/// Exponent k when |a| = 2^k, otherwise -1.
int log2_exact(const Integer& a);

inline bool is_power_of_two(const Integer& a) { return a.sign() > 0 && log2_exact(a) >= 0; }

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

}  // namespace etq

namespace Eigen {
template <>
struct NumTraits<etq::Integer> : GenericNumTraits<etq::Integer> {
  using Real = etq::Integer;
  using NonInteger = etq::Integer;
  using Literal = etq::Integer;
  using Nested = etq::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
