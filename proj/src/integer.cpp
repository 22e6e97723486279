#include "etq/integer.hpp"

#include <limits>

#include "etq/error.hpp"

namespace etq {

bool Integer::fits_int64() const {
  return v_ >= std::numeric_limits<std::int64_t>::min() && v_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw Error(Errc::invalid_argument, to_string() + " does not fit in 64 bits");
  return v_.convert_to<std::int64_t>();
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r.sign() < 0) r += abs(m);
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a % b;
  if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (!y.is_zero()) {
    Integer r = x % y;
    x = y;
    y = r;
  }
  return x;
}

Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r.sign() < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Integer pow2(int k) {
  Integer::Rep r = 1;
  r <<= k;
  return Integer(r);
}

int two_adic_valuation(const Integer& a) {
  if (a.is_zero()) return -1;
  return static_cast<int>(boost::multiprecision::lsb(boost::multiprecision::abs(a.rep())));
}

int log2_exact(const Integer& a) {
  if (a.is_zero()) return -1;
  Integer::Rep m = boost::multiprecision::abs(a.rep());
  auto low = boost::multiprecision::lsb(m);
  auto high = boost::multiprecision::msb(m);
  return low == high ? static_cast<int>(low) : -1;
}

}  // namespace etq
