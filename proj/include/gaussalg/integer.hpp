#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>

namespace gaussalg {

/// All linear algebra in this library runs on arbitrary-precision integers.
/// Determinants of exponent matrices overflow fixed-width types long before
/// the inputs stop looking harmless.
using Integer = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// Floor division, q = floor(a/b), for b > 0. cpp_int division truncates
/// toward zero, which is the wrong reduction step for Hermite forms.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (q * b != a && (a < 0) != (b < 0)) --q;
  return q;
}

struct Xgcd {
  Integer g; // gcd(a, b) >= 0
  Integer p; // p*a + q*b == g
  Integer q;
};

inline Xgcd xgcd(Integer a, Integer b) {
  Integer p0 = 1, q0 = 0, p1 = 0, q1 = 1;
  while (b != 0) {
    Integer t = a / b;
    Integer r = a - t * b;
    a = std::move(b);
    b = std::move(r);
    Integer p2 = p0 - t * p1;
    Integer q2 = q0 - t * q1;
    p0 = std::move(p1);
    q0 = std::move(q1);
    p1 = std::move(p2);
    q1 = std::move(q2);
  }
  if (a < 0) {
    a = -a;
    p0 = -p0;
    q0 = -q0;
  }
  return {std::move(a), std::move(p0), std::move(q0)};
}

} // namespace gaussalg
