// Exact rational scalar type for exponent arithmetic.
//
// All admissibility / derivative-loss logic in this library works over exact
// rationals: the case selection involves equality tests that are meaningless
// in floating point.  A distinguished value +infinity is supported so the
// time exponent q = inf can be carried around, with the convention 1/inf = 0.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace dwlab {

class Rational {
 public:
  // Value 0/1.
  constexpr Rational() : num_(0), den_(1) {}
  // Integer n/1 (implicit: lets literals participate in arithmetic).
  constexpr Rational(long long n) : num_(n), den_(1) {}
  // n/d, normalized to den > 0 and gcd(|num|, den) = 1.  Throws on d = 0.
  Rational(long long n, long long d);

  static constexpr Rational infinity() { return Rational(1, 0, RawTag{}); }

  bool is_infinite() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }
  long long num() const { return num_; }
  long long den() const { return den_; }
  double to_double() const;

  // 1/x with the conventions 1/inf = 0 and 1/0 = inf.
  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  // Total order; +inf compares greater than every finite value.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // "n" for integers, "num/den" otherwise, "inf" for infinity.
  std::string str() const;
  // Accepts "n", "num/den", "inf" (and "+inf"/"infinity").  Throws on junk.
  static Rational parse(const std::string& text);

 private:
  struct RawTag {};
  // Bypasses normalization; used only with already-canonical (num, den).
  constexpr Rational(long long n, long long d, RawTag) : num_(n), den_(d) {}

  long long num_;
  long long den_;  // > 0 for finite values, 0 for +inf
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Convenience maker: rat(a, b) = a/b.
inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

}  // namespace dwlab
