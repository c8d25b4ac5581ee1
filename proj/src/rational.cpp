#include "dwlab/rational.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace dwlab {

namespace {

using i128 = __int128;

// Narrow an __int128 back to long long, failing loudly on overflow.  The
// exponent calculus only ever touches numbers like d^3, so an actual overflow
// here means a logic error rather than a legitimately huge value.
long long narrow(i128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational: intermediate overflow");
  }
  return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Build a canonical rational from a 128-bit numerator/denominator; reduction
// happens in 128 bits, then the (already canonical) values round-trip through
// the public constructor, whose own gcd pass is a no-op.
Rational make(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
  if (den_ == 0) throw std::domain_error("rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  i128 g = gcd128(num_, den_);
  if (g > 1) {
    num_ = static_cast<long long>(num_ / g);
    den_ = static_cast<long long>(den_ / g);
  }
}

double Rational::to_double() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::inverse() const {
  if (is_infinite()) return Rational(0);
  if (num_ == 0) return infinity();
  return Rational(den_, num_);
}

Rational Rational::operator-() const {
  if (is_infinite()) throw std::domain_error("rational: negating infinity");
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (is_infinite() || o.is_infinite()) {
    *this = infinity();
    return *this;
  }
  *this = make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (o.is_infinite()) throw std::domain_error("rational: inf subtrahend");
  if (is_infinite()) return *this;
  *this = make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (is_infinite() || o.is_infinite()) {
    // 0 * inf is left undefined on purpose: it never arises in the calculus.
    if ((is_infinite() && o.num_ == 0 && !o.is_infinite()) ||
        (o.is_infinite() && num_ == 0 && !is_infinite())) {
      throw std::domain_error("rational: 0 * inf");
    }
    if ((!is_infinite() && num_ < 0) || (!o.is_infinite() && o.num_ < 0)) {
      throw std::domain_error("rational: negative * inf");
    }
    *this = infinity();
    return *this;
  }
  *this = make(i128(num_) * o.num_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator<(const Rational& a, const Rational& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  // trim
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  auto e = s.find_last_not_of(ws);
  if (b == std::string::npos) throw std::invalid_argument("rational: empty string");
  s = s.substr(b, e - b + 1);
  if (s == "inf" || s == "+inf" || s == "infinity") return infinity();

  auto parse_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("rational: bad integer");
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("rational: bad integer '" + t + "'");
    }
    if (pos != t.size()) throw std::invalid_argument("rational: bad integer '" + t + "'");
    return v;
  };

  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  long long n = parse_int(s.substr(0, slash));
  long long d = parse_int(s.substr(slash + 1));
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dwlab
