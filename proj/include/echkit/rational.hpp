#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "echkit/errors.hpp"

namespace echkit {

// Exact rational on int64 with __int128 intermediates. All actions and
// rotation numbers in the calculus are small, so overflow is a hard error
// rather than a silent wrap.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  static Rational parse(const std::string& s);
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw ValidationError("rational division by zero");
    return make128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // floor(num/den) as exact integer
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  long long ceil() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  double to_double() const { return (double)num_ / (double)den_; }

private:
  void normalize() {
    if (den_ == 0) throw ValidationError("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }
  static Rational make128(__int128 n, __int128 d) {
    if (d == 0) throw ValidationError("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d, t;
    while (b) { t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    const __int128 lim = (__int128)INT64_MAX;
    if (n > lim || n < -lim || d > lim) throw NumericError("rational overflow");
    Rational r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }

  long long num_, den_;
};

inline Rational Rational::parse(const std::string& s) {
  auto bad = [&] { throw ValidationError("malformed rational '" + s + "' (expected p or p/q)"); };
  if (s.empty()) bad();
  size_t slash = s.find('/');
  try {
    size_t used = 0;
    long long n = std::stoll(s.substr(0, slash), &used);
    if (slash == std::string::npos) {
      if (used != s.size()) bad();
      return Rational(n);
    }
    size_t used2 = 0;
    std::string dpart = s.substr(slash + 1);
    long long d = std::stoll(dpart, &used2);
    if (used != slash || used2 != dpart.size()) bad();
    return Rational(n, d);
  } catch (const std::logic_error&) {
    bad();
  }
  return Rational();  // unreachable
}

inline std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace echkit
