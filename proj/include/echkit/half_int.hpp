#pragma once

#include <cstdint>
#include <string>

#include "echkit/errors.hpp"
#include "echkit/rational.hpp"

namespace echkit {

// Element of (1/2)Z, stored as twice its value. The universal scalar for
// indices, writhes and windings.
class HalfInt {
public:
  constexpr HalfInt() : twice_(0) {}
  constexpr explicit HalfInt(long long twice) : twice_(twice) {}

  static constexpr HalfInt whole(long long n) { return HalfInt(2 * n); }
  static constexpr HalfInt half(long long n) { return HalfInt(n); }  // n halves

  long long twice() const { return twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }
  bool is_strict_half() const { return twice_ % 2 != 0; }
  bool is_zero() const { return twice_ == 0; }

  // exact integer value; throws if strictly half-integral
  long long to_integer() const {
    if (!is_integer()) throw ValidationError("half-integer " + str() + " is not an integer");
    return twice_ / 2;
  }
  Rational to_rational() const { return Rational(twice_, 2); }
  static HalfInt from_rational(const Rational& r) {
    Rational t = r * Rational(2);
    if (!t.is_integer()) throw ValidationError("rational " + r.str() + " is not a half-integer");
    return HalfInt(t.num());
  }

  std::string str() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  HalfInt operator-() const { return HalfInt(-twice_); }
  friend HalfInt operator*(long long k, HalfInt a) { return HalfInt(k * a.twice_); }
  friend HalfInt operator*(HalfInt a, long long k) { return HalfInt(k * a.twice_); }
  // product of two half-integers, valid only when it lands back in (1/2)Z
  friend HalfInt operator*(HalfInt a, HalfInt b) {
    long long p = a.twice_ * b.twice_;
    if (p % 2 != 0)
      throw ValidationError("product " + a.str() + "*" + b.str() + " is not a half-integer");
    return HalfInt(p / 2);
  }
  HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  friend bool operator==(HalfInt a, HalfInt b) { return a.twice_ == b.twice_; }
  friend bool operator!=(HalfInt a, HalfInt b) { return a.twice_ != b.twice_; }
  friend bool operator<(HalfInt a, HalfInt b) { return a.twice_ < b.twice_; }
  friend bool operator<=(HalfInt a, HalfInt b) { return a.twice_ <= b.twice_; }
  friend bool operator>(HalfInt a, HalfInt b) { return a.twice_ > b.twice_; }
  friend bool operator>=(HalfInt a, HalfInt b) { return a.twice_ >= b.twice_; }

private:
  long long twice_;
};

// Quarter-integers appear transiently in index formulas (q + mu/2 + ...);
// they must resolve to half-integers before leaving a module.
class QuarterInt {
public:
  constexpr QuarterInt() : quarters_(0) {}
  explicit constexpr QuarterInt(long long quarters) : quarters_(quarters) {}
  QuarterInt(HalfInt h) : quarters_(2 * h.twice()) {}

  static QuarterInt half_of(HalfInt h) { return QuarterInt(h.twice()); }

  friend QuarterInt operator+(QuarterInt a, QuarterInt b) { return QuarterInt(a.quarters_ + b.quarters_); }
  friend QuarterInt operator-(QuarterInt a, QuarterInt b) { return QuarterInt(a.quarters_ - b.quarters_); }
  QuarterInt& operator+=(QuarterInt o) { quarters_ += o.quarters_; return *this; }
  QuarterInt& operator-=(QuarterInt o) { quarters_ -= o.quarters_; return *this; }

  HalfInt to_half_int(const char* what) const {
    if (quarters_ % 2 != 0)
      throw ValidationError(std::string(what) + " is not a half-integer (got " +
                            std::to_string(quarters_) + "/4); inconsistent input data");
    return HalfInt(quarters_ / 2);
  }

private:
  long long quarters_;
};

}  // namespace echkit
