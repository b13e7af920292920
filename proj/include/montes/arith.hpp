#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "montes/error.hpp"

namespace montes {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& a);
std::string to_string(const Rational& q);  // "a/b", or "a" when b = 1

class Prime {
 public:
  explicit Prime(const Integer& p);
  explicit Prime(unsigned long p) : Prime(Integer(p)) {}

  const Integer& value() const { return p_; }
  // Residue arithmetic needs the prime in a machine word.
  std::uint64_t word() const;
  Integer pow(unsigned long k) const;

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

 private:
  Integer p_;
};

// Non-negative integer or INFINITY.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr Valuation(long v) : v_(v) {}  // NOLINT: implicit on purpose
  static constexpr Valuation infinity() {
    Valuation r;
    r.v_ = kInf;
    return r;
  }

  constexpr bool is_infinite() const { return v_ == kInf; }
  long value() const;

  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Valuation(a.v_ + b.v_);
  }
  friend constexpr Valuation min(Valuation a, Valuation b) { return a.v_ <= b.v_ ? a : b; }
  friend constexpr bool operator==(Valuation a, Valuation b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(Valuation a, Valuation b) { return a.v_ <=> b.v_; }

 private:
  static constexpr long kInf = std::numeric_limits<long>::max();
  long v_ = 0;
};

std::ostream& operator<<(std::ostream& os, Valuation v);

Valuation vp(const Integer& a, const Prime& p);

// Dense polynomial over Z, ascending coefficients, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);
  static IntPoly constant(const Integer& c);
  static IntPoly x_pow(std::size_t k);  // x^k

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& leading() const { return c_.back(); }

  IntPoly derivative() const;
  Integer eval(const Integer& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  // Multiply by x^k.
  IntPoly shifted(std::size_t k) const;

 private:
  void trim();
  std::vector<Integer> c_;
};

IntPoly pow(const IntPoly& f, unsigned long k);
std::string to_string(const IntPoly& f);
std::ostream& operator<<(std::ostream& os, const IntPoly& f);

// Gauss valuation: minimum vp over coefficients.
Valuation content_vp(const IntPoly& f, const Prime& p);

struct DivRem {
  IntPoly q;
  IntPoly r;
};
DivRem poly_divrem(const IntPoly& f, const IntPoly& phi);

// Sylvester determinant with the rows of f first.
Integer resultant(const IntPoly& f, const IntPoly& g);
Valuation discriminant_valuation(const IntPoly& f, const Prime& p);
IntPoly reduce_mod_power(const IntPoly& f, const Prime& p, unsigned long nu);

}  // namespace montes
