#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "montes/arith.hpp"

namespace montes {

class Field;
class FFPoly;
using FieldHandle = std::shared_ptr<const Field>;

// Element of a tower level. Stored flat: at level k the coordinates over F_p
// of the nested power bases, blocks of the base level concatenated.
class FFElem {
 public:
  FFElem() = default;
  FFElem(FieldHandle f, std::vector<std::uint64_t> flat);

  const FieldHandle& handle() const { return f_; }
  const Field& field() const { return *f_; }
  const std::vector<std::uint64_t>& flat() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  // Power-basis coordinate j (an element of the base level).
  FFElem coord(std::size_t j) const;

  FFElem inv() const;
  FFElem pow(const Integer& k) const;

  FFElem operator-() const;
  FFElem& operator+=(const FFElem& b);
  FFElem& operator-=(const FFElem& b);
  FFElem& operator*=(const FFElem& b);
  friend FFElem operator+(FFElem a, const FFElem& b) { return a += b; }
  friend FFElem operator-(FFElem a, const FFElem& b) { return a -= b; }
  friend FFElem operator*(FFElem a, const FFElem& b) { return a *= b; }
  friend FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inv(); }
  friend bool operator==(const FFElem& a, const FFElem& b);
  // Lexicographic on coordinates (highest coordinate first); only for canonical ordering.
  friend bool operator<(const FFElem& a, const FFElem& b);

 private:
  FieldHandle f_;
  std::vector<std::uint64_t> c_;
};

class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldHandle prime_field(const Prime& p);
  // K[y]/(psi); psi must be monic irreducible over K.
  static FieldHandle extend(const FieldHandle& K, const FFPoly& psi);

  int level() const { return level_; }
  const FieldHandle& base() const { return base_; }
  const FFPoly& modulus() const;
  std::uint64_t p() const { return p_; }
  const Prime& prime() const { return prime_; }
  std::size_t degree() const { return deg_; }       // over the base
  std::size_t abs_degree() const { return D_; }     // over F_p
  const Integer& cardinality() const { return card_; }
  bool same_as(const Field& o) const;

  FFElem zero() const;
  FFElem one() const;
  FFElem from_int(long a) const;
  FFElem gen() const;  // class of y
  // Element with the given power-basis coordinates over the base.
  FFElem from_coords(const std::vector<FFElem>& cs) const;
  // Image of an element of this field or of any level below.
  FFElem embed(const FFElem& a) const;
  FFElem random(std::mt19937_64& rng) const;
  // idx in [0, card) mapped bijectively to elements.
  FFElem element(const Integer& idx) const;

  // Raw kernels on flat coordinate arrays.
  void mul_raw(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const;

 private:
  Field(const Prime& p);
  Field(FieldHandle base, std::vector<std::uint64_t> modulus_flat, std::shared_ptr<FFPoly> modulus);

  int level_ = 0;
  FieldHandle base_;
  std::shared_ptr<FFPoly> modulus_;
  std::vector<std::uint64_t> mod_flat_;  // modulus coefficients 0..deg-1, flat
  Prime prime_;
  std::uint64_t p_;
  std::size_t deg_ = 1;
  std::size_t D_ = 1;
  Integer card_;
};

void check_same_field(const FieldHandle& a, const FieldHandle& b);

// Polynomial in y over a tower level. No trailing zeros.
class FFPoly {
 public:
  FFPoly() = default;
  explicit FFPoly(FieldHandle f, std::vector<FFElem> coeffs = {});
  static FFPoly constant(const FFElem& c);
  static FFPoly monomial(const FFElem& c, std::size_t k);
  static FFPoly y(const FieldHandle& f);

  const FieldHandle& handle() const { return f_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const std::vector<FFElem>& coeffs() const { return c_; }
  FFElem coeff(std::size_t i) const;
  const FFElem& leading() const { return c_.back(); }
  FFPoly monic() const;
  FFPoly derivative() const;
  FFElem eval(const FFElem& a) const;

  FFPoly& operator+=(const FFPoly& b);
  FFPoly& operator-=(const FFPoly& b);
  friend FFPoly operator+(FFPoly a, const FFPoly& b) { return a += b; }
  friend FFPoly operator-(FFPoly a, const FFPoly& b) { return a -= b; }
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator*(const FFPoly& a, const FFElem& c);
  friend bool operator==(const FFPoly& a, const FFPoly& b);
  friend bool operator<(const FFPoly& a, const FFPoly& b);  // degree, then coefficients from the top

 private:
  void trim();
  FieldHandle f_;
  std::vector<FFElem> c_;
};

struct FFDivRem {
  FFPoly q;
  FFPoly r;
};
FFDivRem divrem(const FFPoly& a, const FFPoly& b);
FFPoly operator%(const FFPoly& a, const FFPoly& b);
FFPoly operator/(const FFPoly& a, const FFPoly& b);
FFPoly gcd(FFPoly a, FFPoly b);  // monic, or zero
FFPoly powmod(const FFPoly& a, const Integer& k, const FFPoly& m);
FFPoly pow(const FFPoly& a, unsigned long k);
// Multiplicity of the irreducible g in f (f nonzero).
long multiplicity(const FFPoly& f, const FFPoly& g);

struct FFFactor {
  FFPoly factor;  // monic irreducible
  long mult;
};
// Canonically ordered (by factor), independent of the seed.
std::vector<FFFactor> ff_factor(const FFPoly& f, std::uint64_t seed);
bool ff_is_irreducible(const FFPoly& f);

std::string to_string(const FFElem& a);
std::string to_string(const FFPoly& f);

}  // namespace montes
