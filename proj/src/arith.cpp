#include "montes/arith.hpp"

#include <algorithm>
#include <sstream>

namespace montes {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NonMonicDivisor: return "NonMonicDivisor";
    case ErrorKind::NonMonic: return "NonMonic";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::EmptyCloud: return "EmptyCloud";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InsufficientV: return "InsufficientV";
    case ErrorKind::Inseparable: return "Inseparable";
    case ErrorKind::InconsistentLevels: return "InconsistentLevels";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::SharedRoot: return "SharedRoot";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::AlreadyExact: return "AlreadyExact";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Prime::Prime(const Integer& p) : p_(p) {
  if (p_ < 2 || mpz_probab_prime_p(p_.get_mpz_t(), 40) == 0)
    throw Error(ErrorKind::NotPrime, to_string(p_) + " is not prime");
}

std::uint64_t Prime::word() const {
  if (!p_.fits_ulong_p() || p_ >= (Integer(1) << 31))
    throw Error(ErrorKind::Internal, "prime too large for residue arithmetic");
  return p_.get_ui();
}

Integer Prime::pow(unsigned long k) const {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p_.get_mpz_t(), k);
  return r;
}

long Valuation::value() const {
  if (is_infinite()) throw Error(ErrorKind::Internal, "value of infinite valuation");
  return v_;
}

std::ostream& operator<<(std::ostream& os, Valuation v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

Valuation vp(const Integer& a, const Prime& p) {
  if (a == 0) return Valuation::infinity();
  Integer rest;
  return Valuation(static_cast<long>(
      mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.value().get_mpz_t())));
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::x_pow(std::size_t k) {
  std::vector<Integer> c(k + 1, Integer(0));
  c[k] = 1;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& a : c_) a *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> c(k, Integer(0));
  c.insert(c.end(), c_.begin(), c_.end());
  return IntPoly(std::move(c));
}

IntPoly pow(const IntPoly& f, unsigned long k) {
  IntPoly r = IntPoly::constant(1), b = f;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = f.degree(); i >= 0; --i) {
    Integer c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) os << c.get_str();
    if (i > 0 && c != 1) os << "*";
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << to_string(f); }

Valuation content_vp(const IntPoly& f, const Prime& p) {
  Valuation v = Valuation::infinity();
  for (const auto& c : f.coeffs()) v = min(v, vp(c, p));
  return v;
}

DivRem poly_divrem(const IntPoly& f, const IntPoly& phi) {
  if (!phi.is_monic())
    throw Error(ErrorKind::NonMonicDivisor, "divisor must be monic");
  if (phi.degree() < 1) throw Error(ErrorKind::NonMonicDivisor, "divisor must have positive degree");
  long n = f.degree(), m = phi.degree();
  if (n < m) return {IntPoly(), f};
  std::vector<Integer> r = f.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(n - m + 1), Integer(0));
  const auto& pc = phi.coeffs();
  for (long i = n; i >= m; --i) {
    Integer c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - m)] = c;
    for (long j = 0; j <= m; ++j)
      mpz_submul(r[static_cast<std::size_t>(i - m + j)].get_mpz_t(), c.get_mpz_t(),
                 pc[static_cast<std::size_t>(j)].get_mpz_t());
  }
  r.resize(static_cast<std::size_t>(m));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

namespace {

// Bareiss fraction-free elimination; the matrix is consumed.
Integer bareiss_det(std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k];
        mpz_submul(t.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer d = a[n - 1][n - 1];
  return sign < 0 ? Integer(-d) : d;
}

}  // namespace

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroInput, "resultant of zero polynomial");
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const std::size_t N = m + n;
  std::vector<std::vector<Integer>> s(N, std::vector<Integer>(N, Integer(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = f.coeffs()[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = g.coeffs()[n - j];
  return bareiss_det(s);
}

Valuation discriminant_valuation(const IntPoly& f, const Prime& p) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, "discriminant needs a monic polynomial");
  if (f.degree() < 1) throw Error(ErrorKind::ZeroInput, "discriminant needs positive degree");
  if (f.degree() == 1) return 0;
  // lc = 1, so Disc = +-Res(f, f').
  return vp(resultant(f, f.derivative()), p);
}

IntPoly reduce_mod_power(const IntPoly& f, const Prime& p, unsigned long nu) {
  Integer mod = p.pow(nu);
  std::vector<Integer> c = f.coeffs();
  for (auto& a : c) {
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
  }
  return IntPoly(std::move(c));
}

}  // namespace montes
