#include "montes/ff.hpp"

#include <algorithm>
#include <sstream>

namespace montes {

namespace {

using u64 = std::uint64_t;

u64 inv_mod(u64 a, u64 p) {
  // a != 0 mod p
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

bool all_zero(const u64* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i]) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field::Field(const Prime& p) : prime_(p), p_(p.word()), card_(p.value()) {}

Field::Field(FieldHandle base, std::vector<u64> modulus_flat, std::shared_ptr<FFPoly> modulus)
    : level_(base->level_ + 1),
      base_(base),
      modulus_(std::move(modulus)),
      mod_flat_(std::move(modulus_flat)),
      prime_(base->prime_),
      p_(base->p_) {
  deg_ = static_cast<std::size_t>(modulus_->degree());
  D_ = base_->D_ * deg_;
  mpz_pow_ui(card_.get_mpz_t(), base_->card_.get_mpz_t(), deg_);
}

FieldHandle Field::prime_field(const Prime& p) { return FieldHandle(new Field(p)); }

FieldHandle Field::extend(const FieldHandle& K, const FFPoly& psi) {
  check_same_field(K, psi.handle());
  if (!psi.is_monic() || psi.degree() < 1 || !ff_is_irreducible(psi))
    throw Error(ErrorKind::ReducibleModulus, "modulus " + to_string(psi) + " is not monic irreducible");
  std::vector<u64> flat;
  for (long j = 0; j < psi.degree(); ++j) {
    const auto& c = psi.coeffs()[static_cast<std::size_t>(j)].flat();
    flat.insert(flat.end(), c.begin(), c.end());
  }
  return FieldHandle(new Field(K, std::move(flat), std::make_shared<FFPoly>(psi)));
}

const FFPoly& Field::modulus() const {
  if (!modulus_) throw Error(ErrorKind::Internal, "prime field has no modulus");
  return *modulus_;
}

bool Field::same_as(const Field& o) const {
  if (this == &o) return true;
  if (level_ != o.level_ || p_ != o.p_) return false;
  if (level_ == 0) return true;
  return base_->same_as(*o.base_) && mod_flat_ == o.mod_flat_ && deg_ == o.deg_;
}

void check_same_field(const FieldHandle& a, const FieldHandle& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b)) throw Error(ErrorKind::FieldMismatch, "operands live in different fields");
}

FFElem Field::zero() const { return FFElem(shared_from_this(), std::vector<u64>(D_, 0)); }

FFElem Field::one() const {
  std::vector<u64> c(D_, 0);
  c[0] = 1;
  return FFElem(shared_from_this(), std::move(c));
}

FFElem Field::from_int(long a) const {
  std::vector<u64> c(D_, 0);
  long r = a % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  c[0] = static_cast<u64>(r);
  return FFElem(shared_from_this(), std::move(c));
}

FFElem Field::gen() const {
  if (level_ == 0) throw Error(ErrorKind::Internal, "prime field has no generator");
  if (deg_ == 1) return embed(-modulus_->coeffs()[0]);
  std::vector<u64> c(D_, 0);
  c[base_->D_] = 1;
  return FFElem(shared_from_this(), std::move(c));
}

FFElem Field::from_coords(const std::vector<FFElem>& cs) const {
  if (level_ == 0) {
    if (cs.size() != 1) throw Error(ErrorKind::Internal, "bad coordinate count");
    return FFElem(shared_from_this(), cs[0].flat());
  }
  if (cs.size() > deg_) throw Error(ErrorKind::Internal, "too many coordinates");
  std::vector<u64> c(D_, 0);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    check_same_field(cs[j].handle(), base_);
    std::copy(cs[j].flat().begin(), cs[j].flat().end(), c.begin() + static_cast<long>(j * base_->D_));
  }
  return FFElem(shared_from_this(), std::move(c));
}

FFElem Field::embed(const FFElem& a) const {
  if (a.field().same_as(*this)) return FFElem(shared_from_this(), a.flat());
  if (a.field().level() >= level_) throw Error(ErrorKind::FieldMismatch, "cannot embed from a higher level");
  FFElem b = base_->embed(a);
  std::vector<u64> c(D_, 0);
  std::copy(b.flat().begin(), b.flat().end(), c.begin());
  return FFElem(shared_from_this(), std::move(c));
}

FFElem Field::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<u64> d(0, p_ - 1);
  std::vector<u64> c(D_);
  for (auto& x : c) x = d(rng);
  return FFElem(shared_from_this(), std::move(c));
}

FFElem Field::element(const Integer& idx) const {
  std::vector<u64> c(D_, 0);
  Integer t = idx;
  for (auto& x : c) {
    Integer r;
    mpz_fdiv_qr_ui(t.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), p_);
    x = r.get_ui();
  }
  return FFElem(shared_from_this(), std::move(c));
}

void Field::mul_raw(const u64* a, const u64* b, u64* out) const {
  if (level_ == 0) {
    out[0] = (a[0] * b[0]) % p_;
    return;
  }
  const Field& B = *base_;
  const std::size_t Db = B.D_, d = deg_;
  std::vector<u64> prod((2 * d - 1) * Db, 0), tmp(Db);
  auto add_into = [&](u64* dst) {
    for (std::size_t k = 0; k < Db; ++k) {
      u64 s = dst[k] + tmp[k];
      dst[k] = s >= p_ ? s - p_ : s;
    }
  };
  auto sub_into = [&](u64* dst) {
    for (std::size_t k = 0; k < Db; ++k) dst[k] = dst[k] >= tmp[k] ? dst[k] - tmp[k] : dst[k] + p_ - tmp[k];
  };
  for (std::size_t i = 0; i < d; ++i) {
    if (all_zero(a + i * Db, Db)) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (all_zero(b + j * Db, Db)) continue;
      B.mul_raw(a + i * Db, b + j * Db, tmp.data());
      add_into(prod.data() + (i + j) * Db);
    }
  }
  for (std::size_t t = 2 * d - 2; t >= d; --t) {
    const u64* c = prod.data() + t * Db;
    if (all_zero(c, Db)) continue;
    for (std::size_t j = 0; j < d; ++j) {
      B.mul_raw(c, mod_flat_.data() + j * Db, tmp.data());
      sub_into(prod.data() + (t - d + j) * Db);
    }
  }
  std::copy(prod.begin(), prod.begin() + static_cast<long>(d * Db), out);
}

// ---------------------------------------------------------------- FFElem

FFElem::FFElem(FieldHandle f, std::vector<u64> flat) : f_(std::move(f)), c_(std::move(flat)) {
  if (c_.size() != f_->abs_degree()) throw Error(ErrorKind::Internal, "bad element size");
}

bool FFElem::is_zero() const { return all_zero(c_.data(), c_.size()); }

bool FFElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return all_zero(c_.data() + 1, c_.size() - 1);
}

FFElem FFElem::coord(std::size_t j) const {
  if (f_->level() == 0) {
    if (j == 0) return *this;
    return f_->zero();
  }
  const auto& B = f_->base();
  if (j >= f_->degree()) return B->zero();
  std::size_t Db = B->abs_degree();
  return FFElem(B, std::vector<u64>(c_.begin() + static_cast<long>(j * Db), c_.begin() + static_cast<long>((j + 1) * Db)));
}

FFElem FFElem::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (f_->level() == 0) return FFElem(f_, {inv_mod(c_[0], f_->p())});
  return pow(f_->cardinality() - 2);
}

FFElem FFElem::pow(const Integer& k) const {
  if (k < 0) return inv().pow(-k);
  FFElem r = f_->one();
  std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  if (k == 0) return r;
  std::vector<u64> tmp(c_.size());
  for (std::size_t i = bits; i-- > 0;) {
    f_->mul_raw(r.c_.data(), r.c_.data(), tmp.data());
    r.c_.swap(tmp);
    if (mpz_tstbit(k.get_mpz_t(), i)) {
      f_->mul_raw(r.c_.data(), c_.data(), tmp.data());
      r.c_.swap(tmp);
    }
  }
  return r;
}

FFElem FFElem::operator-() const {
  FFElem r = *this;
  u64 p = f_->p();
  for (auto& x : r.c_) x = x ? p - x : 0;
  return r;
}

FFElem& FFElem::operator+=(const FFElem& b) {
  check_same_field(f_, b.f_);
  u64 p = f_->p();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    u64 s = c_[i] + b.c_[i];
    c_[i] = s >= p ? s - p : s;
  }
  return *this;
}

FFElem& FFElem::operator-=(const FFElem& b) {
  check_same_field(f_, b.f_);
  u64 p = f_->p();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= b.c_[i] ? c_[i] - b.c_[i] : c_[i] + p - b.c_[i];
  return *this;
}

FFElem& FFElem::operator*=(const FFElem& b) {
  check_same_field(f_, b.f_);
  std::vector<u64> out(c_.size());
  f_->mul_raw(c_.data(), b.c_.data(), out.data());
  c_.swap(out);
  return *this;
}

bool operator==(const FFElem& a, const FFElem& b) {
  check_same_field(a.f_, b.f_);
  return a.c_ == b.c_;
}

bool operator<(const FFElem& a, const FFElem& b) {
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

// ---------------------------------------------------------------- FFPoly

FFPoly::FFPoly(FieldHandle f, std::vector<FFElem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  for (const auto& c : c_) check_same_field(f_, c.handle());
  trim();
}

FFPoly FFPoly::constant(const FFElem& c) { return FFPoly(c.handle(), {c}); }

FFPoly FFPoly::monomial(const FFElem& c, std::size_t k) {
  std::vector<FFElem> cs(k + 1, c.field().zero());
  cs[k] = c;
  return FFPoly(c.handle(), std::move(cs));
}

FFPoly FFPoly::y(const FieldHandle& f) { return monomial(f->one(), 1); }

void FFPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FFElem FFPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }

FFPoly FFPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * leading().inv();
}

FFPoly FFPoly::derivative() const {
  std::vector<FFElem> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * f_->from_int(static_cast<long>(i % f_->p())));
  return FFPoly(f_, std::move(d));
}

FFElem FFPoly::eval(const FFElem& a) const {
  FFElem r = f_->zero();
  FFElem x = f_->embed(a);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

FFPoly& FFPoly::operator+=(const FFPoly& b) {
  if (!f_) f_ = b.f_;
  check_same_field(f_, b.f_);
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), f_->zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

FFPoly& FFPoly::operator-=(const FFPoly& b) {
  if (!f_) f_ = b.f_;
  check_same_field(f_, b.f_);
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), f_->zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
  check_same_field(a.f_, b.f_);
  if (a.is_zero() || b.is_zero()) return FFPoly(a.f_);
  const Field& F = *a.f_;
  const std::size_t D = F.abs_degree();
  const u64 p = F.p();
  std::vector<std::vector<u64>> acc(a.c_.size() + b.c_.size() - 1, std::vector<u64>(D, 0));
  std::vector<u64> tmp(D);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      F.mul_raw(a.c_[i].flat().data(), b.c_[j].flat().data(), tmp.data());
      auto& dst = acc[i + j];
      for (std::size_t k = 0; k < D; ++k) {
        u64 s = dst[k] + tmp[k];
        dst[k] = s >= p ? s - p : s;
      }
    }
  }
  std::vector<FFElem> c;
  c.reserve(acc.size());
  for (auto& v : acc) c.emplace_back(a.f_, std::move(v));
  return FFPoly(a.f_, std::move(c));
}

FFPoly operator*(const FFPoly& a, const FFElem& c) {
  std::vector<FFElem> r;
  for (const auto& x : a.c_) r.push_back(x * c);
  return FFPoly(a.f_, std::move(r));
}

bool operator==(const FFPoly& a, const FFPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

bool operator<(const FFPoly& a, const FFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] < b.c_[i]) return true;
    if (b.c_[i] < a.c_[i]) return false;
  }
  return false;
}

FFDivRem divrem(const FFPoly& a, const FFPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  check_same_field(a.handle(), b.handle());
  const auto& F = b.handle();
  long n = a.degree(), m = b.degree();
  if (n < m) return {FFPoly(F), a};
  std::vector<FFElem> r = a.coeffs();
  std::vector<FFElem> q(static_cast<std::size_t>(n - m + 1), F->zero());
  FFElem li = b.leading().inv();
  const auto& bc = b.coeffs();
  for (long i = n; i >= m; --i) {
    const FFElem& top = r[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    FFElem c = top * li;
    q[static_cast<std::size_t>(i - m)] = c;
    for (long j = 0; j <= m; ++j) r[static_cast<std::size_t>(i - m + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(m));
  return {FFPoly(F, std::move(q)), FFPoly(F, std::move(r))};
}

FFPoly operator%(const FFPoly& a, const FFPoly& b) { return divrem(a, b).r; }
FFPoly operator/(const FFPoly& a, const FFPoly& b) { return divrem(a, b).q; }

FFPoly gcd(FFPoly a, FFPoly b) {
  while (!b.is_zero()) {
    FFPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FFPoly powmod(const FFPoly& a, const Integer& k, const FFPoly& m) {
  FFPoly base = a % m;
  FFPoly r = FFPoly::constant(m.handle()->one()) % m;
  if (k == 0) return r;
  std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(k.get_mpz_t(), i)) r = (r * base) % m;
  }
  return r;
}

FFPoly pow(const FFPoly& a, unsigned long k) {
  FFPoly r = FFPoly::constant(a.handle()->one()), b = a;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

long multiplicity(const FFPoly& f, const FFPoly& g) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplicity in zero polynomial");
  long k = 0;
  FFPoly h = f;
  for (;;) {
    auto qr = divrem(h, g);
    if (!qr.r.is_zero()) return k;
    h = std::move(qr.q);
    ++k;
  }
}

// ---------------------------------------------------------------- factoring

namespace {

std::vector<long> prime_divisors(long n) {
  std::vector<long> r;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      r.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) r.push_back(n);
  return r;
}

// y^(q^k) mod f
FFPoly frobenius_power(const FFPoly& f, long k) {
  const Integer& q = f.handle()->cardinality();
  FFPoly h = FFPoly::y(f.handle()) % f;
  for (long i = 0; i < k; ++i) h = powmod(h, q, f);
  return h;
}

// Polynomial whose exponents are all multiples of p: its p-th root.
FFPoly pth_root(const FFPoly& f) {
  const Field& F = *f.handle();
  const u64 p = F.p();
  Integer e = F.cardinality() / Integer(static_cast<unsigned long>(p));
  std::vector<FFElem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i].pow(e));
  return FFPoly(f.handle(), std::move(c));
}

using Parts = std::vector<FFFactor>;

void squarefree(const FFPoly& f, long scale, Parts& out) {
  if (f.degree() < 1) return;
  const FieldHandle& F = f.handle();
  const auto p = static_cast<long>(F->p());
  FFPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), scale * p, out);
    return;
  }
  FFPoly c = gcd(f, d);
  FFPoly w = f / c;
  long i = 1;
  while (w.degree() > 0) {
    FFPoly y = gcd(w, c);
    FFPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), scale * p, out);
}

void equal_degree(const FFPoly& g, long d, std::mt19937_64& rng, std::vector<FFPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FieldHandle& F = g.handle();
  const Integer& q = F->cardinality();
  Integer qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  const bool even = F->p() == 2;
  const FFPoly one = FFPoly::constant(F->one());
  for (;;) {
    std::vector<FFElem> cs;
    for (long i = 0; i < g.degree(); ++i) cs.push_back(F->random(rng));
    FFPoly a(F, std::move(cs));
    if (a.degree() < 1) continue;
    FFPoly b;
    if (even) {
      // absolute trace down to F_2
      long k = static_cast<long>(F->abs_degree()) * d;
      FFPoly t = a % g, s = t;
      for (long i = 1; i < k; ++i) {
        t = (t * t) % g;
        s += t;
      }
      b = s;
    } else {
      b = powmod(a, (qd - 1) / 2, g) - one;
    }
    FFPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool ff_is_irreducible(const FFPoly& f) {
  if (f.degree() < 1) return false;
  FFPoly g = f.monic();
  long n = g.degree();
  if (n == 1) return true;
  FFPoly y = FFPoly::y(g.handle());
  for (long r : prime_divisors(n)) {
    FFPoly h = frobenius_power(g, n / r) - y;
    if (gcd(g, h).degree() != 0) return false;
  }
  return ((frobenius_power(g, n) - y) % g).is_zero();
}

std::vector<FFFactor> ff_factor(const FFPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factoring zero polynomial");
  std::mt19937_64 rng(seed);
  Parts sf;
  squarefree(f.monic(), 1, sf);
  Parts res;
  for (const auto& part : sf) {
    FFPoly g = part.factor;
    const FieldHandle& F = g.handle();
    const Integer& q = F->cardinality();
    FFPoly y = FFPoly::y(F);
    FFPoly h = y % g;
    for (long i = 1; g.degree() >= 2 * i; ++i) {
      h = powmod(h, q, g);
      FFPoly gi = gcd(g, h - y);
      if (gi.degree() > 0) {
        std::vector<FFPoly> irr;
        equal_degree(gi, i, rng, irr);
        for (auto& u : irr) res.push_back({u.monic(), part.mult});
        g = g / gi;
        h = h % g;
      }
    }
    if (g.degree() > 0) res.push_back({g.monic(), part.mult});
  }
  std::sort(res.begin(), res.end(), [](const FFFactor& a, const FFFactor& b) { return a.factor < b.factor; });
  Parts merged;
  for (auto& x : res) {
    if (!merged.empty() && merged.back().factor == x.factor)
      merged.back().mult += x.mult;
    else
      merged.push_back(x);
  }
  return merged;
}

std::string to_string(const FFElem& a) {
  if (a.field().level() == 0) return std::to_string(a.flat()[0]);
  std::string s = "[";
  for (std::size_t j = 0; j < a.field().degree(); ++j) {
    if (j) s += ",";
    s += to_string(a.coord(j));
  }
  return s + "]";
}

std::string to_string(const FFPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = f.degree(); i >= 0; --i) {
    const FFElem& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !c.is_one()) os << to_string(c);
    if (i > 0 && !c.is_one()) os << "*";
    if (i > 0) os << "y";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace montes
