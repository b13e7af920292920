#include "montes/om_type.hpp"

#include <algorithm>
#include <numeric>

namespace montes {

namespace {

long inverse_mod(long a, long m) {
  if (m == 1) return 0;
  a %= m;
  if (a < 0) a += m;
  for (long x = 1; x < m; ++x)
    if ((a * x) % m == 1) return x;
  throw Error(ErrorKind::Internal, "no inverse");
}

Valuation v_or_inf(const OMType& t, std::size_t i, const IntPoly& g);

// Evaluate P (over a lower level) at z.
FFElem eval_up(const FFPoly& P, const FFElem& z) {
  const Field& K = z.field();
  FFElem r = K.zero();
  for (auto it = P.coeffs().rbegin(); it != P.coeffs().rend(); ++it) r = r * z + K.embed(*it);
  return r;
}

}  // namespace

// ---------------------------------------------------------------- OMType

OMType::OMType(const Prime& p, FFPoly psi0) : p_(p), psi0_(std::move(psi0)) {
  f0_ = psi0_.handle();
  if (!f0_ || f0_->level() != 0) throw Error(ErrorKind::InconsistentLevels, "psi0 must live over F_p");
  f1_ = Field::extend(f0_, psi0_);
}

const OMLevel& OMType::level(std::size_t i) const {
  if (i < 1 || i > levels_.size()) throw Error(ErrorKind::InconsistentLevels, "level index out of range");
  return levels_[i - 1];
}

const FieldHandle& OMType::field(std::size_t i) const {
  if (i == 0) return f0_;
  if (i == 1) return f1_;
  const OMLevel& L = level(i - 1);
  if (L.exact) throw Error(ErrorKind::InconsistentLevels, "no residue field above an exact level");
  return L.field;
}

long OMType::V(std::size_t i) const {
  if (i == 1) return 0;
  if (i <= levels_.size()) return levels_[i - 1].V;
  if (i != levels_.size() + 1) throw Error(ErrorKind::InconsistentLevels, "level index out of range");
  const OMLevel& L = levels_.back();
  if (L.exact) throw Error(ErrorKind::InconsistentLevels, "no level above an exact level");
  return L.e * L.f * (L.e * L.V + L.h);
}

long OMType::m(std::size_t i) const {
  if (i == 1) return f0();
  if (i <= levels_.size()) return levels_[i - 1].m;
  if (i != levels_.size() + 1) throw Error(ErrorKind::InconsistentLevels, "level index out of range");
  const OMLevel& L = levels_.back();
  if (L.exact) throw Error(ErrorKind::InconsistentLevels, "no level above an exact level");
  return L.e * L.f * L.m;
}

long OMType::e_prod(std::size_t i) const {
  long r = 1;
  for (std::size_t k = 1; k < i; ++k) r *= level(k).e;
  return r;
}

long OMType::v_phi(std::size_t i, std::size_t k) const {
  const OMLevel& L = level(k);
  long r = L.e * L.V + L.h;
  for (std::size_t j = k + 1; j < i; ++j) r *= level(j).e;
  return r;
}

OMType OMType::extended(IntPoly phi, long h, long e, FFPoly psi) const {
  if (is_exact()) throw Error(ErrorKind::InconsistentLevels, "cannot extend an exact type");
  if (h <= 0 || e <= 0 || std::gcd(h, e) != 1) throw Error(ErrorKind::InconsistentLevels, "bad slope");
  const std::size_t i = order() + 1;
  OMLevel L;
  L.m = m(i);
  L.V = V(i);
  if (!phi.is_monic() || phi.degree() != L.m)
    throw Error(ErrorKind::InconsistentLevels, "phi has the wrong degree for this level");
  check_same_field(psi.handle(), field(i));
  L.phi = std::move(phi);
  L.h = h;
  L.e = e;
  L.f = psi.degree();
  L.ell = inverse_mod(h, e);
  L.ell_prime = (L.ell * h - 1) / e;
  L.field = Field::extend(field(i), psi);
  L.psi = std::move(psi);
  OMType t = *this;
  t.levels_.push_back(std::move(L));
  t.pending_phi.reset();
  t.pending_omega = 0;
  return t;
}

OMType OMType::extended_exact(IntPoly phi) const {
  if (is_exact()) throw Error(ErrorKind::InconsistentLevels, "cannot extend an exact type");
  const std::size_t i = order() + 1;
  OMLevel L;
  L.m = m(i);
  L.V = V(i);
  if (!phi.is_monic() || phi.degree() != L.m)
    throw Error(ErrorKind::InconsistentLevels, "phi has the wrong degree for this level");
  L.phi = std::move(phi);
  L.exact = true;
  L.f = 1;
  OMType t = *this;
  t.levels_.push_back(std::move(L));
  t.pending_phi.reset();
  t.pending_omega = 0;
  return t;
}

OMType OMType::truncated(std::size_t j) const {
  if (j > order()) throw Error(ErrorKind::InconsistentLevels, "truncation above the order");
  OMType t = *this;
  t.levels_.resize(j);
  t.pending_phi.reset();
  t.pending_omega = 0;
  return t;
}

OMType OMType::with_last_phi(IntPoly phi) const {
  if (levels_.empty()) throw Error(ErrorKind::InconsistentLevels, "order-0 type has no phi");
  if (!phi.is_monic() || phi.degree() != levels_.back().m)
    throw Error(ErrorKind::InconsistentLevels, "phi has the wrong degree for this level");
  OMType t = *this;
  t.levels_.back().phi = std::move(phi);
  return t;
}

OMType truncate(const OMType& t, std::size_t j) { return t.truncated(j); }

IntPoly lift_to_z(const FFPoly& f) {
  std::vector<Integer> c;
  for (const auto& a : f.coeffs()) {
    if (a.field().level() != 0) throw Error(ErrorKind::FieldMismatch, "lift expects coefficients in F_p");
    c.emplace_back(static_cast<unsigned long>(a.flat()[0]));
  }
  return IntPoly(std::move(c));
}

FFPoly reduce_mod_p(const IntPoly& g, const FieldHandle& Fp) {
  std::vector<FFElem> c;
  const unsigned long p = Fp->p();
  for (const auto& a : g.coeffs()) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
    c.push_back(Fp->from_int(static_cast<long>(r.get_ui())));
  }
  return FFPoly(Fp, std::move(c));
}

// ---------------------------------------------------------------- expansions

std::vector<IntPoly> phi_expansion(const IntPoly& g, const IntPoly& phi, std::size_t max_terms) {
  if (!phi.is_monic() || phi.degree() < 1) throw Error(ErrorKind::NonMonic, "phi must be monic of positive degree");
  std::vector<IntPoly> out;
  IntPoly cur = g;
  while (!cur.is_zero() && out.size() < max_terms) {
    if (cur.degree() < phi.degree()) {
      out.push_back(cur);
      break;
    }
    DivRem qr = poly_divrem(cur, phi);
    out.push_back(std::move(qr.r));
    cur = std::move(qr.q);
  }
  return out;
}

namespace {

void multiadic_rec(const IntPoly& a, const OMType& t, std::size_t k, std::vector<long>& key,
                   std::map<std::vector<long>, IntPoly>& out) {
  if (k == 0) {
    if (!a.is_zero()) out[key] = a;
    return;
  }
  auto ex = phi_expansion(a, t.level(k).phi);
  for (std::size_t s = 0; s < ex.size(); ++s) {
    if (ex[s].is_zero()) continue;
    key[k - 1] = static_cast<long>(s);
    multiadic_rec(ex[s], t, k - 1, key, out);
  }
  key[k - 1] = 0;
}

void fast_rec(const OMType& t, std::size_t i, std::size_t k, const IntPoly& a, long base, long E, Valuation& acc) {
  if (k == 0) {
    Valuation v = content_vp(a, t.prime());
    if (!v.is_infinite()) acc = min(acc, Valuation(E * v.value() + base));
    return;
  }
  auto ex = phi_expansion(a, t.level(k).phi);
  const long vk = t.v_phi(i, k);
  for (std::size_t s = 0; s < ex.size(); ++s) {
    if (ex[s].is_zero()) continue;
    fast_rec(t, i, k - 1, ex[s], base + static_cast<long>(s) * vk, E, acc);
  }
}

Valuation v_or_inf(const OMType& t, std::size_t i, const IntPoly& g) {
  if (g.is_zero()) return Valuation::infinity();
  if (i < 1 || i > t.order() + 1) throw Error(ErrorKind::InconsistentLevels, "valuation level out of range");
  if (i == 1) return content_vp(g, t.prime());
  if (t.level(i - 1).exact) throw Error(ErrorKind::InconsistentLevels, "no valuation above an exact level");
  Valuation acc = Valuation::infinity();
  fast_rec(t, i, i - 1, g, 0, t.e_prod(i), acc);
  return acc;
}

Valuation v_rec(const OMType& t, std::size_t i, const IntPoly& g) {
  if (g.is_zero()) return Valuation::infinity();
  if (i == 1) return content_vp(g, t.prime());
  const OMLevel& L = t.level(i - 1);
  if (L.exact) throw Error(ErrorKind::InconsistentLevels, "no valuation above an exact level");
  auto ex = phi_expansion(g, L.phi);
  Valuation best = Valuation::infinity();
  for (std::size_t s = 0; s < ex.size(); ++s) {
    Valuation y = v_rec(t, i - 1, ex[s]);
    if (y.is_infinite()) continue;
    long on_line = L.e * (y.value() + static_cast<long>(s) * L.V) + L.h * static_cast<long>(s);
    best = min(best, Valuation(on_line));
  }
  return best;
}

}  // namespace

std::map<std::vector<long>, IntPoly> multiadic(const IntPoly& a, const OMType& t, std::size_t i) {
  if (a.degree() >= t.m(i)) throw Error(ErrorKind::DegreeTooLarge, "multiadic expansion needs deg a < m_i");
  std::map<std::vector<long>, IntPoly> out;
  std::vector<long> key(i - 1, 0);
  multiadic_rec(a, t, i - 1, key, out);
  return out;
}

Valuation maclane_v(const OMType& t, std::size_t i, const IntPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "valuation of zero polynomial");
  return v_or_inf(t, i, g);
}

Valuation maclane_v_recursive(const OMType& t, std::size_t i, const IntPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "valuation of zero polynomial");
  if (i < 1 || i > t.order() + 1) throw Error(ErrorKind::InconsistentLevels, "valuation level out of range");
  return v_rec(t, i, g);
}

std::vector<PolyPoint> Expansion::cloud() const {
  std::vector<PolyPoint> pts;
  for (std::size_t s = 0; s < values.size(); ++s) pts.push_back({static_cast<long>(s), values[s]});
  return pts;
}

Expansion expand(const OMType& t, std::size_t i, const IntPoly& phi, const IntPoly& g, std::size_t terms) {
  Expansion ex;
  ex.coeffs = phi_expansion(g, phi, terms);
  const long Vi = t.V(i);
  for (std::size_t s = 0; s < ex.coeffs.size(); ++s)
    ex.values.push_back(v_or_inf(t, i, ex.coeffs[s]) + Valuation(static_cast<long>(s) * Vi));
  return ex;
}

// ---------------------------------------------------------------- residuals

FFElem residual_coeff(const OMType& t, std::size_t i, const IntPoly& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "residual coefficient of zero");
  const FieldHandle& Fi = t.field(i);
  if (i == 1) {
    long v = content_vp(a, t.prime()).value();
    IntPoly b = a;
    if (v > 0) {
      Integer pv = t.prime().pow(static_cast<unsigned long>(v));
      std::vector<Integer> c = b.coeffs();
      for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pv.get_mpz_t());
      b = IntPoly(std::move(c));
    }
    return eval_up(reduce_mod_p(b, t.field(0)), Fi->gen());
  }
  const std::size_t k = i - 1;
  const OMLevel& L = t.level(k);
  Expansion ex = expand(t, k, L.phi, a);
  NewtonPolygon N = lower_hull(ex.cloud());
  Side comp = lambda_component(N, L.h, L.e);
  FFPoly R = residual_from(t, k, ex, comp);
  const long s0 = comp.left.x, u0 = comp.left.y.value();
  const long tw = -(L.ell_prime * s0 + L.ell * u0);
  FFElem z = Fi->gen();
  return z.pow(Integer(tw)) * eval_up(R, z);
}

FFPoly residual_from(const OMType& t, std::size_t i, const Expansion& ex, const Side& comp) {
  if (comp.neg_infinite) throw Error(ErrorKind::Internal, "no residual polynomial on an infinite side");
  const FieldHandle& Fi = t.field(i);
  const long e = comp.e, h = comp.h;
  const long d = comp.length() / e;
  const long s0 = comp.left.x, u0 = comp.left.y.value();
  std::vector<FFElem> c;
  for (long j = 0; j <= d; ++j) {
    const auto s = static_cast<std::size_t>(s0 + j * e);
    const long line = u0 - j * h;
    if (s < ex.values.size() && !ex.values[s].is_infinite() && ex.values[s].value() == line)
      c.push_back(residual_coeff(t, i, ex.coeffs[s]));
    else
      c.push_back(Fi->zero());
  }
  return FFPoly(Fi, std::move(c));
}

NewtonPolygon newton_op(const OMType& t, const IntPoly& phi, long omega, const IntPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Newton polygon of zero");
  const std::size_t i = t.order() + 1;
  Expansion ex = expand(t, i, phi, g, static_cast<std::size_t>(omega) + 1);
  return lower_hull(ex.cloud());
}

NewtonPolygon newton_full(const OMType& t, const IntPoly& phi, const IntPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Newton polygon of zero");
  return lower_hull(expand(t, t.order() + 1, phi, g).cloud());
}

FFPoly residual_poly(const OMType& t, const IntPoly& phi, long h, long e, const IntPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "residual polynomial of zero");
  const std::size_t i = t.order() + 1;
  Expansion ex = expand(t, i, phi, g);
  Side comp = lambda_component(lower_hull(ex.cloud()), h, e);
  return residual_from(t, i, ex, comp);
}

long ord_type(const OMType& t, const IntPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "ord of zero");
  if (t.order() == 0) {
    long v = content_vp(g, t.prime()).value();
    std::vector<Integer> c = g.coeffs();
    Integer pv = t.prime().pow(static_cast<unsigned long>(v));
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pv.get_mpz_t());
    return multiplicity(reduce_mod_p(IntPoly(std::move(c)), t.field(0)), t.psi0());
  }
  const std::size_t i = t.order();
  const OMLevel& L = t.last();
  if (L.exact) {
    long k = 0;
    IntPoly cur = g;
    for (;;) {
      DivRem qr = poly_divrem(cur, L.phi);
      if (!qr.r.is_zero()) return k;
      cur = std::move(qr.q);
      ++k;
    }
  }
  Expansion ex = expand(t, i, L.phi, g);
  Side comp = lambda_component(lower_hull(ex.cloud()), L.h, L.e);
  return multiplicity(residual_from(t, i, ex, comp), L.psi);
}

// ---------------------------------------------------------------- construct

namespace {

IntPoly construct_at(const OMType& t, std::size_t i, const IntPoly& phi, long h, long e, const FFPoly& target,
                     long V);

// a with deg a < m_i, v_i(a) = w and residual coefficient c.
IntPoly lift_coeff(const OMType& t, std::size_t i, const FFElem& c, long w) {
  if (w < 0) throw Error(ErrorKind::InsufficientV, "target value too small");
  if (i == 1) {
    std::vector<Integer> co;
    const std::size_t f0 = static_cast<std::size_t>(t.f0());
    for (std::size_t j = 0; j < f0; ++j) co.emplace_back(static_cast<unsigned long>(c.coord(j).flat()[0]));
    return IntPoly(std::move(co)) * t.prime().pow(static_cast<unsigned long>(w));
  }
  const std::size_t k = i - 1;
  const OMLevel& L = t.level(k);
  const long s0 = ((w % L.e) * L.ell) % L.e;
  const long u0 = (w - L.h * s0) / L.e;
  const long tw = -(L.ell_prime * s0 + L.ell * u0);
  FFElem b = c * t.field(i)->gen().pow(Integer(-tw));
  std::vector<FFElem> q;
  for (long j = 0; j < L.f; ++j) q.push_back(b.coord(static_cast<std::size_t>(j)));
  return construct_at(t, k, L.phi, L.h, L.e, FFPoly(t.field(k), std::move(q)), w);
}

IntPoly construct_at(const OMType& t, std::size_t i, const IntPoly& phi, long h, long e, const FFPoly& target,
                     long V) {
  if (target.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "construct with zero target");
  if (V < 0) throw Error(ErrorKind::InsufficientV, "negative target value");
  const long s = ((V % e) * inverse_mod(h, e)) % e;
  const long u = (V - s * h) / e;
  const long Vi = t.V(i);
  IntPoly g;
  IntPoly phi_e = pow(phi, static_cast<unsigned long>(e));
  IntPoly power = pow(phi, static_cast<unsigned long>(s));
  for (long j = 0; j <= target.degree(); ++j) {
    const FFElem& cj = target.coeffs()[static_cast<std::size_t>(j)];
    if (!cj.is_zero()) {
      const long wj = u - j * h - (s + j * e) * Vi;
      g += lift_coeff(t, i, cj, wj) * power;
    }
    if (j < target.degree()) power = power * phi_e;
  }
  // postconditions
  Expansion ex = expand(t, i, phi, g);
  NewtonPolygon N = lower_hull(ex.cloud());
  Valuation got = Valuation::infinity();
  for (const auto& pt : ex.cloud())
    if (!pt.y.is_infinite()) got = min(got, Valuation(e * pt.y.value() + h * pt.x));
  if (got != Valuation(V)) throw Error(ErrorKind::Internal, "construct: value postcondition failed");
  FFPoly R = residual_from(t, i, ex, lambda_component(N, h, e));
  long oy = 0;
  while (target.coeffs()[static_cast<std::size_t>(oy)].is_zero()) ++oy;
  FFPoly shifted = R * FFPoly::monomial(t.field(i)->one(), static_cast<std::size_t>(oy));
  if (!(shifted == target)) throw Error(ErrorKind::Internal, "construct: residual postcondition failed");
  return g;
}

}  // namespace

IntPoly construct(const OMType& t, const IntPoly& phi, long h, long e, const FFPoly& target, long V) {
  const std::size_t i = t.order() + 1;
  check_same_field(target.handle(), t.field(i));
  if (h <= 0 || e <= 0 || std::gcd(h, e) != 1) throw Error(ErrorKind::InconsistentLevels, "bad slope");
  if (!phi.is_monic() || phi.degree() != t.m(i))
    throw Error(ErrorKind::InconsistentLevels, "phi is not a representative candidate");
  const long d = target.degree();
  if (V < e * d * (e * t.V(i) + h)) throw Error(ErrorKind::InsufficientV, "V below the segment bound");
  return construct_at(t, i, phi, h, e, target, V);
}

IntPoly representative(const OMType& t) {
  if (t.order() == 0 || t.is_exact()) throw Error(ErrorKind::InconsistentLevels, "representative needs a finite last level");
  const std::size_t i = t.order();
  const OMLevel& L = t.last();
  const FieldHandle& Fi = t.field(i);
  const IntPoly head = pow(L.phi, static_cast<unsigned long>(L.e * L.f));
  const FFPoly base = L.psi - FFPoly::monomial(Fi->one(), static_cast<std::size_t>(L.f));
  const long V = t.V(i + 1);
  auto attempt = [&](const FFElem& c) -> std::optional<IntPoly> {
    IntPoly g = construct_at(t, i, L.phi, L.h, L.e, base * c, V);
    IntPoly rep = head + g;
    if (ord_type(t, rep) == 1) return rep;
    return std::nullopt;
  };
  if (auto r = attempt(Fi->one())) return *r;
  Integer limit = Fi->cardinality();
  if (limit > 4096) limit = 4096;
  for (Integer idx = 2; idx < limit; ++idx) {
    FFElem c = Fi->element(idx);
    if (c.is_zero() || c.is_one()) continue;
    if (auto r = attempt(c)) return *r;
  }
  throw Error(ErrorKind::Internal, "no representative found");
}

}  // namespace montes
