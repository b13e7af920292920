#include "montes/okutsu.hpp"

namespace montes {

InvariantReport okutsu_data(const OMRep& rep, Valuation delta) {
  if (delta.is_infinite()) throw Error(ErrorKind::Inseparable, "infinite discriminant valuation");
  const OMType& t = rep.type;
  InvariantReport R;
  R.depth = rep.depth();
  R.n = t.last().m;
  R.f0 = t.f0();
  R.delta = delta.value();
  R.f = R.f0;
  const std::size_t r = R.depth;
  for (std::size_t i = 1; i <= r; ++i) {
    const OMLevel& L = t.level(i);
    R.levels.push_back({L.e, L.f, L.h, L.m, L.V});
    R.e *= L.e;
    R.f *= L.f;
    R.width.push_back((L.h + L.e - 1) / L.e);
  }
  if (R.e * R.f != R.n) throw Error(ErrorKind::InconsistentLevels, "e*f differs from the degree");

  // mu_r and nu_r
  Rational mu = 0, nu = 0;
  long eprod = 1;
  for (std::size_t j = 1; j <= r; ++j) {
    const OMLevel& L = t.level(j);
    eprod *= L.e;
    long ef = 1;
    for (std::size_t k = j; k <= r; ++k) ef *= t.level(k).e * t.level(k).f;
    mu += Rational((ef - 1) * L.h, eprod);
    nu += Rational(L.h, eprod);
  }
  mu.canonicalize();
  nu.canonicalize();
  R.mu = mu;

  Rational d1(t.last().V, R.e);
  d1.canonicalize();
  Rational d2 = mu + nu;
  Rational d3 = 0;
  long eb = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    const OMLevel& L = t.level(i);
    d3 += Rational(L.h * R.n, L.e * eb * L.m);
    eb *= L.e;
  }
  d3.canonicalize();
  if (d1 != d2 || d1 != d3) throw Error(ErrorKind::InconsistentLevels, "delta0 cross-check failed");
  R.delta0 = d1;

  R.rho = (Rational(R.delta) - Rational(R.n) * mu) / Rational(R.f);
  R.rho.canonicalize();
  return R;
}

long irreducibility_precision(const IntPoly& F, const Prime& p) {
  long d = validate_input(F, p).value();
  return (2 * d) / F.degree() + 1;
}

long factorization_precision(const IntPoly& F, const Prime& p) { return validate_input(F, p).value() + 1; }

Rational value_at_root(const IntPoly& F, const IntPoly& g, const Prime& p) {
  if (!irreducibility_test(F, p).irreducible) throw Error(ErrorKind::NotIrreducible, "polynomial is not irreducible");
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "value of zero");
  Integer res = resultant(F, g);
  if (res == 0) throw Error(ErrorKind::SharedRoot, "polynomials share a root");
  Rational v(vp(res, p).value(), F.degree());
  v.canonicalize();
  return v;
}

bool okutsu_equivalent(const IntPoly& P, const IntPoly& Q, const Prime& p) {
  if (!irreducibility_test(P, p).irreducible || !irreducibility_test(Q, p).irreducible)
    throw Error(ErrorKind::NotIrreducible, "okutsu equivalence needs irreducible inputs");
  if (P.degree() != Q.degree()) throw Error(ErrorKind::DegreeMismatch, "degrees differ");
  MontesOutput out = montes(P, p);
  const OMRep& rep = out.reps.at(0);
  if (rep.depth() == 0) {
    FieldHandle Fp = Field::prime_field(p);
    return reduce_mod_p(P, Fp) == reduce_mod_p(Q, Fp);
  }
  Rational d0 = okutsu_data(rep, out.delta).delta0;
  Integer res = resultant(P, Q);
  if (res == 0) return true;  // P = Q
  Rational v(vp(res, p).value(), P.degree());
  v.canonicalize();
  return v > d0;
}

long index_of_coincidence(const OMRep& a, const OMRep& b, const Prime& p) {
  if (!(a.type.prime() == p) || !(b.type.prime() == p)) throw Error(ErrorKind::InconsistentLevels, "prime mismatch");
  const std::size_t top = std::min(a.type.order(), b.type.order());
  long j = 0;
  for (std::size_t k = 1; k <= top; ++k) {
    const IntPoly& phi_b = b.type.level(k).phi;
    if (a.type.m(k) != phi_b.degree()) break;
    OMType tr = a.type.truncated(k - 1);
    if (!(tr.psi0().handle()->same_as(*b.type.psi0().handle()))) break;
    if (ord_type(tr, phi_b) != 1) break;
    j = static_cast<long>(k);
  }
  return j;
}

}  // namespace montes
