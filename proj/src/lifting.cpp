#include "montes/lifting.hpp"

namespace montes {

OMRep improve_leaf(const IntPoly& F, const OMRep& rep) {
  if (rep.exact()) throw Error(ErrorKind::AlreadyExact, "leaf is already exact");
  const OMType& t = rep.type;
  const std::size_t i = t.order();
  const OMLevel& L = t.last();
  if (L.e != 1 || L.f != 1) throw Error(ErrorKind::InconsistentLevels, "terminal level must have e = f = 1");
  IntPoly phi = representative(t);
  OMType tr = t.truncated(i - 1);
  Expansion ex = expand(tr, i, phi, F, 2);
  std::vector<HistoryStep> history = rep.history;
  std::vector<Side> sides = principal(lower_hull(ex.cloud()));
  history.push_back({i, phi, 1, sides});
  if (ex.coeffs.empty() || ex.coeffs[0].is_zero()) return {tr.extended_exact(std::move(phi)), std::move(history)};
  if (sides.empty() || sides[0].length() != 1)
    throw Error(ErrorKind::Internal, "terminal polygon lost its unit side");
  const Side& S = sides[0];
  if (S.h <= L.h) throw Error(ErrorKind::Internal, "terminal slope did not increase");
  FFPoly R = residual_from(tr, i, ex, S);
  return {tr.extended(std::move(phi), S.h, 1, R.monic()), std::move(history)};
}

long lifting_round_cap(const OMRep& rep, unsigned long nu, long delta, long n) {
  long e = 1;
  for (std::size_t i = 1; i < rep.type.order(); ++i) e *= rep.type.level(i).e;
  return 2 * (e * static_cast<long>(nu) + delta + n + 10);
}

LiftedFactorization lift_factorization(const IntPoly& F, const MontesOutput& out, unsigned long nu) {
  if (nu < 1) throw Error(ErrorKind::PrecisionTooLow, "precision must be positive");
  LiftedFactorization res;
  res.nu = nu;
  res.reps = out.reps;
  std::vector<long> rounds(res.reps.size(), 0);
  const long delta = out.delta.value();
  // Root value v(phi(theta)) >= nu + delta. Such a leaf is left alone while others
  // catch up; slow (ramified) leaves gain only 1/e per round.
  auto saturated = [&](const OMRep& r) {
    const OMType& t = r.type;
    const std::size_t i = t.order();
    Rational w(t.V(i) + t.last().h, t.e_prod(i));
    return w >= Rational(static_cast<long>(nu) + delta);
  };
  for (;;) {
    std::vector<IntPoly> cur;
    for (const auto& r : res.reps) cur.push_back(r.okutsu_factor());
    bool any_open = false;
    for (const auto& r : res.reps) any_open = any_open || (!r.exact() && !saturated(r));
    // The product alone does not pin the factors mod p^nu; saturation makes each one accurate.
    if (!any_open && verify_congruence(F, cur, out.p, nu)) break;
    bool progressed = false;
    for (std::size_t s = 0; s < res.reps.size(); ++s) {
      if (res.reps[s].exact() || (any_open && saturated(res.reps[s]))) continue;
      if (++rounds[s] > lifting_round_cap(res.reps[s], nu, delta, out.n))
        throw Error(ErrorKind::IterationCapExceeded, "lifting did not reach the requested precision");
      res.reps[s] = improve_leaf(F, res.reps[s]);
      progressed = true;
    }
    ++res.iterations;
    if (!progressed) throw Error(ErrorKind::Internal, "all leaves exact but product differs from F");
  }
  for (const auto& r : res.reps) {
    res.factors.push_back(reduce_mod_power(r.okutsu_factor(), out.p, nu));
    res.slope.push_back(r.exact() ? Valuation::infinity() : Valuation(r.type.last().h));
  }
  return res;
}

bool verify_congruence(const IntPoly& F, const std::vector<IntPoly>& factors, const Prime& p, unsigned long nu) {
  IntPoly prod = IntPoly::constant(1);
  for (const auto& f : factors) prod = prod * f;
  return reduce_mod_power(prod - F, p, nu).is_zero();
}

bool disc_decomposition_check(const IntPoly& F, const std::vector<IntPoly>& factors, const Prime& p,
                              unsigned long nu) {
  Valuation delta = discriminant_valuation(F, p);
  if (delta.is_infinite()) throw Error(ErrorKind::Inseparable, "input polynomial is not separable");
  if (static_cast<long>(nu) < delta.value() + 1)
    throw Error(ErrorKind::PrecisionTooLow, "factors must be accurate modulo p^(delta+1)");
  Valuation sum = 0;
  for (std::size_t s = 0; s < factors.size(); ++s) {
    sum = sum + discriminant_valuation(factors[s], p);
    for (std::size_t t = s + 1; t < factors.size(); ++t) {
      Valuation r = vp(resultant(factors[s], factors[t]), p);
      sum = sum + r + r;
    }
  }
  return sum == delta;
}

}  // namespace montes
