#include "montes/montes.hpp"

#include <algorithm>

namespace montes {

const char* kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::MultiSide: return "multi-side";
    case Witness::Kind::MultiResidualFactor: return "multi-residual-factor";
    case Witness::Kind::Complete: return "complete";
  }
  return "unknown";
}

Valuation validate_input(const IntPoly& F, const Prime& p) {
  if (!F.is_monic()) throw Error(ErrorKind::NonMonic, "input polynomial must be monic");
  if (F.degree() < 1) throw Error(ErrorKind::DegreeTooLarge, "input polynomial must have positive degree");
  Valuation d = discriminant_valuation(F, p);
  if (d.is_infinite()) throw Error(ErrorKind::Inseparable, "input polynomial is not separable");
  return d;
}

namespace {

struct Branch {
  OMType type;
  std::vector<HistoryStep> history;
};

int cmp_int(const Integer& a, const Integer& b) { return a < b ? -1 : (b < a ? 1 : 0); }

int cmp_poly(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    if (int c = cmp_int(a.coeffs()[i], b.coeffs()[i])) return c;
  return 0;
}

int cmp_ff(const FFPoly& a, const FFPoly& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

bool rep_less(const OMRep& x, const OMRep& y) {
  const OMType& a = x.type;
  const OMType& b = y.type;
  if (int c = cmp_ff(a.psi0(), b.psi0())) return c < 0;
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 1; i <= n; ++i) {
    const OMLevel& la = a.level(i);
    const OMLevel& lb = b.level(i);
    if (la.exact != lb.exact) return la.exact;
    if (!la.exact) {
      // lambda = -h/e ascending
      long l = la.h * lb.e, r = lb.h * la.e;
      if (l != r) return l > r;
      if (la.e != lb.e) return la.e < lb.e;
      if (int c = cmp_ff(la.psi, lb.psi)) return c < 0;
    }
    if (int c = cmp_poly(la.phi, lb.phi)) return c < 0;
  }
  return a.order() < b.order();
}

bool same_node(const TypeNode& n, const OMLevel& L) {
  if (n.exact != L.exact || n.h != L.h || n.e != L.e || !(n.phi == L.phi)) return false;
  return L.exact || n.psi == L.psi;
}

std::vector<TypeNode> build_forest(const std::vector<OMRep>& reps) {
  std::vector<TypeNode> roots;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const OMType& t = reps[k].type;
    auto it = std::find_if(roots.begin(), roots.end(), [&](const TypeNode& r) { return r.psi == t.psi0(); });
    if (it == roots.end()) {
      TypeNode r;
      r.psi = t.psi0();
      roots.push_back(r);
      it = roots.end() - 1;
    }
    TypeNode* node = &*it;
    for (std::size_t i = 1; i <= t.order(); ++i) {
      const OMLevel& L = t.level(i);
      auto c = std::find_if(node->children.begin(), node->children.end(),
                            [&](const TypeNode& x) { return same_node(x, L); });
      if (c == node->children.end()) {
        TypeNode x;
        x.level = i;
        x.phi = L.phi;
        x.h = L.h;
        x.e = L.e;
        x.exact = L.exact;
        if (!L.exact) x.psi = L.psi;
        node->children.push_back(x);
        c = node->children.end() - 1;
      }
      node = &*c;
    }
    node->leaf = k;
  }
  return roots;
}

long iteration_cap(const IntPoly& F, Valuation delta) { return 4 * (delta.value() + F.degree() + 10); }

}  // namespace

MontesOutput montes(const IntPoly& F, const Prime& p, std::uint64_t seed) {
  MontesOutput out;
  out.p = p;
  out.n = F.degree();
  out.delta = validate_input(F, p);
  const FieldHandle Fp = Field::prime_field(p);

  std::vector<Branch> stack;
  auto roots = ff_factor(reduce_mod_p(F, Fp), seed);
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    OMType t(p, it->factor);
    t.pending_phi = lift_to_z(it->factor);
    t.pending_omega = it->mult;
    stack.push_back({std::move(t), {}});
  }
  const long cap = iteration_cap(F, out.delta) * static_cast<long>(roots.size());
  long iterations = 0;

  while (!stack.empty()) {
    if (++iterations > cap) throw Error(ErrorKind::IterationCapExceeded, "Montes loop did not terminate");
    Branch br = std::move(stack.back());
    stack.pop_back();
    const OMType& t = br.type;
    const IntPoly phi = *t.pending_phi;
    const long omega = t.pending_omega;
    const std::size_t i = t.order() + 1;

    Expansion ex = expand(t, i, phi, F, static_cast<std::size_t>(omega) + 1);
    NewtonPolygon N = lower_hull(ex.cloud());
    std::vector<Side> sides = principal(N);
    br.history.push_back({i, phi, omega, sides});

    for (const Side& S : sides) {
      if (S.neg_infinite) {
        out.reps.push_back({t.extended_exact(phi), br.history});
        continue;
      }
      FFPoly R = residual_from(t, i, ex, S);
      for (const auto& [psi, mult] : ff_factor(R, seed)) {
        OMType t2 = t.extended(phi, S.h, S.e, psi);
        if (omega == 1) {
          out.reps.push_back({std::move(t2), br.history});
          continue;
        }
        IntPoly next = representative(t2);
        if (S.e * psi.degree() == 1) {
          // refinement: phi_i is replaced, the order stays
          OMType t3 = t;
          t3.pending_phi = std::move(next);
          t3.pending_omega = mult;
          stack.push_back({std::move(t3), br.history});
        } else {
          t2.pending_phi = std::move(next);
          t2.pending_omega = mult;
          stack.push_back({std::move(t2), br.history});
        }
      }
    }
  }
  std::sort(out.reps.begin(), out.reps.end(), rep_less);
  out.forest = build_forest(out.reps);
  return out;
}

IrreducibilityResult irreducibility_test(const IntPoly& F, const Prime& p, std::uint64_t seed) {
  Valuation delta = validate_input(F, p);
  const FieldHandle Fp = Field::prime_field(p);
  IrreducibilityResult res;
  auto roots = ff_factor(reduce_mod_p(F, Fp), seed);
  if (roots.size() >= 2) {
    res.witness.kind = Witness::Kind::MultiResidualFactor;
    res.witness.level = 0;
    for (const auto& r : roots) res.witness.factors.push_back(r.factor);
    return res;
  }
  OMType t(p, roots[0].factor);
  IntPoly phi = lift_to_z(roots[0].factor);
  long omega = roots[0].mult;
  const long cap = iteration_cap(F, delta);
  for (long it = 0; it < cap; ++it) {
    const std::size_t i = t.order() + 1;
    Expansion ex = expand(t, i, phi, F, static_cast<std::size_t>(omega) + 1);
    std::vector<Side> sides = principal(lower_hull(ex.cloud()));
    if (sides.size() >= 2) {
      res.witness.kind = Witness::Kind::MultiSide;
      res.witness.level = i;
      res.witness.sides = sides;
      return res;
    }
    const Side& S = sides.at(0);
    if (S.neg_infinite) {
      res.irreducible = true;
      res.witness.kind = Witness::Kind::Complete;
      res.witness.level = i;
      res.witness.type = t.extended_exact(phi);
      return res;
    }
    auto fac = ff_factor(residual_from(t, i, ex, S), seed);
    if (fac.size() >= 2) {
      res.witness.kind = Witness::Kind::MultiResidualFactor;
      res.witness.level = i;
      for (const auto& r : fac) res.witness.factors.push_back(r.factor);
      return res;
    }
    OMType t2 = t.extended(phi, S.h, S.e, fac[0].factor);
    if (fac[0].mult == 1) {
      res.irreducible = true;
      res.witness.kind = Witness::Kind::Complete;
      res.witness.level = i;
      res.witness.type = t2;
      return res;
    }
    IntPoly next = representative(t2);
    if (S.e * fac[0].factor.degree() != 1) t = std::move(t2);
    phi = std::move(next);
    omega = fac[0].mult;
  }
  throw Error(ErrorKind::IterationCapExceeded, "irreducibility test did not terminate");
}

bool check_faithful(const MontesOutput& out, const IntPoly& F) {
  for (const auto& rep : out.reps)
    if (ord_type(rep.type, F) != 1) return false;
  return true;
}

bool check_om_condition(const MontesOutput& out, const IntPoly& F) {
  for (const auto& rep : out.reps) {
    if (rep.exact()) continue;
    const std::size_t r = rep.depth();
    const OMType tr = rep.type.truncated(r);
    const OMLevel& L = rep.type.last();
    std::vector<Side> sides = principal(newton_full(tr, L.phi, F));
    if (sides.empty() || sides[0].neg_infinite) return false;
    const Side& first = sides[0];
    // the leaf's own side must be the steepest one and have length 1
    if (first.h != L.h || first.e != L.e || first.length() != 1) return false;
  }
  return true;
}

}  // namespace montes
