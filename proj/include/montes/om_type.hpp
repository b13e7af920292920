#pragma once

#include <map>
#include <optional>
#include <vector>

#include "montes/arith.hpp"
#include "montes/ff.hpp"
#include "montes/newton.hpp"

namespace montes {

// Level i of a type: (phi_i, lambda_i = -h/e, psi_i) and derived data.
struct OMLevel {
  IntPoly phi;
  long h = 0;
  long e = 1;
  bool exact = false;  // lambda = -infinity, psi absent
  FFPoly psi;          // over F_i
  long f = 1;
  long V = 0;          // v_i(phi_i)
  long m = 1;          // deg phi_i
  long ell = 0;        // ell*h - ell_prime*e = 1, 0 <= ell < e
  long ell_prime = -1;
  FieldHandle field;   // F_{i+1} = F_i[y]/psi (null when exact)
};

class OMType {
 public:
  OMType(const Prime& p, FFPoly psi0);

  const Prime& prime() const { return p_; }
  const FFPoly& psi0() const { return psi0_; }
  long f0() const { return psi0_.degree(); }
  std::size_t order() const { return levels_.size(); }
  const std::vector<OMLevel>& levels() const { return levels_; }
  const OMLevel& level(std::size_t i) const;  // 1-based
  const OMLevel& last() const { return levels_.back(); }
  bool is_exact() const { return !levels_.empty() && levels_.back().exact; }

  // F_i for 0 <= i <= order+1.
  const FieldHandle& field(std::size_t i) const;
  // V_i and m_i for 1 <= i <= order+1.
  long V(std::size_t i) const;
  long m(std::size_t i) const;
  // e_0 e_1 ... e_{i-1} (e_0 = 1).
  long e_prod(std::size_t i) const;
  // Closed form v_i(phi_k) for k < i.
  long v_phi(std::size_t i, std::size_t k) const;

  OMType extended(IntPoly phi, long h, long e, FFPoly psi) const;
  OMType extended_exact(IntPoly phi) const;
  OMType truncated(std::size_t j) const;
  // Same data with phi of the last level replaced.
  OMType with_last_phi(IntPoly phi) const;

  // Montes loop bookkeeping: the next representative and its omega.
  std::optional<IntPoly> pending_phi;
  long pending_omega = 0;

 private:
  Prime p_;
  FieldHandle f0_;
  FFPoly psi0_;
  FieldHandle f1_;
  std::vector<OMLevel> levels_;
};

OMType truncate(const OMType& t, std::size_t j);

// Canonical lift of a polynomial over F_p, coefficients in [0, p).
IntPoly lift_to_z(const FFPoly& f);
// g mod p as a polynomial over F_p (the given level-0 field).
FFPoly reduce_mod_p(const IntPoly& g, const FieldHandle& Fp);

std::vector<IntPoly> phi_expansion(const IntPoly& g, const IntPoly& phi,
                                   std::size_t max_terms = static_cast<std::size_t>(-1));
// Multiadic expansion of a (deg a < m_i) with respect to phi_1..phi_{i-1}.
std::map<std::vector<long>, IntPoly> multiadic(const IntPoly& a, const OMType& t, std::size_t i);

// v_i(g), 1 <= i <= order+1. Multiadic route with closed-form v_i(phi_k).
Valuation maclane_v(const OMType& t, std::size_t i, const IntPoly& g);
// Same value through nested line-shifting on N_{i-1}; kept as an oracle.
Valuation maclane_v_recursive(const OMType& t, std::size_t i, const IntPoly& g);

// First terms of the phi_i-expansion of g with their values v_i(a_s phi^s).
struct Expansion {
  std::vector<IntPoly> coeffs;
  std::vector<Valuation> values;
  std::vector<PolyPoint> cloud() const;
};
Expansion expand(const OMType& t, std::size_t i, const IntPoly& phi, const IntPoly& g,
                 std::size_t terms = static_cast<std::size_t>(-1));

// Residual coefficient in F_i of a nonzero a with deg a < m_i.
FFElem residual_coeff(const OMType& t, std::size_t i, const IntPoly& a);
// R_{lambda,i} read off an expansion along the given lambda-component.
FFPoly residual_from(const OMType& t, std::size_t i, const Expansion& ex, const Side& comp);

// Operators for t of order i-1 and a representative phi = phi_i.
NewtonPolygon newton_op(const OMType& t, const IntPoly& phi, long omega, const IntPoly& g);
NewtonPolygon newton_full(const OMType& t, const IntPoly& phi, const IntPoly& g);
FFPoly residual_poly(const OMType& t, const IntPoly& phi, long h, long e, const IntPoly& g);

long ord_type(const OMType& t, const IntPoly& g);

// g with v_{i+1}(g) = V and y^{ord_y target} R_{-h/e,i}(g) = target, for t of order i-1.
IntPoly construct(const OMType& t, const IntPoly& phi, long h, long e, const FFPoly& target, long V);
// Representative of t (order >= 1, last level not exact): phi_i^{e f} + g.
IntPoly representative(const OMType& t);

}  // namespace montes
