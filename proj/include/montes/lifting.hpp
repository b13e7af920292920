#pragma once

#include <vector>

#include "montes/montes.hpp"

namespace montes {

struct LiftedFactorization {
  std::vector<IntPoly> factors;   // reduced mod p^nu, in leaf order
  unsigned long nu = 1;
  std::vector<Valuation> slope;   // terminal |lambda| per factor, infinite when exact
  long iterations = 0;            // rounds of improvement
  std::vector<OMRep> reps;        // the improved representations
};

OMRep improve_leaf(const IntPoly& F, const OMRep& rep);

// Per-leaf cap on improvement rounds.
long lifting_round_cap(const OMRep& rep, unsigned long nu, long delta, long n);

LiftedFactorization lift_factorization(const IntPoly& F, const MontesOutput& out, unsigned long nu);
bool verify_congruence(const IntPoly& F, const std::vector<IntPoly>& factors, const Prime& p, unsigned long nu);
bool disc_decomposition_check(const IntPoly& F, const std::vector<IntPoly>& factors, const Prime& p,
                              unsigned long nu);

}  // namespace montes
