#pragma once

#include <vector>

#include "montes/montes.hpp"

namespace montes {

struct LevelInvariants {
  long e = 1;
  long f = 1;
  long h = 0;
  long m = 1;
  long V = 0;
};

struct InvariantReport {
  long n = 0;
  std::size_t depth = 0;
  long f0 = 1;
  long e = 1;
  long f = 1;
  Rational mu;
  Rational delta0;
  long delta = 0;
  Rational rho;
  std::vector<long> width;              // ceil(h_i / e_i), 1 <= i <= r
  std::vector<LevelInvariants> levels;  // 1 <= i <= r
};

InvariantReport okutsu_data(const OMRep& rep, Valuation delta);

long irreducibility_precision(const IntPoly& F, const Prime& p);
long factorization_precision(const IntPoly& F, const Prime& p);

// v(g(theta)) for a root theta of the irreducible F.
Rational value_at_root(const IntPoly& F, const IntPoly& g, const Prime& p);
bool okutsu_equivalent(const IntPoly& P, const IntPoly& Q, const Prime& p);
long index_of_coincidence(const OMRep& a, const OMRep& b, const Prime& p);

}  // namespace montes
