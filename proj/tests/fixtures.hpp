#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "montes/arith.hpp"
#include "montes/parse.hpp"

namespace fixtures {

using montes::Integer;
using montes::IntPoly;
using montes::Prime;

struct Fixture {
  unsigned long p;
  const char* poly;
};

// Irreducible over Z_p. Mix of unramified, Eisenstein, depth 1..3 and f > 1 at deep levels.
inline const std::vector<Fixture>& irreducible() {
  static const std::vector<Fixture> v = {
      {2, "x+22"},
      {2, "x+26"},
      {2, "x^2+2"},
      {2, "x^2+6"},
      {2, "x^2+x+1"},
      {2, "x^3+x+1"},
      {2, "x^2+2*x+5"},
      {2, "x^4+2"},
      {2, "x^4+4*x^2+4*x+4"},
      {2, "x^4+2*x^3+3*x^2+4*x+1"},
      {2, "x^4+2*x^3+4*x^2+4*x+12"},
      {2, "x^8+8*x^6+8*x^5+24*x^4+32*x^3+64*x^2+32*x+48"},
      {3, "x+1"},
      {3, "x+4"},
      {3, "x^2+1"},
      {3, "x^2+3"},
      {3, "x^2+27"},
      {3, "x^3+3*x+3"},
      {3, "x^6+3"},
      {3, "x^4+6*x^2+9*x+9"},
      {3, "x^4+2*x^2+3*x+1"},
      {5, "x^2+2"},
      {5, "x^2+5"},
      {5, "x^2+30"},
      {5, "x^2+50"},
      {5, "x^3+5"},
      {5, "x^4+5*x^2+25"},
      {5, "x^4+10*x^2+25*x+25"},
      {7, "x^2+1"},
      {7, "x^2+7"},
      {7, "x^3+7"},
      {7, "x^4+7*x^2+147"},
      {7, "x^4+14*x^2+49*x+49"},
      {11, "x^2+1"},
      {11, "x^2+11"},
      {11, "x^3+11"},
      {13, "x^2+2"},
      {13, "x^2+13"},
      {13, "x^3+13"},
  };
  return v;
}

struct Composite {
  unsigned long p;
  std::vector<const char*> factors;
};

// Products of 2 to 4 distinct irreducible fixtures, n <= 24.
inline const std::vector<Composite>& composites() {
  static const std::vector<Composite> v = {
      {2, {"x+22", "x+26"}},
      {2, {"x^2+2", "x^2+6"}},
      {2, {"x^2+x+1", "x^4+2", "x^3+x+1"}},
      {2, {"x^4+4*x^2+4*x+4", "x^2+2", "x^2+2*x+5"}},
      {2, {"x^2+2", "x^8+8*x^6+8*x^5+24*x^4+32*x^3+64*x^2+32*x+48", "x^4+2*x^3+3*x^2+4*x+1"}},
      {2, {"x^4+2", "x^4+4*x^2+4*x+4", "x^4+2*x^3+4*x^2+4*x+12",
           "x^8+8*x^6+8*x^5+24*x^4+32*x^3+64*x^2+32*x+48"}},
      {3, {"x^2+3", "x^2+27"}},
      {3, {"x^3+3*x+3", "x^6+3", "x+1"}},
      {3, {"x^4+6*x^2+9*x+9", "x^2+1", "x^4+2*x^2+3*x+1", "x+4"}},
      {5, {"x^2+5", "x^2+30"}},
      {5, {"x^4+5*x^2+25", "x^4+10*x^2+25*x+25", "x^3+5"}},
      {5, {"x^2+50", "x^2+2", "x^2+5", "x^3+5"}},
      {7, {"x^4+7*x^2+147", "x^2+7", "x^3+7"}},
      {7, {"x^4+14*x^2+49*x+49", "x^2+1"}},
      {11, {"x^2+11", "x^3+11", "x^2+1"}},
      {13, {"x^2+13", "x^3+13", "x^2+2"}},
  };
  return v;
}

inline IntPoly product(const Composite& c) {
  IntPoly F{1};
  for (const char* s : c.factors) F = F * montes::parse_poly(s);
  return F;
}

// Monic G with G = F mod p^k: lower coefficients moved by random multiples of p^k.
inline IntPoly perturb(const IntPoly& F, const Prime& p, unsigned long k, std::mt19937_64& rng) {
  std::vector<Integer> c = F.coeffs();
  Integer step = p.pow(k);
  std::uniform_int_distribution<long> d(-9, 9);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] += step * Integer(d(rng));
  return IntPoly(c);
}

// Random polynomial of degree exactly deg (monic when asked), coefficients in [-bound, bound].
inline IntPoly random_poly(long deg, long bound, bool monic, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg + 1));
  for (auto& a : c) a = d(rng);
  if (monic) c.back() = 1;
  while (c.back() == 0) c.back() = d(rng);
  return IntPoly(c);
}

}  // namespace fixtures
