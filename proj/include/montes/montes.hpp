#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "montes/om_type.hpp"

namespace montes {

// One pass of the main loop over a branch: the Newton polygon seen there.
struct HistoryStep {
  std::size_t level = 0;
  IntPoly phi;
  long omega = 0;
  std::vector<Side> sides;  // principal
};

struct OMRep {
  OMType type;  // order r+1; the last level carries the terminal data
  std::vector<HistoryStep> history;

  bool exact() const { return type.is_exact(); }
  std::size_t depth() const { return type.order() - 1; }
  const IntPoly& okutsu_factor() const { return type.last().phi; }
};

struct TypeNode {
  std::size_t level = 0;  // 0 for a root (psi0 only)
  FFPoly psi;
  IntPoly phi;
  long h = 0;
  long e = 1;
  bool exact = false;
  std::optional<std::size_t> leaf;  // index into MontesOutput::reps
  std::vector<TypeNode> children;
};

struct MontesOutput {
  Prime p{2};
  long n = 0;
  Valuation delta;
  std::vector<OMRep> reps;
  std::vector<TypeNode> forest;
};

MontesOutput montes(const IntPoly& F, const Prime& p, std::uint64_t seed = 0);

struct Witness {
  enum class Kind { MultiSide, MultiResidualFactor, Complete };
  Kind kind = Kind::Complete;
  std::size_t level = 0;
  std::vector<Side> sides;      // MultiSide
  std::vector<FFPoly> factors;  // MultiResidualFactor
  std::optional<OMType> type;   // Complete
};
const char* kind_name(Witness::Kind k);

struct IrreducibilityResult {
  bool irreducible = false;
  Witness witness;
};

IrreducibilityResult irreducibility_test(const IntPoly& F, const Prime& p, std::uint64_t seed = 0);

bool check_faithful(const MontesOutput& out, const IntPoly& F);
bool check_om_condition(const MontesOutput& out, const IntPoly& F);

// Shared input validation; returns delta.
Valuation validate_input(const IntPoly& F, const Prime& p);

}  // namespace montes
