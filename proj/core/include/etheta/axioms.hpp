#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "etheta/operators.hpp"

namespace etheta {

enum class AxiomKind {
  EstarThetaD0,
  EstarThetaD1,
  EstarThetaD2,
  EstarThetaT0,
  EstarThetaT1,
  EstarThetaT2,
  EstarThetaTHalf,
  SlightlyEstarThetaR0,
  SlightlyBetaThetaR0,
  EstarR1,
  BetaR1,
  EstarT1,
  EstarRegularSpace,
};
inline constexpr int kAxiomKindCount = 13;

const char* to_string(AxiomKind kind);
std::optional<AxiomKind> parse_axiom_kind(const std::string& name);
const std::array<AxiomKind, kAxiomKindCount>& all_axiom_kinds();

// Witnesses certify a failed axiom: the first inseparable point pair in
// canonical order, or the offending set for the set-shaped axioms.
struct AxiomVerdict {
  bool holds = false;
  std::string witness;  // empty when the axiom holds
};

AxiomVerdict axiom_holds(const OperatorTable& t, AxiomKind kind);

struct AxiomReport {
  std::array<AxiomVerdict, kAxiomKindCount> verdicts;
  PointSet cc_points;
};
AxiomReport evaluate_axioms(const OperatorTable& t);

// Every e*-theta-open superset of A already contains e*-cl_theta(A).
bool is_quasi_theta_closed(const OperatorTable& t, PointSet a);

// {N : some e*-theta-open U has x in U subseteq N}.
SetFamily theta_neighbourhoods(const OperatorTable& t, int x);

// Points whose only e*-theta-neighbourhood is the whole space.
PointSet cc_points(const OperatorTable& t);

struct KernelDiagnostics {
  std::vector<PointSet> singleton_kernels;
  bool all_kernels_proper = false;  // e*-ker_theta({x}) != X for every x
  bool slightly_r0 = false;
  bool biconditional_holds = false;
};
KernelDiagnostics kernel_diagnostics(const OperatorTable& t);

// The two alternative formulations of an e*-regular space; the defining
// form (closed set vs point separation) is what axiom_holds evaluates.
bool eregular_space_nbhd_form(const OperatorTable& t);
bool eregular_space_regular_interior_form(const OperatorTable& t);

}  // namespace etheta
