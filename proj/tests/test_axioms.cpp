#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etheta/axioms.hpp"
#include "etheta/enumerate.hpp"
#include "oracles.hpp"

using namespace etheta;

namespace {

// Literal quantifier sweeps over oracle-computed families, used to check
// the production decisions on small spaces.
bool oracle_theta_t(const FiniteSpace& s, int strength) {
  const SetFamily theta = oracle::estar_theta_open_family(s);
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y) {
      bool xy = false, yx = false, disjoint = false;
      for (PointSet u : theta) {
        if (u.has(x) && !u.has(y)) xy = true;
        if (u.has(y) && !u.has(x)) yx = true;
      }
      for (PointSet u : theta)
        for (PointSet v : theta)
          if (u.has(x) && v.has(y) && !u.intersects(v)) disjoint = true;
      if (strength == 0 && !(xy || yx)) return false;
      if (strength == 1 && !(xy && yx)) return false;
      if (strength == 2 && !disjoint) return false;
    }
  return true;
}

bool oracle_theta_d(const FiniteSpace& s, int strength) {
  if (s.size() == 1) return false;
  const SetFamily dsets = oracle::dset_family(s);
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y) {
      bool xy = false, yx = false, disjoint = false;
      for (PointSet u : dsets) {
        if (u.has(x) && !u.has(y)) xy = true;
        if (u.has(y) && !u.has(x)) yx = true;
      }
      for (PointSet u : dsets)
        for (PointSet v : dsets)
          if (u.has(x) && !u.has(y) && v.has(y) && !v.has(x) && !u.intersects(v)) disjoint = true;
      if (strength == 0 && !(xy || yx)) return false;
      if (strength == 1 && !(xy && yx)) return false;
      if (strength == 2 && !disjoint) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("worked five-open space: the slightly-R0 split") {
  const OperatorTable t(oracle::space_abcd_5());
  CHECK(axiom_holds(t, AxiomKind::SlightlyEstarThetaR0).holds);
  const auto beta = axiom_holds(t, AxiomKind::SlightlyBetaThetaR0);
  CHECK(!beta.holds);
  CHECK(beta.witness == "common points {a,b,c,d}");
}

TEST_CASE("worked seven-open space: the R1 split") {
  const OperatorTable t(oracle::space_abcd_7());
  CHECK(axiom_holds(t, AxiomKind::EstarR1).holds);
  const auto beta = axiom_holds(t, AxiomKind::BetaR1);
  CHECK(!beta.holds);
  CHECK(beta.witness == "pair (c,d)");
  CHECK(cc_points(t).is_empty());
}

TEST_CASE("one-point space") {
  const OperatorTable t(FiniteSpace::discrete({"x"}));
  const AxiomReport report = evaluate_axioms(t);
  auto holds = [&](AxiomKind k) { return report.verdicts[int(k)].holds; };
  CHECK(!holds(AxiomKind::EstarThetaD0));
  CHECK(!holds(AxiomKind::EstarThetaD1));
  CHECK(!holds(AxiomKind::EstarThetaD2));
  CHECK(holds(AxiomKind::EstarThetaT0));
  CHECK(holds(AxiomKind::EstarThetaT1));
  CHECK(holds(AxiomKind::EstarThetaT2));
  CHECK(holds(AxiomKind::EstarThetaTHalf));
  CHECK(holds(AxiomKind::EstarR1));
  CHECK(holds(AxiomKind::EstarT1));
  CHECK(holds(AxiomKind::EstarRegularSpace));
  CHECK(!holds(AxiomKind::SlightlyEstarThetaR0));
  CHECK(!holds(AxiomKind::SlightlyBetaThetaR0));
  CHECK(report.cc_points == PointSet(0b1));
  const KernelDiagnostics diag = kernel_diagnostics(t);
  CHECK(diag.singleton_kernels[0] == t.full_set());
  CHECK(!diag.all_kernels_proper);
  CHECK(!diag.slightly_r0);
  CHECK(diag.biconditional_holds);
}

TEST_CASE("discrete space on two or more points satisfies all thirteen axioms") {
  const OperatorTable t(FiniteSpace::discrete({"x", "y", "z"}));
  const AxiomReport report = evaluate_axioms(t);
  for (int i = 0; i < kAxiomKindCount; ++i) CHECK(report.verdicts[i].holds);
  CHECK(report.cc_points.is_empty());
}

TEST_CASE("separation decisions match the literal quantifier oracle on 3-point spaces") {
  for (const FiniteSpace& s : enumerate_topologies(3)) {
    const OperatorTable t(s);
    CHECK(axiom_holds(t, AxiomKind::EstarThetaT0).holds == oracle_theta_t(s, 0));
    CHECK(axiom_holds(t, AxiomKind::EstarThetaT1).holds == oracle_theta_t(s, 1));
    CHECK(axiom_holds(t, AxiomKind::EstarThetaT2).holds == oracle_theta_t(s, 2));
    CHECK(axiom_holds(t, AxiomKind::EstarThetaD0).holds == oracle_theta_d(s, 0));
    CHECK(axiom_holds(t, AxiomKind::EstarThetaD1).holds == oracle_theta_d(s, 1));
    CHECK(axiom_holds(t, AxiomKind::EstarThetaD2).holds == oracle_theta_d(s, 2));
  }
}

TEST_CASE("quasi theta-closed sets") {
  SUBCASE("theta-closed sets and singletons are quasi closed on all 3-point spaces") {
    for (const FiniteSpace& s : enumerate_topologies(3)) {
      const OperatorTable t(s);
      for (Mask m = 0; m < 8; ++m)
        if (t.in_family(FamilyKind::EstarThetaClosed, PointSet(m)))
          CHECK(is_quasi_theta_closed(t, PointSet(m)));
      for (int x = 0; x < 3; ++x) CHECK(is_quasi_theta_closed(t, PointSet::single(x)));
    }
  }
  SUBCASE("matches the literal sweep on the worked three-point space") {
    const FiniteSpace s = oracle::space_123();
    const OperatorTable t(s);
    const SetFamily theta = oracle::estar_theta_open_family(s);
    for (Mask m = 0; m < 8; ++m) {
      const PointSet a(m);
      bool expected = true;
      for (PointSet u : theta)
        if (a.subset_of(u) && !oracle::estar_cl_theta(s, a).subset_of(u)) expected = false;
      CHECK(is_quasi_theta_closed(t, a) == expected);
    }
  }
}

TEST_CASE("theta neighbourhoods") {
  SUBCASE("one-point space has X as the only neighbourhood") {
    const OperatorTable t(FiniteSpace::discrete({"x"}));
    const SetFamily nbhds = theta_neighbourhoods(t, 0);
    REQUIRE(nbhds.size() == 1);
    CHECK(nbhds.members()[0] == t.full_set());
  }
  SUBCASE("worked seven-open space: b has a proper neighbourhood") {
    const FiniteSpace s = oracle::space_abcd_7();
    const OperatorTable t(s);
    const SetFamily nbhds = theta_neighbourhoods(t, s.point_index("b"));
    CHECK(nbhds.contains(oracle::set_of(s, {"b", "c"})));
    CHECK(cc_points(t).is_empty());
  }
  SUBCASE("neighbourhoods are upward closed and witnessed by theta-open sets") {
    for (const FiniteSpace& s : enumerate_topologies(3)) {
      const OperatorTable t(s);
      const SetFamily theta = oracle::estar_theta_open_family(s);
      for (int x = 0; x < 3; ++x) {
        const SetFamily nbhds = theta_neighbourhoods(t, x);
        for (Mask m = 0; m < 8; ++m) {
          bool expected = false;
          for (PointSet u : theta)
            if (u.has(x) && u.subset_of(PointSet(m))) expected = true;
          CHECK(nbhds.contains(PointSet(m)) == expected);
        }
      }
    }
  }
}

TEST_CASE("kernel diagnostics biconditional on small spaces") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const KernelDiagnostics diag = kernel_diagnostics(OperatorTable(s));
      CHECK(diag.biconditional_holds);
    }
  const KernelDiagnostics indiscrete = kernel_diagnostics(
      OperatorTable(FiniteSpace::indiscrete({"x", "y"})));
  CHECK(indiscrete.biconditional_holds);
  const KernelDiagnostics worked = kernel_diagnostics(OperatorTable(oracle::space_abcd_5()));
  CHECK(worked.all_kernels_proper);
  CHECK(worked.slightly_r0);
  for (int x = 0; x < 4; ++x) CHECK(worked.singleton_kernels[x] == PointSet::single(x));
}

TEST_CASE("witnesses are the canonically first failures") {
  // On the indiscrete two-point space nothing theta-separates (a,b).
  const OperatorTable t(FiniteSpace::indiscrete({"a", "b"}));
  const auto v = axiom_holds(t, AxiomKind::EstarThetaD2);
  if (!v.holds) CHECK(v.witness == "pair (a,b)");
  const auto one = axiom_holds(OperatorTable(FiniteSpace::discrete({"p"})),
                               AxiomKind::EstarThetaD1);
  CHECK(!one.holds);
  CHECK(one.witness == "no d-set contains p");
}

TEST_CASE("axiom names round-trip") {
  for (AxiomKind kind : all_axiom_kinds()) {
    auto parsed = parse_axiom_kind(to_string(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
}
