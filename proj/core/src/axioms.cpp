#include "etheta/axioms.hpp"

#include "etheta/error.hpp"

namespace etheta {

namespace {

struct AxiomName {
  AxiomKind kind;
  const char* name;
};
constexpr std::array<AxiomName, kAxiomKindCount> kAxiomNames{{
    {AxiomKind::EstarThetaD0, "e*-theta-D0"},
    {AxiomKind::EstarThetaD1, "e*-theta-D1"},
    {AxiomKind::EstarThetaD2, "e*-theta-D2"},
    {AxiomKind::EstarThetaT0, "e*-theta-T0"},
    {AxiomKind::EstarThetaT1, "e*-theta-T1"},
    {AxiomKind::EstarThetaT2, "e*-theta-T2"},
    {AxiomKind::EstarThetaTHalf, "e*-theta-T1/2"},
    {AxiomKind::SlightlyEstarThetaR0, "slightly-e*-theta-R0"},
    {AxiomKind::SlightlyBetaThetaR0, "slightly-beta-theta-R0"},
    {AxiomKind::EstarR1, "e*-R1"},
    {AxiomKind::BetaR1, "beta-R1"},
    {AxiomKind::EstarT1, "e*-T1"},
    {AxiomKind::EstarRegularSpace, "e*-regular-space"},
}};

std::string pair_witness(const FiniteSpace& s, int x, int y) {
  return "pair (" + s.point_names()[x] + "," + s.point_names()[y] + ")";
}

// x-side separation by d-sets: some d-set contains x but not y.
bool dset_separates(const OperatorTable& t, int x, int y) {
  for (PointSet d : t.family(FamilyKind::DSet))
    if (d.has(x) && !d.has(y)) return true;
  return false;
}

bool theta_separates(const OperatorTable& t, int x, int y) {
  for (PointSet u : t.family(FamilyKind::EstarThetaOpen))
    if (u.has(x) && !u.has(y)) return true;
  return false;
}

// Disjoint pair separation over a family given as canonical member list.
bool disjoint_pair(const SetFamily& fam, int x, int y) {
  for (PointSet u : fam) {
    if (!u.has(x) || u.has(y)) continue;
    for (PointSet v : fam)
      if (v.has(y) && !u.intersects(v)) return true;
  }
  return false;
}

bool disjoint_dset_pair(const OperatorTable& t, int x, int y) {
  const auto& dsets = t.family(FamilyKind::DSet).members();
  for (PointSet a : dsets) {
    if (!a.has(x) || a.has(y)) continue;
    for (PointSet b : dsets)
      if (b.has(y) && !b.has(x) && !a.intersects(b)) return true;
  }
  return false;
}

// Generalized R1 with a chosen open family, closure and interior table:
// pairs with distinct singleton closures need disjoint members covering
// the closures.
template <typename IntFn, typename ClFn>
AxiomVerdict r1_axiom(const OperatorTable& t, const SetFamily& opens, IntFn int_of, ClFn cl_of) {
  const auto& space = t.space();
  const int n = space.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const PointSet cx = cl_of(PointSet::single(x));
      const PointSet cy = cl_of(PointSet::single(y));
      if (cx == cy) continue;
      bool separated = false;
      for (PointSet v : opens) {
        if (!cy.subset_of(v)) continue;
        if (cx.subset_of(int_of(v.complement(n)))) { separated = true; break; }
      }
      if (!separated) return {false, pair_witness(space, x, y)};
    }
  return {true, {}};
}

}  // namespace

const char* to_string(AxiomKind kind) {
  for (const auto& e : kAxiomNames)
    if (e.kind == kind) return e.name;
  return "?";
}

std::optional<AxiomKind> parse_axiom_kind(const std::string& name) {
  for (const auto& e : kAxiomNames)
    if (name == e.name) return e.kind;
  return std::nullopt;
}

const std::array<AxiomKind, kAxiomKindCount>& all_axiom_kinds() {
  static const std::array<AxiomKind, kAxiomKindCount> kinds = [] {
    std::array<AxiomKind, kAxiomKindCount> out{};
    for (int i = 0; i < kAxiomKindCount; ++i) out[i] = kAxiomNames[i].kind;
    return out;
  }();
  return kinds;
}

AxiomVerdict axiom_holds(const OperatorTable& t, AxiomKind kind) {
  const auto& space = t.space();
  const int n = space.size();

  switch (kind) {
    case AxiomKind::EstarThetaD0:
    case AxiomKind::EstarThetaD1:
    case AxiomKind::EstarThetaD2: {
      // One-point carriers: no d-set contains the sole point (a d-set
      // difference needs a theta-open U != X, which forces U empty), so
      // the D axioms fail there outright.
      if (n == 1)
        return {false, "no d-set contains " + space.point_names()[0]};
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          bool ok = true;
          if (kind == AxiomKind::EstarThetaD0)
            ok = dset_separates(t, x, y) || dset_separates(t, y, x);
          else if (kind == AxiomKind::EstarThetaD1)
            ok = dset_separates(t, x, y) && dset_separates(t, y, x);
          else
            ok = disjoint_dset_pair(t, x, y);
          if (!ok) return {false, pair_witness(space, x, y)};
        }
      return {true, {}};
    }

    case AxiomKind::EstarThetaT0:
    case AxiomKind::EstarThetaT1: {
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          const bool xy = theta_separates(t, x, y);
          const bool yx = theta_separates(t, y, x);
          const bool ok = (kind == AxiomKind::EstarThetaT0) ? (xy || yx) : (xy && yx);
          if (!ok) return {false, pair_witness(space, x, y)};
        }
      return {true, {}};
    }

    case AxiomKind::EstarThetaT2: {
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (!disjoint_pair(t.family(FamilyKind::EstarThetaOpen), x, y))
            return {false, pair_witness(space, x, y)};
      return {true, {}};
    }

    case AxiomKind::EstarThetaTHalf: {
      // Every quasi theta-closed set must be theta-closed.
      for (Mask m = 0; m < (Mask(1) << n); ++m) {
        const PointSet a(m);
        if (is_quasi_theta_closed(t, a) && !t.in_family(FamilyKind::EstarThetaClosed, a))
          return {false, "set " + space.label_of(a) + " is quasi theta-closed but not theta-closed"};
      }
      return {true, {}};
    }

    case AxiomKind::SlightlyEstarThetaR0:
    case AxiomKind::SlightlyBetaThetaR0: {
      const OperatorKind cl_theta = (kind == AxiomKind::SlightlyEstarThetaR0)
                                        ? OperatorKind::EstarClTheta
                                        : OperatorKind::BetaClTheta;
      PointSet inter = space.full_set();
      for (int x = 0; x < n; ++x) inter = inter & t.apply(cl_theta, PointSet::single(x));
      if (inter.is_empty()) return {true, {}};
      return {false, "common points " + space.label_of(inter)};
    }

    case AxiomKind::EstarR1:
      return r1_axiom(
          t, t.family(FamilyKind::EstarOpen),
          [&](PointSet s) { return t.apply(OperatorKind::EstarInt, s); },
          [&](PointSet s) { return t.apply(OperatorKind::EstarCl, s); });

    case AxiomKind::BetaR1:
      return r1_axiom(
          t, t.family(FamilyKind::BetaOpen),
          [&](PointSet s) { return t.apply(OperatorKind::BetaInt, s); },
          [&](PointSet s) { return t.apply(OperatorKind::BetaCl, s); });

    case AxiomKind::EstarT1: {
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          bool xy = false, yx = false;
          for (PointSet u : t.family(FamilyKind::EstarOpen)) {
            if (u.has(x) && !u.has(y)) xy = true;
            if (u.has(y) && !u.has(x)) yx = true;
            if (xy && yx) break;
          }
          if (!(xy && yx)) return {false, pair_witness(space, x, y)};
        }
      return {true, {}};
    }

    case AxiomKind::EstarRegularSpace: {
      // Each closed F and point x outside it get disjoint e*-open U, V
      // with x in U and F in V. V determines the best U as the e*-interior
      // of its complement.
      for (PointSet f : space.closed_sets())
        for (int x = 0; x < n; ++x) {
          if (f.has(x)) continue;
          bool separated = false;
          for (PointSet v : t.family(FamilyKind::EstarOpen)) {
            if (!f.subset_of(v)) continue;
            if (t.apply(OperatorKind::EstarInt, v.complement(n)).has(x)) {
              separated = true;
              break;
            }
          }
          if (!separated)
            return {false, "point " + space.point_names()[x] + " and closed set " + space.label_of(f)};
        }
      return {true, {}};
    }
  }
  throw Error(ErrorCode::PreconditionUnmet, "unknown axiom kind");
}

AxiomReport evaluate_axioms(const OperatorTable& t) {
  AxiomReport report;
  const auto& kinds = all_axiom_kinds();
  for (int i = 0; i < kAxiomKindCount; ++i) report.verdicts[i] = axiom_holds(t, kinds[i]);
  report.cc_points = cc_points(t);
  return report;
}

bool is_quasi_theta_closed(const OperatorTable& t, PointSet a) {
  const PointSet cl_theta = t.apply(OperatorKind::EstarClTheta, a);
  for (PointSet u : t.family(FamilyKind::EstarThetaOpen))
    if (a.subset_of(u) && !cl_theta.subset_of(u)) return false;
  return true;
}

SetFamily theta_neighbourhoods(const OperatorTable& t, int x) {
  std::vector<PointSet> members;
  for (Mask m = 0; m < (Mask(1) << t.size()); ++m)
    if (PointSet(t.theta_int_union(m)).has(x)) members.push_back(PointSet(m));
  return SetFamily(t.size(), std::move(members));
}

PointSet cc_points(const OperatorTable& t) {
  // x is cc exactly when no theta-open set other than X contains it.
  PointSet covered;
  for (PointSet u : t.family(FamilyKind::EstarThetaOpen))
    if (u != t.full_set()) covered = covered | u;
  return covered.complement(t.size());
}

KernelDiagnostics kernel_diagnostics(const OperatorTable& t) {
  KernelDiagnostics d;
  const int n = t.size();
  d.all_kernels_proper = true;
  for (int x = 0; x < n; ++x) {
    const PointSet k = t.apply(OperatorKind::EstarKerTheta, PointSet::single(x));
    d.singleton_kernels.push_back(k);
    if (k == t.full_set()) d.all_kernels_proper = false;
  }
  d.slightly_r0 = axiom_holds(t, AxiomKind::SlightlyEstarThetaR0).holds;
  d.biconditional_holds = (d.slightly_r0 == d.all_kernels_proper);
  return d;
}

bool eregular_space_nbhd_form(const OperatorTable& t) {
  // For each x and open U about x there is an e*-open V with
  // x in V, e*-cl(V) inside U. The minimal open neighbourhood is the
  // binding instance of U.
  const auto& space = t.space();
  for (int x = 0; x < space.size(); ++x) {
    const PointSet u = space.min_nbhd(x);
    bool found = false;
    for (PointSet v : t.family(FamilyKind::EstarOpen))
      if (v.has(x) && t.apply(OperatorKind::EstarCl, v).subset_of(u)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool eregular_space_regular_interior_form(const OperatorTable& t) {
  for (PointSet u : t.family(FamilyKind::EstarOpen))
    for (int x = 0; x < t.size(); ++x) {
      if (!u.has(x)) continue;
      bool found = false;
      for (PointSet v : t.family(FamilyKind::EstarRegular))
        if (v.has(x) && v.subset_of(u)) { found = true; break; }
      if (!found) return false;
    }
  return true;
}

}  // namespace etheta
