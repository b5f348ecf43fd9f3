#include "etheta/operators.hpp"

#include <bit>

#include "etheta/error.hpp"

namespace etheta {

namespace {

struct KindName {
  FamilyKind kind;
  const char* name;
};
constexpr std::array<KindName, kFamilyKindCount> kFamilyNames{{
    {FamilyKind::Open, "open"},
    {FamilyKind::Closed, "closed"},
    {FamilyKind::RegularOpen, "regular-open"},
    {FamilyKind::RegularClosed, "regular-closed"},
    {FamilyKind::DeltaOpen, "delta-open"},
    {FamilyKind::EstarOpen, "e*-open"},
    {FamilyKind::EstarClosed, "e*-closed"},
    {FamilyKind::EstarRegular, "e*-regular"},
    {FamilyKind::EstarThetaOpen, "e*-theta-open"},
    {FamilyKind::EstarThetaClosed, "e*-theta-closed"},
    {FamilyKind::BetaOpen, "beta-open"},
    {FamilyKind::BetaClosed, "beta-closed"},
    {FamilyKind::BetaRegular, "beta-regular"},
    {FamilyKind::BetaThetaOpen, "beta-theta-open"},
    {FamilyKind::DSet, "d-set"},
}};

struct OpName {
  OperatorKind kind;
  const char* name;
};
constexpr std::array<OpName, kOperatorKindCount> kOperatorNames{{
    {OperatorKind::Cl, "cl"},
    {OperatorKind::Int, "int"},
    {OperatorKind::DeltaCl, "delta-cl"},
    {OperatorKind::DeltaInt, "delta-int"},
    {OperatorKind::EstarCl, "e*-cl"},
    {OperatorKind::EstarInt, "e*-int"},
    {OperatorKind::EstarClTheta, "e*-cl_theta"},
    {OperatorKind::EstarIntTheta, "e*-int_theta"},
    {OperatorKind::EstarKerTheta, "e*-ker_theta"},
    {OperatorKind::BetaCl, "beta-cl"},
    {OperatorKind::BetaInt, "beta-int"},
    {OperatorKind::BetaClTheta, "beta-cl_theta"},
    {OperatorKind::BetaKerTheta, "beta-ker_theta"},
}};

inline int lowest_point(Mask m) { return std::countr_zero(m); }

}  // namespace

const char* to_string(FamilyKind kind) {
  for (const auto& e : kFamilyNames)
    if (e.kind == kind) return e.name;
  return "?";
}

const char* to_string(OperatorKind kind) {
  for (const auto& e : kOperatorNames)
    if (e.kind == kind) return e.name;
  return "?";
}

std::optional<FamilyKind> parse_family_kind(const std::string& name) {
  for (const auto& e : kFamilyNames)
    if (name == e.name) return e.kind;
  return std::nullopt;
}

std::optional<OperatorKind> parse_operator_kind(const std::string& name) {
  for (const auto& e : kOperatorNames)
    if (name == e.name) return e.kind;
  return std::nullopt;
}

const std::array<FamilyKind, kFamilyKindCount>& all_family_kinds() {
  static const std::array<FamilyKind, kFamilyKindCount> kinds = [] {
    std::array<FamilyKind, kFamilyKindCount> out{};
    for (int i = 0; i < kFamilyKindCount; ++i) out[i] = kFamilyNames[i].kind;
    return out;
  }();
  return kinds;
}

const std::array<OperatorKind, kOperatorKindCount>& all_operator_kinds() {
  static const std::array<OperatorKind, kOperatorKindCount> kinds = [] {
    std::array<OperatorKind, kOperatorKindCount> out{};
    for (int i = 0; i < kOperatorKindCount; ++i) out[i] = kOperatorNames[i].kind;
    return out;
  }();
  return kinds;
}

OperatorTable::OperatorTable(FiniteSpace space)
    : space_(std::make_shared<FiniteSpace>(std::move(space))) {
  n_ = space_->size();
  if (n_ > kMaxPoints)
    throw Error(ErrorCode::CarrierTooLarge, "operator tables support up to 16 points");
  universe_ = std::size_t(1) << n_;
  build();
}

void OperatorTable::build() {
  const Mask full = PointSet::full(n_).bits;
  const std::size_t U = universe_;

  auto& cl = ops_[int(OperatorKind::Cl)];
  auto& in = ops_[int(OperatorKind::Int)];
  cl.assign(U, 0);
  in.assign(U, 0);
  std::vector<Mask> nbhd(n_);
  for (int x = 0; x < n_; ++x) nbhd[x] = space_->min_nbhd(x).bits;
  for (std::size_t m = 0; m < U; ++m) {
    Mask c = 0, i = 0;
    for (int x = 0; x < n_; ++x) {
      if (nbhd[x] & m) c |= Mask(1) << x;
      if ((m >> x) & 1u && (nbhd[x] & ~Mask(m)) == 0) i |= Mask(1) << x;
    }
    cl[m] = c;
    in[m] = i;
  }

  auto& open_bits = family_bits_[int(FamilyKind::Open)];
  auto& closed_bits = family_bits_[int(FamilyKind::Closed)];
  open_bits.assign(U, false);
  closed_bits.assign(U, false);
  for (std::size_t m = 0; m < U; ++m)
    open_bits[m] = space_->opens().contains(PointSet(Mask(m)));
  for (std::size_t m = 0; m < U; ++m) closed_bits[m] = open_bits[(~Mask(m)) & full];

  auto& ro_bits = family_bits_[int(FamilyKind::RegularOpen)];
  auto& rc_bits = family_bits_[int(FamilyKind::RegularClosed)];
  ro_bits.assign(U, false);
  rc_bits.assign(U, false);
  std::vector<Mask> regular_opens;
  for (std::size_t m = 0; m < U; ++m) {
    ro_bits[m] = (in[cl[m]] == Mask(m));
    rc_bits[m] = (cl[in[m]] == Mask(m));
    if (ro_bits[m]) regular_opens.push_back(Mask(m));
  }

  // Two independent routes to the delta operators: regular-open
  // neighbourhood intersections for delta-int, the open-neighbourhood
  // formula for delta-cl. They must agree pointwise.
  std::vector<Mask> rnbhd(n_, full), roc(n_);
  for (Mask r : regular_opens)
    for (int x = 0; x < n_; ++x)
      if ((r >> x) & 1u) rnbhd[x] &= r;
  for (int x = 0; x < n_; ++x) roc[x] = in[cl[nbhd[x]]];

  auto& dcl = ops_[int(OperatorKind::DeltaCl)];
  auto& dint = ops_[int(OperatorKind::DeltaInt)];
  dcl.assign(U, 0);
  dint.assign(U, 0);
  for (std::size_t m = 0; m < U; ++m) {
    Mask c = 0, i = 0;
    for (int x = 0; x < n_; ++x) {
      if (roc[x] & m) c |= Mask(1) << x;
      if ((rnbhd[x] & ~Mask(m)) == 0) i |= Mask(1) << x;
    }
    dcl[m] = c;
    dint[m] = i;
  }
  for (std::size_t m = 0; m < U; ++m)
    if (dcl[m] != (full & ~dint[(~Mask(m)) & full]))
      throw Error(ErrorCode::InternalCharacterizationMismatch,
                  "delta-cl neighbourhood formula disagrees with the delta-int dual on " +
                      space_->label_of(PointSet(Mask(m))));

  auto& delta_open_bits = family_bits_[int(FamilyKind::DeltaOpen)];
  delta_open_bits.assign(U, false);
  for (std::size_t m = 0; m < U; ++m) delta_open_bits[m] = (dint[m] == Mask(m));

  auto& eo_bits = family_bits_[int(FamilyKind::EstarOpen)];
  auto& ec_bits = family_bits_[int(FamilyKind::EstarClosed)];
  auto& er_bits = family_bits_[int(FamilyKind::EstarRegular)];
  eo_bits.assign(U, false);
  ec_bits.assign(U, false);
  er_bits.assign(U, false);
  std::vector<Mask> estar_opens;
  for (std::size_t m = 0; m < U; ++m)
    eo_bits[m] = ((Mask(m) & ~cl[in[dcl[m]]]) == 0);
  for (std::size_t m = 0; m < U; ++m) {
    ec_bits[m] = eo_bits[(~Mask(m)) & full];
    er_bits[m] = eo_bits[m] && ec_bits[m];
    if (eo_bits[m]) estar_opens.push_back(Mask(m));
  }

  // e*-int by lattice recursion: the e*-open sets are closed under unions,
  // so the union of e*-open subsets of m is m itself when m is e*-open and
  // otherwise the union over the one-point-removed subsets.
  auto& eint = ops_[int(OperatorKind::EstarInt)];
  auto& ecl = ops_[int(OperatorKind::EstarCl)];
  eint.assign(U, 0);
  ecl.assign(U, 0);
  for (std::size_t m = 0; m < U; ++m) {
    if (eo_bits[m]) {
      eint[m] = Mask(m);
    } else {
      Mask acc = 0;
      for (Mask t = Mask(m); t;) {
        const int y = lowest_point(t);
        t &= t - 1;
        acc |= eint[m & ~(std::size_t(1) << y)];
      }
      eint[m] = acc;
    }
  }
  for (std::size_t m = 0; m < U; ++m) ecl[m] = full & ~eint[(~Mask(m)) & full];

  // Reachability table for the theta-cluster quantifier: reach[x][B] says
  // some e*-open U about x has e*-cl(U) inside B. Seeded at the closures
  // of the e*-open sets, then closed upward through the subset lattice.
  auto cluster_reach = [&](const std::vector<Mask>& opens_list,
                           const std::vector<Mask>& closure_of) {
    std::vector<std::uint8_t> reach(std::size_t(n_) * U, 0);
    for (Mask u : opens_list) {
      const Mask v = closure_of[u];
      for (Mask t = u; t;) {
        const int x = lowest_point(t);
        t &= t - 1;
        reach[std::size_t(x) * U + v] = 1;
      }
    }
    for (int x = 0; x < n_; ++x) {
      std::uint8_t* row = reach.data() + std::size_t(x) * U;
      for (std::size_t m = 0; m < U; ++m) {
        if (row[m]) continue;
        for (Mask t = Mask(m); t;) {
          const int y = lowest_point(t);
          t &= t - 1;
          if (row[m & ~(std::size_t(1) << y)]) {
            row[m] = 1;
            break;
          }
        }
      }
    }
    return reach;
  };

  const auto ereach = cluster_reach(estar_opens, ecl);
  auto& ecltheta = ops_[int(OperatorKind::EstarClTheta)];
  auto& einttheta = ops_[int(OperatorKind::EstarIntTheta)];
  ecltheta.assign(U, 0);
  einttheta.assign(U, 0);
  for (std::size_t m = 0; m < U; ++m) {
    const std::size_t outside = (~Mask(m)) & full;
    Mask c = 0;
    for (int x = 0; x < n_; ++x)
      if (!ereach[std::size_t(x) * U + outside]) c |= Mask(1) << x;
    ecltheta[m] = c;
  }
  for (std::size_t m = 0; m < U; ++m)
    einttheta[m] = full & ~ecltheta[(~Mask(m)) & full];

  auto& thetac_bits = family_bits_[int(FamilyKind::EstarThetaClosed)];
  auto& thetao_bits = family_bits_[int(FamilyKind::EstarThetaOpen)];
  thetac_bits.assign(U, false);
  thetao_bits.assign(U, false);
  for (std::size_t m = 0; m < U; ++m) thetac_bits[m] = (ecltheta[m] == Mask(m));
  for (std::size_t m = 0; m < U; ++m) thetao_bits[m] = thetac_bits[(~Mask(m)) & full];

  // Kernel: intersection of theta-open supersets, X when only X qualifies.
  auto kernel_table = [&](const std::vector<bool>& theta_open_bits) {
    std::vector<Mask> ker(U, 0);
    for (std::size_t m = U; m-- > 0;) {
      Mask acc = theta_open_bits[m] ? Mask(m) : full;
      for (Mask t = (~Mask(m)) & full; t;) {
        const int y = lowest_point(t);
        t &= t - 1;
        acc &= ker[m | (std::size_t(1) << y)];
      }
      ker[m] = acc;
    }
    return ker;
  };
  ops_[int(OperatorKind::EstarKerTheta)] = kernel_table(thetao_bits);

  auto union_table = [&](const std::vector<bool>& open_bits_in) {
    std::vector<Mask> tu(U, 0);
    for (std::size_t m = 0; m < U; ++m) {
      if (open_bits_in[m]) {
        tu[m] = Mask(m);
        continue;
      }
      Mask acc = 0;
      for (Mask t = Mask(m); t;) {
        const int y = lowest_point(t);
        t &= t - 1;
        acc |= tu[m & ~(std::size_t(1) << y)];
      }
      tu[m] = acc;
    }
    return tu;
  };
  theta_union_ = union_table(thetao_bits);

  // Beta side, by the same pattern with cl(int(cl(.))).
  auto& bo_bits = family_bits_[int(FamilyKind::BetaOpen)];
  auto& bc_bits = family_bits_[int(FamilyKind::BetaClosed)];
  auto& br_bits = family_bits_[int(FamilyKind::BetaRegular)];
  bo_bits.assign(U, false);
  bc_bits.assign(U, false);
  br_bits.assign(U, false);
  std::vector<Mask> beta_opens;
  for (std::size_t m = 0; m < U; ++m)
    bo_bits[m] = ((Mask(m) & ~cl[in[cl[m]]]) == 0);
  for (std::size_t m = 0; m < U; ++m) {
    bc_bits[m] = bo_bits[(~Mask(m)) & full];
    br_bits[m] = bo_bits[m] && bc_bits[m];
    if (bo_bits[m]) beta_opens.push_back(Mask(m));
  }

  auto& bint = ops_[int(OperatorKind::BetaInt)];
  auto& bcl = ops_[int(OperatorKind::BetaCl)];
  bint.assign(U, 0);
  bcl.assign(U, 0);
  for (std::size_t m = 0; m < U; ++m) {
    if (bo_bits[m]) {
      bint[m] = Mask(m);
    } else {
      Mask acc = 0;
      for (Mask t = Mask(m); t;) {
        const int y = lowest_point(t);
        t &= t - 1;
        acc |= bint[m & ~(std::size_t(1) << y)];
      }
      bint[m] = acc;
    }
  }
  for (std::size_t m = 0; m < U; ++m) bcl[m] = full & ~bint[(~Mask(m)) & full];

  const auto breach = cluster_reach(beta_opens, bcl);
  auto& bcltheta = ops_[int(OperatorKind::BetaClTheta)];
  bcltheta.assign(U, 0);
  for (std::size_t m = 0; m < U; ++m) {
    const std::size_t outside = (~Mask(m)) & full;
    Mask c = 0;
    for (int x = 0; x < n_; ++x)
      if (!breach[std::size_t(x) * U + outside]) c |= Mask(1) << x;
    bcltheta[m] = c;
  }

  auto& btheta_bits = family_bits_[int(FamilyKind::BetaThetaOpen)];
  btheta_bits.assign(U, false);
  std::vector<bool> btheta_closed(U, false);
  for (std::size_t m = 0; m < U; ++m) btheta_closed[m] = (bcltheta[m] == Mask(m));
  for (std::size_t m = 0; m < U; ++m) btheta_bits[m] = btheta_closed[(~Mask(m)) & full];

  ops_[int(OperatorKind::BetaKerTheta)] = kernel_table(btheta_bits);
  beta_theta_union_ = union_table(btheta_bits);

  for (int k = 0; k < kFamilyKindCount; ++k)
    if (FamilyKind(k) != FamilyKind::DSet) build_family_list(FamilyKind(k));
}

void OperatorTable::build_family_list(FamilyKind kind) const {
  std::vector<PointSet> members;
  const auto& bits = family_bits_[int(kind)];
  for (std::size_t m = 0; m < universe_; ++m)
    if (bits[m]) members.push_back(PointSet(Mask(m)));
  families_[int(kind)] = std::make_unique<SetFamily>(n_, std::move(members));
}

void OperatorTable::warm_dset() const {
  if (dset_built_) return;
  const Mask full = PointSet::full(n_).bits;
  const auto& theta = *families_[int(FamilyKind::EstarThetaOpen)];
  std::vector<bool> bits(universe_, false);
  for (PointSet u : theta) {
    if (u.bits == full) continue;
    for (PointSet v : theta) bits[u.bits & ~v.bits] = true;
  }
  family_bits_[int(FamilyKind::DSet)] = std::move(bits);
  build_family_list(FamilyKind::DSet);
  dset_built_ = true;
}

const SetFamily& OperatorTable::family(FamilyKind kind) const {
  if (kind == FamilyKind::DSet && !dset_built_) warm_dset();
  return *families_[int(kind)];
}

bool OperatorTable::in_family(FamilyKind kind, PointSet s) const {
  if (kind == FamilyKind::DSet && !dset_built_) warm_dset();
  return family_bits_[int(kind)][s.bits];
}

PointSet OperatorTable::apply(OperatorKind kind, PointSet a) const {
  return PointSet(ops_[int(kind)][a.bits]);
}

CrossCheckReport OperatorTable::cross_check() const {
  CrossCheckReport report;
  if (n_ > 12)
    throw Error(ErrorCode::CarrierTooLarge, "cross-check exhausts all subsets; limit is 12 points");
  const Mask full = PointSet::full(n_).bits;
  const auto& er = family(FamilyKind::EstarRegular);
  const auto& thetac = family(FamilyKind::EstarThetaClosed);
  const auto& ecltheta = ops_[int(OperatorKind::EstarClTheta)];
  const auto& ecl = ops_[int(OperatorKind::EstarCl)];
  const auto& eint = ops_[int(OperatorKind::EstarInt)];

  auto fail = [&](std::size_t m, const std::string& what) {
    report.ok = false;
    report.first_failure = what + " at A = " + space_->label_of(PointSet(Mask(m)));
  };

  for (std::size_t m = 0; m < universe_; ++m) {
    report.subsets_checked++;
    Mask inter_regular = full, inter_theta_closed = full;
    for (PointSet v : er)
      if ((Mask(m) & ~v.bits) == 0) inter_regular &= v.bits;
    for (PointSet v : thetac)
      if ((Mask(m) & ~v.bits) == 0) inter_theta_closed &= v.bits;
    if (ecltheta[m] != inter_regular) {
      fail(m, "e*-cl_theta differs from the intersection of e*-regular supersets");
      return report;
    }
    if (ecltheta[m] != inter_theta_closed) {
      fail(m, "e*-cl_theta differs from the intersection of e*-theta-closed supersets");
      return report;
    }
    if (ecltheta[ecltheta[m]] != ecltheta[m]) {
      fail(m, "e*-cl_theta is not idempotent");
      return report;
    }
    const bool is_regular = family_bits_[int(FamilyKind::EstarRegular)][m];
    if (is_regular != (ecl[eint[m]] == Mask(m)) || is_regular != (eint[ecl[m]] == Mask(m))) {
      fail(m, "e*-regular does not match its closure/interior fixed-point forms");
      return report;
    }
    if ((ecl[m] & ~ecltheta[m]) != 0) {
      fail(m, "e*-cl is not contained in e*-cl_theta");
      return report;
    }
    if (family_bits_[int(FamilyKind::EstarOpen)][m] && ecl[m] != ecltheta[m]) {
      fail(m, "e*-cl and e*-cl_theta differ on an e*-open set");
      return report;
    }
    const bool theta_open = family_bits_[int(FamilyKind::EstarThetaOpen)][m];
    const bool theta_closed = family_bits_[int(FamilyKind::EstarThetaClosed)][m];
    if (is_regular != (theta_open && theta_closed)) {
      fail(m, "e*-regular differs from theta-open-and-theta-closed");
      return report;
    }
    if (is_regular && !theta_open) {
      fail(m, "an e*-regular set fails to be e*-theta-open");
      return report;
    }
    if (theta_open && !family_bits_[int(FamilyKind::EstarOpen)][m]) {
      fail(m, "an e*-theta-open set fails to be e*-open");
      return report;
    }
  }
  return report;
}

}  // namespace etheta
