#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "etheta/family.hpp"
#include "etheta/space.hpp"

namespace etheta {

enum class FamilyKind {
  Open,
  Closed,
  RegularOpen,
  RegularClosed,
  DeltaOpen,
  EstarOpen,
  EstarClosed,
  EstarRegular,
  EstarThetaOpen,
  EstarThetaClosed,
  BetaOpen,
  BetaClosed,
  BetaRegular,
  BetaThetaOpen,
  DSet,
};
inline constexpr int kFamilyKindCount = 15;

enum class OperatorKind {
  Cl,
  Int,
  DeltaCl,
  DeltaInt,
  EstarCl,
  EstarInt,
  EstarClTheta,
  EstarIntTheta,
  EstarKerTheta,
  BetaCl,
  BetaInt,
  BetaClTheta,
  BetaKerTheta,
};
inline constexpr int kOperatorKindCount = 13;

const char* to_string(FamilyKind kind);
const char* to_string(OperatorKind kind);
std::optional<FamilyKind> parse_family_kind(const std::string& name);
std::optional<OperatorKind> parse_operator_kind(const std::string& name);
const std::array<FamilyKind, kFamilyKindCount>& all_family_kinds();
const std::array<OperatorKind, kOperatorKindCount>& all_operator_kinds();

struct CrossCheckReport {
  bool ok = true;
  std::string first_failure;  // empty on success
  std::uint64_t subsets_checked = 0;
};

// Per-space cache of every generalized-open family and operator table.
// Everything is evaluated over all 2^n subsets at construction; lookups
// afterwards are O(1). The d-set family alone is built on first use
// (see warm_dset) because its pair scan can dominate on wide carriers.
//
// Derivation routes, from the base topology up:
//   cl/int          minimal open neighbourhoods
//   regular open    A = int(cl(A))
//   delta           regular-open neighbourhoods; delta-cl additionally
//                   recomputed through the open-neighbourhood formula and
//                   the two routes must agree (construction fails otherwise)
//   e*-open         A subseteq cl(int(delta-cl(A)))
//   e*-int          union of e*-open subsets (lattice recursion)
//   e*-cl_theta     cluster points: every e*-open U about x has
//                   e*-cl(U) meeting A
//   e*-ker_theta    intersection of e*-theta-open supersets (X when only
//                   X qualifies)
//   beta-open       A subseteq cl(int(cl(A))); beta-theta notions follow
//                   the same pattern as the e*-theta ones
class OperatorTable {
 public:
  explicit OperatorTable(FiniteSpace space);

  const FiniteSpace& space() const { return *space_; }
  int size() const { return n_; }

  const SetFamily& family(FamilyKind kind) const;
  bool in_family(FamilyKind kind, PointSet s) const;
  PointSet apply(OperatorKind kind, PointSet a) const;

  // Builds the d-set family now; call before sharing the table across
  // threads (every other family is eager).
  void warm_dset() const;

  // Raw table access for inner loops.
  Mask op_raw(OperatorKind kind, Mask m) const { return ops_[int(kind)][m]; }
  bool family_raw(FamilyKind kind, Mask m) const { return family_bits_[int(kind)][m]; }

  // Union of the theta-open subsets of m; point x lies in it exactly when
  // some e*-theta-open U has x in U subseteq m.
  Mask theta_int_union(Mask m) const { return theta_union_[m]; }
  Mask beta_theta_int_union(Mask m) const { return beta_theta_union_[m]; }

  PointSet full_set() const { return PointSet::full(n_); }

  // Pointwise identities between the independent computation routes,
  // exhausted over all subsets; n <= 12.
  CrossCheckReport cross_check() const;

 private:
  void build();

  std::shared_ptr<const FiniteSpace> space_;
  int n_ = 0;
  std::size_t universe_ = 0;

  std::array<std::vector<Mask>, kOperatorKindCount> ops_;
  mutable std::array<std::vector<bool>, kFamilyKindCount> family_bits_;
  mutable std::array<std::unique_ptr<SetFamily>, kFamilyKindCount> families_;
  mutable bool dset_built_ = false;

  std::vector<Mask> theta_union_;
  std::vector<Mask> beta_theta_union_;

  void build_family_list(FamilyKind kind) const;
};

}  // namespace etheta
