#include "etheta/claims.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <thread>

#include <json.hpp>

#include "etheta/docio.hpp"
#include "etheta/engine.hpp"
#include "etheta/error.hpp"

namespace etheta {

const char* to_string(ClaimTier tier) { return tier == ClaimTier::Core ? "core" : "audit"; }

const char* to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Confirmed: return "CONFIRMED";
    case ClaimStatus::Refuted: return "REFUTED";
    case ClaimStatus::ExhaustedNoWitness: return "EXHAUSTED_NO_WITNESS";
  }
  return "?";
}

namespace {

struct OuterResult {
  std::uint64_t substantive = 0;
  std::uint64_t vacuous = 0;
  std::optional<Witness> witness;
};

struct ClaimImpl {
  ClaimSpec spec;
  std::function<void(Universe&, const ClaimBounds&)> warm;
  std::function<std::uint64_t(Universe&, const ClaimBounds&)> outer_count;
  std::function<OuterResult(Universe&, const ClaimBounds&, std::uint64_t)> eval;
  std::function<std::string(const ClaimBounds&)> domain_text;
};

// ---------- shared witness plumbing ----------

void add_space_field(Witness& w, const char* key, const FiniteSpace& s) {
  w.fields.emplace_back(key, serialize_space(to_document(s), true));
}

void add_set_field(Witness& w, const char* key, const FiniteSpace& s, PointSet a) {
  w.fields.emplace_back(key, s.label_of(a));
}

std::string assoc_of(const FiniteSpace& dom, const FiniteSpace& cod,
                     const std::vector<int>& images) {
  std::string out;
  for (int x = 0; x < dom.size(); ++x) {
    if (x) out += ",";
    out += dom.point_names()[x] + ":" + cod.point_names()[images[x]];
  }
  return out;
}

Witness map_witness(const std::string& summary, const FiniteSpace& dom, const FiniteSpace& cod,
                    const std::vector<int>& images) {
  Witness w;
  w.summary = summary;
  add_space_field(w, "domain", dom);
  add_space_field(w, "codomain", cod);
  w.fields.emplace_back("map", assoc_of(dom, cod, images));
  return w;
}

// ---------- space domain flattening ----------

std::uint64_t space_domain_size(Universe& u, int lo, int hi) {
  std::uint64_t total = 0;
  for (int n = lo; n <= hi; ++n) total += u.space_count(n);
  return total;
}

std::pair<int, int> nth_space(Universe& u, int lo, int hi, std::uint64_t flat) {
  for (int n = lo; n <= hi; ++n) {
    const std::uint64_t c = u.space_count(n);
    if (flat < c) return {n, int(flat)};
    flat -= c;
  }
  throw Error(ErrorCode::PreconditionUnmet, "space index beyond the domain");
}

// Claim over single spaces; per_space sees the operator table and reports
// one substantive or vacuous instance.
ClaimImpl space_claim(std::string id, ClaimTier tier, std::string statement, int lo_points,
                      std::function<OuterResult(Universe&, const OperatorTable&)> per_space) {
  ClaimImpl impl;
  impl.spec = {id, tier, false, std::move(statement), "all spaces within the point bound"};
  impl.warm = [](Universe& u, const ClaimBounds& b) {
    u.warm_tables(b.max_points, resolve_workers(b.workers));
  };
  impl.outer_count = [lo_points](Universe& u, const ClaimBounds& b) {
    return b.max_points < lo_points ? 0 : space_domain_size(u, lo_points, b.max_points);
  };
  impl.eval = [lo_points, per_space](Universe& u, const ClaimBounds& b, std::uint64_t flat) {
    const auto [n, idx] = nth_space(u, lo_points, b.max_points, flat);
    return per_space(u, u.table(n, idx));
  };
  impl.domain_text = [lo_points](const ClaimBounds& b) {
    return "spaces on " + std::to_string(lo_points) + ".." + std::to_string(b.max_points) +
           " points";
  };
  return impl;
}

ClaimImpl space_claim_axioms(std::string id, ClaimTier tier, std::string statement, int lo_points,
                             std::function<OuterResult(Universe&, const OperatorTable&,
                                                       const AxiomReport&)> per_space) {
  auto impl = space_claim(std::move(id), tier, std::move(statement), lo_points,
                          [](Universe&, const OperatorTable&) { return OuterResult{}; });
  impl.warm = [](Universe& u, const ClaimBounds& b) {
    u.warm_axioms(b.max_points, resolve_workers(b.workers));
  };
  impl.eval = [lo_points, per_space](Universe& u, const ClaimBounds& b, std::uint64_t flat) {
    const auto [n, idx] = nth_space(u, lo_points, b.max_points, flat);
    return per_space(u, u.table(n, idx), u.axioms(n, idx));
  };
  return impl;
}

// Claim over ordered pairs of spaces with max_map_points-sized carriers on
// both sides; per_pair sees both tables and the map class.
ClaimImpl map_pair_claim(std::string id, ClaimTier tier, bool search, std::string statement,
                         bool need_axioms,
                         std::function<OuterResult(Universe&, const ClaimBounds&, int k, int ix,
                                                   int iy)> per_pair) {
  ClaimImpl impl;
  impl.spec = {id, tier, search, std::move(statement), "maps between spaces at the map bound"};
  impl.warm = [need_axioms](Universe& u, const ClaimBounds& b) {
    const int w = resolve_workers(b.workers);
    if (need_axioms) u.warm_axioms(b.max_map_points, w);
    u.warm_map_level(b.max_map_points, b.max_map_points, w);
  };
  impl.outer_count = [](Universe& u, const ClaimBounds& b) {
    const std::uint64_t c = u.space_count(b.max_map_points);
    return c * c;
  };
  impl.eval = [per_pair](Universe& u, const ClaimBounds& b, std::uint64_t flat) {
    const int k = b.max_map_points;
    const std::uint64_t c = u.space_count(k);
    return per_pair(u, b, k, int(flat / c), int(flat % c));
  };
  impl.domain_text = [](const ClaimBounds& b) {
    return "all maps between ordered pairs of " + std::to_string(b.max_map_points) +
           "-point spaces";
  };
  return impl;
}

// Claim over pairs (X, Y) with |X| = map bound and |Y| <= map bound, the
// natural shape for surjection hypotheses.
ClaimImpl surjection_pair_claim(std::string id, ClaimTier tier, std::string statement,
                                bool need_axioms, bool need_dset,
                                std::function<OuterResult(Universe&, int nx, int ix, int ny,
                                                          int iy)> per_pair) {
  ClaimImpl impl;
  impl.spec = {id, tier, false, std::move(statement), "maps onto codomains up to the map bound"};
  impl.warm = [need_axioms, need_dset](Universe& u, const ClaimBounds& b) {
    const int w = resolve_workers(b.workers);
    const int k = b.max_map_points;
    if (need_axioms) u.warm_axioms(k, w);
    u.warm_tables(k, w);
    if (need_dset)
      for (int n = 1; n <= k; ++n)
        for (std::size_t i = 0; i < u.space_count(n); ++i) u.table(n, int(i));
    for (int ny = 1; ny <= k; ++ny) u.warm_map_level(k, ny, w);
  };
  impl.outer_count = [](Universe& u, const ClaimBounds& b) {
    std::uint64_t total = 0;
    for (int ny = 1; ny <= b.max_map_points; ++ny)
      total += u.space_count(b.max_map_points) * u.space_count(ny);
    return total;
  };
  impl.eval = [per_pair](Universe& u, const ClaimBounds& b, std::uint64_t flat) {
    const int nx = b.max_map_points;
    for (int ny = 1; ny <= b.max_map_points; ++ny) {
      const std::uint64_t block = u.space_count(nx) * u.space_count(ny);
      if (flat < block)
        return per_pair(u, nx, int(flat / u.space_count(ny)), ny,
                        int(flat % u.space_count(ny)));
      flat -= block;
    }
    throw Error(ErrorCode::PreconditionUnmet, "pair index beyond the domain");
  };
  impl.domain_text = [](const ClaimBounds& b) {
    return "maps from " + std::to_string(b.max_map_points) + "-point spaces onto codomains of 1.." +
           std::to_string(b.max_map_points) + " points";
  };
  return impl;
}

// Claim over golden worked spaces: a single fixed instance.
ClaimImpl golden_claim(std::string id, ClaimTier tier, std::string statement,
                       std::function<OuterResult()> eval) {
  ClaimImpl impl;
  impl.spec = {id, tier, false, std::move(statement), "one fixed worked instance"};
  impl.warm = [](Universe&, const ClaimBounds&) {};
  impl.outer_count = [](Universe&, const ClaimBounds&) { return std::uint64_t(1); };
  impl.eval = [eval](Universe&, const ClaimBounds&, std::uint64_t) { return eval(); };
  impl.domain_text = [](const ClaimBounds&) { return std::string("fixed worked instance"); };
  return impl;
}

// ---------- the worked spaces ----------

FiniteSpace worked_123() {
  return FiniteSpace::validate(
      {"1", "2", "3"},
      SetFamily(3, {PointSet(0b000), PointSet(0b001), PointSet(0b010), PointSet(0b011),
                    PointSet(0b111)}));
}

FiniteSpace worked_abcd7() {
  return FiniteSpace::validate(
      {"a", "b", "c", "d"},
      SetFamily(4, {PointSet(0b0000), PointSet(0b0001), PointSet(0b0100), PointSet(0b0101),
                    PointSet(0b1100), PointSet(0b1101), PointSet(0b1111)}));
}

FiniteSpace worked_abcd5() {
  return FiniteSpace::validate(
      {"a", "b", "c", "d"},
      SetFamily(4, {PointSet(0b0000), PointSet(0b0001), PointSet(0b0011), PointSet(0b0111),
                    PointSet(0b1111)}));
}

// ---------- per-space statement bodies ----------

using PerSpace = std::function<OuterResult(Universe&, const OperatorTable&)>;

OuterResult check_all_subsets(const OperatorTable& t,
                              const std::function<bool(PointSet)>& ok,
                              const std::function<std::string(PointSet)>& describe) {
  OuterResult r;
  r.substantive = 1;
  for (PointSet a : canonical_subsets(t.size())) {
    if (ok(a)) continue;
    Witness w;
    w.summary = describe(a);
    add_space_field(w, "space", t.space());
    add_set_field(w, "A", t.space(), a);
    r.witness = w;
    r.substantive = 0;
    break;
  }
  return r;
}

OuterResult check_space_predicate(const OperatorTable& t, bool ok, const std::string& summary) {
  OuterResult r;
  if (ok) {
    r.substantive = 1;
    return r;
  }
  Witness w;
  w.summary = summary;
  add_space_field(w, "space", t.space());
  r.witness = w;
  return r;
}

Mask regular_union_within(const OperatorTable& t, PointSet b) {
  Mask acc = 0;
  for (PointSet v : t.family(FamilyKind::EstarRegular))
    if (v.subset_of(b)) acc |= v.bits;
  return acc;
}

Mask regular_intersection_over(const OperatorTable& t, PointSet b) {
  Mask acc = t.full_set().bits;
  for (PointSet v : t.family(FamilyKind::EstarRegular))
    if (b.subset_of(v)) acc &= v.bits;
  return acc;
}

// ---------- catalog ----------

std::vector<ClaimImpl> build_catalog() {
  std::vector<ClaimImpl> claims;

  // ----- established results on the operator layer -----

  claims.push_back(space_claim(
      "T2.1a-eopen-iff-ecl-regular", ClaimTier::Core,
      "A is e*-open iff e*-cl(A) is e*-regular", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet a) {
              return t.in_family(FamilyKind::EstarOpen, a) ==
                     t.in_family(FamilyKind::EstarRegular, t.apply(OperatorKind::EstarCl, a));
            },
            [](PointSet) { return "e*-open(A) disagrees with e*-regular(e*-cl(A))"; });
      }));

  claims.push_back(space_claim(
      "T2.1b-eclosed-iff-eint-regular", ClaimTier::Core,
      "A is e*-closed iff e*-int(A) is e*-regular", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet a) {
              return t.in_family(FamilyKind::EstarClosed, a) ==
                     t.in_family(FamilyKind::EstarRegular, t.apply(OperatorKind::EstarInt, a));
            },
            [](PointSet) { return "e*-closed(A) disagrees with e*-regular(e*-int(A))"; });
      }));

  claims.push_back(space_claim(
      "C2.2a-thetaopen-via-regular-interior", ClaimTier::Core,
      "A is e*-theta-open iff every point of A sits inside an e*-regular subset of A", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet a) {
              const bool covered = a.subset_of(PointSet(regular_union_within(t, a)));
              return t.in_family(FamilyKind::EstarThetaOpen, a) == covered;
            },
            [](PointSet) { return "theta-openness disagrees with e*-regular interior cover"; });
      }));

  claims.push_back(space_claim(
      "C2.2b-thetaopen-union-closed", ClaimTier::Core,
      "the e*-theta-open family is closed under unions", 1,
      [](Universe&, const OperatorTable& t) {
        OuterResult r;
        r.substantive = 1;
        const auto& theta = t.family(FamilyKind::EstarThetaOpen).members();
        if (!t.in_family(FamilyKind::EstarThetaOpen, PointSet::empty())) {
          r.substantive = 0;
          Witness w;
          w.summary = "the empty union is not e*-theta-open";
          add_space_field(w, "space", t.space());
          r.witness = w;
          return r;
        }
        for (std::size_t i = 0; i < theta.size(); ++i)
          for (std::size_t j = i + 1; j < theta.size(); ++j)
            if (!t.in_family(FamilyKind::EstarThetaOpen, theta[i] | theta[j])) {
              r.substantive = 0;
              Witness w;
              w.summary = "a union of two e*-theta-open sets left the family";
              add_space_field(w, "space", t.space());
              add_set_field(w, "U", t.space(), theta[i]);
              add_set_field(w, "V", t.space(), theta[j]);
              r.witness = w;
              return r;
            }
        return r;
      }));

  claims.push_back(space_claim(
      "T2.3a-ecl-eq-ecltheta-on-eopen", ClaimTier::Core,
      "on e*-open sets the e*-closure equals the e*-theta-closure", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet a) {
              if (!t.in_family(FamilyKind::EstarOpen, a)) return true;
              return t.apply(OperatorKind::EstarCl, a) == t.apply(OperatorKind::EstarClTheta, a);
            },
            [](PointSet) { return "e*-cl and e*-cl_theta differ on an e*-open set"; });
      }));

  claims.push_back(space_claim(
      "T2.3b-regular-iff-theta-clopen", ClaimTier::Core,
      "A is e*-regular iff it is both e*-theta-open and e*-theta-closed", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet a) {
              return t.in_family(FamilyKind::EstarRegular, a) ==
                     (t.in_family(FamilyKind::EstarThetaOpen, a) &&
                      t.in_family(FamilyKind::EstarThetaClosed, a));
            },
            [](PointSet) { return "e*-regular differs from theta-open-and-theta-closed"; });
      }));

  claims.push_back(space_claim(
      "T2.5-eregular-space-characterizations", ClaimTier::Core,
      "the three formulations of an e*-regular space agree", 1,
      [](Universe&, const OperatorTable& t) {
        const bool a = axiom_holds(t, AxiomKind::EstarRegularSpace).holds;
        const bool b = eregular_space_nbhd_form(t);
        const bool c = eregular_space_regular_interior_form(t);
        return check_space_predicate(t, a == b && b == c,
                                     "the e*-regular-space formulations disagree: def=" +
                                         std::to_string(a) + " nbhd=" + std::to_string(b) +
                                         " regular-interior=" + std::to_string(c));
      }));

  claims.push_back(map_pair_claim(
      "T2.7-weakly-irresolute-characterizations", ClaimTier::Core, false,
      "the pointwise, theta-preimage and image-closure forms of weak e*-irresoluteness agree",
      false,
      [](Universe& u, const ClaimBounds&, int k, int ix, int iy) {
        OuterResult r;
        const MapClass& cls = u.map_class(k, ix, k, iy);
        for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
          const bool pw = cls.bits[m] & (1u << int(MapPropertyKind::WeaklyEstarIrresolute));
          const bool pre = cls.bits[m] & kMapBitWeiPreimage;
          const bool img = cls.bits[m] & kMapBitWeiImageClosure;
          if (pw == pre && pre == img) {
            ++r.substantive;
            continue;
          }
          if (!r.witness) {
            auto w = map_witness("the three weak-irresoluteness routes disagree",
                                 *u.spaces(k)[ix], *u.spaces(k)[iy], Universe::decode_map(m, k, k));
            w.fields.emplace_back("pointwise", pw ? "true" : "false");
            w.fields.emplace_back("theta-preimage", pre ? "true" : "false");
            w.fields.emplace_back("image-closure", img ? "true" : "false");
            r.witness = w;
          }
          ++r.substantive;
        }
        return r;
      }));

  claims.push_back(space_claim(
      "T2.8-kapanis", ClaimTier::Core,
      "e*-cl_theta(A) equals the intersection of the e*-theta-closed supersets and of the "
      "e*-regular supersets of A",
      1,
      [](Universe&, const OperatorTable& t) {
        const auto& thetac = t.family(FamilyKind::EstarThetaClosed);
        return check_all_subsets(
            t,
            [&](PointSet a) {
              Mask inter_closed = t.full_set().bits;
              for (PointSet v : thetac)
                if (a.subset_of(v)) inter_closed &= v.bits;
              const Mask via_regular = regular_intersection_over(t, a);
              const Mask direct = t.apply(OperatorKind::EstarClTheta, a).bits;
              return direct == inter_closed && direct == via_regular;
            },
            [](PointSet) { return "the three e*-cl_theta routes disagree"; });
      }));

  claims.push_back(space_claim(
      "R2.9-chain-regular-thetaopen-eopen", ClaimTier::Core,
      "e*-regular implies e*-theta-open implies e*-open", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet a) {
              if (t.in_family(FamilyKind::EstarRegular, a) &&
                  !t.in_family(FamilyKind::EstarThetaOpen, a))
                return false;
              if (t.in_family(FamilyKind::EstarThetaOpen, a) &&
                  !t.in_family(FamilyKind::EstarOpen, a))
                return false;
              return true;
            },
            [](PointSet) { return "the regular/theta-open/e*-open chain broke"; });
      }));

  claims.push_back(space_claim(
      "R2.10-thetaclosed-intersection-extremes", ClaimTier::Core,
      "e*-theta-closed sets are closed under intersection and include the empty and full sets",
      1,
      [](Universe&, const OperatorTable& t) {
        OuterResult r;
        r.substantive = 1;
        const auto& thetac = t.family(FamilyKind::EstarThetaClosed).members();
        bool ok = t.in_family(FamilyKind::EstarThetaClosed, PointSet::empty()) &&
                  t.in_family(FamilyKind::EstarThetaClosed, t.full_set());
        PointSet wa, wb;
        for (std::size_t i = 0; i < thetac.size() && ok; ++i)
          for (std::size_t j = i + 1; j < thetac.size() && ok; ++j)
            if (!t.in_family(FamilyKind::EstarThetaClosed, thetac[i] & thetac[j])) {
              ok = false;
              wa = thetac[i];
              wb = thetac[j];
            }
        if (!ok) {
          r.substantive = 0;
          Witness w;
          w.summary = "theta-closed intersection closure failed";
          add_space_field(w, "space", t.space());
          add_set_field(w, "A", t.space(), wa);
          add_set_field(w, "B", t.space(), wb);
          r.witness = w;
        }
        return r;
      }));

  claims.push_back(golden_claim(
      "EX2.12-union-counterexample", ClaimTier::Core,
      "on the three-point witness space, {1} and {2} are e*-theta-closed while their union is "
      "not",
      [] {
        const OperatorTable t(worked_123());
        const bool ok = t.in_family(FamilyKind::EstarThetaClosed, PointSet(0b001)) &&
                        t.in_family(FamilyKind::EstarThetaClosed, PointSet(0b010)) &&
                        !t.in_family(FamilyKind::EstarThetaClosed, PointSet(0b011)) &&
                        t.apply(OperatorKind::EstarClTheta, PointSet(0b011)) == PointSet(0b111);
        return check_space_predicate(t, ok, "the worked union counterexample did not reproduce");
      }));

  claims.push_back(space_claim(
      "T2.11-regular-via-ecl-eint", ClaimTier::Core,
      "A is e*-regular iff A = e*-cl(e*-int(A)) iff A = e*-int(e*-cl(A))", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet a) {
              const bool reg = t.in_family(FamilyKind::EstarRegular, a);
              const bool f1 =
                  t.apply(OperatorKind::EstarCl, t.apply(OperatorKind::EstarInt, a)) == a;
              const bool f2 =
                  t.apply(OperatorKind::EstarInt, t.apply(OperatorKind::EstarCl, a)) == a;
              return reg == f1 && reg == f2;
            },
            [](PointSet) { return "the fixed-point forms of e*-regularity disagree"; });
      }));

  claims.push_back(space_claim(
      "T2.12-ecltheta-idempotent", ClaimTier::Core, "e*-cl_theta is idempotent", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet a) {
              const PointSet once = t.apply(OperatorKind::EstarClTheta, a);
              return t.apply(OperatorKind::EstarClTheta, once) == once;
            },
            [](PointSet) { return "e*-cl_theta is not idempotent"; });
      }));

  // ----- theta-open structure -----

  claims.push_back(space_claim(
      "R3.1-theta-c-eopen-equivalence", ClaimTier::Audit,
      "the sets whose complement is an e*-theta-closure are exactly the e*-theta-open sets", 1,
      [](Universe&, const OperatorTable& t) {
        std::vector<bool> is_closure_value(std::size_t(1) << t.size(), false);
        for (Mask m = 0; m < (Mask(1) << t.size()); ++m)
          is_closure_value[t.apply(OperatorKind::EstarClTheta, PointSet(m)).bits] = true;
        return check_all_subsets(
            t,
            [&](PointSet a) {
              const bool complement_is_closure = is_closure_value[a.complement(t.size()).bits];
              return complement_is_closure == t.in_family(FamilyKind::EstarThetaOpen, a);
            },
            [](PointSet) { return "theta-complement-open disagrees with theta-open"; });
      }));

  claims.push_back(space_claim(
      "T3.2-eint-ecltheta-thetaopen", ClaimTier::Audit,
      "for e*-open A the set e*-int(e*-cl_theta(A)) is e*-theta-open", 1,
      [](Universe&, const OperatorTable& t) {
        OuterResult r = check_all_subsets(
            t,
            [&](PointSet a) {
              if (!t.in_family(FamilyKind::EstarOpen, a)) return true;
              return t.in_family(
                  FamilyKind::EstarThetaOpen,
                  t.apply(OperatorKind::EstarInt, t.apply(OperatorKind::EstarClTheta, a)));
            },
            [](PointSet) { return "e*-int(e*-cl_theta(A)) left the theta-open family"; });
        return r;
      }));

  claims.push_back(space_claim(
      "T3.3-thetaopen-eq-regular-iff-ecltheta-regular", ClaimTier::Audit,
      "the theta-open and e*-regular families coincide iff every e*-theta-closure is e*-regular",
      1,
      [](Universe&, const OperatorTable& t) {
        const bool families_equal =
            t.family(FamilyKind::EstarThetaOpen) == t.family(FamilyKind::EstarRegular);
        bool closures_regular = true;
        for (Mask m = 0; m < (Mask(1) << t.size()) && closures_regular; ++m)
          if (!t.in_family(FamilyKind::EstarRegular,
                           t.apply(OperatorKind::EstarClTheta, PointSet(m))))
            closures_regular = false;
        return check_space_predicate(
            t, families_equal == closures_regular,
            "family equality and closure regularity disagree: equal=" +
                std::to_string(families_equal) + " regular=" + std::to_string(closures_regular));
      }));

  claims.push_back(space_claim(
      "T3.4-thetaopen-union-of-regulars", ClaimTier::Audit,
      "every e*-theta-open set is a union of e*-regular sets", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet b) {
              if (!t.in_family(FamilyKind::EstarThetaOpen, b)) return true;
              return regular_union_within(t, b) == b.bits;
            },
            [](PointSet) { return "a theta-open set is not a union of e*-regular sets"; });
      }));

  claims.push_back(space_claim(
      "C3.5-thetaclosed-intersection-of-regulars", ClaimTier::Audit,
      "every e*-theta-closed set is an intersection of e*-regular sets", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet b) {
              if (!t.in_family(FamilyKind::EstarThetaClosed, b)) return true;
              return regular_intersection_over(t, b) == b.bits;
            },
            [](PointSet) { return "a theta-closed set is not an intersection of e*-regulars"; });
      }));

  // ----- d-sets and separation -----

  claims.push_back(space_claim(
      "R4.1-proper-thetaopen-is-dset", ClaimTier::Audit,
      "every e*-theta-open set other than X is a d-set", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet u) {
              if (!t.in_family(FamilyKind::EstarThetaOpen, u) || u == t.full_set()) return true;
              return t.in_family(FamilyKind::DSet, u);
            },
            [](PointSet) { return "a proper theta-open set is not a d-set"; });
      }));

  claims.push_back(golden_claim(
      "EX4.2-dset-families", ClaimTier::Audit,
      "on the four-point seven-open worked space the theta-open family misses exactly {b} and "
      "the d-set family misses exactly X",
      [] {
        const OperatorTable t(worked_abcd7());
        bool ok = true;
        for (Mask m = 0; m < 16; ++m) {
          if (t.family_raw(FamilyKind::EstarThetaOpen, m) != (m != 0b0010)) ok = false;
          if (t.in_family(FamilyKind::DSet, PointSet(m)) != (m != 0b1111)) ok = false;
        }
        return check_space_predicate(t, ok, "the worked d-set families did not reproduce");
      }));

  claims.push_back(space_claim_axioms(
      "R4.3-implication-diagram", ClaimTier::Audit,
      "T2 implies T1 implies T0, D2 implies D1 implies D0, and each Ti implies Di", 2,
      [](Universe&, const OperatorTable& t, const AxiomReport& ax) {
        auto holds = [&](AxiomKind k) { return ax.verdicts[int(k)].holds; };
        const bool t0 = holds(AxiomKind::EstarThetaT0), t1 = holds(AxiomKind::EstarThetaT1),
                   t2 = holds(AxiomKind::EstarThetaT2), d0 = holds(AxiomKind::EstarThetaD0),
                   d1 = holds(AxiomKind::EstarThetaD1), d2 = holds(AxiomKind::EstarThetaD2);
        const bool ok = (!t2 || t1) && (!t1 || t0) && (!d2 || d1) && (!d1 || d0) &&
                        (!t0 || d0) && (!t1 || d1) && (!t2 || d2);
        return check_space_predicate(t, ok, "an arrow of the separation diagram failed");
      }));

  claims.push_back(space_claim_axioms(
      "T4.4-T0-implies-T2", ClaimTier::Audit, "an e*-theta-T0 space is e*-theta-T2", 1,
      [](Universe&, const OperatorTable& t, const AxiomReport& ax) {
        if (!ax.verdicts[int(AxiomKind::EstarThetaT0)].holds) return OuterResult{0, 1, {}};
        return check_space_predicate(t, ax.verdicts[int(AxiomKind::EstarThetaT2)].holds,
                                     "a T0 space failed T2");
      }));

  claims.push_back(space_claim_axioms(
      "T4.5-D0-implies-T0", ClaimTier::Audit, "an e*-theta-D0 space is e*-theta-T0", 1,
      [](Universe&, const OperatorTable& t, const AxiomReport& ax) {
        if (!ax.verdicts[int(AxiomKind::EstarThetaD0)].holds) return OuterResult{0, 1, {}};
        return check_space_predicate(t, ax.verdicts[int(AxiomKind::EstarThetaT0)].holds,
                                     "a D0 space failed T0");
      }));

  claims.push_back(space_claim_axioms(
      "C4.6-separation-equivalence", ClaimTier::Audit,
      "the six theta separation predicates take one common value per space", 2,
      [](Universe&, const OperatorTable& t, const AxiomReport& ax) {
        auto holds = [&](AxiomKind k) { return ax.verdicts[int(k)].holds; };
        const bool v = holds(AxiomKind::EstarThetaD0);
        const bool ok = v == holds(AxiomKind::EstarThetaD1) &&
                        v == holds(AxiomKind::EstarThetaD2) &&
                        v == holds(AxiomKind::EstarThetaT0) &&
                        v == holds(AxiomKind::EstarThetaT1) && v == holds(AxiomKind::EstarThetaT2);
        return check_space_predicate(t, ok, "the six separation predicates split");
      }));

  claims.push_back(space_claim_axioms(
      "T4.7-D1-no-cc-point", ClaimTier::Audit, "an e*-theta-D1 space has no cc-point", 1,
      [](Universe&, const OperatorTable& t, const AxiomReport& ax) {
        if (!ax.verdicts[int(AxiomKind::EstarThetaD1)].holds) return OuterResult{0, 1, {}};
        return check_space_predicate(t, ax.cc_points.is_empty(),
                                     "a D1 space has a cc-point");
      }));

  claims.push_back(space_claim(
      "L4.8-cluster-via-regular-sets", ClaimTier::Audit,
      "x clusters to A exactly when every e*-regular set about x meets A", 1,
      [](Universe&, const OperatorTable& t) {
        return check_all_subsets(
            t,
            [&](PointSet a) {
              Mask miss = 0;
              for (PointSet v : t.family(FamilyKind::EstarRegular))
                if (!v.intersects(a)) miss |= v.bits;
              const Mask rhs = t.full_set().bits & ~miss;
              return t.apply(OperatorKind::EstarClTheta, a).bits == rhs;
            },
            [](PointSet) { return "the e*-regular cluster form disagrees with e*-cl_theta"; });
      }));

  claims.push_back(space_claim(
      "T4.9a-singleton-theta-symmetry", ClaimTier::Audit,
      "x in e*-cl_theta({y}) iff y in e*-cl_theta({x})", 1,
      [](Universe&, const OperatorTable& t) {
        bool ok = true;
        int wx = 0, wy = 0;
        for (int x = 0; x < t.size() && ok; ++x)
          for (int y = 0; y < t.size() && ok; ++y) {
            const bool xy = t.apply(OperatorKind::EstarClTheta, PointSet::single(y)).has(x);
            const bool yx = t.apply(OperatorKind::EstarClTheta, PointSet::single(x)).has(y);
            if (xy != yx) {
              ok = false;
              wx = x;
              wy = y;
            }
          }
        OuterResult r = check_space_predicate(t, ok, "singleton cluster symmetry failed");
        if (!ok && r.witness)
          r.witness->fields.emplace_back(
              "pair", t.space().point_names()[wx] + "," + t.space().point_names()[wy]);
        return r;
      }));

  claims.push_back(space_claim(
      "T4.9b-singleton-quasi-closed", ClaimTier::Audit,
      "every singleton is quasi e*-theta-closed", 1,
      [](Universe&, const OperatorTable& t) {
        for (int x = 0; x < t.size(); ++x)
          if (!is_quasi_theta_closed(t, PointSet::single(x)))
            return check_space_predicate(t, false,
                                         "singleton {" + t.space().point_names()[x] +
                                             "} is not quasi theta-closed");
        return check_space_predicate(t, true, "");
      }));

  claims.push_back(space_claim_axioms(
      "T4.14-Thalf-iff-T1", ClaimTier::Audit,
      "a space is e*-theta-T1/2 exactly when it is e*-theta-T1", 1,
      [](Universe&, const OperatorTable& t, const AxiomReport& ax) {
        const bool half = ax.verdicts[int(AxiomKind::EstarThetaTHalf)].holds;
        const bool t1 = ax.verdicts[int(AxiomKind::EstarThetaT1)].holds;
        return check_space_predicate(t, half == t1,
                                     "T1/2 and T1 disagree: T1/2=" + std::to_string(half) +
                                         " T1=" + std::to_string(t1));
      }));

  claims.push_back(surjection_pair_claim(
      "T4.15-wei-surjection-dset-preimage", ClaimTier::Audit,
      "preimages of d-sets under weakly e*-irresolute surjections are d-sets", false, true,
      [](Universe& u, int nx, int ix, int ny, int iy) {
        OuterResult r;
        const MapClass& cls = u.map_class(nx, ix, ny, iy);
        const OperatorTable& dom = u.table(nx, ix);
        const OperatorTable& cod = u.table(ny, iy);
        const auto& dsets = cod.family(FamilyKind::DSet).members();
        for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
          const bool hyp = (cls.bits[m] & kMapBitSurjective) &&
                           (cls.bits[m] & (1u << int(MapPropertyKind::WeaklyEstarIrresolute)));
          if (!hyp) {
            ++r.vacuous;
            continue;
          }
          ++r.substantive;
          if (r.witness) continue;
          const auto images = Universe::decode_map(m, nx, ny);
          for (PointSet a : dsets) {
            Mask pre = 0;
            for (int x = 0; x < nx; ++x)
              if (a.has(images[x])) pre |= Mask(1) << x;
            if (!dom.in_family(FamilyKind::DSet, PointSet(pre))) {
              auto w = map_witness("a d-set preimage left the d-set family", *u.spaces(nx)[ix],
                                   *u.spaces(ny)[iy], images);
              add_set_field(w, "A", cod.space(), a);
              r.witness = w;
              break;
            }
          }
        }
        return r;
      }));

  claims.push_back(map_pair_claim(
      "T4.16-wei-bijection-D1-pullback", ClaimTier::Audit, false,
      "a weakly e*-irresolute bijection pulls e*-theta-D1 back from the codomain", true,
      [](Universe& u, const ClaimBounds&, int k, int ix, int iy) {
        OuterResult r;
        const MapClass& cls = u.map_class(k, ix, k, iy);
        const bool cod_d1 = u.axioms(k, iy).verdicts[int(AxiomKind::EstarThetaD1)].holds;
        const bool dom_d1 = u.axioms(k, ix).verdicts[int(AxiomKind::EstarThetaD1)].holds;
        for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
          const bool hyp = (cls.bits[m] & kMapBitSurjective) && (cls.bits[m] & kMapBitInjective) &&
                           (cls.bits[m] & (1u << int(MapPropertyKind::WeaklyEstarIrresolute))) &&
                           cod_d1;
          if (!hyp) {
            ++r.vacuous;
            continue;
          }
          ++r.substantive;
          if (!dom_d1 && !r.witness)
            r.witness = map_witness("a weakly irresolute bijection failed to pull D1 back",
                                    *u.spaces(k)[ix], *u.spaces(k)[iy],
                                    Universe::decode_map(m, k, k));
        }
        return r;
      }));

  {
    // D1 characterization through weakly irresolute surjections.
    ClaimImpl impl;
    impl.spec = {"T4.17-D1-via-wei-surjections", ClaimTier::Audit, false,
                 "a space is e*-theta-D1 iff each distinct pair is split by a weakly "
                 "e*-irresolute surjection onto some e*-theta-D1 space",
                 "spaces of 2..map-bound points"};
    impl.warm = [](Universe& u, const ClaimBounds& b) {
      const int w = resolve_workers(b.workers);
      u.warm_axioms(b.max_map_points, w);
      for (int nx = 1; nx <= b.max_map_points; ++nx)
        for (int ny = 1; ny <= nx; ++ny) u.warm_map_level(nx, ny, w);
    };
    // One-point carriers are excluded: the d-axioms are defined to fail
    // there while the pair quantifier is vacuously true.
    impl.outer_count = [](Universe& u, const ClaimBounds& b) {
      return b.max_map_points < 2 ? 0 : space_domain_size(u, 2, b.max_map_points);
    };
    impl.eval = [](Universe& u, const ClaimBounds& b, std::uint64_t flat) {
      const auto [nx, ix] = nth_space(u, 2, b.max_map_points, flat);
      const bool lhs = u.axioms(nx, ix).verdicts[int(AxiomKind::EstarThetaD1)].holds;
      bool rhs = true;
      for (int x = 0; x < nx && rhs; ++x)
        for (int y = x + 1; y < nx && rhs; ++y) {
          bool split = false;
          for (int ny = 1; ny <= nx && !split; ++ny)
            for (std::size_t iy = 0; iy < u.space_count(ny) && !split; ++iy) {
              if (!u.axioms(ny, int(iy)).verdicts[int(AxiomKind::EstarThetaD1)].holds) continue;
              const MapClass& cls = u.map_class(nx, ix, ny, int(iy));
              for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
                if (!(cls.bits[m] & kMapBitSurjective)) continue;
                if (!(cls.bits[m] &
                      (1u << int(MapPropertyKind::WeaklyEstarIrresolute))))
                  continue;
                const auto images = Universe::decode_map(m, nx, ny);
                if (images[x] != images[y]) { split = true; break; }
              }
            }
          if (!split) rhs = false;
        }
      OuterResult r;
      if (lhs == rhs) {
        r.substantive = 1;
        return r;
      }
      Witness w;
      w.summary = "D1 disagrees with the splitting-surjection characterization";
      add_space_field(w, "space", u.table(nx, ix).space());
      w.fields.emplace_back("D1", lhs ? "true" : "false");
      w.fields.emplace_back("splitting", rhs ? "true" : "false");
      r.witness = w;
      return r;
    };
    impl.domain_text = [](const ClaimBounds& b) {
      return "spaces on 2.." + std::to_string(b.max_map_points) + " points";
    };
    claims.push_back(std::move(impl));
  }

  // ----- kernels, slightly R0, continuity notions -----

  claims.push_back(golden_claim(
      "EX5.1-kernel-beta-mismatch", ClaimTier::Audit,
      "on the four-point five-open worked space the e*- and beta-theta structures split as "
      "worked out",
      [] {
        const OperatorTable t(worked_abcd5());
        bool ok = true;
        for (Mask m = 0; m < 16; ++m) {
          if (!t.family_raw(FamilyKind::EstarRegular, m)) ok = false;
          if (!t.family_raw(FamilyKind::EstarThetaOpen, m)) ok = false;
          if (!t.family_raw(FamilyKind::EstarOpen, m)) ok = false;
          const bool beta_theta = (m == 0 || m == 0b1111);
          if (t.family_raw(FamilyKind::BetaThetaOpen, m) != beta_theta) ok = false;
          const bool beta = m == 0 || m == 0b1111 || m == 0b0001 || m == 0b0011 || m == 0b0101 ||
                            m == 0b1001 || m == 0b0111 || m == 0b1011 || m == 0b1101;
          if (t.family_raw(FamilyKind::BetaOpen, m) != beta) ok = false;
        }
        if (t.apply(OperatorKind::EstarKerTheta, PointSet(0b0011)) != PointSet(0b0011)) ok = false;
        if (t.apply(OperatorKind::BetaKerTheta, PointSet(0b0011)) != PointSet(0b1111)) ok = false;
        return check_space_predicate(OperatorTable(worked_abcd5()), ok,
                                     "the worked kernel example did not reproduce");
      }));

  claims.push_back(space_claim(
      "T5.2-kernel-characterization", ClaimTier::Audit,
      "e*-ker_theta(A) = {x : e*-cl_theta({x}) meets A}", 1,
      [](Universe&, const OperatorTable& t) {
        std::vector<Mask> singleton_closure(t.size());
        for (int x = 0; x < t.size(); ++x)
          singleton_closure[x] = t.apply(OperatorKind::EstarClTheta, PointSet::single(x)).bits;
        return check_all_subsets(
            t,
            [&](PointSet a) {
              Mask rhs = 0;
              for (int x = 0; x < t.size(); ++x)
                if (singleton_closure[x] & a.bits) rhs |= Mask(1) << x;
              return t.apply(OperatorKind::EstarKerTheta, a).bits == rhs;
            },
            [](PointSet) { return "the kernel characterization failed"; });
      }));

  claims.push_back(space_claim_axioms(
      "T5.3-slightlyR0-iff-kernels", ClaimTier::Audit,
      "slightly e*-theta-R0 holds iff every singleton kernel is proper", 1,
      [](Universe&, const OperatorTable& t, const AxiomReport& ax) {
        bool proper = true;
        for (int x = 0; x < t.size(); ++x)
          if (t.apply(OperatorKind::EstarKerTheta, PointSet::single(x)) == t.full_set())
            proper = false;
        const bool r0 = ax.verdicts[int(AxiomKind::SlightlyEstarThetaR0)].holds;
        return check_space_predicate(t, proper == r0,
                                     "kernel properness and slightly-R0 disagree");
      }));

  {
    ClaimImpl impl;
    impl.spec = {"T5.4-slightlyR0-product", ClaimTier::Audit, false,
                 "a slightly e*-theta-R0 factor makes the product slightly e*-theta-R0",
                 "ordered pairs of spaces on up to 3 points"};
    impl.warm = [](Universe& u, const ClaimBounds& b) {
      u.warm_axioms(std::min(b.max_points, 3), resolve_workers(b.workers));
    };
    impl.outer_count = [](Universe& u, const ClaimBounds& b) {
      const std::uint64_t s = space_domain_size(u, 1, std::min(b.max_points, 3));
      return s * s;
    };
    impl.eval = [](Universe& u, const ClaimBounds& b, std::uint64_t flat) {
      const int hi = std::min(b.max_points, 3);
      const std::uint64_t s = space_domain_size(u, 1, hi);
      const auto [nx, ix] = nth_space(u, 1, hi, flat / s);
      const auto [ny, iy] = nth_space(u, 1, hi, flat % s);
      OuterResult r;
      if (!u.axioms(nx, ix).verdicts[int(AxiomKind::SlightlyEstarThetaR0)].holds) {
        r.vacuous = 1;
        return r;
      }
      r.substantive = 1;
      const FiniteSpace prod = product(*u.spaces(nx)[ix], *u.spaces(ny)[iy]);
      const OperatorTable pt(prod);
      if (!axiom_holds(pt, AxiomKind::SlightlyEstarThetaR0).holds) {
        Witness w;
        w.summary = "a product lost slightly e*-theta-R0";
        add_space_field(w, "X", *u.spaces(nx)[ix]);
        add_space_field(w, "Y", *u.spaces(ny)[iy]);
        r.witness = w;
        r.substantive = 0;
      }
      return r;
    };
    impl.domain_text = [](const ClaimBounds& b) {
      const int hi = std::min(b.max_points, 3);
      return "ordered pairs of spaces on 1.." + std::to_string(hi) + " points";
    };
    claims.push_back(std::move(impl));
  }

  claims.push_back(golden_claim(
      "EX5.5-slightlyR0-beta-mismatch", ClaimTier::Audit,
      "the four-point five-open worked space is slightly e*-theta-R0 but not slightly "
      "beta-theta-R0",
      [] {
        const OperatorTable t(worked_abcd5());
        const bool ok = axiom_holds(t, AxiomKind::SlightlyEstarThetaR0).holds &&
                        !axiom_holds(t, AxiomKind::SlightlyBetaThetaR0).holds;
        return check_space_predicate(t, ok, "the worked slightly-R0 split did not reproduce");
      }));

  claims.push_back(map_pair_claim(
      "R5.6-continuity-diagram", ClaimTier::Audit, false,
      "theta-S-e*-continuity and S-continuity each imply S-e*-continuity", false,
      [](Universe& u, const ClaimBounds&, int k, int ix, int iy) {
        OuterResult r;
        const MapClass& cls = u.map_class(k, ix, k, iy);
        for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
          const bool theta = cls.bits[m] & (1u << int(MapPropertyKind::ThetaSEstarContinuous));
          const bool s = cls.bits[m] & (1u << int(MapPropertyKind::SContinuous));
          const bool se = cls.bits[m] & (1u << int(MapPropertyKind::SEstarContinuous));
          if (!theta && !s) {
            ++r.vacuous;
            continue;
          }
          ++r.substantive;
          if (!se && !r.witness)
            r.witness = map_witness("an arrow of the continuity diagram failed",
                                    *u.spaces(k)[ix], *u.spaces(k)[iy],
                                    Universe::decode_map(m, k, k));
        }
        return r;
      }));

  claims.push_back(golden_claim(
      "EX5.7-Sestar-not-Scontinuous", ClaimTier::Audit,
      "the constant map to c on the seven-open worked space is S-e*-continuous but not "
      "S-continuous",
      [] {
        const FiniteSpace s = worked_abcd7();
        const OperatorTable t(s);
        const std::vector<int> images{2, 2, 2, 2};
        const bool se = map_property_holds(MapPropertyKind::SEstarContinuous, t, t, images);
        const bool sc = map_property_holds(MapPropertyKind::SContinuous, t, t, images);
        return check_space_predicate(t, se && !sc,
                                     "the worked constant-map example did not reproduce");
      }));

  claims.push_back(map_pair_claim(
      "Q5.1-open-question", ClaimTier::Audit, true,
      "search for an S-e*-continuous map that is not theta-S-e*-continuous", false,
      [](Universe& u, const ClaimBounds&, int k, int ix, int iy) {
        OuterResult r;
        const MapClass& cls = u.map_class(k, ix, k, iy);
        for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
          const bool se = cls.bits[m] & (1u << int(MapPropertyKind::SEstarContinuous));
          const bool theta = cls.bits[m] & (1u << int(MapPropertyKind::ThetaSEstarContinuous));
          if (!se) {
            ++r.vacuous;
            continue;
          }
          ++r.substantive;
          if (!theta && !r.witness)
            r.witness = map_witness("an S-e*-continuous map that is not theta-S-e*-continuous",
                                    *u.spaces(k)[ix], *u.spaces(k)[iy],
                                    Universe::decode_map(m, k, k));
        }
        return r;
      }));

  claims.push_back(map_pair_claim(
      "T5.8-Sestar-eopen-implies-thetaS", ClaimTier::Audit, false,
      "an S-e*-continuous e*-open map is theta-S-e*-continuous", false,
      [](Universe& u, const ClaimBounds&, int k, int ix, int iy) {
        OuterResult r;
        const MapClass& cls = u.map_class(k, ix, k, iy);
        for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
          const bool hyp = (cls.bits[m] & (1u << int(MapPropertyKind::SEstarContinuous))) &&
                           (cls.bits[m] & (1u << int(MapPropertyKind::EstarOpenMap)));
          if (!hyp) {
            ++r.vacuous;
            continue;
          }
          ++r.substantive;
          if (!(cls.bits[m] & (1u << int(MapPropertyKind::ThetaSEstarContinuous))) && !r.witness)
            r.witness = map_witness("an S-e* e*-open map missed theta-S-e*-continuity",
                                    *u.spaces(k)[ix], *u.spaces(k)[iy],
                                    Universe::decode_map(m, k, k));
        }
        return r;
      }));

  claims.push_back(map_pair_claim(
      "L5.9-graph-lemma-two-forms", ClaimTier::Audit, false,
      "the rectangle and image forms of the strongly theta-closed graph agree", false,
      [](Universe& u, const ClaimBounds&, int k, int ix, int iy) {
        OuterResult r;
        const MapClass& cls = u.map_class(k, ix, k, iy);
        for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
          const bool rect =
              cls.bits[m] & (1u << int(MapPropertyKind::StronglyEstarThetaClosedGraph));
          const bool img = cls.bits[m] & kMapBitGraphImageForm;
          ++r.substantive;
          if (rect != img && !r.witness)
            r.witness = map_witness("the two graph forms disagree", *u.spaces(k)[ix],
                                    *u.spaces(k)[iy], Universe::decode_map(m, k, k));
        }
        return r;
      }));

  claims.push_back(map_pair_claim(
      "T5.10-strong-graph-theorem", ClaimTier::Audit,
      false,
      "a theta-S-e*-continuous weakly e*-irresolute map into an e*-T1 space has a strongly "
      "e*-theta-closed graph",
      true,
      [](Universe& u, const ClaimBounds&, int k, int ix, int iy) {
        OuterResult r;
        const MapClass& cls = u.map_class(k, ix, k, iy);
        const bool cod_t1 = u.axioms(k, iy).verdicts[int(AxiomKind::EstarT1)].holds;
        for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
          const bool hyp = cod_t1 &&
                           (cls.bits[m] & (1u << int(MapPropertyKind::ThetaSEstarContinuous))) &&
                           (cls.bits[m] & (1u << int(MapPropertyKind::WeaklyEstarIrresolute)));
          if (!hyp) {
            ++r.vacuous;
            continue;
          }
          ++r.substantive;
          if (!(cls.bits[m] & (1u << int(MapPropertyKind::StronglyEstarThetaClosedGraph))) &&
              !r.witness)
            r.witness = map_witness("the graph theorem hypotheses failed to close the graph",
                                    *u.spaces(k)[ix], *u.spaces(k)[iy],
                                    Universe::decode_map(m, k, k));
        }
        return r;
      }));

  claims.push_back(map_pair_claim(
      "T5.11-thetaS-characterization-via-eclosed", ClaimTier::Audit, false,
      "for weakly e*-irresolute maps, theta-S-e*-continuity matches the e*-closed-set "
      "separation form",
      false,
      [](Universe& u, const ClaimBounds&, int k, int ix, int iy) {
        OuterResult r;
        const MapClass& cls = u.map_class(k, ix, k, iy);
        const OperatorTable& dom = u.table(k, ix);
        const OperatorTable& cod = u.table(k, iy);
        for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
          if (!(cls.bits[m] & (1u << int(MapPropertyKind::WeaklyEstarIrresolute)))) {
            ++r.vacuous;
            continue;
          }
          ++r.substantive;
          if (r.witness) continue;
          const auto images = Universe::decode_map(m, k, k);
          // For each x and e*-closed F missing f(x): an open U about x and
          // theta-open V covering F with f[e*-cl(U)] disjoint from V.
          bool characterization = true;
          for (int x = 0; x < k && characterization; ++x) {
            Mask fclu = 0;
            {
              const Mask u_min = dom.space().min_nbhd(x).bits;
              const Mask uclosure = dom.apply(OperatorKind::EstarCl, PointSet(u_min)).bits;
              for (Mask tbits = uclosure; tbits;) {
                const int z = std::countr_zero(tbits);
                tbits &= tbits - 1;
                fclu |= Mask(1) << images[z];
              }
            }
            for (PointSet f : cod.family(FamilyKind::EstarClosed)) {
              if (f.has(images[x])) continue;
              bool found = false;
              for (PointSet v : cod.family(FamilyKind::EstarThetaOpen))
                if (f.subset_of(v) && (fclu & v.bits) == 0) { found = true; break; }
              if (!found) { characterization = false; break; }
            }
          }
          const bool theta = cls.bits[m] & (1u << int(MapPropertyKind::ThetaSEstarContinuous));
          if (theta != characterization) {
            auto w = map_witness("the closed-set characterization split from the definition",
                                 *u.spaces(k)[ix], *u.spaces(k)[iy], images);
            w.fields.emplace_back("theta-S-e*", theta ? "true" : "false");
            w.fields.emplace_back("characterization", characterization ? "true" : "false");
            r.witness = w;
          }
        }
        return r;
      }));

  claims.push_back(map_pair_claim(
      "C5.12-thetaS-corollary-double-closure", ClaimTier::Audit, false,
      "for weakly e*-irresolute maps, theta-S-e*-continuity matches the "
      "e*-cl_theta(f[e*-cl(U)]) form",
      false,
      [](Universe& u, const ClaimBounds&, int k, int ix, int iy) {
        OuterResult r;
        const MapClass& cls = u.map_class(k, ix, k, iy);
        const OperatorTable& dom = u.table(k, ix);
        const OperatorTable& cod = u.table(k, iy);
        for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
          if (!(cls.bits[m] & (1u << int(MapPropertyKind::WeaklyEstarIrresolute)))) {
            ++r.vacuous;
            continue;
          }
          ++r.substantive;
          if (r.witness) continue;
          const auto images = Universe::decode_map(m, k, k);
          bool corollary = true;
          for (int x = 0; x < k && corollary; ++x) {
            Mask fclu = 0;
            const Mask uclosure =
                dom.apply(OperatorKind::EstarCl, dom.space().min_nbhd(x)).bits;
            for (Mask tbits = uclosure; tbits;) {
              const int z = std::countr_zero(tbits);
              tbits &= tbits - 1;
              fclu |= Mask(1) << images[z];
            }
            const Mask closed_image = cod.apply(OperatorKind::EstarClTheta, PointSet(fclu)).bits;
            for (PointSet v : cod.family(FamilyKind::EstarOpen)) {
              if (!v.has(images[x])) continue;
              if ((closed_image & ~v.bits) != 0) { corollary = false; break; }
            }
          }
          const bool theta = cls.bits[m] & (1u << int(MapPropertyKind::ThetaSEstarContinuous));
          if (theta != corollary) {
            auto w = map_witness("the double-closure corollary split from the definition",
                                 *u.spaces(k)[ix], *u.spaces(k)[iy], images);
            w.fields.emplace_back("theta-S-e*", theta ? "true" : "false");
            w.fields.emplace_back("double-closure-form", corollary ? "true" : "false");
            r.witness = w;
          }
        }
        return r;
      }));

  // Composition-shaped claims run over triples of spaces within the map
  // bound; instances are the (f, g) pairs.
  {
    ClaimImpl impl;
    impl.spec = {"T5.13-composition-continuous-thetaS", ClaimTier::Audit, false,
                 "a continuous f composed with a theta-S-e*-continuous g is "
                 "theta-S-e*-continuous",
                 "triples of spaces up to the map bound"};
    impl.warm = [](Universe& u, const ClaimBounds& b) {
      const int w = resolve_workers(b.workers);
      for (int a = 1; a <= b.max_map_points; ++a)
        for (int c = 1; c <= b.max_map_points; ++c) u.warm_map_level(a, c, w);
    };
    impl.outer_count = [](Universe& u, const ClaimBounds& b) {
      const std::uint64_t s = space_domain_size(u, 1, b.max_map_points);
      return s * s * s;
    };
    impl.eval = [](Universe& u, const ClaimBounds& b, std::uint64_t flat) {
      const int hi = b.max_map_points;
      const std::uint64_t s = space_domain_size(u, 1, hi);
      const auto [nx, ix] = nth_space(u, 1, hi, flat / (s * s));
      const auto [ny, iy] = nth_space(u, 1, hi, (flat / s) % s);
      const auto [nz, iz] = nth_space(u, 1, hi, flat % s);
      OuterResult r;
      const MapClass& fg_class = u.map_class(nx, ix, ny, iy);
      const MapClass& gh_class = u.map_class(ny, iy, nz, iz);
      const MapClass& comp_class = u.map_class(nx, ix, nz, iz);
      const std::uint64_t total =
          Universe::map_count(nx, ny) * Universe::map_count(ny, nz);
      std::vector<std::uint64_t> continuous_f, theta_g;
      for (std::uint64_t m = 0; m < fg_class.bits.size(); ++m)
        if (fg_class.bits[m] & (1u << int(MapPropertyKind::Continuous))) continuous_f.push_back(m);
      for (std::uint64_t m = 0; m < gh_class.bits.size(); ++m)
        if (gh_class.bits[m] & (1u << int(MapPropertyKind::ThetaSEstarContinuous)))
          theta_g.push_back(m);
      r.substantive = std::uint64_t(continuous_f.size()) * theta_g.size();
      r.vacuous = total - r.substantive;
      for (std::uint64_t mf : continuous_f) {
        const auto f_images = Universe::decode_map(mf, nx, ny);
        for (std::uint64_t mg : theta_g) {
          const auto g_images = Universe::decode_map(mg, ny, nz);
          std::vector<int> comp(nx);
          for (int x = 0; x < nx; ++x) comp[x] = g_images[f_images[x]];
          const std::uint64_t mc = Universe::encode_map(comp, nz);
          if (!(comp_class.bits[mc] & (1u << int(MapPropertyKind::ThetaSEstarContinuous)))) {
            if (!r.witness) {
              auto w = map_witness("a composition lost theta-S-e*-continuity", *u.spaces(nx)[ix],
                                   *u.spaces(ny)[iy], f_images);
              add_space_field(w, "Z", *u.spaces(nz)[iz]);
              w.fields.emplace_back("g", assoc_of(*u.spaces(ny)[iy], *u.spaces(nz)[iz], g_images));
              r.witness = w;
            }
            return r;
          }
        }
      }
      return r;
    };
    impl.domain_text = [](const ClaimBounds& b) {
      return "space triples on 1.." + std::to_string(b.max_map_points) +
             " points, instances are (f,g) pairs";
    };
    ClaimImpl quot = impl;
    claims.push_back(std::move(impl));
    quot.spec = {"T5.14-open-surjection-quotient", ClaimTier::Audit, false,
                 "when g after f is theta-S-e*-continuous and f is an open surjection, g is "
                 "theta-S-e*-continuous",
                 "triples of spaces up to the map bound"};
    quot.eval = [](Universe& u, const ClaimBounds& b, std::uint64_t flat) {
      const int hi = b.max_map_points;
      const std::uint64_t s = space_domain_size(u, 1, hi);
      const auto [nx, ix] = nth_space(u, 1, hi, flat / (s * s));
      const auto [ny, iy] = nth_space(u, 1, hi, (flat / s) % s);
      const auto [nz, iz] = nth_space(u, 1, hi, flat % s);
      OuterResult r;
      const MapClass& f_class = u.map_class(nx, ix, ny, iy);
      const MapClass& g_class = u.map_class(ny, iy, nz, iz);
      const MapClass& comp_class = u.map_class(nx, ix, nz, iz);
      std::vector<std::uint64_t> open_surjections;
      for (std::uint64_t m = 0; m < f_class.bits.size(); ++m)
        if ((f_class.bits[m] & (1u << int(MapPropertyKind::OpenMap))) &&
            (f_class.bits[m] & kMapBitSurjective))
          open_surjections.push_back(m);
      const std::uint64_t g_count = Universe::map_count(ny, nz);
      std::uint64_t substantive = 0;
      for (std::uint64_t mf : open_surjections) {
        const auto f_images = Universe::decode_map(mf, nx, ny);
        for (std::uint64_t mg = 0; mg < g_count; ++mg) {
          const auto g_images = Universe::decode_map(mg, ny, nz);
          std::vector<int> comp(nx);
          for (int x = 0; x < nx; ++x) comp[x] = g_images[f_images[x]];
          if (!(comp_class.bits[Universe::encode_map(comp, nz)] &
                (1u << int(MapPropertyKind::ThetaSEstarContinuous))))
            continue;
          ++substantive;
          if (!(g_class.bits[mg] & (1u << int(MapPropertyKind::ThetaSEstarContinuous))) &&
              !r.witness) {
            auto w = map_witness("a quotient along an open surjection failed", *u.spaces(nx)[ix],
                                 *u.spaces(ny)[iy], f_images);
            add_space_field(w, "Z", *u.spaces(nz)[iz]);
            w.fields.emplace_back("g", assoc_of(*u.spaces(ny)[iy], *u.spaces(nz)[iz], g_images));
            r.witness = w;
          }
        }
      }
      r.substantive = substantive;
      r.vacuous = Universe::map_count(nx, ny) * g_count - substantive;
      return r;
    };
    claims.push_back(std::move(quot));
  }

  {
    ClaimImpl impl = map_pair_claim(
        "T5.15-restriction-preserves-thetaS", ClaimTier::Audit, false,
        "restrictions of theta-S-e*-continuous maps stay theta-S-e*-continuous", false,
        [](Universe& u, const ClaimBounds&, int k, int ix, int iy) {
          OuterResult r;
          const MapClass& cls = u.map_class(k, ix, k, iy);
          const OperatorTable& cod = u.table(k, iy);
          for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
            if (!(cls.bits[m] & (1u << int(MapPropertyKind::ThetaSEstarContinuous)))) {
              ++r.vacuous;
              continue;
            }
            ++r.substantive;
            if (r.witness) continue;
            const auto images = Universe::decode_map(m, k, k);
            for (Mask carrier = 1; carrier < (Mask(1) << k); ++carrier) {
              const OperatorTable& sub = u.subspace_table(k, ix, carrier);
              std::vector<int> sub_images;
              for (int x = 0; x < k; ++x)
                if ((carrier >> x) & 1u) sub_images.push_back(images[x]);
              if (!map_property_holds(MapPropertyKind::ThetaSEstarContinuous, sub, cod,
                                      sub_images)) {
                auto w = map_witness("a restriction lost theta-S-e*-continuity",
                                     *u.spaces(k)[ix], *u.spaces(k)[iy], images);
                add_set_field(w, "A", u.table(k, ix).space(), PointSet(carrier));
                r.witness = w;
                break;
              }
            }
          }
          return r;
        });
    impl.warm = [](Universe& u, const ClaimBounds& b) {
      const int w = resolve_workers(b.workers);
      u.warm_map_level(b.max_map_points, b.max_map_points, w);
      u.warm_subspaces(b.max_map_points);
    };
    claims.push_back(std::move(impl));
  }

  // ----- R1 -----

  claims.push_back(golden_claim(
      "EX6.1-R1-beta-mismatch", ClaimTier::Audit,
      "the seven-open worked space is e*-R1 but not beta-R1",
      [] {
        const OperatorTable t(worked_abcd7());
        const bool ok = axiom_holds(t, AxiomKind::EstarR1).holds &&
                        !axiom_holds(t, AxiomKind::BetaR1).holds;
        return check_space_predicate(t, ok, "the worked R1 split did not reproduce");
      }));

  claims.push_back(space_claim_axioms(
      "T6.2-R1-iff-singleton-theta-closure", ClaimTier::Audit,
      "e*-R1 holds iff e*-cl_theta and e*-cl agree on singletons", 1,
      [](Universe&, const OperatorTable& t, const AxiomReport& ax) {
        bool agree = true;
        for (int x = 0; x < t.size(); ++x)
          if (t.apply(OperatorKind::EstarClTheta, PointSet::single(x)) !=
              t.apply(OperatorKind::EstarCl, PointSet::single(x)))
            agree = false;
        const bool r1 = ax.verdicts[int(AxiomKind::EstarR1)].holds;
        return check_space_predicate(t, agree == r1,
                                     "singleton-closure agreement and e*-R1 disagree");
      }));

  claims.push_back(space_claim_axioms(
      "T6.3-R1-iff-eopen-absorbs-theta-closure", ClaimTier::Audit,
      "e*-R1 holds iff every e*-open set absorbs the theta-closures of its points", 1,
      [](Universe&, const OperatorTable& t, const AxiomReport& ax) {
        bool absorbs = true;
        for (PointSet a : t.family(FamilyKind::EstarOpen)) {
          for (int x = 0; x < t.size() && absorbs; ++x)
            if (a.has(x) &&
                !t.apply(OperatorKind::EstarClTheta, PointSet::single(x)).subset_of(a))
              absorbs = false;
          if (!absorbs) break;
        }
        const bool r1 = ax.verdicts[int(AxiomKind::EstarR1)].holds;
        return check_space_predicate(t, absorbs == r1, "absorption and e*-R1 disagree");
      }));

  claims.push_back(surjection_pair_claim(
      "T6.4-thetaS-surjection-R1", ClaimTier::Audit,
      "the codomain of a theta-S-e*-continuous surjection is e*-R1", true, false,
      [](Universe& u, int nx, int ix, int ny, int iy) {
        OuterResult r;
        const MapClass& cls = u.map_class(nx, ix, ny, iy);
        const bool cod_r1 = u.axioms(ny, iy).verdicts[int(AxiomKind::EstarR1)].holds;
        for (std::uint64_t m = 0; m < cls.bits.size(); ++m) {
          const bool hyp = (cls.bits[m] & kMapBitSurjective) &&
                           (cls.bits[m] & (1u << int(MapPropertyKind::ThetaSEstarContinuous)));
          if (!hyp) {
            ++r.vacuous;
            continue;
          }
          ++r.substantive;
          if (!cod_r1 && !r.witness)
            r.witness =
                map_witness("a theta-S-e*-continuous surjection onto a non-e*-R1 codomain",
                            *u.spaces(nx)[ix], *u.spaces(ny)[iy], Universe::decode_map(m, nx, ny));
        }
        return r;
      }));

  std::sort(claims.begin(), claims.end(),
            [](const ClaimImpl& a, const ClaimImpl& b) { return a.spec.id < b.spec.id; });
  return claims;
}

const std::vector<ClaimImpl>& catalog_impls() {
  static const std::vector<ClaimImpl> impls = build_catalog();
  return impls;
}

const ClaimImpl* find_impl(const std::string& id) {
  for (const auto& impl : catalog_impls())
    if (impl.spec.id == id) return &impl;
  return nullptr;
}

void validate_bounds(const ClaimBounds& bounds) {
  if (bounds.max_points < 1 || bounds.max_points > kMaxEnumerationPoints)
    throw Error(ErrorCode::CarrierTooLarge, "max_points must lie in 1..5");
  if (bounds.max_map_points < 1 || bounds.max_map_points > 4)
    throw Error(ErrorCode::CarrierTooLarge, "max_map_points must lie in 1..4");
}

}  // namespace

const std::vector<ClaimSpec>& claim_catalog() {
  static const std::vector<ClaimSpec> specs = [] {
    std::vector<ClaimSpec> out;
    for (const auto& impl : catalog_impls()) out.push_back(impl.spec);
    return out;
  }();
  return specs;
}

const ClaimSpec* find_claim(const std::string& id) {
  for (const auto& spec : claim_catalog())
    if (spec.id == id) return &spec;
  return nullptr;
}

RunOutcome run_claim(const std::string& id, const ClaimBounds& bounds, Universe& universe,
                     const ClaimCursor* resume) {
  validate_bounds(bounds);
  const ClaimImpl* impl = find_impl(id);
  if (!impl) throw Error(ErrorCode::UnknownClaim, id);

  const auto t0 = std::chrono::steady_clock::now();
  impl->warm(universe, bounds);
  const std::uint64_t outer_total = impl->outer_count(universe, bounds);

  std::uint64_t start = 0;
  ClaimReport report;
  report.id = impl->spec.id;
  report.tier = impl->spec.tier;
  report.domain = impl->domain_text(bounds);
  std::optional<std::pair<std::uint64_t, Witness>> first_witness;

  if (resume) {
    if (resume->claim_id != id || resume->max_points != bounds.max_points ||
        resume->max_map_points != bounds.max_map_points)
      throw Error(ErrorCode::PreconditionUnmet, "cursor does not match the claim and bounds");
    start = resume->next_outer;
    report.total = resume->total;
    report.substantive = resume->substantive;
    report.vacuous = resume->vacuous;
    if (resume->witness) first_witness = {0, *resume->witness};
  }

  if (bounds.budget_instances == 0) {
    // Full parallel scan, merged deterministically: counts are sums,
    // the witness is the one with the least outer index.
    const int workers = resolve_workers(bounds.workers);
    const std::uint64_t count = outer_total - start;
    const int used = int(std::min<std::uint64_t>(std::max(count, std::uint64_t(1)), workers));
    std::vector<std::uint64_t> sub(used, 0), vac(used, 0);
    std::vector<std::optional<std::pair<std::uint64_t, Witness>>> wit(used);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = used ? (count + used - 1) / used : 0;
    for (int w = 0; w < used; ++w) {
      const std::uint64_t begin = start + std::uint64_t(w) * chunk;
      const std::uint64_t end = std::min(outer_total, begin + chunk);
      if (begin >= end) break;
      threads.emplace_back([&, w, begin, end] {
        for (std::uint64_t i = begin; i < end; ++i) {
          OuterResult r = impl->eval(universe, bounds, i);
          sub[w] += r.substantive;
          vac[w] += r.vacuous;
          if (r.witness && !wit[w]) wit[w] = {i, *r.witness};
        }
      });
    }
    for (auto& t : threads) t.join();
    for (int w = 0; w < used; ++w) {
      report.substantive += sub[w];
      report.vacuous += vac[w];
      if (wit[w] && (!first_witness || wit[w]->first < first_witness->first))
        first_witness = wit[w];
    }
  } else {
    // Budgeted runs walk the outer domain sequentially so that a cursor
    // written at any stop resumes to an identical final report.
    std::uint64_t spent = 0;
    std::uint64_t i = start;
    for (; i < outer_total; ++i) {
      if (spent >= bounds.budget_instances) break;
      OuterResult r = impl->eval(universe, bounds, i);
      report.substantive += r.substantive;
      report.vacuous += r.vacuous;
      spent += r.substantive + r.vacuous;
      if (r.witness && !first_witness) first_witness = {i, *r.witness};
    }
    if (i < outer_total) {
      ClaimCursor cursor;
      cursor.claim_id = id;
      cursor.max_points = bounds.max_points;
      cursor.max_map_points = bounds.max_map_points;
      cursor.next_outer = i;
      cursor.total = report.substantive + report.vacuous;
      cursor.substantive = report.substantive;
      cursor.vacuous = report.vacuous;
      if (first_witness) cursor.witness = first_witness->second;
      RunOutcome outcome;
      outcome.cursor = std::move(cursor);
      return outcome;
    }
  }

  report.total = report.substantive + report.vacuous;
  if (first_witness) {
    report.status = ClaimStatus::Refuted;
    report.witness = first_witness->second;
  } else {
    report.status = impl->spec.search ? ClaimStatus::ExhaustedNoWitness : ClaimStatus::Confirmed;
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  RunOutcome outcome;
  outcome.report = std::move(report);
  return outcome;
}

std::vector<ClaimReport> run_suite(const ClaimBounds& bounds, Universe& universe) {
  std::vector<ClaimReport> reports;
  for (const auto& impl : catalog_impls()) {
    try {
      auto outcome = run_claim(impl.spec.id, bounds, universe);
      reports.push_back(std::move(*outcome.report));
    } catch (const Error& e) {
      ClaimReport report;
      report.id = impl.spec.id;
      report.tier = impl.spec.tier;
      report.error = e.what();
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

RunOutcome search_question(const ClaimBounds& bounds, Universe& universe,
                           const ClaimCursor* resume) {
  return run_claim("Q5.1-open-question", bounds, universe, resume);
}

bool core_tier_failed(const std::vector<ClaimReport>& reports) {
  for (const auto& r : reports)
    if (r.tier == ClaimTier::Core && (r.status == ClaimStatus::Refuted || !r.error.empty()))
      return true;
  return false;
}

std::string serialize_report(const ClaimReport& report) {
  std::string out = "{\"claim\":\"" + json_escape(report.id) + "\"";
  out += ",\"tier\":\"" + std::string(to_string(report.tier)) + "\"";
  if (!report.error.empty()) {
    out += ",\"error\":\"" + json_escape(report.error) + "\"}";
    return out;
  }
  out += ",\"status\":\"" + std::string(to_string(report.status)) + "\"";
  out += ",\"domain\":\"" + json_escape(report.domain) + "\"";
  out += ",\"total\":" + std::to_string(report.total);
  out += ",\"substantive\":" + std::to_string(report.substantive);
  out += ",\"vacuous\":" + std::to_string(report.vacuous);
  out += ",\"witness\":";
  if (!report.witness) {
    out += "null";
  } else {
    out += "{\"summary\":\"" + json_escape(report.witness->summary) + "\"";
    for (const auto& [k, v] : report.witness->fields)
      out += ",\"" + json_escape(k) + "\":\"" + json_escape(v) + "\"";
    out += "}";
  }
  out += "}";
  return out;
}

std::string serialize_cursor(const ClaimCursor& cursor) {
  std::string out = "{\"claim\":\"" + json_escape(cursor.claim_id) + "\"";
  out += ",\"max_points\":" + std::to_string(cursor.max_points);
  out += ",\"max_map_points\":" + std::to_string(cursor.max_map_points);
  out += ",\"next_outer\":" + std::to_string(cursor.next_outer);
  out += ",\"total\":" + std::to_string(cursor.total);
  out += ",\"substantive\":" + std::to_string(cursor.substantive);
  out += ",\"vacuous\":" + std::to_string(cursor.vacuous);
  out += ",\"witness\":";
  if (!cursor.witness) {
    out += "null";
  } else {
    out += "{\"summary\":\"" + json_escape(cursor.witness->summary) + "\"";
    for (const auto& [k, v] : cursor.witness->fields)
      out += ",\"" + json_escape(k) + "\":\"" + json_escape(v) + "\"";
    out += "}";
  }
  out += "}";
  return out;
}

ClaimCursor parse_cursor(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  ClaimCursor cursor;
  cursor.claim_id = j.at("claim").get<std::string>();
  cursor.max_points = j.at("max_points").get<int>();
  cursor.max_map_points = j.at("max_map_points").get<int>();
  cursor.next_outer = j.at("next_outer").get<std::uint64_t>();
  cursor.total = j.at("total").get<std::uint64_t>();
  cursor.substantive = j.at("substantive").get<std::uint64_t>();
  cursor.vacuous = j.at("vacuous").get<std::uint64_t>();
  if (j.contains("witness") && !j.at("witness").is_null()) {
    Witness w;
    for (auto it = j.at("witness").begin(); it != j.at("witness").end(); ++it) {
      if (it.key() == "summary")
        w.summary = it.value().get<std::string>();
      else
        w.fields.emplace_back(it.key(), it.value().get<std::string>());
    }
    cursor.witness = std::move(w);
  }
  return cursor;
}

}  // namespace etheta
