#include "etheta/maps.hpp"

#include "etheta/error.hpp"

namespace etheta {

namespace {

struct PropName {
  MapPropertyKind kind;
  const char* name;
};
constexpr std::array<PropName, kMapPropertyKindCount> kPropNames{{
    {MapPropertyKind::Continuous, "continuous"},
    {MapPropertyKind::OpenMap, "open-map"},
    {MapPropertyKind::EstarOpenMap, "e*-open-map"},
    {MapPropertyKind::EstarIrresolute, "e*-irresolute"},
    {MapPropertyKind::WeaklyEstarIrresolute, "weakly-e*-irresolute"},
    {MapPropertyKind::StronglyEstarIrresolute, "strongly-e*-irresolute"},
    {MapPropertyKind::SContinuous, "S-continuous"},
    {MapPropertyKind::SEstarContinuous, "S-e*-continuous"},
    {MapPropertyKind::ThetaSEstarContinuous, "theta-S-e*-continuous"},
    {MapPropertyKind::StronglyEstarThetaClosedGraph, "strongly-e*-theta-closed-graph"},
}};

Mask image_mask(const std::vector<int>& images, Mask a) {
  Mask out = 0;
  for (Mask t = a; t;) {
    const int x = std::countr_zero(t);
    t &= t - 1;
    out |= Mask(1) << images[x];
  }
  return out;
}

Mask preimage_mask(const std::vector<int>& images, Mask b) {
  Mask out = 0;
  for (std::size_t x = 0; x < images.size(); ++x)
    if ((b >> images[x]) & 1u) out |= Mask(1) << x;
  return out;
}

// Family-transport property: every member of the source family lands in
// the target family under the transport (image or preimage).
template <typename Transport>
bool transports(const SetFamily& source, const OperatorTable& target_table, FamilyKind target,
                Transport transport, PointSet* witness) {
  for (PointSet s : source) {
    if (!target_table.in_family(target, transport(s))) {
      if (witness) *witness = s;
      return false;
    }
  }
  return true;
}

// The shared shape of the S-continuity trio: for each x and e*-open V
// about f(x) some open U about x has op(f[U]) inside V. The minimal open
// neighbourhood of x is the optimal U.
bool s_family_property(const OperatorTable& dom, const OperatorTable& cod,
                       const std::vector<int>& images, OperatorKind closure_kind,
                       std::string* witness) {
  const auto& X = dom.space();
  for (int x = 0; x < X.size(); ++x) {
    const Mask fu = image_mask(images, X.min_nbhd(x).bits);
    const Mask closed_image = cod.apply(closure_kind, PointSet(fu)).bits;
    for (PointSet v : cod.family(FamilyKind::EstarOpen)) {
      if (!v.has(images[x])) continue;
      if ((closed_image & ~v.bits) != 0) {
        if (witness)
          *witness = "x=" + X.point_names()[x] + ", V=" + cod.space().label_of(v);
        return false;
      }
    }
  }
  return true;
}

}  // namespace

SpaceMap::SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> images)
    : SpaceMap(std::make_shared<FiniteSpace>(std::move(domain)),
               std::make_shared<FiniteSpace>(std::move(codomain)), std::move(images)) {}

SpaceMap::SpaceMap(std::shared_ptr<const FiniteSpace> domain,
                   std::shared_ptr<const FiniteSpace> codomain, std::vector<int> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (int(images_.size()) != domain_->size())
    throw Error(ErrorCode::DomainMismatch, "image list does not cover the domain");
  for (int y : images_)
    if (y < 0 || y >= codomain_->size())
      throw Error(ErrorCode::DomainMismatch, "image point outside the codomain");
}

PointSet SpaceMap::image(PointSet a) const { return PointSet(image_mask(images_, a.bits)); }

PointSet SpaceMap::preimage(PointSet b) const { return PointSet(preimage_mask(images_, b.bits)); }

bool SpaceMap::surjective() const {
  return image(PointSet::full(domain_->size())) == PointSet::full(codomain_->size());
}

bool SpaceMap::injective() const {
  return image(PointSet::full(domain_->size())).count() == domain_->size();
}

SpaceMap compose(const SpaceMap& f, const SpaceMap& g) {
  if (!(f.codomain() == g.domain()))
    throw Error(ErrorCode::DomainMismatch, "codomain of f is not the domain of g");
  std::vector<int> images(f.images().size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = g.apply(f.apply(int(x)));
  return SpaceMap(f.domain_ptr(), g.codomain_ptr(), std::move(images));
}

SpaceMap restrict(const SpaceMap& f, PointSet a) {
  FiniteSpace sub = subspace(f.domain(), a);  // rejects the empty carrier
  std::vector<int> images;
  for (int x = 0; x < f.domain().size(); ++x)
    if (a.has(x)) images.push_back(f.apply(x));
  return SpaceMap(std::make_shared<FiniteSpace>(std::move(sub)), f.codomain_ptr(),
                  std::move(images));
}

const char* to_string(MapPropertyKind kind) {
  for (const auto& e : kPropNames)
    if (e.kind == kind) return e.name;
  return "?";
}

std::optional<MapPropertyKind> parse_map_property_kind(const std::string& name) {
  for (const auto& e : kPropNames)
    if (name == e.name) return e.kind;
  return std::nullopt;
}

const std::array<MapPropertyKind, kMapPropertyKindCount>& all_map_property_kinds() {
  static const std::array<MapPropertyKind, kMapPropertyKindCount> kinds = [] {
    std::array<MapPropertyKind, kMapPropertyKindCount> out{};
    for (int i = 0; i < kMapPropertyKindCount; ++i) out[i] = kPropNames[i].kind;
    return out;
  }();
  return kinds;
}

bool wei_pointwise(const OperatorTable& dom, const OperatorTable& cod,
                   const std::vector<int>& images) {
  for (int x = 0; x < dom.size(); ++x)
    for (PointSet v : cod.family(FamilyKind::EstarOpen)) {
      if (!v.has(images[x])) continue;
      const Mask vcl = cod.apply(OperatorKind::EstarCl, v).bits;
      bool found = false;
      for (PointSet u : dom.family(FamilyKind::EstarOpen)) {
        if (!u.has(x)) continue;
        if ((image_mask(images, u.bits) & ~vcl) == 0) { found = true; break; }
      }
      if (!found) return false;
    }
  return true;
}

bool wei_theta_preimage(const OperatorTable& dom, const OperatorTable& cod,
                        const std::vector<int>& images) {
  for (PointSet v : cod.family(FamilyKind::EstarThetaOpen))
    if (!dom.in_family(FamilyKind::EstarThetaOpen, PointSet(preimage_mask(images, v.bits))))
      return false;
  return true;
}

bool wei_image_closure_form(const OperatorTable& dom, const OperatorTable& cod,
                            const std::vector<int>& images) {
  // f[e*-cl(A)] inside e*-cl_theta(f[A]) for every subset A.
  const std::size_t universe = std::size_t(1) << dom.size();
  for (std::size_t m = 0; m < universe; ++m) {
    const Mask lhs = image_mask(images, dom.apply(OperatorKind::EstarCl, PointSet(Mask(m))).bits);
    const Mask rhs =
        cod.apply(OperatorKind::EstarClTheta, PointSet(image_mask(images, Mask(m)))).bits;
    if ((lhs & ~rhs) != 0) return false;
  }
  return true;
}

bool graph_rectangle_form(const OperatorTable& dom, const OperatorTable& cod,
                          const std::vector<int>& images) {
  for (int x = 0; x < dom.size(); ++x)
    for (int y = 0; y < cod.size(); ++y) {
      if (images[x] == y) continue;
      bool found = false;
      for (PointSet u : dom.family(FamilyKind::EstarOpen)) {
        if (!u.has(x) || found) continue;
        const Mask ucl = dom.apply(OperatorKind::EstarCl, u).bits;
        for (PointSet v : cod.family(FamilyKind::EstarThetaOpen)) {
          if (!v.has(y)) continue;
          bool hit = false;
          for (Mask t = ucl; t;) {
            const int z = std::countr_zero(t);
            t &= t - 1;
            if (v.has(images[z])) { hit = true; break; }
          }
          if (!hit) { found = true; break; }
        }
      }
      if (!found) return false;
    }
  return true;
}

bool graph_image_form(const OperatorTable& dom, const OperatorTable& cod,
                      const std::vector<int>& images) {
  for (int x = 0; x < dom.size(); ++x)
    for (int y = 0; y < cod.size(); ++y) {
      if (images[x] == y) continue;
      bool found = false;
      for (PointSet u : dom.family(FamilyKind::EstarOpen)) {
        if (!u.has(x) || found) continue;
        const Mask fim = image_mask(images, dom.apply(OperatorKind::EstarCl, u).bits);
        for (PointSet v : cod.family(FamilyKind::EstarThetaOpen))
          if (v.has(y) && (fim & v.bits) == 0) { found = true; break; }
      }
      if (!found) return false;
    }
  return true;
}

bool map_property_holds(MapPropertyKind kind, const OperatorTable& dom, const OperatorTable& cod,
                        const std::vector<int>& images) {
  switch (kind) {
    case MapPropertyKind::Continuous:
      return transports(cod.space().opens(), dom, FamilyKind::Open,
                        [&](PointSet v) { return PointSet(preimage_mask(images, v.bits)); },
                        nullptr);
    case MapPropertyKind::OpenMap:
      return transports(dom.space().opens(), cod, FamilyKind::Open,
                        [&](PointSet u) { return PointSet(image_mask(images, u.bits)); }, nullptr);
    case MapPropertyKind::EstarOpenMap:
      return transports(dom.space().opens(), cod, FamilyKind::EstarOpen,
                        [&](PointSet u) { return PointSet(image_mask(images, u.bits)); }, nullptr);
    case MapPropertyKind::EstarIrresolute:
      return transports(cod.family(FamilyKind::EstarOpen), dom, FamilyKind::EstarOpen,
                        [&](PointSet v) { return PointSet(preimage_mask(images, v.bits)); },
                        nullptr);
    case MapPropertyKind::WeaklyEstarIrresolute: {
      const bool pointwise = wei_pointwise(dom, cod, images);
      const bool preimage = wei_theta_preimage(dom, cod, images);
      if (pointwise != preimage)
        throw Error(ErrorCode::InternalCharacterizationMismatch,
                    "weak e*-irresoluteness: pointwise and theta-preimage routes disagree");
      return pointwise;
    }
    case MapPropertyKind::StronglyEstarIrresolute: {
      for (int x = 0; x < dom.size(); ++x)
        for (PointSet v : cod.family(FamilyKind::EstarOpen)) {
          if (!v.has(images[x])) continue;
          bool found = false;
          for (PointSet u : dom.family(FamilyKind::EstarOpen)) {
            if (!u.has(x)) continue;
            const Mask fim = image_mask(images, dom.apply(OperatorKind::EstarCl, u).bits);
            if ((fim & ~v.bits) == 0) { found = true; break; }
          }
          if (!found) return false;
        }
      return true;
    }
    case MapPropertyKind::SContinuous:
      return s_family_property(dom, cod, images, OperatorKind::Cl, nullptr);
    case MapPropertyKind::SEstarContinuous:
      return s_family_property(dom, cod, images, OperatorKind::EstarCl, nullptr);
    case MapPropertyKind::ThetaSEstarContinuous:
      return s_family_property(dom, cod, images, OperatorKind::EstarClTheta, nullptr);
    case MapPropertyKind::StronglyEstarThetaClosedGraph: {
      const bool rect = graph_rectangle_form(dom, cod, images);
      const bool image_form = graph_image_form(dom, cod, images);
      if (rect != image_form)
        throw Error(ErrorCode::InternalCharacterizationMismatch,
                    "strongly theta-closed graph: rectangle and image routes disagree");
      return rect;
    }
  }
  throw Error(ErrorCode::PreconditionUnmet, "unknown map property kind");
}

MapVerdict map_property(const SpaceMap& f, MapPropertyKind kind, const OperatorTable& dom,
                        const OperatorTable& cod) {
  const auto& images = f.images();
  MapVerdict verdict;
  verdict.holds = map_property_holds(kind, dom, cod, images);
  if (verdict.holds) return verdict;

  // Recover the canonical first witness for the false verdict.
  switch (kind) {
    case MapPropertyKind::Continuous:
    case MapPropertyKind::EstarIrresolute: {
      const auto& source = (kind == MapPropertyKind::Continuous)
                               ? cod.space().opens()
                               : cod.family(FamilyKind::EstarOpen);
      for (PointSet v : source)
        if (!dom.in_family(kind == MapPropertyKind::Continuous ? FamilyKind::Open
                                                               : FamilyKind::EstarOpen,
                           f.preimage(v))) {
          verdict.witness = "V=" + cod.space().label_of(v);
          return verdict;
        }
      break;
    }
    case MapPropertyKind::OpenMap:
    case MapPropertyKind::EstarOpenMap: {
      for (PointSet u : dom.space().opens())
        if (!cod.in_family(kind == MapPropertyKind::OpenMap ? FamilyKind::Open
                                                            : FamilyKind::EstarOpen,
                           f.image(u))) {
          verdict.witness = "U=" + dom.space().label_of(u);
          return verdict;
        }
      break;
    }
    case MapPropertyKind::SContinuous:
      s_family_property(dom, cod, images, OperatorKind::Cl, &verdict.witness);
      break;
    case MapPropertyKind::SEstarContinuous:
      s_family_property(dom, cod, images, OperatorKind::EstarCl, &verdict.witness);
      break;
    case MapPropertyKind::ThetaSEstarContinuous:
      s_family_property(dom, cod, images, OperatorKind::EstarClTheta, &verdict.witness);
      break;
    case MapPropertyKind::WeaklyEstarIrresolute:
    case MapPropertyKind::StronglyEstarIrresolute: {
      for (int x = 0; x < dom.size(); ++x)
        for (PointSet v : cod.family(FamilyKind::EstarOpen)) {
          if (!v.has(images[x])) continue;
          const Mask target = (kind == MapPropertyKind::WeaklyEstarIrresolute)
                                  ? cod.apply(OperatorKind::EstarCl, v).bits
                                  : v.bits;
          bool found = false;
          for (PointSet u : dom.family(FamilyKind::EstarOpen)) {
            if (!u.has(x)) continue;
            const Mask fim = (kind == MapPropertyKind::WeaklyEstarIrresolute)
                                 ? image_mask(images, u.bits)
                                 : image_mask(images, dom.apply(OperatorKind::EstarCl, u).bits);
            if ((fim & ~target) == 0) { found = true; break; }
          }
          if (!found) {
            verdict.witness =
                "x=" + dom.space().point_names()[x] + ", V=" + cod.space().label_of(v);
            return verdict;
          }
        }
      break;
    }
    case MapPropertyKind::StronglyEstarThetaClosedGraph: {
      for (int x = 0; x < dom.size(); ++x)
        for (int y = 0; y < cod.size(); ++y) {
          if (images[x] == y) continue;
          bool found = false;
          for (PointSet u : dom.family(FamilyKind::EstarOpen)) {
            if (!u.has(x) || found) continue;
            const Mask fim = image_mask(images, dom.apply(OperatorKind::EstarCl, u).bits);
            for (PointSet v : cod.family(FamilyKind::EstarThetaOpen))
              if (v.has(y) && (fim & v.bits) == 0) { found = true; break; }
          }
          if (!found) {
            verdict.witness = "(x,y)=(" + dom.space().point_names()[x] + "," +
                              cod.space().point_names()[y] + ")";
            return verdict;
          }
        }
      break;
    }
  }
  return verdict;
}

MapVerdict map_property(const SpaceMap& f, MapPropertyKind kind) {
  OperatorTable dom(f.domain());
  OperatorTable cod(f.codomain());
  return map_property(f, kind, dom, cod);
}

MapPropertyReport evaluate_map_properties(const SpaceMap& f, const OperatorTable& dom,
                                          const OperatorTable& cod) {
  MapPropertyReport report;
  const auto& kinds = all_map_property_kinds();
  for (int i = 0; i < kMapPropertyKindCount; ++i)
    report.verdicts[i] = map_property(f, kinds[i], dom, cod);
  return report;
}

DsetDecomposition preimage_dset(const SpaceMap& f, PointSet a, const OperatorTable& dom,
                                const OperatorTable& cod) {
  if (!f.surjective())
    throw Error(ErrorCode::PreconditionUnmet, "map is not surjective");
  if (!map_property_holds(MapPropertyKind::WeaklyEstarIrresolute, dom, cod, f.images()))
    throw Error(ErrorCode::PreconditionUnmet, "map is not weakly e*-irresolute");
  if (!cod.in_family(FamilyKind::DSet, a))
    throw Error(ErrorCode::PreconditionUnmet,
                "set " + cod.space().label_of(a) + " is not a d-set of the codomain");

  const auto& theta = cod.family(FamilyKind::EstarThetaOpen).members();
  for (PointSet u : theta) {
    if (u == cod.full_set()) continue;
    if (!a.subset_of(u)) continue;
    for (PointSet v : theta) {
      if (u - v != a) continue;
      const PointSet pu = f.preimage(u), pv = f.preimage(v);
      if (!dom.in_family(FamilyKind::EstarThetaOpen, pu) ||
          !dom.in_family(FamilyKind::EstarThetaOpen, pv) || pu == dom.full_set() ||
          pu - pv != f.preimage(a))
        throw Error(ErrorCode::InternalCharacterizationMismatch,
                    "preimage of a d-set decomposition failed to decompose");
      return {pu, pv};
    }
  }
  throw Error(ErrorCode::InternalCharacterizationMismatch,
              "no theta-open decomposition found for a d-set");
}

}  // namespace etheta
