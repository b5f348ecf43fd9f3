#include "etheta/space.hpp"

#include <algorithm>
#include <set>

#include "etheta/error.hpp"

namespace etheta {

void check_labels(const std::vector<std::string>& names) {
  if (names.size() > std::size_t(kMaxPoints))
    throw Error(ErrorCode::CarrierTooLarge,
                std::to_string(names.size()) + " points, limit is " + std::to_string(kMaxPoints));
  std::set<std::string> seen;
  for (const auto& name : names)
    if (!seen.insert(name).second)
      throw Error(ErrorCode::DuplicateLabel, "\"" + name + "\"");
}

FiniteSpace::FiniteSpace(std::vector<std::string> names, SetFamily opens)
    : n_(int(names.size())), names_(std::move(names)), opens_(std::move(opens)) {
  std::vector<PointSet> closed;
  closed.reserve(opens_.size());
  for (PointSet u : opens_) closed.push_back(u.complement(n_));
  closed_ = SetFamily(n_, std::move(closed));
  nbhd_.assign(n_, PointSet::full(n_));
  for (PointSet u : opens_)
    for (int x = 0; x < n_; ++x)
      if (u.has(x)) nbhd_[x] = nbhd_[x] & u;
}

FiniteSpace FiniteSpace::validate(std::vector<std::string> point_names, SetFamily family) {
  check_labels(point_names);
  const int n = int(point_names.size());
  if (family.width() != n)
    throw Error(ErrorCode::MemberOutOfRange, "family width does not match the point count");
  if (!family.contains(PointSet::empty()))
    throw Error(ErrorCode::MissingEmpty, "the empty set is not a member");
  if (!family.contains(PointSet::full(n)))
    throw Error(ErrorCode::MissingFull, "the full set is not a member");
  auto render = [&](PointSet s) {
    std::string out = "{";
    for (int i = 0; i < n; ++i)
      if (s.has(i)) {
        if (out.size() > 1) out += ",";
        out += point_names[i];
      }
    return out + "}";
  };
  const auto& mem = family.members();
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t j = i + 1; j < mem.size(); ++j) {
      if (!family.contains(mem[i] | mem[j]))
        throw Error(ErrorCode::NotClosedUnderUnion,
                    render(mem[i]) + " and " + render(mem[j]));
      if (!family.contains(mem[i] & mem[j]))
        throw Error(ErrorCode::NotClosedUnderIntersection,
                    render(mem[i]) + " and " + render(mem[j]));
    }
  }
  return FiniteSpace(std::move(point_names), std::move(family));
}

FiniteSpace FiniteSpace::generate(std::vector<std::string> point_names, const SetFamily& subbasis) {
  check_labels(point_names);
  const int n = int(point_names.size());
  const std::size_t universe = std::size_t(1) << n;

  // Finite intersections first (the empty intersection contributes X),
  // then unions (the empty union contributes the empty set).
  std::vector<bool> inter(universe, false);
  inter[PointSet::full(n).bits] = true;
  for (PointSet s : subbasis) inter[s.bits] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> present;
    for (Mask m = 0; m < universe; ++m)
      if (inter[m]) present.push_back(m);
    for (std::size_t i = 0; i < present.size(); ++i)
      for (std::size_t j = i + 1; j < present.size(); ++j) {
        const Mask m = present[i] & present[j];
        if (!inter[m]) { inter[m] = true; grew = true; }
      }
  }

  std::vector<bool> open(universe, false);
  open[0] = true;
  for (Mask m = 0; m < universe; ++m)
    if (inter[m]) open[m] = true;
  grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> present;
    for (Mask m = 0; m < universe; ++m)
      if (open[m]) present.push_back(m);
    for (std::size_t i = 0; i < present.size(); ++i)
      for (std::size_t j = i + 1; j < present.size(); ++j) {
        const Mask m = present[i] | present[j];
        if (!open[m]) { open[m] = true; grew = true; }
      }
  }

  std::vector<PointSet> members;
  for (Mask m = 0; m < universe; ++m)
    if (open[m]) members.push_back(PointSet(m));
  return FiniteSpace(std::move(point_names), SetFamily(n, std::move(members)));
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> point_names) {
  check_labels(point_names);
  const int n = int(point_names.size());
  std::vector<PointSet> members;
  for (Mask m = 0; m < (Mask(1) << n); ++m) members.push_back(PointSet(m));
  return FiniteSpace(std::move(point_names), SetFamily(n, std::move(members)));
}

FiniteSpace FiniteSpace::indiscrete(std::vector<std::string> point_names) {
  check_labels(point_names);
  const int n = int(point_names.size());
  return FiniteSpace(std::move(point_names),
                     SetFamily(n, {PointSet::empty(), PointSet::full(n)}));
}

PointSet FiniteSpace::closure(PointSet a) const {
  PointSet out;
  for (int x = 0; x < n_; ++x)
    if (nbhd_[x].intersects(a)) out = out.with(x);
  return out;
}

PointSet FiniteSpace::interior(PointSet a) const {
  PointSet out;
  for (int x = 0; x < n_; ++x)
    if (a.has(x) && nbhd_[x].subset_of(a)) out = out.with(x);
  return out;
}

int FiniteSpace::point_index(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == label) return i;
  throw Error(ErrorCode::UnknownPoint, "\"" + label + "\"");
}

std::string FiniteSpace::label_of(PointSet s) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n_; ++i)
    if (s.has(i)) {
      if (!first) out += ",";
      out += names_[i];
      first = false;
    }
  out += "}";
  return out;
}

FiniteSpace subspace(const FiniteSpace& space, PointSet a) {
  if (a.is_empty()) throw Error(ErrorCode::EmptyCarrier, "subspace carrier is empty");
  std::vector<int> points;
  std::vector<std::string> names;
  for (int i = 0; i < space.size(); ++i)
    if (a.has(i)) {
      points.push_back(i);
      names.push_back(space.point_names()[i]);
    }
  const int m = int(points.size());
  auto trace = [&](PointSet u) {
    PointSet out;
    for (int k = 0; k < m; ++k)
      if (u.has(points[k])) out = out.with(k);
    return out;
  };
  std::vector<PointSet> members;
  for (PointSet u : space.opens()) members.push_back(trace(u));
  return FiniteSpace::validate(std::move(names), SetFamily(m, std::move(members)));
}

FiniteSpace product(const FiniteSpace& x, const FiniteSpace& y, int point_limit) {
  const int nx = x.size(), ny = y.size();
  if (point_limit > kMaxPoints) point_limit = kMaxPoints;
  if (nx * ny > point_limit)
    throw Error(ErrorCode::CarrierTooLarge,
                "product carrier has " + std::to_string(nx * ny) + " points, limit is " +
                    std::to_string(point_limit));
  std::vector<std::string> names;
  names.reserve(std::size_t(nx) * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      names.push_back(x.point_names()[i] + "." + y.point_names()[j]);

  const int n = nx * ny;
  // Minimal neighbourhood of (i, j) is the rectangle N(i) x N(j); a set is
  // open exactly when it absorbs the minimal rectangle of each of its
  // points. This equals the closure of open rectangles under unions.
  std::vector<PointSet> rect(n);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      PointSet r;
      for (int a = 0; a < nx; ++a)
        if (x.min_nbhd(i).has(a))
          for (int b = 0; b < ny; ++b)
            if (y.min_nbhd(j).has(b)) r = r.with(a * ny + b);
      rect[i * ny + j] = r;
    }
  std::vector<PointSet> members;
  for (Mask m = 0; m < (Mask(1) << n); ++m) {
    bool open = true;
    PointSet s(m);
    for (int p = 0; p < n && open; ++p)
      if (s.has(p) && !rect[p].subset_of(s)) open = false;
    if (open) members.push_back(s);
  }
  return FiniteSpace::validate(std::move(names), SetFamily(n, std::move(members)));
}

}  // namespace etheta
