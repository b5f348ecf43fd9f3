#include "etheta/preorder.hpp"

#include "etheta/error.hpp"

namespace etheta {

Preorder::Preorder(int n, std::vector<PointSet> rows) : n_(n), rows_(std::move(rows)) {
  if (int(rows_.size()) != n_)
    throw Error(ErrorCode::PreconditionUnmet, "relation row count does not match n");
  for (int i = 0; i < n_; ++i)
    if (!rows_[i].has(i))
      throw Error(ErrorCode::PreconditionUnmet, "relation is not reflexive");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (rows_[i].has(j) && !rows_[j].subset_of(rows_[i]))
        throw Error(ErrorCode::PreconditionUnmet, "relation is not transitive");
}

bool Preorder::antisymmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (rows_[i].has(j) && rows_[j].has(i)) return false;
  return true;
}

FiniteSpace Preorder::to_space(std::vector<std::string> point_names) const {
  // Opens are the up-sets: U absorbs {j : i <= j} for each of its points.
  std::vector<PointSet> members;
  for (Mask m = 0; m < (Mask(1) << n_); ++m) {
    PointSet s(m);
    bool up = true;
    for (int i = 0; i < n_ && up; ++i)
      if (s.has(i) && !rows_[i].subset_of(s)) up = false;
    if (up) members.push_back(s);
  }
  return FiniteSpace::validate(std::move(point_names), SetFamily(n_, std::move(members)));
}

Preorder Preorder::specialization(const FiniteSpace& space) {
  // i <= j iff every open set containing i contains j, i.e. j lies in the
  // minimal neighbourhood of i.
  std::vector<PointSet> rows(space.size());
  for (int i = 0; i < space.size(); ++i) rows[i] = space.min_nbhd(i);
  return Preorder(space.size(), std::move(rows));
}

}  // namespace etheta
