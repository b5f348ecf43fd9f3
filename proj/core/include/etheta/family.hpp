#pragma once

#include <vector>

#include "etheta/pointset.hpp"

namespace etheta {

// An ordered, duplicate-free collection of subsets of a fixed carrier.
// Members are kept in canonical order (cardinality, then bit value) and a
// per-subset index gives O(1) membership tests.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(int width, std::vector<PointSet> members);

  int width() const { return width_; }
  std::size_t size() const { return members_.size(); }
  bool contains(PointSet s) const { return index_[s.bits]; }

  const std::vector<PointSet>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.width_ == b.width_ && a.members_ == b.members_;
  }

 private:
  int width_ = 0;
  std::vector<PointSet> members_;
  std::vector<bool> index_;  // size 2^width
};

}  // namespace etheta
