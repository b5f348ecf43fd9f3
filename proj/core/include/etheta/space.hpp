#pragma once

#include <string>
#include <vector>

#include "etheta/family.hpp"
#include "etheta/pointset.hpp"

namespace etheta {

// A finite topological space: labelled points plus its family of open sets.
// Construction goes through validate() or generate(), which establish the
// topology laws; afterwards the object is immutable and all operations on
// it are pure.
class FiniteSpace {
 public:
  // Checks the topology axioms on a finite carrier: empty set and full set
  // present, family closed under pairwise union and intersection. Reports
  // the first violated law together with the offending pair.
  static FiniteSpace validate(std::vector<std::string> point_names, SetFamily family);

  // Smallest topology containing the subbasis: close under finite
  // intersections (empty intersection = X), then under unions. Never
  // rejects a subbasis; label problems are the only error.
  static FiniteSpace generate(std::vector<std::string> point_names, const SetFamily& subbasis);

  static FiniteSpace discrete(std::vector<std::string> point_names);
  static FiniteSpace indiscrete(std::vector<std::string> point_names);

  int size() const { return n_; }
  const std::vector<std::string>& point_names() const { return names_; }
  const SetFamily& opens() const { return opens_; }
  const SetFamily& closed_sets() const { return closed_; }
  bool is_open(PointSet s) const { return opens_.contains(s); }
  bool is_closed(PointSet s) const { return closed_.contains(s); }

  // Smallest open set containing point x. Finite spaces always have one;
  // closure and interior reduce to it.
  PointSet min_nbhd(int x) const { return nbhd_[x]; }

  PointSet closure(PointSet a) const;
  PointSet interior(PointSet a) const;
  PointSet complement(PointSet a) const { return a.complement(n_); }
  PointSet full_set() const { return PointSet::full(n_); }

  int point_index(const std::string& label) const;  // throws UnknownPoint
  std::string label_of(PointSet s) const;           // "{a,b}" rendering, ground order

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.names_ == b.names_ && a.opens_ == b.opens_;
  }

 private:
  FiniteSpace(std::vector<std::string> names, SetFamily opens);

  int n_ = 0;
  std::vector<std::string> names_;
  SetFamily opens_;
  SetFamily closed_;
  std::vector<PointSet> nbhd_;
};

void check_labels(const std::vector<std::string>& names);

// Trace topology on a nonempty subset: points of A in ground order, opens
// are the intersections U ∩ A.
FiniteSpace subspace(const FiniteSpace& space, PointSet a);

// Product topology; point (i, j) gets label "<xi>.<yj>" and bit index
// i*|Y|+j. Opens are all unions of open rectangles. Errors with
// CarrierTooLarge when |X|*|Y| exceeds the point limit.
FiniteSpace product(const FiniteSpace& x, const FiniteSpace& y, int point_limit = kMaxPoints);

}  // namespace etheta
