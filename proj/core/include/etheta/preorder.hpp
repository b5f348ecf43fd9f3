#pragma once

#include <string>
#include <vector>

#include "etheta/pointset.hpp"
#include "etheta/space.hpp"

namespace etheta {

// Reflexive transitive relation on n points, row i holding {j : i <= j}.
// Finite topologies correspond bijectively to preorders: the opens of the
// associated space are the up-sets, and the specialization preorder of
// that space recovers the relation.
class Preorder {
 public:
  Preorder(int n, std::vector<PointSet> rows);  // validates reflexivity/transitivity

  int size() const { return n_; }
  PointSet up_set(int i) const { return rows_[i]; }
  bool leq(int i, int j) const { return rows_[i].has(j); }
  bool antisymmetric() const;

  FiniteSpace to_space(std::vector<std::string> point_names) const;
  static Preorder specialization(const FiniteSpace& space);

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.rows_ == b.rows_;
  }

 private:
  int n_;
  std::vector<PointSet> rows_;
};

}  // namespace etheta
