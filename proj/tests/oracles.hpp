#pragma once

// Brute-force reference computations. Everything here follows the written
// definitions as literally as possible (family scans and full quantifier
// sweeps) so the fast production routes can be checked against an
// independent path.

#include <cstdint>
#include <string>
#include <vector>

#include "etheta/family.hpp"
#include "etheta/maps.hpp"
#include "etheta/operators.hpp"
#include "etheta/pointset.hpp"
#include "etheta/space.hpp"

namespace etheta::oracle {

// Counts set families over an n-point carrier that satisfy the topology
// laws, scanning all 2^(2^n) candidates. Usable for n <= 4.
std::uint64_t count_topologies_by_family_filter(int n);

// Closure and interior by literal family scans.
PointSet closure_by_intersection(const FiniteSpace& space, PointSet a);
PointSet interior_by_union(const FiniteSpace& space, PointSet a);

// Smallest topology containing the subbasis, by a single fixpoint closure
// under pairwise union and intersection seeded with the empty and full sets.
SetFamily generate_by_fixpoint(int n, const SetFamily& subbasis);

// Product opens by literally collecting open rectangles and closing the
// collection under pairwise unions.
SetFamily product_opens_by_rectangle_unions(const FiniteSpace& x, const FiniteSpace& y);

// Families by definition, one subset at a time.
SetFamily regular_open_family(const FiniteSpace& space);
SetFamily delta_open_family(const FiniteSpace& space);
PointSet delta_cl_all_opens(const FiniteSpace& space, PointSet a);  // quantifies every open set
bool estar_open(const FiniteSpace& space, PointSet a);
SetFamily estar_open_family(const FiniteSpace& space);
PointSet estar_cl(const FiniteSpace& space, PointSet a);
PointSet estar_int(const FiniteSpace& space, PointSet a);
PointSet estar_cl_theta(const FiniteSpace& space, PointSet a);  // literal cluster-point sweep
SetFamily estar_theta_open_family(const FiniteSpace& space);
PointSet estar_ker_theta(const FiniteSpace& space, PointSet a);
bool beta_open(const FiniteSpace& space, PointSet a);
SetFamily beta_open_family(const FiniteSpace& space);
PointSet beta_cl(const FiniteSpace& space, PointSet a);
PointSet beta_cl_theta(const FiniteSpace& space, PointSet a);
SetFamily beta_theta_open_family(const FiniteSpace& space);
PointSet beta_ker_theta(const FiniteSpace& space, PointSet a);
SetFamily dset_family(const FiniteSpace& space);

// Alternative cluster formula for the plain e*-closure.
PointSet estar_cl_by_cluster(const FiniteSpace& space, PointSet a);

// Map predicates by full quantifier sweeps over whole families (no
// minimal-neighbourhood shortcuts).
bool s_continuous(const SpaceMap& f);
bool s_estar_continuous(const SpaceMap& f);
bool theta_s_estar_continuous(const SpaceMap& f);
bool weakly_estar_irresolute_pointwise(const SpaceMap& f);
bool graph_strongly_theta_closed_rectangles(const SpaceMap& f);

// Convenience builders for the recurring worked spaces.
FiniteSpace space_123();      // {1,2,3} with opens {},{1},{2},{1,2},X
FiniteSpace space_abcd_7();   // {a,b,c,d} with 7 opens: {},{a},{c},{a,c},{c,d},{a,c,d},X
FiniteSpace space_abcd_5();   // {a,b,c,d} with 5 opens: {},{a},{a,b},{a,b,c},X
FiniteSpace sierpinski();     // {0,1} with opens {},{0},X

PointSet set_of(const FiniteSpace& space, const std::vector<std::string>& labels);

}  // namespace etheta::oracle
