#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "etheta/axioms.hpp"
#include "etheta/claims.hpp"
#include "etheta/enumerate.hpp"
#include "etheta/maps.hpp"
#include "etheta/operators.hpp"

namespace etheta {

// Property bits per enumerated map, in MapPropertyKind order, plus the
// alternative evaluation routes and the basic map shape flags.
inline constexpr std::uint16_t kMapBitWeiPreimage = 1u << 10;
inline constexpr std::uint16_t kMapBitWeiImageClosure = 1u << 11;
inline constexpr std::uint16_t kMapBitGraphImageForm = 1u << 12;
inline constexpr std::uint16_t kMapBitSurjective = 1u << 13;
inline constexpr std::uint16_t kMapBitInjective = 1u << 14;

struct MapClass {
  int domain_size = 0;
  int codomain_size = 0;
  std::vector<std::uint16_t> bits;  // indexed by lexicographic map index
};

// Shared, read-only-after-warm cache of enumerated spaces, operator
// tables, axiom reports and map-ensemble property classes. warm_* calls
// are not thread-safe with each other; the claim engine warms everything
// a claim needs before its parallel scan starts.
class Universe {
 public:
  const std::vector<std::shared_ptr<const FiniteSpace>>& spaces(int n);
  std::size_t space_count(int n);
  const OperatorTable& table(int n, int idx);
  const AxiomReport& axioms(int n, int idx);
  const OperatorTable& subspace_table(int n, int idx, Mask carrier);

  void warm_tables(int max_points, int workers);
  void warm_axioms(int max_points, int workers);
  void warm_subspaces(int n);
  // Map classes for every ordered pair of nx- and ny-point spaces.
  void warm_map_level(int nx, int ny, int workers);
  const MapClass& map_class(int nx, int ix, int ny, int iy) const;

  // Canonical lexicographic map order: index digits are the images of the
  // domain points, most significant digit first.
  static std::vector<int> decode_map(std::uint64_t index, int domain_size, int codomain_size);
  static std::uint64_t encode_map(const std::vector<int>& images, int codomain_size);
  static std::uint64_t map_count(int domain_size, int codomain_size);

 private:
  void ensure_level(int n);

  std::vector<std::vector<std::shared_ptr<const FiniteSpace>>> spaces_ =
      std::vector<std::vector<std::shared_ptr<const FiniteSpace>>>(kMaxEnumerationPoints + 1);
  std::vector<std::vector<std::unique_ptr<OperatorTable>>> tables_ =
      std::vector<std::vector<std::unique_ptr<OperatorTable>>>(kMaxEnumerationPoints + 1);
  std::vector<std::vector<std::unique_ptr<AxiomReport>>> axiom_reports_ =
      std::vector<std::vector<std::unique_ptr<AxiomReport>>>(kMaxEnumerationPoints + 1);
  std::vector<int> tables_warm_ = std::vector<int>(kMaxEnumerationPoints + 1, 0);
  std::vector<int> axioms_warm_ = std::vector<int>(kMaxEnumerationPoints + 1, 0);
  std::map<std::pair<int, int>, std::vector<MapClass>> map_levels_;
  std::map<std::tuple<int, int, Mask>, std::unique_ptr<OperatorTable>> subspace_tables_;
  std::vector<int> subspaces_warm_ = std::vector<int>(kMaxEnumerationPoints + 1, 0);
};

std::uint16_t classify_map(const OperatorTable& dom, const OperatorTable& cod,
                           const std::vector<int>& images);

int resolve_workers(int requested);

// Subsets of an n-point carrier in canonical order (cardinality, value).
const std::vector<PointSet>& canonical_subsets(int n);

}  // namespace etheta
