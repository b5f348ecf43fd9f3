#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "etheta/preorder.hpp"
#include "etheta/space.hpp"

namespace etheta {

inline constexpr int kMaxEnumerationPoints = 5;

// Labelled-topology enumeration, backed by the preorder correspondence.
// Candidate relations are scanned as counters over the n*(n-1)
// off-diagonal cells in row-major order; a relation that passes the
// transitivity check (and antisymmetry, for t0_only) yields its up-set
// topology. Ascending counter order is the canonical enumeration order,
// and [begin, end) counter windows partition the stream for parallel
// consumers.
class TopologyEnumerator {
 public:
  explicit TopologyEnumerator(int n, bool t0_only = false);

  // Total number of candidate counters, 2^(n*(n-1)).
  std::uint64_t candidate_count() const { return std::uint64_t(1) << (n_ * (n_ - 1)); }

  // Preorder for a counter value, or nullopt when the candidate fails
  // transitivity (or antisymmetry under t0_only).
  std::optional<Preorder> relation_at(std::uint64_t counter) const;

  // Enumerates every space in canonical order over a counter window.
  void for_each(std::uint64_t begin, std::uint64_t end,
                const std::function<void(const FiniteSpace&)>& fn) const;
  void for_each(const std::function<void(const FiniteSpace&)>& fn) const;

  static std::vector<std::string> default_labels(int n);

 private:
  int n_;
  bool t0_only_;
};

std::vector<FiniteSpace> enumerate_topologies(int n, bool t0_only = false);
std::uint64_t count_topologies(int n, bool t0_only = false);

}  // namespace etheta
