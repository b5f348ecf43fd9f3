#include "etheta/enumerate.hpp"

#include "etheta/error.hpp"

namespace etheta {

TopologyEnumerator::TopologyEnumerator(int n, bool t0_only) : n_(n), t0_only_(t0_only) {
  if (n < 1 || n > kMaxEnumerationPoints)
    throw Error(ErrorCode::CarrierTooLarge,
                "enumeration supports 1.." + std::to_string(kMaxEnumerationPoints) +
                    " points, got " + std::to_string(n));
}

std::vector<std::string> TopologyEnumerator::default_labels(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return names;
}

std::optional<Preorder> TopologyEnumerator::relation_at(std::uint64_t counter) const {
  std::vector<PointSet> rows(n_);
  int bit = 0;
  for (int i = 0; i < n_; ++i) {
    rows[i] = PointSet::single(i);
    for (int j = 0; j < n_; ++j) {
      if (j == i) continue;
      if ((counter >> bit) & 1u) rows[i] = rows[i].with(j);
      ++bit;
    }
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (rows[i].has(j) && !rows[j].subset_of(rows[i])) return std::nullopt;
  if (t0_only_)
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (rows[i].has(j) && rows[j].has(i)) return std::nullopt;
  return Preorder(n_, std::move(rows));
}

void TopologyEnumerator::for_each(std::uint64_t begin, std::uint64_t end,
                                  const std::function<void(const FiniteSpace&)>& fn) const {
  const auto labels = default_labels(n_);
  if (end > candidate_count()) end = candidate_count();
  for (std::uint64_t c = begin; c < end; ++c) {
    auto rel = relation_at(c);
    if (rel) fn(rel->to_space(labels));
  }
}

void TopologyEnumerator::for_each(const std::function<void(const FiniteSpace&)>& fn) const {
  for_each(0, candidate_count(), fn);
}

std::vector<FiniteSpace> enumerate_topologies(int n, bool t0_only) {
  std::vector<FiniteSpace> out;
  TopologyEnumerator(n, t0_only).for_each([&](const FiniteSpace& s) { out.push_back(s); });
  return out;
}

std::uint64_t count_topologies(int n, bool t0_only) {
  std::uint64_t count = 0;
  TopologyEnumerator e(n, t0_only);
  for (std::uint64_t c = 0; c < e.candidate_count(); ++c)
    if (e.relation_at(c)) ++count;
  return count;
}

}  // namespace etheta
