#include "etheta/engine.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "etheta/error.hpp"

namespace etheta {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

const std::vector<PointSet>& canonical_subsets(int n) {
  static std::vector<std::vector<PointSet>> cache(kMaxPoints + 1);
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto& entry = cache[n];
  if (entry.empty() && n >= 0) {
    for (Mask m = 0; m < (Mask(1) << n); ++m) entry.push_back(PointSet(m));
    std::sort(entry.begin(), entry.end(),
              [](PointSet a, PointSet b) { return canonical_less(a, b); });
  }
  return entry;
}

void Universe::ensure_level(int n) {
  if (n < 1 || n > kMaxEnumerationPoints)
    throw Error(ErrorCode::CarrierTooLarge,
                "space levels run 1.." + std::to_string(kMaxEnumerationPoints));
  if (!spaces_[n].empty()) return;
  for (FiniteSpace& s : enumerate_topologies(n))
    spaces_[n].push_back(std::make_shared<const FiniteSpace>(std::move(s)));
  tables_[n].resize(spaces_[n].size());
  axiom_reports_[n].resize(spaces_[n].size());
}

const std::vector<std::shared_ptr<const FiniteSpace>>& Universe::spaces(int n) {
  ensure_level(n);
  return spaces_[n];
}

std::size_t Universe::space_count(int n) { return spaces(n).size(); }

const OperatorTable& Universe::table(int n, int idx) {
  ensure_level(n);
  auto& slot = tables_[n][idx];
  if (!slot) {
    slot = std::make_unique<OperatorTable>(*spaces_[n][idx]);
    slot->warm_dset();
  }
  return *slot;
}

const AxiomReport& Universe::axioms(int n, int idx) {
  ensure_level(n);
  auto& slot = axiom_reports_[n][idx];
  if (!slot) slot = std::make_unique<AxiomReport>(evaluate_axioms(table(n, idx)));
  return *slot;
}

const OperatorTable& Universe::subspace_table(int n, int idx, Mask carrier) {
  const auto key = std::make_tuple(n, idx, carrier);
  auto it = subspace_tables_.find(key);
  if (it == subspace_tables_.end()) {
    auto table_ptr =
        std::make_unique<OperatorTable>(subspace(*spaces(n)[idx], PointSet(carrier)));
    it = subspace_tables_.emplace(key, std::move(table_ptr)).first;
  }
  return *it->second;
}

namespace {

// Distributes [0, count) over workers as contiguous chunks and joins.
void parallel_chunks(std::uint64_t count, int workers,
                     const std::function<void(std::uint64_t, std::uint64_t)>& run_range) {
  workers = int(std::min<std::uint64_t>(std::uint64_t(std::max(workers, 1)), count ? count : 1));
  if (workers == 1) {
    run_range(0, count);
    return;
  }
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::uint64_t(w) * chunk;
    const std::uint64_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end] { run_range(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

void Universe::warm_tables(int max_points, int workers) {
  for (int n = 1; n <= max_points; ++n) {
    ensure_level(n);
    if (tables_warm_[n]) continue;
    const std::uint64_t count = spaces_[n].size();
    parallel_chunks(count, workers, [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t i = begin; i < end; ++i) {
        if (!tables_[n][i]) {
          tables_[n][i] = std::make_unique<OperatorTable>(*spaces_[n][i]);
          tables_[n][i]->warm_dset();
        }
      }
    });
    tables_warm_[n] = 1;
  }
}

void Universe::warm_axioms(int max_points, int workers) {
  warm_tables(max_points, workers);
  for (int n = 1; n <= max_points; ++n) {
    if (axioms_warm_[n]) continue;
    const std::uint64_t count = spaces_[n].size();
    parallel_chunks(count, workers, [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t i = begin; i < end; ++i)
        if (!axiom_reports_[n][i])
          axiom_reports_[n][i] = std::make_unique<AxiomReport>(evaluate_axioms(*tables_[n][i]));
    });
    axioms_warm_[n] = 1;
  }
}

void Universe::warm_subspaces(int n) {
  ensure_level(n);
  if (subspaces_warm_[n]) return;
  warm_tables(n, 1);
  for (std::size_t idx = 0; idx < spaces_[n].size(); ++idx)
    for (Mask carrier = 1; carrier < (Mask(1) << n); ++carrier)
      subspace_table(n, int(idx), carrier);
  subspaces_warm_[n] = 1;
}

std::uint64_t Universe::map_count(int domain_size, int codomain_size) {
  std::uint64_t count = 1;
  for (int i = 0; i < domain_size; ++i) count *= std::uint64_t(codomain_size);
  return count;
}

std::vector<int> Universe::decode_map(std::uint64_t index, int domain_size, int codomain_size) {
  std::vector<int> images(domain_size, 0);
  for (int x = domain_size - 1; x >= 0; --x) {
    images[x] = int(index % codomain_size);
    index /= codomain_size;
  }
  return images;
}

std::uint64_t Universe::encode_map(const std::vector<int>& images, int codomain_size) {
  std::uint64_t index = 0;
  for (int y : images) index = index * codomain_size + std::uint64_t(y);
  return index;
}

std::uint16_t classify_map(const OperatorTable& dom, const OperatorTable& cod,
                           const std::vector<int>& images) {
  std::uint16_t bits = 0;
  const auto& kinds = all_map_property_kinds();
  for (int k = 0; k < kMapPropertyKindCount; ++k) {
    const MapPropertyKind kind = kinds[k];
    bool value = false;
    // The paired-route kinds are classified by their primary route here;
    // the catalog checks the alternative routes as claims of their own.
    if (kind == MapPropertyKind::WeaklyEstarIrresolute)
      value = wei_pointwise(dom, cod, images);
    else if (kind == MapPropertyKind::StronglyEstarThetaClosedGraph)
      value = graph_rectangle_form(dom, cod, images);
    else
      value = map_property_holds(kind, dom, cod, images);
    if (value) bits |= std::uint16_t(1) << k;
  }
  if (wei_theta_preimage(dom, cod, images)) bits |= kMapBitWeiPreimage;
  if (wei_image_closure_form(dom, cod, images)) bits |= kMapBitWeiImageClosure;
  if (graph_image_form(dom, cod, images)) bits |= kMapBitGraphImageForm;

  Mask image_all = 0;
  for (int y : images) image_all |= Mask(1) << y;
  if (image_all == PointSet::full(cod.size()).bits) bits |= kMapBitSurjective;
  if (std::popcount(image_all) == dom.size()) bits |= kMapBitInjective;
  return bits;
}

void Universe::warm_map_level(int nx, int ny, int workers) {
  const auto key = std::make_pair(nx, ny);
  if (map_levels_.count(key)) return;
  warm_tables(std::max(nx, ny), workers);
  const auto& xs = spaces(nx);
  const auto& ys = spaces(ny);
  std::vector<MapClass> classes(xs.size() * ys.size());
  const std::uint64_t maps_per_pair = map_count(nx, ny);
  const std::uint64_t pair_count = classes.size();
  parallel_chunks(pair_count, workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t p = begin; p < end; ++p) {
      const int ix = int(p / ys.size());
      const int iy = int(p % ys.size());
      MapClass& cls = classes[p];
      cls.domain_size = nx;
      cls.codomain_size = ny;
      cls.bits.resize(maps_per_pair);
      const OperatorTable& dom = *tables_[nx][ix];
      const OperatorTable& cod = *tables_[ny][iy];
      for (std::uint64_t k = 0; k < maps_per_pair; ++k)
        cls.bits[k] = classify_map(dom, cod, decode_map(k, nx, ny));
    }
  });
  map_levels_.emplace(key, std::move(classes));
}

const MapClass& Universe::map_class(int nx, int ix, int ny, int iy) const {
  const auto it = map_levels_.find(std::make_pair(nx, ny));
  if (it == map_levels_.end())
    throw Error(ErrorCode::PreconditionUnmet, "map level not warmed");
  return it->second[std::size_t(ix) * spaces_[ny].size() + iy];
}

}  // namespace etheta
