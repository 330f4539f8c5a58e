#include "tiltlab/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tiltlab/errors.hpp"

namespace tiltlab {

const char* exec_name(Exec e) { return e == Exec::serial ? "serial" : "parallel"; }

int parallel_workers() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

void extend_cliques(const std::vector<IndexSet>& later_compatible, const IndexSet& chosen, const IndexSet& candidates,
                    const std::function<bool(const IndexSet&)>& keep, std::vector<IndexSet>& out) {
  if (keep(chosen)) out.push_back(chosen);
  candidates.for_each([&](int i) {
    extend_cliques(later_compatible, chosen.with(i), candidates & later_compatible[i], keep, out);
  });
}

// Runs body(k) for k in [0, count) and concatenates the per-index buckets in
// index order, which makes the parallel result identical to the serial one.
std::vector<IndexSet> bucketed(std::size_t count, const std::function<void(std::size_t, std::vector<IndexSet>&)>& body,
                               Exec exec) {
  const auto buckets = index_map<std::vector<IndexSet>>(
      count,
      [&](std::size_t k) {
        std::vector<IndexSet> local;
        body(k, local);
        return local;
      },
      exec);
  std::vector<IndexSet> out;
  for (const auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<IndexSet> clique_scan(int n, const std::vector<IndexSet>& compatible,
                                  const std::function<bool(const IndexSet&)>& keep, Exec exec) {
  if (n < 0 || n > IndexSet::kCapacity || compatible.size() != static_cast<std::size_t>(n))
    throw ContractError("clique_scan: compatibility table size mismatch");
  std::vector<IndexSet> later(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    compatible[i].for_each([&](int j) {
      if (j > i && compatible[j].contains(i)) later[i].insert(j);
    });

  std::vector<IndexSet> out;
  if (keep(IndexSet{})) out.emplace_back();
  // One top-level branch per smallest element.
  auto rest = bucketed(
      static_cast<std::size_t>(n),
      [&](std::size_t k, std::vector<IndexSet>& local) {
        const int i = static_cast<int>(k);
        extend_cliques(later, IndexSet{i}, later[i], keep, local);
      },
      exec);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<IndexSet> subset_scan(int n, const std::function<bool(const IndexSet&)>& keep, Exec exec) {
  if (n < 0 || n > 30) throw ContractError("subset_scan: at most 30 elements");
  const std::size_t total = std::size_t{1} << n;
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (total + kChunk - 1) / kChunk;
  return bucketed(
      chunks,
      [&](std::size_t c, std::vector<IndexSet>& local) {
        const std::size_t end = std::min(total, (c + 1) * kChunk);
        for (std::size_t mask = c * kChunk; mask < end; ++mask) {
          IndexSet s;
          for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) s.insert(i);
          if (keep(s)) local.push_back(s);
        }
      },
      exec);
}

std::vector<IndexSet> filter_sets(const std::vector<IndexSet>& items, const std::function<bool(const IndexSet&)>& keep,
                                  Exec exec) {
  const auto flags = index_map<char>(
      items.size(), [&](std::size_t k) { return static_cast<char>(keep(items[k]) ? 1 : 0); }, exec);
  std::vector<IndexSet> out;
  for (std::size_t k = 0; k < items.size(); ++k)
    if (flags[k]) out.push_back(items[k]);
  return out;
}

std::vector<IndexSet> map_sets(const std::vector<IndexSet>& items, const std::function<IndexSet(const IndexSet&)>& fn,
                               Exec exec) {
  return index_map<IndexSet>(items.size(), [&](std::size_t k) { return fn(items[k]); }, exec);
}

}  // namespace tiltlab
