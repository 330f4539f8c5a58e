#pragma once

// Data-parallel sweeps used by the census, the enumerations and the oracle.
//
// Each kernel has a serial reference path and an OpenMP path. Both produce
// results in the same deterministic order, so callers and tests may compare
// them element for element.

#include <cstddef>
#include <functional>
#include <vector>

#include "tiltlab/indexset.hpp"

namespace tiltlab {

enum class Exec { serial, parallel };

const char* exec_name(Exec e);
int parallel_workers();

// All subsets of {0..n-1} in which every pair {i, j} satisfies
// compatible[i].contains(j), passing `keep`. Emitted in depth-first order
// with increasing elements (empty set first). The pruning is sound only for
// pairwise conditions; `keep` carries the rest.
std::vector<IndexSet> clique_scan(int n, const std::vector<IndexSet>& compatible,
                                  const std::function<bool(const IndexSet&)>& keep, Exec exec);

// All subsets of {0..n-1} (by increasing bitmask) passing `keep`; n <= 30.
std::vector<IndexSet> subset_scan(int n, const std::function<bool(const IndexSet&)>& keep, Exec exec);

// out[k] = fn(k) for k in [0, count).
template <typename T>
std::vector<T> index_map(std::size_t count, const std::function<T(std::size_t)>& fn, Exec exec);

// Filters `items` by `keep`, preserving order.
std::vector<IndexSet> filter_sets(const std::vector<IndexSet>& items, const std::function<bool(const IndexSet&)>& keep,
                                  Exec exec);

// Maps every item through fn, preserving order.
std::vector<IndexSet> map_sets(const std::vector<IndexSet>& items, const std::function<IndexSet(const IndexSet&)>& fn,
                               Exec exec);

}  // namespace tiltlab

#include "tiltlab/scan_impl.hpp"
