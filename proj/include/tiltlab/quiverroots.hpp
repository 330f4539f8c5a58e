#pragma once

// Finite acyclic quivers, the Euler form, simply-laced Dynkin recognition,
// positive roots and antichains of the root poset.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tiltlab/indexset.hpp"

namespace tiltlab {

// Vertices are 0-based internally; the JSON boundary uses 1-based numbers.
struct Arrow {
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  // Throws ContractError for out-of-range endpoints; acyclicity is checked by validate().
  Quiver(int vertices, std::vector<Arrow> arrows);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  bool is_sink(int v) const;
  bool is_source(int v) const;
  // Arrow indices ending / starting at v, in arrow-list order.
  std::vector<std::size_t> arrows_into(int v) const;
  std::vector<std::size_t> arrows_out_of(int v) const;

  // Same arrow order, every arrow reversed.
  Quiver opposite() const;
  // Arrows incident to v reversed, order preserved.
  Quiver reflected_at(int v) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

using DimVector = std::vector<int>;

enum class DynkinFamily { A, D, E };

struct DynkinComponent {
  DynkinFamily family = DynkinFamily::A;
  int rank = 0;
  std::vector<int> vertices;  // 0-based, ascending
  int max_root_coefficient = 1;
  std::string name() const;
};

// Outcome of validate(). On rejection `error` is one of
// "loop", "cycle", "multiple-edge", "non-dynkin" and `witness` holds
// 1-based vertex numbers pointing at the offending structure.
struct Diagnostic {
  bool ok = false;
  std::string error;
  std::string message;
  std::vector<int> witness;
  std::vector<DynkinComponent> components;
};

Diagnostic validate(const Quiver& q);
// Throws InputError carrying the diagnostic when validate() rejects.
std::vector<DynkinComponent> require_dynkin(const Quiver& q);

// <d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j
int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

int total_dimension(const DimVector& d);
// Canonical census order: total dimension, then lexicographic.
bool canonical_less(const DimVector& a, const DimVector& b);

// All d >= 0 with <d, d> = 1, in canonical order.
std::vector<DimVector> positive_roots(const Quiver& q);

// Dimension vector of s_v(d) for the reflection at v of the underlying graph.
DimVector simple_reflection(const Quiver& q, int v, const DimVector& d);

class RootPoset {
 public:
  explicit RootPoset(std::vector<DimVector> roots);

  std::size_t size() const noexcept { return roots_.size(); }
  const std::vector<DimVector>& roots() const noexcept { return roots_; }
  // alpha <= beta iff beta - alpha is componentwise nonnegative.
  bool leq(std::size_t a, std::size_t b) const;
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

 private:
  std::vector<DimVector> roots_;
  std::vector<IndexSet> incomparable_;  // per root, strictly later incomparable roots

  friend std::size_t root_poset_antichain_count(const RootPoset&);
  friend std::vector<IndexSet> root_poset_antichains(const RootPoset&);
};

std::size_t root_poset_antichain_count(const RootPoset& rp);
std::vector<IndexSet> root_poset_antichains(const RootPoset& rp);

// Built-in families: "A3", "D4", "E6", with an optional orientation suffix
// "A3:><" (one character per edge, '>' for lower-to-higher numbered vertex).
// Edge order: the path 1-2-...; D_n adds (n-2, n); E_n adds (3, n).
Quiver family_quiver(std::string_view tag);
std::vector<std::string> family_orientations(std::string_view family_and_rank);
// Number of edges of the built-in diagram, for orientation sweeps.
int family_edge_count(DynkinFamily family, int rank);

}  // namespace tiltlab
