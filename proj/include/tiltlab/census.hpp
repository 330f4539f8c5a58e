#pragma once

// Every indecomposable of a Dynkin quiver over F_p, one per positive root,
// built with reflection functors, plus the pairwise Hom/Ext tables and
// Krull-Schmidt decomposition against them.

#include <cstddef>
#include <optional>
#include <vector>

#include "tiltlab/indexset.hpp"
#include "tiltlab/repcore.hpp"
#include "tiltlab/scan.hpp"

namespace tiltlab {

// sigma+ at a sink v: the result lives on q.reflected_at(v) and replaces M_v by
// the kernel of the summed map into M_v. Throws ContractError if v is not a
// sink or the summed map is not onto (M has a summand S_v).
Representation reflect_at_sink(const Representation& m, int v);
// sigma- at a source v, dually through the cokernel of the stacked map out of M_v.
Representation reflect_at_source(const Representation& m, int v);

// The indecomposable with dimension vector `root`. Throws InputError
// ("bad-root") if root is not a positive root of q.
Representation build_indec(const Quiver& q, Scalar p, const DimVector& root);

bool is_brick(const Representation& m);

using Table = std::vector<std::vector<int>>;

class Census {
 public:
  // The parallel path only affects how the pair tables are filled.
  static Census build(const Quiver& q, Scalar p, Exec exec = Exec::serial);

  const Quiver& quiver() const noexcept { return quiver_; }
  Scalar modulus() const noexcept { return p_; }
  int size() const noexcept { return static_cast<int>(indecs_.size()); }

  const std::vector<Representation>& indecs() const noexcept { return indecs_; }
  const Representation& indec(int i) const { return indecs_.at(static_cast<std::size_t>(i)); }
  const DimVector& root(int i) const { return indec(i).dims(); }

  const Table& hom_table() const noexcept { return hom_; }
  const Table& ext_table() const noexcept { return ext_; }
  int hom(int i, int j) const { return hom_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
  int ext(int i, int j) const { return ext_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
  // Cached basis of Hom(X_i, X_j) as per-vertex components.
  const std::vector<Components>& hom_basis(int i, int j) const;

  std::optional<int> index_of(const DimVector& root) const;
  // Census positions in an order where Hom(X_a, X_b) != 0 forces a before b.
  const std::vector<int>& hom_order() const noexcept { return order_; }

  // Multiplicity of each census object as a summand of m.
  // Throws InternalError when the Hom-count system has no valid solution.
  std::vector<int> decompose(const Representation& m) const;
  IndexSet summands(const Representation& m) const;
  // Census index of m if m is indecomposable, otherwise nullopt.
  std::optional<int> indecomposable_index(const Representation& m) const;

  // Direct sum of the given members (each once).
  Representation sum_of(const IndexSet& members) const;

 private:
  Quiver quiver_;
  Scalar p_ = 2;
  std::vector<Representation> indecs_;
  Table hom_, ext_;
  std::vector<std::vector<Components>> hom_bases_;  // row-major n x n
  std::vector<int> order_;
};

}  // namespace tiltlab
