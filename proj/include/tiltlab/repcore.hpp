#pragma once

// Representations of a quiver over F_p and the homological toolkit on them.
//
// Conventions: a representation assigns F_p^{d_i} to vertex i and to each
// arrow a: i -> j a d_j x d_i matrix acting on column vectors. A morphism
// f: M -> W is a family f_i of W.dims[i] x M.dims[i] matrices with
// W_a f_i = f_j M_a for every arrow.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "tiltlab/exactfield.hpp"
#include "tiltlab/quiverroots.hpp"

namespace tiltlab {

// Per-vertex matrices of a morphism, or per-arrow matrices of a cocycle.
using Components = std::vector<Mat>;

class Representation {
 public:
  Representation() = default;
  Representation(Quiver quiver, Scalar p, DimVector dims, std::vector<Mat> mats);

  static Representation zero(const Quiver& q, Scalar p);
  static Representation simple(const Quiver& q, Scalar p, int vertex);

  const Quiver& quiver() const noexcept { return quiver_; }
  Scalar modulus() const noexcept { return p_; }
  const DimVector& dims() const noexcept { return dims_; }
  int dim(int vertex) const { return dims_.at(static_cast<std::size_t>(vertex)); }
  const std::vector<Mat>& mats() const noexcept { return mats_; }
  const Mat& mat(std::size_t arrow) const { return mats_.at(arrow); }
  int total_dim() const { return total_dimension(dims_); }
  bool is_zero() const { return total_dim() == 0; }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Quiver quiver_;
  Scalar p_ = 2;
  DimVector dims_;
  std::vector<Mat> mats_;
};

Representation direct_sum(std::span<const Representation> parts, const Quiver& q, Scalar p);
Representation direct_sum(const Representation& a, const Representation& b);

struct Morphism {
  std::shared_ptr<const Representation> source;
  std::shared_ptr<const Representation> target;
  Components comps;

  Morphism() = default;
  Morphism(Representation src, Representation tgt, Components c);
  Morphism(std::shared_ptr<const Representation> src, std::shared_ptr<const Representation> tgt, Components c);

  bool commutes() const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
};

struct ShortExactSeq {
  Representation left, middle, right;
  Morphism inj;   // left -> middle
  Morphism surj;  // middle -> right
  // Exactness at every vertex plus commuting squares.
  bool is_exact() const;
};

// Derived objects with their structure map: kernel -> source, target -> cokernel,
// image -> target.
struct MappedObject {
  Representation object;
  Morphism map;
};

void require_same_category(const Representation& m, const Representation& w);

// The constraint map delta: sum_i Hom(M_i, W_i) -> sum_{a: i->j} Hom(M_i, W_j),
// f |-> W_a f_i - f_j M_a, with row-major vectorisation of each block.
Mat hom_constraint_matrix(const Representation& m, const Representation& w);

std::vector<Morphism> hom_basis(const Representation& m, const Representation& w);
// Bare per-vertex components of a Hom basis (no shared source/target).
std::vector<Components> hom_basis_components(const Representation& m, const Representation& w);
std::size_t hom_dim(const Representation& m, const Representation& w);

// dim Ext(M, W) as hom - <dim M, dim W>.
std::size_t ext_dim(const Representation& m, const Representation& w);
// dim Ext(M, W) as dim coker(delta), the independent route.
std::size_t ext_dim_by_cokernel(const Representation& m, const Representation& w);
// Per-arrow cocycles phi_a: M_i -> W_j whose classes form a basis of Ext(M, W).
std::vector<Components> ext_cocycle_basis(const Representation& m, const Representation& w);

MappedObject kernel(const Morphism& f);
MappedObject cokernel(const Morphism& f);
MappedObject image(const Morphism& f);

// Quotient of w by a family of subspaces (column bases) stable under the arrows.
MappedObject quotient(const Representation& w, const std::vector<Mat>& subspaces);

// Middle term E of 0 -> W -> E -> M -> 0 with E_i = W_i + M_i and
// E_a = [[W_a, phi_a], [0, M_a]].
Representation ext_cocycle_middle(const Representation& m, const Representation& w, const Components& cocycle);
ShortExactSeq extension(const Representation& m, const Representation& w, const Components& cocycle);

// Representation of the opposite quiver with transposed arrow matrices.
Representation dual(const Representation& m);

inline constexpr int kDefaultSubRepBound = 8;
// Every subrepresentation, identified by its tuple of vertex subspaces.
std::vector<MappedObject> sub_reps(const Representation& m, int max_total_dim = kDefaultSubRepBound);

// All subspaces of F_p^n as column-basis matrices (rref canonical forms).
std::vector<Mat> all_subspaces(std::size_t n, Scalar p);

// Linear combination sum_k coeffs[k] * basis[k], componentwise.
Components combine(const std::vector<Components>& basis, std::span<const Scalar> coeffs, const Components& zero);

// Calls fn(coeffs) for all p^h coefficient vectors (including zero).
// Stops early when fn returns true; returns whether it did.
template <typename F>
bool for_each_coefficients(std::size_t h, Scalar p, F&& fn) {
  std::vector<Scalar> coeffs(h, 0);
  while (true) {
    if (fn(std::span<const Scalar>(coeffs))) return true;
    std::size_t pos = 0;
    while (pos < h && coeffs[pos] == p - 1) coeffs[pos++] = 0;
    if (pos == h) return false;
    ++coeffs[pos];
  }
}

}  // namespace tiltlab
