#include "tiltlab/repcore.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

std::size_t udim(const Representation& r, int v) { return static_cast<std::size_t>(r.dim(v)); }

}  // namespace

Representation::Representation(Quiver quiver, Scalar p, DimVector dims, std::vector<Mat> mats)
    : quiver_(std::move(quiver)), p_(p), dims_(std::move(dims)), mats_(std::move(mats)) {
  if (dims_.size() != static_cast<std::size_t>(quiver_.vertex_count()))
    throw ContractError("representation: dimension vector length mismatch");
  if (std::any_of(dims_.begin(), dims_.end(), [](int d) { return d < 0; }))
    throw ContractError("representation: negative dimension");
  if (mats_.size() != quiver_.arrow_count()) throw ContractError("representation: one matrix per arrow required");
  for (std::size_t a = 0; a < mats_.size(); ++a) {
    const auto& arrow = quiver_.arrows()[a];
    if (mats_[a].rows() != udim(*this, arrow.target) || mats_[a].cols() != udim(*this, arrow.source) ||
        mats_[a].modulus() != p_)
      throw ContractError("representation: arrow matrix shape mismatch");
  }
}

Representation Representation::zero(const Quiver& q, Scalar p) {
  std::vector<Mat> mats(q.arrow_count(), Mat(0, 0, p));
  return Representation(q, p, DimVector(static_cast<std::size_t>(q.vertex_count()), 0), std::move(mats));
}

Representation Representation::simple(const Quiver& q, Scalar p, int vertex) {
  DimVector d(static_cast<std::size_t>(q.vertex_count()), 0);
  d.at(static_cast<std::size_t>(vertex)) = 1;
  std::vector<Mat> mats;
  for (const auto& a : q.arrows())
    mats.emplace_back(static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]), p);
  return Representation(q, p, std::move(d), std::move(mats));
}

Representation direct_sum(std::span<const Representation> parts, const Quiver& q, Scalar p) {
  DimVector d(static_cast<std::size_t>(q.vertex_count()), 0);
  for (const auto& r : parts) {
    if (!(r.quiver() == q) || r.modulus() != p) throw ContractError("direct_sum: mixed quivers or fields");
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += r.dims()[v];
  }
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::vector<Mat> blocks;
    for (const auto& r : parts) blocks.push_back(r.mat(a));
    mats.push_back(block_diagonal(blocks, p));
  }
  return Representation(q, p, std::move(d), std::move(mats));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  const std::array<Representation, 2> parts{a, b};
  return direct_sum(parts, a.quiver(), a.modulus());
}

Morphism::Morphism(Representation src, Representation tgt, Components c)
    : Morphism(std::make_shared<const Representation>(std::move(src)),
               std::make_shared<const Representation>(std::move(tgt)), std::move(c)) {}

Morphism::Morphism(std::shared_ptr<const Representation> src, std::shared_ptr<const Representation> tgt, Components c)
    : source(std::move(src)), target(std::move(tgt)), comps(std::move(c)) {
  require_same_category(*source, *target);
  if (comps.size() != static_cast<std::size_t>(source->quiver().vertex_count()))
    throw ContractError("morphism: one component per vertex required");
  for (int v = 0; v < source->quiver().vertex_count(); ++v) {
    const auto& f = comps[static_cast<std::size_t>(v)];
    if (f.rows() != udim(*target, v) || f.cols() != udim(*source, v))
      throw ContractError("morphism: component shape mismatch");
  }
}

bool Morphism::commutes() const {
  const auto& q = source->quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    if (!(target->mat(a) * comps[arrow.source] == comps[arrow.target] * source->mat(a))) return false;
  }
  return true;
}

bool Morphism::is_zero() const {
  return std::all_of(comps.begin(), comps.end(), [](const Mat& m) { return m.is_zero(); });
}

bool Morphism::is_injective() const {
  for (std::size_t v = 0; v < comps.size(); ++v)
    if (rank(comps[v]) != comps[v].cols()) return false;
  return true;
}

bool Morphism::is_surjective() const {
  for (std::size_t v = 0; v < comps.size(); ++v)
    if (rank(comps[v]) != comps[v].rows()) return false;
  return true;
}

bool ShortExactSeq::is_exact() const {
  if (!inj.commutes() || !surj.commutes()) return false;
  if (!inj.is_injective() || !surj.is_surjective()) return false;
  for (std::size_t v = 0; v < inj.comps.size(); ++v) {
    if (!(surj.comps[v] * inj.comps[v]).is_zero()) return false;
    if (middle.dims()[v] != left.dims()[v] + right.dims()[v]) return false;
  }
  return true;
}

void require_same_category(const Representation& m, const Representation& w) {
  if (!(m.quiver() == w.quiver())) throw ContractError("representations over different quivers");
  if (m.modulus() != w.modulus()) throw ContractError("representations over different fields");
}

Mat hom_constraint_matrix(const Representation& m, const Representation& w) {
  require_same_category(m, w);
  const auto& q = m.quiver();
  const int n = q.vertex_count();

  std::vector<std::size_t> col_offset(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) col_offset[v + 1] = col_offset[v] + udim(w, v) * udim(m, v);
  std::vector<std::size_t> row_offset(q.arrow_count() + 1, 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    row_offset[a + 1] = row_offset[a] + udim(w, ar.target) * udim(m, ar.source);
  }

  const PrimeField field(m.modulus());
  Mat delta(row_offset.back(), col_offset.back(), m.modulus());
  std::vector<Scalar> entries(delta.rows() * delta.cols(), 0);
  auto acc = [&](std::size_t r, std::size_t c, Scalar x) {
    auto& e = entries[r * delta.cols() + c];
    e = field.add(e, x);
  };
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    const std::size_t i = static_cast<std::size_t>(ar.source), j = static_cast<std::size_t>(ar.target);
    const std::size_t mi = udim(m, ar.source), mj = udim(m, ar.target);
    const std::size_t wi = udim(w, ar.source), wj = udim(w, ar.target);
    const auto& wa = w.mat(a);
    const auto& ma = m.mat(a);
    // Row (r, c) of block a: (W_a f_i)[r][c] - (f_j M_a)[r][c].
    for (std::size_t r = 0; r < wj; ++r)
      for (std::size_t c = 0; c < mi; ++c) {
        const std::size_t row = row_offset[a] + r * mi + c;
        for (std::size_t k = 0; k < wi; ++k)
          if (wa(r, k) != 0) acc(row, col_offset[i] + k * mi + c, wa(r, k));
        for (std::size_t k = 0; k < mj; ++k)
          if (ma(k, c) != 0) acc(row, col_offset[j] + r * mj + k, field.neg(ma(k, c)));
      }
  }
  return Mat::from_reduced(delta.rows(), delta.cols(), m.modulus(), std::move(entries));
}

std::vector<Components> hom_basis_components(const Representation& m, const Representation& w) {
  const auto ker = kernel_basis(hom_constraint_matrix(m, w));
  const int n = m.quiver().vertex_count();
  std::vector<Components> out;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    Components comps;
    std::size_t offset = 0;
    for (int v = 0; v < n; ++v) {
      const std::size_t rows = udim(w, v), cols = udim(m, v);
      std::vector<Scalar> data(rows * cols);
      for (std::size_t e = 0; e < rows * cols; ++e) data[e] = ker(offset + e, k);
      comps.push_back(Mat::from_reduced(rows, cols, m.modulus(), std::move(data)));
      offset += rows * cols;
    }
    out.push_back(std::move(comps));
  }
  return out;
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& w) {
  auto src = std::make_shared<const Representation>(m);
  auto tgt = std::make_shared<const Representation>(w);
  std::vector<Morphism> out;
  for (auto& comps : hom_basis_components(m, w)) out.emplace_back(src, tgt, std::move(comps));
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& w) {
  const auto delta = hom_constraint_matrix(m, w);
  return delta.cols() - rank(delta);
}

std::size_t ext_dim(const Representation& m, const Representation& w) {
  const auto h = static_cast<long long>(hom_dim(m, w));
  const auto e = h - euler_form(m.quiver(), m.dims(), w.dims());
  if (e < 0) throw InternalError("negative Ext dimension: hom below the Euler form");
  return static_cast<std::size_t>(e);
}

std::size_t ext_dim_by_cokernel(const Representation& m, const Representation& w) {
  const auto delta = hom_constraint_matrix(m, w);
  return delta.rows() - rank(delta);
}

std::vector<Components> ext_cocycle_basis(const Representation& m, const Representation& w) {
  const auto delta = hom_constraint_matrix(m, w);
  const auto& q = m.quiver();
  std::vector<std::size_t> row_offset(q.arrow_count() + 1, 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    row_offset[a + 1] = row_offset[a] + udim(w, ar.target) * udim(m, ar.source);
  }
  std::vector<Components> out;
  for (const auto r : column_space_complement(delta)) {
    Components phi;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& ar = q.arrows()[a];
      const std::size_t rows = udim(w, ar.target), cols = udim(m, ar.source);
      Mat block(rows, cols, m.modulus());
      if (r >= row_offset[a] && r < row_offset[a + 1]) {
        const auto local = r - row_offset[a];
        block.set(local / cols, local % cols, 1);
      }
      phi.push_back(std::move(block));
    }
    out.push_back(std::move(phi));
  }
  return out;
}

MappedObject kernel(const Morphism& f) {
  const auto& src = *f.source;
  const auto& q = src.quiver();
  const Scalar p = src.modulus();
  std::vector<Mat> bases;
  DimVector dims;
  for (int v = 0; v < q.vertex_count(); ++v) {
    bases.push_back(kernel_basis(f.comps[v]));
    dims.push_back(static_cast<int>(bases.back().cols()));
  }
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    auto x = solve(bases[ar.target], src.mat(a) * bases[ar.source]);
    if (!x) throw InternalError("kernel not stable under an arrow");
    mats.push_back(std::move(*x));
  }
  Representation k(q, p, dims, std::move(mats));
  auto ks = std::make_shared<const Representation>(k);
  return {std::move(k), Morphism(std::move(ks), f.source, std::move(bases))};
}

MappedObject image(const Morphism& f) {
  const auto& tgt = *f.target;
  const auto& q = tgt.quiver();
  const Scalar p = tgt.modulus();
  std::vector<Mat> bases;
  DimVector dims;
  for (int v = 0; v < q.vertex_count(); ++v) {
    bases.push_back(column_space_basis(f.comps[v]));
    dims.push_back(static_cast<int>(bases.back().cols()));
  }
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    auto x = solve(bases[ar.target], tgt.mat(a) * bases[ar.source]);
    if (!x) throw InternalError("image not stable under an arrow");
    mats.push_back(std::move(*x));
  }
  Representation im(q, p, dims, std::move(mats));
  auto is = std::make_shared<const Representation>(im);
  return {std::move(im), Morphism(std::move(is), f.target, std::move(bases))};
}

MappedObject quotient(const Representation& w, const std::vector<Mat>& subspaces) {
  const auto& q = w.quiver();
  const Scalar p = w.modulus();
  if (subspaces.size() != static_cast<std::size_t>(q.vertex_count())) throw ContractError("quotient: one subspace per vertex");
  std::vector<Mat> proj;
  DimVector dims;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (subspaces[v].rows() != udim(w, v)) throw ContractError("quotient: subspace ambient dimension mismatch");
    proj.push_back(left_kernel_basis(subspaces[v]));
    if (proj.back().rows() == 0) proj.back() = Mat(0, udim(w, v), p);
    dims.push_back(static_cast<int>(proj.back().rows()));
  }
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    // X Q_i = Q_j W_a; transpose to a left-solve.
    auto xt = solve(proj[ar.source].transposed(), (proj[ar.target] * w.mat(a)).transposed());
    if (!xt) throw InternalError("quotient: subspaces not stable under an arrow");
    mats.push_back(xt->transposed());
  }
  Representation c(q, p, dims, std::move(mats));
  auto cs = std::make_shared<const Representation>(c);
  return {std::move(c), Morphism(std::make_shared<const Representation>(w), std::move(cs), std::move(proj))};
}

MappedObject cokernel(const Morphism& f) {
  std::vector<Mat> images;
  for (const auto& c : f.comps) images.push_back(c);
  auto out = quotient(*f.target, images);
  out.map.source = f.target;
  return out;
}

Representation ext_cocycle_middle(const Representation& m, const Representation& w, const Components& cocycle) {
  require_same_category(m, w);
  const auto& q = m.quiver();
  const Scalar p = m.modulus();
  if (cocycle.size() != q.arrow_count()) throw ContractError("cocycle: one matrix per arrow required");
  DimVector dims;
  for (int v = 0; v < q.vertex_count(); ++v) dims.push_back(w.dim(v) + m.dim(v));
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    const auto& phi = cocycle[a];
    if (phi.rows() != udim(w, ar.target) || phi.cols() != udim(m, ar.source) || phi.modulus() != p)
      throw ContractError("cocycle: block shape mismatch");
    Mat e(static_cast<std::size_t>(dims[ar.target]), static_cast<std::size_t>(dims[ar.source]), p);
    const std::size_t wi = udim(w, ar.source), wj = udim(w, ar.target);
    std::vector<Scalar> data(e.rows() * e.cols(), 0);
    auto put = [&](std::size_t r0, std::size_t c0, const Mat& blk) {
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c) data[(r0 + r) * e.cols() + c0 + c] = blk(r, c);
    };
    put(0, 0, w.mat(a));
    put(0, wi, phi);
    put(wj, wi, m.mat(a));
    mats.push_back(Mat::from_reduced(e.rows(), e.cols(), p, std::move(data)));
  }
  return Representation(q, p, std::move(dims), std::move(mats));
}

ShortExactSeq extension(const Representation& m, const Representation& w, const Components& cocycle) {
  auto middle = ext_cocycle_middle(m, w, cocycle);
  const auto& q = m.quiver();
  const Scalar p = m.modulus();
  Components inj, surj;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const std::size_t wv = udim(w, v), mv = udim(m, v);
    Mat i(wv + mv, wv, p), s(mv, wv + mv, p);
    for (std::size_t k = 0; k < wv; ++k) i.set(k, k, 1);
    for (std::size_t k = 0; k < mv; ++k) s.set(k, wv + k, 1);
    inj.push_back(std::move(i));
    surj.push_back(std::move(s));
  }
  Morphism in(w, middle, std::move(inj));
  Morphism out(middle, m, std::move(surj));
  return {w, std::move(middle), m, std::move(in), std::move(out)};
}

Representation dual(const Representation& m) {
  std::vector<Mat> mats;
  for (const auto& a : m.mats()) mats.push_back(a.transposed());
  return Representation(m.quiver().opposite(), m.modulus(), m.dims(), std::move(mats));
}

std::vector<Mat> all_subspaces(std::size_t n, Scalar p) {
  std::vector<Mat> out;
  // Enumerate reduced row echelon forms k x n by pivot set and free entries,
  // returned as column bases (n x k).
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < n; ++c)
      if ((mask >> c) & 1u) pivots.push_back(c);
    const std::size_t k = pivots.size();
    // Free slots: row r, column c > pivots[r] with c not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (!((mask >> c) & 1u)) free.emplace_back(r, c);
    for_each_coefficients(free.size(), p, [&](std::span<const Scalar> vals) {
      Mat basis(n, k, p);
      for (std::size_t r = 0; r < k; ++r) basis.set(pivots[r], r, 1);
      for (std::size_t f = 0; f < free.size(); ++f) basis.set(free[f].second, free[f].first, vals[f]);
      out.push_back(std::move(basis));
      return false;
    });
  }
  return out;
}

std::vector<MappedObject> sub_reps(const Representation& m, int max_total_dim) {
  if (m.total_dim() > max_total_dim)
    throw ContractError("sub_reps: total dimension " + std::to_string(m.total_dim()) + " exceeds bound " +
                        std::to_string(max_total_dim));
  const auto& q = m.quiver();
  const int n = q.vertex_count();
  const Scalar p = m.modulus();
  std::vector<std::vector<Mat>> choices;
  for (int v = 0; v < n; ++v) choices.push_back(all_subspaces(udim(m, v), p));

  auto src = std::make_shared<const Representation>(m);
  std::vector<MappedObject> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    bool stable = true;
    for (std::size_t a = 0; a < q.arrow_count() && stable; ++a) {
      const auto& ar = q.arrows()[a];
      const auto& bi = choices[ar.source][pick[ar.source]];
      const auto& bj = choices[ar.target][pick[ar.target]];
      stable = solve(bj, m.mat(a) * bi).has_value();
    }
    if (stable) {
      std::vector<Mat> bases;
      DimVector dims;
      for (int v = 0; v < n; ++v) {
        bases.push_back(choices[v][pick[v]]);
        dims.push_back(static_cast<int>(bases.back().cols()));
      }
      std::vector<Mat> mats;
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const auto& ar = q.arrows()[a];
        mats.push_back(*solve(bases[ar.target], m.mat(a) * bases[ar.source]));
      }
      Representation sub(q, p, dims, std::move(mats));
      auto ss = std::make_shared<const Representation>(sub);
      out.push_back({std::move(sub), Morphism(std::move(ss), src, std::move(bases))});
    }
    int v = 0;
    while (v < n && pick[v] + 1 == choices[v].size()) pick[v++] = 0;
    if (v == n) break;
    ++pick[v];
  }
  return out;
}

Components combine(const std::vector<Components>& basis, std::span<const Scalar> coeffs, const Components& zero) {
  Components out = zero;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = out[v] + scaled(basis[k][v], coeffs[k]);
  }
  return out;
}

}  // namespace tiltlab
