#include "tiltlab/oracle.hpp"

#include <algorithm>
#include <string>

#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

std::size_t as_index(int i) { return static_cast<std::size_t>(i); }

Representation power(const Representation& x, int a) {
  const std::vector<Representation> copies(as_index(a), x);
  return direct_sum(copies, x.quiver(), x.modulus());
}

// Hom(X^a, Y^b) spanned by placing a basis element of Hom(X, Y) in one block.
std::vector<Components> block_basis(const Census& c, int x, int y, int a, int b) {
  const auto& xr = c.indec(x);
  const auto& yr = c.indec(y);
  std::vector<Components> out;
  for (const auto& f : c.hom_basis(x, y))
    for (int r = 0; r < b; ++r)
      for (int s = 0; s < a; ++s) {
        Components g;
        for (int v = 0; v < c.quiver().vertex_count(); ++v) {
          const auto dx = as_index(xr.dim(v)), dy = as_index(yr.dim(v));
          Mat m(dy * as_index(b), dx * as_index(a), c.modulus());
          const auto& fv = f[as_index(v)];
          for (std::size_t i = 0; i < dy; ++i)
            for (std::size_t j = 0; j < dx; ++j) m.set(as_index(r) * dy + i, as_index(s) * dx + j, fv(i, j));
          g.push_back(std::move(m));
        }
        out.push_back(std::move(g));
      }
  return out;
}

IndexSet morphism_summands(const Census& c, int x, int y, int max_mult) {
  IndexSet out;
  for (int a = 1; a <= max_mult; ++a)
    for (int b = 1; b <= max_mult; ++b) {
      const auto src = power(c.indec(x), a);
      const auto tgt = power(c.indec(y), b);
      const auto basis = block_basis(c, x, y, a, b);
      Components zero;
      for (int v = 0; v < c.quiver().vertex_count(); ++v)
        zero.emplace_back(as_index(tgt.dim(v)), as_index(src.dim(v)), c.modulus());
      for_each_coefficients(basis.size(), c.modulus(), [&](std::span<const Scalar> coeffs) {
        const Morphism f(src, tgt, combine(basis, coeffs, zero));
        out = out | c.summands(kernel(f).object) | c.summands(image(f).object) | c.summands(cokernel(f).object);
        return false;
      });
    }
  return out;
}

IndexSet extension_summands(const Census& c, int x, int y) {
  const auto& xr = c.indec(x);
  const auto& yr = c.indec(y);
  const auto basis = ext_cocycle_basis(xr, yr);
  Components zero;
  for (const auto& ar : c.quiver().arrows())
    zero.emplace_back(as_index(yr.dim(ar.target)), as_index(xr.dim(ar.source)), c.modulus());
  IndexSet out;
  for_each_coefficients(basis.size(), c.modulus(), [&](std::span<const Scalar> coeffs) {
    out = out | c.summands(ext_cocycle_middle(xr, yr, combine(basis, coeffs, zero)));
    return false;
  });
  return out;
}

}  // namespace

ClosureTables closure_tables(const Census& c, const ClosureSpec& spec, Exec exec) {
  if (c.size() > spec.max_indecs)
    throw InputError("oracle-bound", "census has " + std::to_string(c.size()) + " indecomposables, oracle limit is " +
                                         std::to_string(spec.max_indecs));
  for (const auto& x : c.indecs())
    if (x.total_dim() > spec.dim_bound)
      throw InputError("oracle-bound", "census object of total dimension " + std::to_string(x.total_dim()) +
                                           " exceeds the subrepresentation bound " + std::to_string(spec.dim_bound));

  const auto n = as_index(c.size());
  ClosureTables t;
  if (spec.kind != ClosureKind::thick) {
    const bool quotients = spec.kind == ClosureKind::torsion;
    auto per_object = index_map<IndexSet>(
        n,
        [&](std::size_t x) {
          IndexSet s;
          for (const auto& u : sub_reps(c.indec(static_cast<int>(x)), spec.dim_bound))
            s = s | c.summands(quotients ? cokernel(u.map).object : u.object);
          return s;
        },
        exec);
    (quotients ? t.quotients : t.subobjects) = std::move(per_object);
  }

  auto pairs = index_map<IndexSet>(
      n * n,
      [&](std::size_t k) {
        const int x = static_cast<int>(k / n), y = static_cast<int>(k % n);
        return c.ext(x, y) == 0 ? IndexSet{} : extension_summands(c, x, y);
      },
      exec);
  t.extensions.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) t.extensions[x].assign(pairs.begin() + static_cast<long>(x * n),
                                                             pairs.begin() + static_cast<long>((x + 1) * n));

  if (spec.kind == ClosureKind::thick) {
    auto morph = index_map<IndexSet>(
        n * n,
        [&](std::size_t k) {
          const int x = static_cast<int>(k / n), y = static_cast<int>(k % n);
          return morphism_summands(c, x, y, spec.max_multiplicity);
        },
        exec);
    t.morphisms.assign(n, {});
    for (std::size_t x = 0; x < n; ++x)
      t.morphisms[x].assign(morph.begin() + static_cast<long>(x * n), morph.begin() + static_cast<long>((x + 1) * n));
  }
  return t;
}

bool is_closed(const ClosureTables& t, ClosureKind kind, const IndexSet& s) {
  const auto members = s.members();
  for (int x : members) {
    if (kind == ClosureKind::torsion && !t.quotients[as_index(x)].is_subset_of(s)) return false;
    if (kind == ClosureKind::torsionfree && !t.subobjects[as_index(x)].is_subset_of(s)) return false;
    for (int y : members) {
      if (!t.extensions[as_index(x)][as_index(y)].is_subset_of(s)) return false;
      if (kind == ClosureKind::thick && !t.morphisms[as_index(x)][as_index(y)].is_subset_of(s)) return false;
    }
  }
  return true;
}

std::vector<IndexSet> all_closed_classes(const Census& c, const ClosureSpec& spec, Exec exec) {
  const auto t = closure_tables(c, spec, exec);
  auto out = subset_scan(c.size(), [&](const IndexSet& s) { return is_closed(t, spec.kind, s); }, exec);
  std::sort(out.begin(), out.end(), presentation_less);
  return out;
}

std::vector<IndexSet> all_torsion_classes(const Census& c, Exec exec) {
  return all_closed_classes(c, {ClosureKind::torsion}, exec);
}

std::vector<IndexSet> all_torsionfree_classes(const Census& c, Exec exec) {
  return all_closed_classes(c, {ClosureKind::torsionfree}, exec);
}

std::vector<IndexSet> all_thick_subcategories(const Census& c, Exec exec) {
  return all_closed_classes(c, {ClosureKind::thick}, exec);
}

}  // namespace tiltlab
