#include "tiltlab/bijectlab.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

std::size_t as_index(int i) { return static_cast<std::size_t>(i); }

std::vector<int> members_of(const ModuleClass& mc) { return mc.members(); }

Components zero_components(const Representation& src, const Representation& tgt) {
  Components z;
  for (int v = 0; v < src.quiver().vertex_count(); ++v)
    z.emplace_back(static_cast<std::size_t>(tgt.dim(v)), static_cast<std::size_t>(src.dim(v)), src.modulus());
  return z;
}

bool components_injective(const Components& f) {
  return std::all_of(f.begin(), f.end(), [](const Mat& m) { return rank(m) == m.cols(); });
}

bool components_surjective(const Components& f) {
  return std::all_of(f.begin(), f.end(), [](const Mat& m) { return rank(m) == m.rows(); });
}

bool components_zero(const Components& f) {
  return std::all_of(f.begin(), f.end(), [](const Mat& m) { return m.is_zero(); });
}

// Calls fn on every element of Hom(X_i, X_j); stops when fn returns true.
template <typename F>
bool any_hom_element(const Census& c, int i, int j, F&& fn) {
  const auto& basis = c.hom_basis(i, j);
  const auto zero = zero_components(c.indec(i), c.indec(j));
  return for_each_coefficients(basis.size(), c.modulus(),
                               [&](std::span<const Scalar> coeffs) { return fn(combine(basis, coeffs, zero)); });
}

// Evaluation map from the sum of Hom(x_k, y)-many copies of each member onto y.
struct Evaluation {
  Representation source;
  Components comps;
};

Evaluation evaluation(const Census& c, const ModuleClass& x, const Representation& y) {
  const auto& q = c.quiver();
  std::vector<Representation> parts;
  std::vector<std::vector<Mat>> per_vertex(static_cast<std::size_t>(q.vertex_count()));
  x.for_each([&](int k) {
    for (const auto& f : hom_basis_components(c.indec(k), y)) {
      parts.push_back(c.indec(k));
      for (std::size_t v = 0; v < per_vertex.size(); ++v) per_vertex[v].push_back(f[v]);
    }
  });
  Components comps;
  for (std::size_t v = 0; v < per_vertex.size(); ++v)
    comps.push_back(hstack(per_vertex[v], static_cast<std::size_t>(y.dim(static_cast<int>(v))), c.modulus()));
  return {direct_sum(parts, q, c.modulus()), std::move(comps)};
}

// Coevaluation map from y into the sum of Hom(y, x_k)-many copies of each member.
Evaluation coevaluation(const Census& c, const ModuleClass& x, const Representation& y) {
  const auto& q = c.quiver();
  std::vector<Representation> parts;
  std::vector<std::vector<Mat>> per_vertex(static_cast<std::size_t>(q.vertex_count()));
  x.for_each([&](int k) {
    for (const auto& f : hom_basis_components(y, c.indec(k))) {
      parts.push_back(c.indec(k));
      for (std::size_t v = 0; v < per_vertex.size(); ++v) per_vertex[v].push_back(f[v]);
    }
  });
  Components comps;
  for (std::size_t v = 0; v < per_vertex.size(); ++v)
    comps.push_back(vstack(per_vertex[v], static_cast<std::size_t>(y.dim(static_cast<int>(v))), c.modulus()));
  return {direct_sum(parts, q, c.modulus()), std::move(comps)};
}

ModuleClass census_filter(const Census& c, const std::function<bool(int)>& keep) {
  ModuleClass out;
  for (int i = 0; i < c.size(); ++i)
    if (keep(i)) out.insert(i);
  return out;
}

std::vector<ModuleClass> sorted_unique(std::vector<ModuleClass> v) {
  std::sort(v.begin(), v.end(), presentation_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> witness_of(const ModuleClass& mc) { return members_of(mc); }

}  // namespace

IndexSet support(const Census& c, const ModuleClass& mc) {
  IndexSet s;
  mc.for_each([&](int i) {
    const auto& d = c.root(i);
    for (std::size_t v = 0; v < d.size(); ++v)
      if (d[v] > 0) s.insert(static_cast<int>(v));
  });
  return s;
}

int support_rank(const Census& c, const ModuleClass& mc) { return support(c, mc).size(); }

bool generates(const Census& c, const ModuleClass& x, const Representation& y) {
  if (y.is_zero()) return true;
  return components_surjective(evaluation(c, x, y).comps);
}

bool generates(const Census& c, const ModuleClass& x, int y) {
  // Image of the evaluation map, vertex by vertex, from the cached bases.
  const auto& target = c.indec(y);
  for (int v = 0; v < c.quiver().vertex_count(); ++v) {
    const auto dv = static_cast<std::size_t>(target.dim(v));
    if (dv == 0) continue;
    std::vector<Mat> cols;
    x.for_each([&](int k) {
      for (const auto& f : c.hom_basis(k, y)) cols.push_back(f[as_index(v)]);
    });
    if (rank(hstack(cols, dv, c.modulus())) != dv) return false;
  }
  return true;
}

bool cogenerates(const Census& c, const ModuleClass& x, const Representation& y) {
  if (y.is_zero()) return true;
  return components_injective(coevaluation(c, x, y).comps);
}

bool cogenerates(const Census& c, const ModuleClass& x, int y) {
  const auto& source = c.indec(y);
  for (int v = 0; v < c.quiver().vertex_count(); ++v) {
    const auto dv = static_cast<std::size_t>(source.dim(v));
    if (dv == 0) continue;
    std::vector<Mat> rows;
    x.for_each([&](int k) {
      for (const auto& f : c.hom_basis(y, k)) rows.push_back(f[as_index(v)]);
    });
    if (rank(vstack(rows, dv, c.modulus())) != dv) return false;
  }
  return true;
}

ModuleClass gen_class(const Census& c, const ModuleClass& t) {
  return census_filter(c, [&](int y) { return generates(c, t, y); });
}

ModuleClass cogen_class(const Census& c, const ModuleClass& f) {
  return census_filter(c, [&](int y) { return cogenerates(c, f, y); });
}

bool is_antichain(const Census& c, const ModuleClass& a) {
  const auto m = members_of(a);
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x + 1; y < m.size(); ++y)
      if (c.hom(m[x], m[y]) != 0 || c.hom(m[y], m[x]) != 0) return false;
  return true;
}

bool is_exceptional(const Census& c, const ModuleClass& a) {
  // Peel off members with no incoming Ext edge from the remaining ones.
  ModuleClass rest = a;
  while (!rest.empty()) {
    bool removed = false;
    for (int x : rest.members()) {
      bool has_in = false;
      rest.for_each([&](int y) {
        if (y != x && c.ext(y, x) != 0) has_in = true;
      });
      if (!has_in) {
        rest.erase(x);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

std::vector<ModuleClass> antichains(const Census& c, Exec exec) {
  const int n = c.size();
  std::vector<IndexSet> compatible(as_index(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && c.hom(i, j) == 0 && c.hom(j, i) == 0) compatible[as_index(i)].insert(j);
  return sorted_unique(clique_scan(n, compatible, [](const IndexSet&) { return true; }, exec));
}

ModuleClass filt_closure(const Census& c, const ModuleClass& a) {
  // Census order is by total dimension, so cokernel summands are decided first.
  ModuleClass closure;
  for (int m = 0; m < c.size(); ++m) {
    if (a.contains(m)) {
      closure.insert(m);
      continue;
    }
    bool found = false;
    a.for_each([&](int ai) {
      if (found || c.hom(ai, m) == 0 || c.indec(ai).total_dim() >= c.indec(m).total_dim()) return;
      found = any_hom_element(c, ai, m, [&](const Components& f) {
        if (!components_injective(f)) return false;
        const Morphism mono(c.indec(ai), c.indec(m), f);
        return c.summands(cokernel(mono).object).is_subset_of(closure);
      });
    });
    if (found) closure.insert(m);
  }
  return closure;
}

ModuleClass simples_of_thick(const Census& c, const ModuleClass& s) {
  ModuleClass out;
  s.for_each([&](int x) {
    bool simple = true;
    s.for_each([&](int y) {
      if (!simple || c.hom(y, x) == 0) return;
      if (any_hom_element(c, y, x, [](const Components& f) { return !components_zero(f) && !components_surjective(f); }))
        simple = false;
    });
    if (simple) out.insert(x);
  });
  return out;
}

ModuleClass ext_projectives(const Census& c, const ModuleClass& s) {
  ModuleClass out;
  s.for_each([&](int x) {
    bool ok = true;
    s.for_each([&](int m) { ok = ok && c.ext(x, m) == 0; });
    if (ok) out.insert(x);
  });
  return out;
}

ModuleClass ext_injectives(const Census& c, const ModuleClass& s) {
  ModuleClass out;
  s.for_each([&](int x) {
    bool ok = true;
    s.for_each([&](int m) { ok = ok && c.ext(m, x) == 0; });
    if (ok) out.insert(x);
  });
  return out;
}

ModuleClass projective_generator(const Census& c, const ModuleClass& s) {
  auto p = ext_projectives(c, s);
  if (p.size() != simples_of_thick(c, s).size())
    throw InternalError("projective_generator: projective and simple counts differ");
  return p;
}

ModuleClass injective_cogenerator_of(const Census& c, const ModuleClass& s) {
  auto i = ext_injectives(c, s);
  if (i.size() != simples_of_thick(c, s).size())
    throw InternalError("injective_cogenerator_of: injective and simple counts differ");
  return i;
}

ModuleClass presentation_closure(const Census& c, const ModuleClass& p) {
  return census_filter(c, [&](int x) {
    const auto ev = evaluation(c, p, c.indec(x));
    if (!components_surjective(ev.comps)) return false;
    const Morphism f(ev.source, c.indec(x), ev.comps);
    return c.summands(kernel(f).object).is_subset_of(p);
  });
}

ModuleClass copresentation_closure(const Census& c, const ModuleClass& i) {
  return census_filter(c, [&](int x) {
    const auto co = coevaluation(c, i, c.indec(x));
    if (!components_injective(co.comps)) return false;
    const Morphism f(c.indec(x), co.source, co.comps);
    return c.summands(cokernel(f).object).is_subset_of(i);
  });
}

bool is_self_orthogonal(const Census& c, const ModuleClass& mc) {
  bool ok = true;
  mc.for_each([&](int x) { mc.for_each([&](int y) { ok = ok && c.ext(x, y) == 0; }); });
  return ok;
}

bool is_normal(const Census& c, const ModuleClass& mc) {
  for (int x : mc.members())
    if (generates(c, mc.without(x), x)) return false;
  return true;
}

bool is_conormal(const Census& c, const ModuleClass& mc) {
  for (int x : mc.members())
    if (cogenerates(c, mc.without(x), x)) return false;
  return true;
}

ModuleClass normalization(const Census& c, const ModuleClass& mc) {
  ModuleClass cur = mc;
  for (bool changed = true; changed;) {
    changed = false;
    for (int x : cur.members())
      if (generates(c, cur.without(x), x)) {
        cur.erase(x);
        changed = true;
        break;
      }
  }
  return cur;
}

ModuleClass conormalization(const Census& c, const ModuleClass& mc) {
  ModuleClass cur = mc;
  for (bool changed = true; changed;) {
    changed = false;
    for (int x : cur.members())
      if (cogenerates(c, cur.without(x), x)) {
        cur.erase(x);
        changed = true;
        break;
      }
  }
  return cur;
}

ModuleClass delta_antichain(const Census& c, const ModuleClass& n) {
  if (!is_self_orthogonal(c, n) || !is_normal(c, n))
    throw ContractError("delta_antichain: class is not normal and self-orthogonal");
  ModuleClass out;
  n.for_each([&](int i) {
    const auto ev = evaluation(c, n.without(i), c.indec(i));
    std::vector<Mat> trace;
    for (const auto& m : ev.comps) trace.push_back(column_space_basis(m));
    const auto delta = quotient(c.indec(i), trace).object;
    const auto idx = delta.is_zero() ? std::nullopt : c.indecomposable_index(delta);
    if (!idx) throw ContractError("delta_antichain: cokernel of the trace is not indecomposable");
    out.insert(*idx);
  });
  if (out.size() != n.size()) throw ContractError("delta_antichain: two members share a cokernel");
  return out;
}

bool is_support_tilting(const Census& c, const ModuleClass& mc) {
  return is_self_orthogonal(c, mc) && mc.size() == support_rank(c, mc);
}

std::vector<ModuleClass> support_tilting_census(const Census& c, Exec exec) {
  const int n = c.size();
  std::vector<IndexSet> compatible(as_index(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && c.ext(i, j) == 0 && c.ext(j, i) == 0) compatible[as_index(i)].insert(j);
  return sorted_unique(
      clique_scan(n, compatible, [&](const IndexSet& s) { return s.size() == support_rank(c, s); }, exec));
}

namespace {

// Paths from `from` inside the arrow subset, as (endpoint, arrow list) pairs.
std::vector<std::pair<int, std::vector<std::size_t>>> paths_from(const Quiver& q, int from,
                                                                  const std::vector<std::size_t>& arrows) {
  std::vector<std::pair<int, std::vector<std::size_t>>> out{{from, {}}};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto a : arrows)
      if (q.arrows()[a].source == out[k].first) {
        auto path = out[k].second;
        path.push_back(a);
        out.emplace_back(q.arrows()[a].target, std::move(path));
      }
  return out;
}

}  // namespace

Representation injective_envelope(const Quiver& q, Scalar p, int v, const IndexSet& verts) {
  if (!verts.contains(v)) throw ContractError("injective_envelope: vertex outside the support");
  // Projective P(v) over the opposite of the restricted quiver, by path counts, then dualised.
  const Quiver op = q.opposite();
  std::vector<std::size_t> inside;
  for (std::size_t a = 0; a < op.arrow_count(); ++a)
    if (verts.contains(op.arrows()[a].source) && verts.contains(op.arrows()[a].target)) inside.push_back(a);
  const auto paths = paths_from(op, v, inside);

  // Position of each path within the space at its endpoint.
  DimVector dims(static_cast<std::size_t>(q.vertex_count()), 0);
  std::vector<int> slot(paths.size());
  for (std::size_t k = 0; k < paths.size(); ++k) slot[k] = dims[as_index(paths[k].first)]++;

  std::vector<Mat> mats;
  for (std::size_t a = 0; a < op.arrow_count(); ++a) {
    const auto& ar = op.arrows()[a];
    Mat m(as_index(dims[as_index(ar.target)]), as_index(dims[as_index(ar.source)]), p);
    if (std::find(inside.begin(), inside.end(), a) != inside.end())
      for (std::size_t k = 0; k < paths.size(); ++k) {
        if (paths[k].first != ar.source) continue;
        auto extended = paths[k].second;
        extended.push_back(a);
        for (std::size_t l = 0; l < paths.size(); ++l)
          if (paths[l].second == extended) m.set(as_index(slot[l]), as_index(slot[k]), 1);
      }
    mats.push_back(std::move(m));
  }
  return dual(Representation(op, p, dims, std::move(mats)));
}

ModuleClass injective_cogenerator(const Census& c, const IndexSet& verts) {
  ModuleClass out;
  verts.for_each([&](int v) {
    const auto idx = c.indecomposable_index(injective_envelope(c.quiver(), c.modulus(), v, verts));
    if (!idx) throw InternalError("injective_cogenerator: envelope is not indecomposable");
    out.insert(*idx);
  });
  return out;
}

Foundation universal_foundation(const Census& c, const ModuleClass& n) {
  if (!is_self_orthogonal(c, n)) throw ContractError("universal_foundation: class has self-extensions");
  const auto& q = c.quiver();
  const Scalar p = c.modulus();
  Foundation out;
  out.z = c.sum_of(injective_cogenerator(c, support(c, n)));
  out.n = c.sum_of(n);
  const auto phis = ext_cocycle_basis(out.z, out.n);
  out.cocycles = phis.size();

  std::vector<Representation> copies(phis.size(), out.n);
  const auto nr = direct_sum(copies, q, p);
  Components stacked;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::vector<Mat> blocks;
    for (const auto& phi : phis) blocks.push_back(phi[a]);
    stacked.push_back(vstack(blocks, static_cast<std::size_t>(out.z.dim(q.arrows()[a].source)), p));
  }
  out.seq = extension(out.z, nr, stacked);
  out.y = out.seq.middle;

  if (!out.seq.is_exact()) throw InternalError("universal_foundation: sequence is not exact");
  if (ext_dim(out.y, out.n) != 0) throw InternalError("universal_foundation: Ext(Y, N) does not vanish");
  if (!generates(c, n, out.y)) throw InternalError("universal_foundation: N does not generate Y");
  return out;
}

ModuleClass factor_complement(const Census& c, const ModuleClass& n) {
  if (!is_normal(c, n)) throw ContractError("factor_complement: class is not normal");
  const auto f = universal_foundation(c, n);
  const auto t = n | c.summands(f.y);
  if (t.size() != support_rank(c, n) || !is_support_tilting(c, t))
    throw InternalError("factor_complement: result is not support-tilting of the expected size");
  return t;
}

std::vector<int> duality_map(const Census& from, const Census& to) {
  if (from.quiver().opposite() != to.quiver() || from.modulus() != to.modulus())
    throw ContractError("duality_map: censuses are not over opposite quivers");
  std::vector<int> out;
  for (const auto& x : from.indecs()) {
    const auto idx = to.indecomposable_index(dual(x));
    if (!idx) throw InternalError("duality_map: dual of an indecomposable decomposes");
    out.push_back(*idx);
  }
  return out;
}

ModuleClass map_class(const ModuleClass& mc, const std::vector<int>& positions) {
  ModuleClass out;
  mc.for_each([&](int i) { out.insert(positions.at(as_index(i))); });
  return out;
}

const char* set_name(SetKind k) {
  switch (k) {
    case SetKind::antichains: return "antichains";
    case SetKind::thick: return "thick";
    case SetKind::normal: return "normal";
    case SetKind::support_tilting: return "support-tilting";
    case SetKind::torsion: return "torsion";
    case SetKind::conormal: return "conormal";
    case SetKind::torsionfree: return "torsionfree";
  }
  return "?";
}

std::optional<SetKind> parse_set_name(const std::string& name) {
  for (auto k : kAllSets)
    if (name == set_name(k)) return k;
  return std::nullopt;
}

std::vector<ModuleClass> enumerate_set(const Census& c, const Census& op, SetKind which, Exec exec) {
  switch (which) {
    case SetKind::antichains:
      return filter_sets(antichains(c, exec), [&](const IndexSet& a) { return is_exceptional(c, a); }, exec);
    case SetKind::thick:
      return sorted_unique(map_sets(enumerate_set(c, op, SetKind::antichains, exec),
                                    [&](const IndexSet& a) { return filt_closure(c, a); }, exec));
    case SetKind::normal:
    case SetKind::conormal: {
      const int n = c.size();
      std::vector<IndexSet> compatible(as_index(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && c.ext(i, j) == 0 && c.ext(j, i) == 0) compatible[as_index(i)].insert(j);
      const bool normal = which == SetKind::normal;
      return sorted_unique(clique_scan(
          n, compatible, [&](const IndexSet& s) { return normal ? is_normal(c, s) : is_conormal(c, s); }, exec));
    }
    case SetKind::support_tilting:
      return support_tilting_census(c, exec);
    case SetKind::torsion:
      return sorted_unique(
          map_sets(support_tilting_census(c, exec), [&](const IndexSet& t) { return gen_class(c, t); }, exec));
    case SetKind::torsionfree: {
      const auto back = duality_map(op, c);
      return sorted_unique(map_sets(support_tilting_census(op, exec),
                                    [&](const IndexSet& t) { return cogen_class(c, map_class(t, back)); }, exec));
    }
  }
  throw ContractError("enumerate_set: unknown set");
}

std::vector<ModuleClass> enumerate_set(const Census& c, SetKind which, Exec exec) {
  if (which != SetKind::torsionfree) return enumerate_set(c, c, which, exec);
  const auto op = Census::build(c.quiver().opposite(), c.modulus(), exec);
  return enumerate_set(c, op, which, exec);
}

IndexSet element_support(const Census& c, const ModuleClass& element) { return support(c, element); }

bool Report::counts_equal() const {
  return std::all_of(counts.begin(), counts.end(), [&](std::size_t n) { return n == counts[0]; });
}

bool Report::sincere_equal() const {
  return std::all_of(sincere_counts.begin(), sincere_counts.end(), [&](std::size_t n) { return n == sincere_counts[0]; });
}

bool Report::passed() const {
  auto all_pass = [](const std::vector<Check>& v) {
    return std::all_of(v.begin(), v.end(), [](const Check& k) { return k.pass; });
  };
  return counts_equal() && sincere_equal() && counts[0] == root_poset_antichains && all_pass(roundtrips) &&
         all_pass(supplements) && all_pass(support) && all_pass(duality);
}

namespace {

// Runs `ok` over every element and records the first failure.
Check check_all(std::string name, const std::vector<ModuleClass>& items,
                const std::function<bool(const ModuleClass&)>& ok, Exec exec) {
  Check out{std::move(name), true, {}, {}};
  const auto flags = index_map<char>(
      items.size(),
      [&](std::size_t k) {
        try {
          return static_cast<char>(ok(items[k]) ? 1 : 0);
        } catch (const std::exception&) {
          return char{0};
        }
      },
      exec);
  for (std::size_t k = 0; k < items.size(); ++k)
    if (!flags[k]) {
      out.pass = false;
      out.witness = witness_of(items[k]);
      break;
    }
  return out;
}

// The images of `from` under `f` are pairwise distinct and form exactly `to`.
Check check_bijection(std::string name, const std::vector<ModuleClass>& from, const std::vector<ModuleClass>& to,
                      const std::function<ModuleClass(const ModuleClass&)>& f, Exec exec) {
  Check out{std::move(name), true, {}, {}};
  std::vector<ModuleClass> images;
  try {
    images = map_sets(from, f, exec);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = e.what();
    return out;
  }
  std::map<ModuleClass, std::size_t> seen;
  for (std::size_t k = 0; k < images.size(); ++k) {
    auto [it, fresh] = seen.emplace(images[k], k);
    if (!fresh) {
      out.pass = false;
      out.witness = witness_of(from[k]);
      out.detail = "two elements share an image";
      return out;
    }
  }
  if (sorted_unique(images) != sorted_unique(to)) {
    out.pass = false;
    out.detail = "images differ from the target set";
    for (const auto& t : to)
      if (!seen.count(t)) {
        out.witness = witness_of(t);
        break;
      }
  }
  return out;
}

std::size_t count_sincere(const Census& c, const std::vector<ModuleClass>& items) {
  const int n = c.quiver().vertex_count();
  return static_cast<std::size_t>(std::count_if(
      items.begin(), items.end(), [&](const ModuleClass& x) { return element_support(c, x).size() == n; }));
}

}  // namespace

Report verify_bijections(const Census& c, Exec exec) {
  Report r;
  r.p = c.modulus();
  const auto op = Census::build(c.quiver().opposite(), c.modulus(), exec);
  const auto to_op = duality_map(c, op);
  const auto from_op = duality_map(op, c);

  std::array<std::vector<ModuleClass>, 7> sets;
  for (auto k : kAllSets) sets[static_cast<std::size_t>(k) - 1] = enumerate_set(c, op, k, exec);
  const auto& [s1, s2, s3, s4, s5, s6, s7] = sets;
  for (std::size_t k = 0; k < 7; ++k) {
    r.counts[k] = sets[k].size();
    r.sincere_counts[k] = count_sincere(c, sets[k]);
  }
  r.root_poset_antichains = root_poset_antichain_count(RootPoset(positive_roots(c.quiver())));

  // Roundtrips.
  auto& rt = r.roundtrips;
  rt.push_back(check_all("simples_of_thick . filt_closure = id on antichains", s1,
                         [&](const ModuleClass& a) { return simples_of_thick(c, filt_closure(c, a)) == a; }, exec));
  rt.push_back(check_all("filt_closure . simples_of_thick = id on thick", s2,
                         [&](const ModuleClass& s) { return filt_closure(c, simples_of_thick(c, s)) == s; }, exec));
  rt.push_back(check_all(
      "presentation_closure . projective_generator = id on thick", s2,
      [&](const ModuleClass& s) { return presentation_closure(c, projective_generator(c, s)) == s; }, exec));
  rt.push_back(check_all("projective_generator . presentation_closure = id on normal", s3,
                         [&](const ModuleClass& n) { return projective_generator(c, presentation_closure(c, n)) == n; },
                         exec));
  rt.push_back(check_all("normalization . factor_complement = id on normal", s3,
                         [&](const ModuleClass& n) { return normalization(c, factor_complement(c, n)) == n; }, exec));
  rt.push_back(check_all("factor_complement . normalization = id on support-tilting", s4,
                         [&](const ModuleClass& t) { return factor_complement(c, normalization(c, t)) == t; }, exec));
  rt.push_back(check_all("ext_projectives . gen_class = id on support-tilting", s4,
                         [&](const ModuleClass& t) { return ext_projectives(c, gen_class(c, t)) == t; }, exec));
  rt.push_back(check_all("gen_class . ext_projectives = id on torsion", s5,
                         [&](const ModuleClass& t) { return gen_class(c, ext_projectives(c, t)) == t; }, exec));
  rt.push_back(check_all(
      "delta_antichain = simples_of_thick . presentation_closure on normal", s3,
      [&](const ModuleClass& n) { return delta_antichain(c, n) == simples_of_thick(c, presentation_closure(c, n)); },
      exec));
  rt.push_back(check_all(
      "copresentation_closure . injective_cogenerator_of = id on thick", s2,
      [&](const ModuleClass& s) { return copresentation_closure(c, injective_cogenerator_of(c, s)) == s; }, exec));
  rt.push_back(check_all("ext_injectives . cogen_class = id on dual support-tilting", s7,
                         [&](const ModuleClass& f) { return cogen_class(c, ext_injectives(c, f)) == f; }, exec));

  // The maps are bijections onto the enumerated sets.
  rt.push_back(check_bijection("filt_closure: (1) -> (2)", s1, s2,
                               [&](const ModuleClass& a) { return filt_closure(c, a); }, exec));
  rt.push_back(check_bijection("projective_generator: (2) -> (3)", s2, s3,
                               [&](const ModuleClass& s) { return projective_generator(c, s); }, exec));
  rt.push_back(check_bijection("factor_complement: (3) -> (4)", s3, s4,
                               [&](const ModuleClass& n) { return factor_complement(c, n); }, exec));
  rt.push_back(check_bijection("gen_class: (4) -> (5)", s4, s5, [&](const ModuleClass& t) { return gen_class(c, t); },
                               exec));
  rt.push_back(check_bijection("injective_cogenerator_of: (2) -> (6)", s2, s6,
                               [&](const ModuleClass& s) { return injective_cogenerator_of(c, s); }, exec));
  rt.push_back(check_bijection("ext_injectives: (7) -> (6) via conormalization",
                               s7, s6, [&](const ModuleClass& f) { return conormalization(c, ext_injectives(c, f)); },
                               exec));

  // Supplements.
  const auto all_antichains = antichains(c, exec);
  r.supplements.push_back(check_all("every antichain is exceptional", all_antichains,
                                    [&](const ModuleClass& a) { return is_exceptional(c, a); }, exec));
  r.supplements.push_back(check_all("every torsion class is generated by its Ext-projectives", s5,
                                    [&](const ModuleClass& t) { return gen_class(c, ext_projectives(c, t)) == t; },
                                    exec));
  r.supplements.push_back(check_all(
      "every thick subcategory is covered by its projective generator", s2,
      [&](const ModuleClass& s) { return s.is_subset_of(gen_class(c, projective_generator(c, s))); }, exec));
  r.supplements.push_back(check_all(
      "every torsionfree class is cogenerated by its Ext-injectives", s7,
      [&](const ModuleClass& f) { return f.is_subset_of(cogen_class(c, ext_injectives(c, f))); }, exec));

  {
    Check homological{"hom - ext = euler form, ext recomputed as dim coker(delta)", true, {}, {}};
    for (int i = 0; i < c.size() && homological.pass; ++i)
      for (int j = 0; j < c.size() && homological.pass; ++j) {
        const auto by_cokernel = static_cast<int>(ext_dim_by_cokernel(c.indec(i), c.indec(j)));
        if (by_cokernel != c.ext(i, j) || c.hom(i, j) - by_cokernel != euler_form(c.quiver(), c.root(i), c.root(j))) {
          homological.pass = false;
          homological.witness = {i, j};
        }
      }
    r.supplements.push_back(homological);
  }

  // Support along the chain A -> F(A) -> P -> T -> G(T), and F(A) -> injective cogenerator.
  r.support.push_back(check_all(
      "support preserved along (1) -> (2) -> (3) -> (4) -> (5) and (2) -> (6)", s1,
      [&](const ModuleClass& a) {
        const auto sa = support(c, a);
        const auto thick = filt_closure(c, a);
        const auto p = projective_generator(c, thick);
        const auto t = factor_complement(c, p);
        return support(c, thick) == sa && support(c, p) == sa && support(c, t) == sa &&
               support(c, gen_class(c, t)) == sa && support(c, injective_cogenerator_of(c, thick)) == sa;
      },
      exec));
  r.support.push_back(check_all("support preserved along (4) -> (7) through the opposite quiver", s4, [&](const ModuleClass& t) {
    // Dual of a support-tilting class over the opposite quiver.
    const auto dt_op = map_class(t, to_op);
    const auto f = cogen_class(c, map_class(dt_op, from_op));
    return support(c, f) == support(c, t);
  }, exec));

  // Duality.
  {
    Check involution{"dual . dual = id on the census", true, {}, {}};
    const auto back = duality_map(op, c);
    for (int i = 0; i < c.size(); ++i) {
      if (back[as_index(to_op[as_index(i)])] != i || dual(dual(c.indec(i))) != c.indec(i)) {
        involution.pass = false;
        involution.witness = {i};
        break;
      }
    }
    r.duality.push_back(involution);
  }
  {
    const auto n_op = enumerate_set(op, c, SetKind::normal, exec);
    r.duality.push_back(check_bijection("duality: (3) over the opposite quiver -> (6)", n_op, s6,
                                        [&](const ModuleClass& n) { return map_class(n, from_op); }, exec));
    const auto t_op = enumerate_set(op, c, SetKind::torsion, exec);
    r.duality.push_back(check_bijection("duality: (5) over the opposite quiver -> (7)", t_op, s7,
                                        [&](const ModuleClass& t) { return map_class(t, from_op); }, exec));
    const auto s6_op = enumerate_set(op, c, SetKind::conormal, exec);
    r.duality.push_back(check_bijection("duality: (6) over the opposite quiver -> (3)", s6_op, s3,
                                        [&](const ModuleClass& n) { return map_class(n, from_op); }, exec));
  }
  return r;
}

}  // namespace tiltlab
