#include "tiltlab/census.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

std::size_t udim(const Representation& m, int v) { return static_cast<std::size_t>(m.dim(v)); }

}  // namespace

Representation reflect_at_sink(const Representation& m, int v) {
  const Quiver& q = m.quiver();
  if (v < 0 || v >= q.vertex_count() || !q.is_sink(v)) throw ContractError("reflect_at_sink: vertex is not a sink");
  const auto into = q.arrows_into(v);
  std::vector<Mat> parts;
  for (auto a : into) parts.push_back(m.mat(a));
  const Mat sum_map = hstack(parts, udim(m, v), m.modulus());
  if (rank(sum_map) != udim(m, v)) throw ContractError("reflect_at_sink: simple summand at the reflected vertex");
  const Mat k = kernel_basis(sum_map);

  DimVector dims = m.dims();
  dims[static_cast<std::size_t>(v)] = static_cast<int>(k.cols());
  std::vector<Mat> mats = m.mats();
  std::size_t offset = 0;
  for (auto a : into) {
    const int i = q.arrows()[a].source;
    mats[a] = k.block(offset, 0, udim(m, i), k.cols());
    offset += udim(m, i);
  }
  return Representation(q.reflected_at(v), m.modulus(), std::move(dims), std::move(mats));
}

Representation reflect_at_source(const Representation& m, int v) {
  const Quiver& q = m.quiver();
  if (v < 0 || v >= q.vertex_count() || !q.is_source(v))
    throw ContractError("reflect_at_source: vertex is not a source");
  const auto out = q.arrows_out_of(v);
  std::vector<Mat> parts;
  for (auto a : out) parts.push_back(m.mat(a));
  const Mat stacked = vstack(parts, udim(m, v), m.modulus());
  if (rank(stacked) != udim(m, v)) throw ContractError("reflect_at_source: simple summand at the reflected vertex");
  const Mat c = left_kernel_basis(stacked);

  DimVector dims = m.dims();
  dims[static_cast<std::size_t>(v)] = static_cast<int>(c.rows());
  std::vector<Mat> mats = m.mats();
  std::size_t offset = 0;
  for (auto a : out) {
    const int j = q.arrows()[a].target;
    mats[a] = c.block(0, offset, c.rows(), udim(m, j));
    offset += udim(m, j);
  }
  return Representation(q.reflected_at(v), m.modulus(), std::move(dims), std::move(mats));
}

Representation build_indec(const Quiver& q, Scalar p, const DimVector& root) {
  const auto roots = positive_roots(q);
  if (std::find(roots.begin(), roots.end(), root) == roots.end())
    throw InputError("bad-root", "dimension vector is not a positive root of the quiver");

  // Rounds of an admissible sink sequence (a Coxeter element) until the root is simple.
  const int n = q.vertex_count();
  std::vector<Quiver> quivers{q};
  std::vector<int> path;
  DimVector d = root;
  auto simple_vertex = [&]() -> int {
    if (total_dimension(d) != 1) return -1;
    return static_cast<int>(std::find(d.begin(), d.end(), 1) - d.begin());
  };
  const int cap = 4 * n * (n + 2) + 8;
  while (simple_vertex() < 0) {
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int step = 0; step < n && simple_vertex() < 0; ++step) {
      const Quiver& cur = quivers.back();
      int v = -1;
      for (int w = 0; w < n && v < 0; ++w)
        if (!done[static_cast<std::size_t>(w)] && cur.is_sink(w)) v = w;
      if (v < 0) throw InternalError("build_indec: no admissible sink");
      done[static_cast<std::size_t>(v)] = true;
      d = simple_reflection(cur, v, d);
      if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; }))
        throw InternalError("build_indec: reflection left the positive roots");
      path.push_back(v);
      quivers.push_back(cur.reflected_at(v));
    }
    if (static_cast<int>(path.size()) > cap) throw InternalError("build_indec: reflection path did not terminate");
  }

  Representation m = Representation::simple(quivers.back(), p, simple_vertex());
  for (std::size_t k = path.size(); k-- > 0;) m = reflect_at_source(m, path[k]);
  if (m.quiver() != q || m.dims() != root) throw InternalError("build_indec: reflection bookkeeping mismatch");
  return m;
}

bool is_brick(const Representation& m) { return hom_dim(m, m) == 1; }

Census Census::build(const Quiver& q, Scalar p, Exec exec) {
  require_dynkin(q);
  PrimeField field(p);  // validates p
  (void)field;
  Census c;
  c.quiver_ = q;
  c.p_ = p;
  const auto roots = positive_roots(q);
  for (const auto& r : roots) c.indecs_.push_back(build_indec(q, p, r));

  const auto n = c.indecs_.size();
  c.hom_bases_ = index_map<std::vector<Components>>(
      n * n, [&](std::size_t k) { return hom_basis_components(c.indecs_[k / n], c.indecs_[k % n]); }, exec);
  c.hom_.assign(n, std::vector<int>(n, 0));
  c.ext_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int h = static_cast<int>(c.hom_bases_[i * n + j].size());
      const int e = h - euler_form(q, c.indecs_[i].dims(), c.indecs_[j].dims());
      if (e < 0) throw InternalError("census: negative Ext dimension");
      c.hom_[i][j] = h;
      c.ext_[i][j] = e;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (c.hom_[i][i] != 1 || c.ext_[i][i] != 0)
      throw InternalError("census: indecomposable " + std::to_string(i) + " is not an exceptional brick");

  // Kahn's algorithm on a -> b whenever Hom(X_a, X_b) != 0, smallest index first.
  std::vector<int> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && c.hom_[a][b] > 0) ++indegree[b];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t b = 0; b < n; ++b)
    if (indegree[b] == 0) ready.push(static_cast<int>(b));
  while (!ready.empty()) {
    const int a = ready.top();
    ready.pop();
    c.order_.push_back(a);
    for (std::size_t b = 0; b < n; ++b)
      if (static_cast<std::size_t>(a) != b && c.hom_[static_cast<std::size_t>(a)][b] > 0 && --indegree[b] == 0)
        ready.push(static_cast<int>(b));
  }
  if (c.order_.size() != n) throw InternalError("census: Hom order has a cycle");
  return c;
}

const std::vector<Components>& Census::hom_basis(int i, int j) const {
  const auto n = indecs_.size();
  return hom_bases_.at(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j));
}

std::optional<int> Census::index_of(const DimVector& root) const {
  for (std::size_t i = 0; i < indecs_.size(); ++i)
    if (indecs_[i].dims() == root) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<int> Census::decompose(const Representation& m) const {
  if (m.quiver() != quiver_ || m.modulus() != p_) throw ContractError("decompose: representation is not over the census quiver");
  const auto n = indecs_.size();
  std::vector<long long> h(n);
  for (std::size_t a = 0; a < n; ++a) h[a] = static_cast<long long>(hom_dim(indecs_[a], m));

  // hom_ is unitriangular in order_, so back-substitute from the end.
  std::vector<int> mult(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    const auto a = static_cast<std::size_t>(order_[k]);
    long long v = h[a];
    for (std::size_t b = 0; b < n; ++b)
      if (b != a) v -= static_cast<long long>(mult[b]) * hom_[a][b];
    if (v < 0) throw InternalError("decompose: negative multiplicity");
    mult[a] = static_cast<int>(v);
  }
  DimVector total(m.dims().size(), 0);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t v = 0; v < total.size(); ++v) total[v] += mult[b] * indecs_[b].dims()[v];
  if (total != m.dims()) throw InternalError("decompose: multiplicities do not account for the dimension vector");
  return mult;
}

IndexSet Census::summands(const Representation& m) const {
  const auto mult = decompose(m);
  IndexSet s;
  for (std::size_t b = 0; b < mult.size(); ++b)
    if (mult[b] > 0) s.insert(static_cast<int>(b));
  return s;
}

std::optional<int> Census::indecomposable_index(const Representation& m) const {
  const auto mult = decompose(m);
  std::optional<int> found;
  for (std::size_t b = 0; b < mult.size(); ++b) {
    if (mult[b] == 0) continue;
    if (mult[b] > 1 || found) return std::nullopt;
    found = static_cast<int>(b);
  }
  return found;
}

Representation Census::sum_of(const IndexSet& members) const {
  std::vector<Representation> parts;
  members.for_each([&](int i) { parts.push_back(indec(i)); });
  return direct_sum(parts, quiver_, p_);
}

}  // namespace tiltlab
