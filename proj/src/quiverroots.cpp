#include "tiltlab/quiverroots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tiltlab/errors.hpp"

namespace tiltlab {

Quiver::Quiver(int vertices, std::vector<Arrow> arrows) : n_(vertices), arrows_(std::move(arrows)) {
  if (n_ < 0) throw ContractError("negative vertex count");
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
      throw ContractError("arrow endpoint out of range");
  }
}

bool Quiver::is_sink(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.source == v; });
}

bool Quiver::is_source(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.target == v; });
}

std::vector<std::size_t> Quiver::arrows_into(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].target == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> Quiver::arrows_out_of(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source == v) out.push_back(i);
  return out;
}

Quiver Quiver::opposite() const {
  auto rev = arrows_;
  for (auto& a : rev) std::swap(a.source, a.target);
  return Quiver(n_, std::move(rev));
}

Quiver Quiver::reflected_at(int v) const {
  auto rev = arrows_;
  for (auto& a : rev)
    if (a.source == v || a.target == v) std::swap(a.source, a.target);
  return Quiver(n_, std::move(rev));
}

std::string DynkinComponent::name() const {
  const char letter = family == DynkinFamily::A ? 'A' : family == DynkinFamily::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(rank);
}

namespace {

std::vector<int> one_based(std::vector<int> vs) {
  for (auto& v : vs) ++v;
  return vs;
}

Diagnostic reject(std::string error, std::string message, std::vector<int> witness) {
  Diagnostic d;
  d.ok = false;
  d.error = std::move(error);
  d.message = std::move(message);
  d.witness = one_based(std::move(witness));
  return d;
}

// Returns the vertices of some directed cycle, or empty when acyclic.
std::vector<int> find_directed_cycle(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  for (const auto& a : q.arrows()) succ[a.source].push_back(a.target);
  std::vector<int> state(static_cast<std::size_t>(n), 0), parent(static_cast<std::size_t>(n), -1);
  std::vector<int> cycle;

  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : succ[v]) {
      if (state[w] == 1) {
        cycle.push_back(w);
        for (int u = v; u != w; u = parent[u]) cycle.push_back(u);
        std::reverse(cycle.begin() + 1, cycle.end());
        return true;
      }
      if (state[w] == 0) {
        parent[w] = v;
        if (dfs(w)) return true;
      }
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && dfs(v)) return cycle;
  return {};
}

std::vector<std::vector<int>> components(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& a : q.arrows()) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int w : adj[members[k]])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

Diagnostic validate(const Quiver& q) {
  for (const auto& a : q.arrows())
    if (a.source == a.target) return reject("loop", "loop at vertex", {a.source});

  if (auto cycle = find_directed_cycle(q); !cycle.empty())
    return reject("cycle", "oriented cycle", std::move(cycle));

  Diagnostic ok;
  ok.ok = true;
  std::map<std::pair<int, int>, int> edge_count;
  std::vector<int> degree(static_cast<std::size_t>(q.vertex_count()), 0);
  for (const auto& a : q.arrows()) {
    const auto key = std::minmax(a.source, a.target);
    if (++edge_count[{key.first, key.second}] > 1)
      return reject("non-dynkin", "multiple edges between two vertices (not simply-laced Dynkin)",
                    {key.first, key.second});
    ++degree[a.source];
    ++degree[a.target];
  }

  for (const auto& members : components(q)) {
    std::size_t edges = 0;
    for (const auto& a : q.arrows())
      if (std::binary_search(members.begin(), members.end(), a.source)) ++edges;
    if (edges + 1 != members.size())
      return reject("non-dynkin", "underlying graph of a component contains a cycle", members);

    std::vector<int> branch;
    for (int v : members) {
      if (degree[v] > 3) return reject("non-dynkin", "vertex of degree greater than 3", {v});
      if (degree[v] == 3) branch.push_back(v);
    }
    if (branch.size() > 1) return reject("non-dynkin", "more than one branch vertex", branch);

    DynkinComponent c;
    c.vertices = members;
    c.rank = static_cast<int>(members.size());
    if (branch.empty()) {
      c.family = DynkinFamily::A;
      c.max_root_coefficient = 1;
    } else {
      // Arm lengths: number of vertices on each branch leaving the centre.
      const int centre = branch.front();
      std::vector<int> arms;
      for (const auto& a : q.arrows()) {
        if (a.source != centre && a.target != centre) continue;
        int prev = centre, cur = a.source == centre ? a.target : a.source, len = 1;
        while (degree[cur] == 2) {
          int next = -1;
          for (const auto& b : q.arrows()) {
            const int other = b.source == cur ? b.target : b.target == cur ? b.source : -1;
            if (other >= 0 && other != prev) next = other;
          }
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) {
        c.family = DynkinFamily::D;
        c.max_root_coefficient = 2;
      } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        c.family = DynkinFamily::E;
        c.max_root_coefficient = arms[2] == 2 ? 3 : arms[2] == 3 ? 4 : 6;
      } else {
        return reject("non-dynkin", "branch arms do not form a D or E diagram", {centre});
      }
    }
    ok.components.push_back(std::move(c));
  }
  return ok;
}

std::vector<DynkinComponent> require_dynkin(const Quiver& q) {
  auto d = validate(q);
  if (!d.ok) {
    throw InputError(d.error, d.message, std::move(d.witness));
  }
  return d.components;
}

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  if (d.size() != n || e.size() != n) throw ContractError("euler_form: dimension vector length mismatch");
  int value = 0;
  for (std::size_t i = 0; i < n; ++i) value += d[i] * e[i];
  for (const auto& a : q.arrows()) value -= d[a.source] * e[a.target];
  return value;
}

int total_dimension(const DimVector& d) { return std::accumulate(d.begin(), d.end(), 0); }

bool canonical_less(const DimVector& a, const DimVector& b) {
  const int ta = total_dimension(a), tb = total_dimension(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

std::vector<DimVector> positive_roots(const Quiver& q) {
  const auto comps = require_dynkin(q);
  const auto n = static_cast<std::size_t>(q.vertex_count());
  std::vector<DimVector> roots;
  for (const auto& c : comps) {
    const auto k = c.vertices.size();
    std::vector<int> digits(k, 0);
    DimVector d(n, 0);
    while (true) {
      // Odometer increment over [0, bound]^k.
      std::size_t pos = 0;
      while (pos < k && digits[pos] == c.max_root_coefficient) digits[pos++] = 0;
      if (pos == k) break;
      ++digits[pos];
      for (std::size_t i = 0; i < k; ++i) d[c.vertices[i]] = digits[i];
      if (euler_form(q, d, d) == 1) roots.push_back(d);
    }
  }
  std::sort(roots.begin(), roots.end(), canonical_less);
  return roots;
}

DimVector simple_reflection(const Quiver& q, int v, const DimVector& d) {
  DimVector out = d;
  int neighbours = 0;
  for (const auto& a : q.arrows()) {
    if (a.source == v) neighbours += d[a.target];
    if (a.target == v) neighbours += d[a.source];
  }
  out[v] = neighbours - d[v];
  return out;
}

RootPoset::RootPoset(std::vector<DimVector> roots) : roots_(std::move(roots)) {
  if (roots_.size() > static_cast<std::size_t>(IndexSet::kCapacity))
    throw ContractError("root poset larger than supported capacity");
  incomparable_.resize(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = i + 1; j < roots_.size(); ++j)
      if (!comparable(i, j)) incomparable_[i].insert(static_cast<int>(j));
}

bool RootPoset::leq(std::size_t a, std::size_t b) const {
  const auto& x = roots_.at(a);
  const auto& y = roots_.at(b);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

namespace {

std::size_t count_from(const std::vector<IndexSet>& later_incomparable, const IndexSet& candidates) {
  std::size_t total = 1;
  candidates.for_each([&](int i) { total += count_from(later_incomparable, candidates & later_incomparable[i]); });
  return total;
}

void list_from(const std::vector<IndexSet>& later_incomparable, const IndexSet& chosen, const IndexSet& candidates,
               std::vector<IndexSet>& out) {
  out.push_back(chosen);
  candidates.for_each(
      [&](int i) { list_from(later_incomparable, chosen.with(i), candidates & later_incomparable[i], out); });
}

}  // namespace

std::size_t root_poset_antichain_count(const RootPoset& rp) {
  return count_from(rp.incomparable_, IndexSet::range(static_cast<int>(rp.size())));
}

std::vector<IndexSet> root_poset_antichains(const RootPoset& rp) {
  std::vector<IndexSet> out;
  list_from(rp.incomparable_, IndexSet{}, IndexSet::range(static_cast<int>(rp.size())), out);
  return out;
}

namespace {

struct FamilyTag {
  DynkinFamily family;
  int rank;
  std::string orientation;
};

FamilyTag parse_family(std::string_view tag) {
  auto bad = [&](const std::string& why) { return InputError("bad-family", "family tag '" + std::string(tag) + "': " + why); };
  if (tag.size() < 2) throw bad("expected <letter><rank>[:orientation]");
  FamilyTag t{};
  switch (tag[0]) {
    case 'A': case 'a': t.family = DynkinFamily::A; break;
    case 'D': case 'd': t.family = DynkinFamily::D; break;
    case 'E': case 'e': t.family = DynkinFamily::E; break;
    default: throw bad("unknown family letter");
  }
  const auto colon = tag.find(':');
  const auto digits = tag.substr(1, colon == std::string_view::npos ? std::string_view::npos : colon - 1);
  if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw bad("rank must be a positive integer");
  t.rank = std::stoi(std::string(digits));
  const bool valid = (t.family == DynkinFamily::A && t.rank >= 1) || (t.family == DynkinFamily::D && t.rank >= 4) ||
                     (t.family == DynkinFamily::E && t.rank >= 6 && t.rank <= 8);
  if (!valid) throw bad("rank outside the family's range (A>=1, D>=4, E6..E8)");
  const int edges = family_edge_count(t.family, t.rank);
  if (colon == std::string_view::npos) {
    t.orientation.assign(static_cast<std::size_t>(edges), '>');
  } else {
    t.orientation = std::string(tag.substr(colon + 1));
    if (static_cast<int>(t.orientation.size()) != edges)
      throw bad("orientation needs exactly " + std::to_string(edges) + " characters");
    if (t.orientation.find_first_not_of("<>") != std::string::npos) throw bad("orientation characters must be '<' or '>'");
  }
  return t;
}

std::vector<std::pair<int, int>> family_edges(DynkinFamily family, int rank) {
  std::vector<std::pair<int, int>> edges;
  const int path_end = family == DynkinFamily::A ? rank : rank - 1;
  for (int v = 1; v < path_end; ++v) edges.emplace_back(v - 1, v);
  if (family == DynkinFamily::D) edges.emplace_back(rank - 3, rank - 1);
  if (family == DynkinFamily::E) edges.emplace_back(2, rank - 1);
  return edges;
}

}  // namespace

int family_edge_count(DynkinFamily, int rank) { return rank - 1; }

Quiver family_quiver(std::string_view tag) {
  const auto t = parse_family(tag);
  const auto edges = family_edges(t.family, t.rank);
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [lo, hi] = edges[k];
    arrows.push_back(t.orientation[k] == '>' ? Arrow{lo, hi} : Arrow{hi, lo});
  }
  return Quiver(t.rank, std::move(arrows));
}

std::vector<std::string> family_orientations(std::string_view family_and_rank) {
  const auto base = family_and_rank.substr(0, family_and_rank.find(':'));
  const auto t = parse_family(base);
  const int edges = family_edge_count(t.family, t.rank);
  std::vector<std::string> out;
  for (unsigned mask = 0; mask < (1u << edges); ++mask) {
    std::string o;
    for (int k = 0; k < edges; ++k) o.push_back((mask >> k) & 1u ? '<' : '>');
    out.push_back(edges == 0 ? std::string(base) : std::string(base) + ":" + o);
  }
  return out;
}

}  // namespace tiltlab
