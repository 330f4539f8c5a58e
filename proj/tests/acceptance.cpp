// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tiltlab/bijectlab.hpp"
#include "tiltlab/oracle.hpp"

using namespace tiltlab;

namespace {

struct Case {
  std::string tag;
  Scalar p;
  Census census;
  Report report;
  double seconds;
};

// Antichains of the root poset by a plain subset scan, independent of the
// library's backtracking count.
std::size_t brute_root_antichains(const std::vector<DimVector>& roots) {
  const auto n = roots.size();
  auto leq = [&](std::size_t a, std::size_t b) {
    for (std::size_t v = 0; v < roots[a].size(); ++v)
      if (roots[a][v] > roots[b][v]) return false;
    return true;
  };
  std::size_t count = 0;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b)
        if ((mask >> a & 1ul) && (mask >> b & 1ul) && (leq(a, b) || leq(b, a))) ok = false;
    count += ok;
  }
  return count;
}

const Check* find_check(const std::vector<Check>& v, const std::string& name) {
  for (const auto& k : v)
    if (k.name == name) return &k;
  return nullptr;
}

bool all_pass(const std::vector<Check>& v) {
  for (const auto& k : v)
    if (!k.pass) return false;
  return true;
}

int failures = 0;

void line(const char* id, bool pass, const std::string& text) {
  std::printf("%s %s  %s\n", id, pass ? "PASS" : "FAIL", text.c_str());
  std::fflush(stdout);
  failures += !pass;
}

}  // namespace

int main() {
  const std::vector<std::string> families{"A2", "A3", "A4", "D4"};
  const std::vector<Scalar> primes{2, 3, 5};
  // Values derived by exhaustive enumeration; A1..A3 are fixed, A4 and D4 are
  // the brute-force root-poset counts below.
  std::map<std::string, std::size_t> expected{{"A1", 2}, {"A2", 5}, {"A3", 14}};
  for (const auto& fam : {"A4", "D4"}) expected[fam] = brute_root_antichains(positive_roots(family_quiver(fam)));
  const bool frozen_ok = expected["A1"] == brute_root_antichains(positive_roots(family_quiver("A1"))) &&
                         expected["A2"] == brute_root_antichains(positive_roots(family_quiver("A2"))) &&
                         expected["A3"] == brute_root_antichains(positive_roots(family_quiver("A3")));

  std::vector<Case> cases;
  std::map<std::string, double> family_seconds;
  double worst_a3 = 0;
  for (const auto& fam : families)
    for (const auto& tag : family_orientations(fam))
      for (Scalar p : primes) {
        const auto t0 = std::chrono::steady_clock::now();
        auto c = Census::build(family_quiver(tag), p, Exec::parallel);
        auto r = verify_bijections(c, Exec::parallel);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        family_seconds[fam] += s;
        if (fam == "A3") worst_a3 = std::max(worst_a3, s);
        cases.push_back({tag, p, std::move(c), std::move(r), s});
      }
  // The A1 row of the expected table.
  for (Scalar p : primes) {
    auto c = Census::build(family_quiver("A1"), p);
    auto r = verify_bijections(c);
    cases.push_back({"A1", p, std::move(c), std::move(r), 0.0});
  }
  auto family_of = [](const std::string& tag) { return tag.substr(0, tag.find(':')); };

  // AC1
  {
    bool ok = frozen_ok;
    std::string bad;
    for (const auto& k : cases) {
      const auto want = expected.at(family_of(k.tag));
      for (auto n : k.report.counts)
        if (n != want) {
          ok = false;
          bad = k.tag + " p=" + std::to_string(k.p);
        }
    }
    const bool timing = worst_a3 < 10.0 && family_seconds["D4"] < 300.0;
    char buf[256];
    std::snprintf(buf, sizeof buf, "seven counts equal (A1 2, A2 5, A3 14, A4 %zu, D4 %zu) over %zu cases; "
                  "worst A3 %.3fs, D4 total %.2fs%s%s",
                  expected["A4"], expected["D4"], cases.size(), worst_a3, family_seconds["D4"],
                  bad.empty() ? "" : "; first mismatch ", bad.c_str());
    line("AC1", ok && timing, buf);
  }

  // AC2
  {
    bool ok = true;
    std::string bad;
    for (const auto& k : cases) {
      const auto rp = brute_root_antichains(positive_roots(k.census.quiver()));
      if (k.report.counts[0] != rp || k.report.root_poset_antichains != rp) {
        ok = false;
        bad = k.tag;
      }
    }
    line("AC2", ok, "module antichains equal root-poset antichains for every case" + (bad.empty() ? "" : "; " + bad));
  }

  // AC3
  {
    const std::vector<std::string> names{
        "simples_of_thick . filt_closure = id on antichains",
        "normalization . factor_complement = id on normal",
        "ext_projectives . gen_class = id on support-tilting",
        "delta_antichain = simples_of_thick . presentation_closure on normal",
    };
    bool ok = true;
    std::string bad;
    std::size_t checked = 0;
    for (const auto& k : cases)
      for (const auto& name : names) {
        const auto* chk = find_check(k.report.roundtrips, name);
        ++checked;
        if (!chk || !chk->pass) {
          ok = false;
          bad = k.tag + " p=" + std::to_string(k.p) + ": " + name;
        }
      }
    line("AC3", ok, std::to_string(checked) + " roundtrip identities hold" + (bad.empty() ? "" : "; " + bad));
  }

  // AC4 and AC5 oracle parts
  bool covers_ok = true;
  {
    bool ok = true;
    std::string bad;
    std::size_t quivers = 0;
    for (const auto& fam : {"A2", "A3"})
      for (const auto& tag : family_orientations(fam)) {
        const auto c = Census::build(family_quiver(tag), 2);
        std::vector<ModuleClass> torsion, thick;
        for (const auto& t : support_tilting_census(c)) torsion.push_back(gen_class(c, t));
        for (const auto& a : enumerate_set(c, SetKind::antichains)) thick.push_back(filt_closure(c, a));
        auto norm = [](std::vector<ModuleClass> v) {
          std::sort(v.begin(), v.end(), presentation_less);
          v.erase(std::unique(v.begin(), v.end()), v.end());
          return v;
        };
        const auto oracle_torsion = all_torsion_classes(c);
        const auto oracle_thick = all_thick_subcategories(c);
        if (oracle_torsion != norm(torsion) || oracle_thick != norm(thick)) {
          ok = false;
          bad = tag;
        }
        for (const auto& s : oracle_torsion) covers_ok = covers_ok && s.is_subset_of(gen_class(c, s));
        for (const auto& s : oracle_thick) covers_ok = covers_ok && s.is_subset_of(gen_class(c, s));
        ++quivers;
      }
    line("AC4", ok,
         "oracle torsion and thick classes equal the constructed ones on " + std::to_string(quivers) +
             " quivers of type A2/A3 over F_2" + (bad.empty() ? "" : "; " + bad));
  }

  // AC5
  {
    bool ok = covers_ok;
    std::size_t antichain_total = 0;
    for (const auto& k : cases) {
      const auto all = antichains(k.census);
      antichain_total += all.size();
      for (const auto& a : all) ok = ok && is_exceptional(k.census, a);
      ok = ok && all_pass(k.report.supplements);
    }
    line("AC5", ok,
         std::to_string(antichain_total) + " antichains all exceptional; oracle classes covered by the sum of members");
  }

  // AC6
  {
    bool ok = true;
    std::size_t pairs = 0;
    for (const auto& k : cases) {
      const auto& c = k.census;
      for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j) {
          const auto& x = c.indec(i);
          const auto& y = c.indec(j);
          const long h = static_cast<long>(hom_basis(x, y).size());
          const long e = static_cast<long>(ext_dim_by_cokernel(x, y));
          ok = ok && h - e == euler_form(c.quiver(), x.dims(), y.dims()) && e == c.ext(i, j) && h == c.hom(i, j);
          ++pairs;
        }
    }
    line("AC6", ok, std::to_string(pairs) + " ordered pairs satisfy hom - ext = euler form with ext from coker");
  }

  // AC7
  {
    bool ok = true;
    std::string bad;
    for (const auto& k : cases) {
      ok = ok && all_pass(k.report.support) && k.report.sincere_equal();
      const auto fam = family_of(k.tag);
      if (fam == "A2" && k.report.sincere_counts[3] != 2) ok = false, bad = k.tag;
      if (fam == "A3" && k.report.sincere_counts[3] != 5) ok = false, bad = k.tag;
    }
    line("AC7", ok, "support preserved; sincere support-tilting A2 2, A3 5" + (bad.empty() ? "" : "; " + bad));
  }

  // AC8
  {
    bool ok = true;
    for (const auto& k : cases)
      ok = ok && all_pass(k.report.duality) && k.report.counts[2] == k.report.counts[5] &&
           k.report.counts[4] == k.report.counts[6];
    line("AC8", ok, "dual . dual = id; duality bijects (3) with (6) and (5) with (7)");
  }

  // AC9
  {
    bool ok = true;
    std::map<std::string, std::array<std::size_t, 7>> by_tag;
    for (const auto& k : cases) {
      auto [it, fresh] = by_tag.emplace(k.tag, k.report.counts);
      if (!fresh && it->second != k.report.counts) ok = false;
    }
    line("AC9", ok, "counts identical over F_2, F_3, F_5 for " + std::to_string(by_tag.size()) + " orientations");
  }

  std::printf("%s\n", failures == 0 ? "ALL PASS" : "FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
