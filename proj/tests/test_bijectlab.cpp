#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "tiltlab/bijectlab.hpp"
#include "tiltlab/errors.hpp"

using namespace tiltlab;

namespace {

// Census positions of the three A2 indecomposables over 1 -> 2.
struct A2 {
  Census c = Census::build(testsupport::a2(), 2);
  int s1 = *c.index_of({1, 0});
  int s2 = *c.index_of({0, 1});
  int p1 = *c.index_of({1, 1});
  ModuleClass all() const { return IndexSet{s1, s2, p1}; }
};

}  // namespace

TEST_CASE("support") {
  const A2 a;
  CHECK(support(a.c, {}).empty());
  CHECK(support_rank(a.c, {a.p1}) == 2);
  CHECK(support(a.c, {a.s2}) == IndexSet{1});
}

TEST_CASE("generates and gen_class") {
  const A2 a;
  CHECK(generates(a.c, {a.p1}, a.s1));
  CHECK_FALSE(generates(a.c, {a.p1}, a.s2));
  CHECK(generates(a.c, {a.p1}, Representation::zero(a.c.quiver(), 2)));
  CHECK(generates(a.c, {a.p1}, a.c.indec(a.s1)));
  CHECK(gen_class(a.c, {a.p1}) == IndexSet{a.p1, a.s1});
  CHECK(gen_class(a.c, {a.p1, a.s2}) == a.all());
  CHECK(gen_class(a.c, {}).empty());
  CHECK(cogen_class(a.c, {a.p1}) == IndexSet{a.p1, a.s2});
}

TEST_CASE("antichains and exceptionality") {
  const A2 a;
  const auto list = antichains(a.c);
  CHECK(list.size() == 5);
  CHECK(std::find(list.begin(), list.end(), IndexSet{a.s1, a.s2}) != list.end());
  CHECK(is_exceptional(a.c, {a.s1, a.s2}));
  CHECK(is_exceptional(a.c, {}));
  CHECK(is_antichain(a.c, {a.s1, a.s2}));
  CHECK_FALSE(is_antichain(a.c, {a.s1, a.p1}));
}

TEST_CASE("filtration closure and simples") {
  const A2 a;
  CHECK(filt_closure(a.c, {a.s1, a.s2}) == a.all());
  CHECK(filt_closure(a.c, {a.p1}) == IndexSet{a.p1});
  CHECK(filt_closure(a.c, {}).empty());
  CHECK(simples_of_thick(a.c, a.all()) == IndexSet{a.s1, a.s2});
  CHECK(simples_of_thick(a.c, {a.p1}) == IndexSet{a.p1});
  CHECK(simples_of_thick(a.c, {}).empty());
}

TEST_CASE("projective generator") {
  const A2 a;
  CHECK(projective_generator(a.c, a.all()) == IndexSet{a.p1, a.s2});
  CHECK(projective_generator(a.c, {a.p1}) == IndexSet{a.p1});
  CHECK(projective_generator(a.c, {}).empty());
  CHECK(injective_cogenerator_of(a.c, a.all()) == IndexSet{a.p1, a.s1});
  // {S1, S2} is not thick: one Ext-projective against two simples.
  CHECK_THROWS_AS(projective_generator(a.c, {a.s1, a.s2}), InternalError);
}

TEST_CASE("normality and normalization") {
  const A2 a;
  CHECK_FALSE(is_normal(a.c, {a.p1, a.s1}));
  CHECK(is_normal(a.c, {a.p1, a.s2}));
  CHECK(is_normal(a.c, {}));
  CHECK(normalization(a.c, {a.p1, a.s1}) == IndexSet{a.p1});
  CHECK(normalization(a.c, {a.p1, a.s2}) == IndexSet{a.p1, a.s2});
  CHECK(normalization(a.c, {}).empty());
  CHECK(is_conormal(a.c, {a.p1, a.s1}));
  CHECK_FALSE(is_conormal(a.c, {a.p1, a.s2}));
}

TEST_CASE("delta antichain") {
  const A2 a;
  CHECK(delta_antichain(a.c, {a.p1, a.s2}) == IndexSet{a.s1, a.s2});
  CHECK(delta_antichain(a.c, {a.s1}) == IndexSet{a.s1});
  CHECK(delta_antichain(a.c, {a.p1}) == IndexSet{a.p1});
  CHECK_THROWS_AS(delta_antichain(a.c, {a.p1, a.s1}), ContractError);
}

TEST_CASE("support-tilting") {
  const A2 a;
  CHECK(is_support_tilting(a.c, {a.p1, a.s1}));
  CHECK_FALSE(is_support_tilting(a.c, {a.s1, a.s2}));
  CHECK(is_support_tilting(a.c, {}));
  const auto list = support_tilting_census(a.c);
  const std::vector<ModuleClass> expected{{}, {a.s2}, {a.s1}, {a.s1, a.p1}, {a.s2, a.p1}};
  CHECK(list.size() == 5);
  for (const auto& e : expected) CHECK(std::find(list.begin(), list.end(), e) != list.end());
  CHECK(support_tilting_census(Census::build(family_quiver("A1"), 2)).size() == 2);
  CHECK(support_tilting_census(Census::build(testsupport::a3_linear(), 2)).size() == 14);
}

TEST_CASE("injective cogenerator") {
  const A2 a;
  CHECK(injective_cogenerator(a.c, IndexSet{0, 1}) == IndexSet{a.s1, a.p1});
  CHECK(injective_cogenerator(a.c, IndexSet{1}) == IndexSet{a.s2});
  CHECK(injective_cogenerator(a.c, IndexSet{0}) == IndexSet{a.s1});
  CHECK(injective_cogenerator(a.c, {}).empty());
}

TEST_CASE("universal foundation and factor complement") {
  const A2 a;
  const auto f1 = universal_foundation(a.c, {a.p1});
  CHECK(f1.cocycles == 0);
  CHECK(a.c.summands(f1.y) == IndexSet{a.s1, a.p1});
  const auto f2 = universal_foundation(a.c, {a.p1, a.s2});
  CHECK(f2.cocycles == 1);
  const auto mult = a.c.decompose(f2.y);
  CHECK(mult[static_cast<std::size_t>(a.p1)] == 3);
  CHECK(a.c.summands(f2.y) == IndexSet{a.p1});
  CHECK(f2.seq.is_exact());
  const auto f3 = universal_foundation(a.c, {a.s2});
  CHECK(a.c.summands(f3.y) == IndexSet{a.s2});
  CHECK(factor_complement(a.c, {a.p1}) == IndexSet{a.p1, a.s1});
  CHECK(factor_complement(a.c, {a.p1, a.s2}) == IndexSet{a.p1, a.s2});
  CHECK(factor_complement(a.c, {}).empty());
}

TEST_CASE("Ext-projectives") {
  const A2 a;
  CHECK(ext_projectives(a.c, gen_class(a.c, {a.p1, a.s2})) == IndexSet{a.p1, a.s2});
  CHECK(ext_projectives(a.c, {a.s2}) == IndexSet{a.s2});
  CHECK(ext_projectives(a.c, {}).empty());
}

TEST_CASE("presentation closures") {
  const A2 a;
  CHECK(presentation_closure(a.c, {a.p1, a.s2}) == a.all());
  CHECK(presentation_closure(a.c, {a.p1}) == IndexSet{a.p1});
  CHECK(presentation_closure(a.c, {a.s1}) == IndexSet{a.s1});
  CHECK(copresentation_closure(a.c, {a.p1, a.s1}) == a.all());
}

TEST_CASE("the seven sets over A2 and A1") {
  const A2 a;
  for (auto k : kAllSets) CHECK(enumerate_set(a.c, k).size() == 5);
  const auto normal = enumerate_set(a.c, SetKind::normal);
  const std::vector<ModuleClass> expected{{}, {a.s2}, {a.s1}, {a.p1}, {a.s2, a.p1}};
  for (const auto& e : expected) CHECK(std::find(normal.begin(), normal.end(), e) != normal.end());
  const auto a1 = Census::build(family_quiver("A1"), 3);
  for (auto k : kAllSets) CHECK(enumerate_set(a1, k).size() == 2);
  CHECK(parse_set_name("support-tilting") == SetKind::support_tilting);
  CHECK_FALSE(parse_set_name("tilting"));
}

TEST_CASE("verify_bijections on small quivers") {
  for (const char* tag : {"A1", "A2", "A2:<", "A3", "A3:><", "A3:<>", "A3:<<"}) {
    CAPTURE(tag);
    const auto r = verify_bijections(Census::build(family_quiver(tag), 2));
    for (const auto* group : {&r.roundtrips, &r.supplements, &r.support, &r.duality})
      for (const auto& k : *group) {
        CAPTURE(k.name);
        CAPTURE(k.detail);
        CHECK(k.pass);
      }
    CHECK(r.counts_equal());
    CHECK(r.passed());
  }
  const auto a1 = verify_bijections(Census::build(family_quiver("A1"), 2));
  CHECK(a1.counts[0] == 2);
  CHECK(a1.sincere_counts[0] == 1);
  const auto a3 = verify_bijections(Census::build(family_quiver("A3:><"), 3));
  CHECK(a3.counts[0] == 14);
  CHECK(a3.sincere_counts[3] == 5);
}

TEST_CASE("property: normalization is independent of removal order") {
  for (const char* tag : {"A3:<>", "D4:><>"}) {
    const auto c = Census::build(family_quiver(tag), 2);
    for (const auto& t : support_tilting_census(c)) {
      const auto reference = normalization(c, t);
      // Remove generated members highest position first.
      ModuleClass cur = t;
      for (bool changed = true; changed;) {
        changed = false;
        auto m = cur.members();
        for (auto it = m.rbegin(); it != m.rend(); ++it)
          if (generates(c, cur.without(*it), *it)) {
            cur.erase(*it);
            changed = true;
            break;
          }
      }
      CHECK(cur == reference);
      CHECK(is_normal(c, reference));
      for (int x : t.members()) CHECK(generates(c, reference, x));
    }
  }
}

TEST_CASE("property: serial and parallel enumerations agree") {
  for (const char* tag : {"A4:<><", "D4:>><"}) {
    const auto c = Census::build(family_quiver(tag), 3);
    const auto op = Census::build(c.quiver().opposite(), 3);
    for (auto k : kAllSets) CHECK(enumerate_set(c, op, k, Exec::serial) == enumerate_set(c, op, k, Exec::parallel));
  }
}
