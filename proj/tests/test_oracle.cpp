#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "tiltlab/bijectlab.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/oracle.hpp"

using namespace tiltlab;

TEST_CASE("oracle classes over A2") {
  const auto c = Census::build(testsupport::a2(), 2);
  const int s1 = *c.index_of({1, 0}), s2 = *c.index_of({0, 1}), p1 = *c.index_of({1, 1});
  const auto torsion = all_torsion_classes(c);
  const std::vector<IndexSet> expected{{}, {s1}, {s2}, {p1, s1}, {s1, s2, p1}};
  CHECK(torsion.size() == 5);
  for (const auto& e : expected) CHECK(std::find(torsion.begin(), torsion.end(), e) != torsion.end());
  CHECK(all_torsionfree_classes(c).size() == 5);
  const auto thick = all_thick_subcategories(c);
  CHECK(thick.size() == 5);
  for (const auto& e : std::vector<IndexSet>{{}, {s1}, {s2}, {p1}, {s1, s2, p1}})
    CHECK(std::find(thick.begin(), thick.end(), e) != thick.end());
}

TEST_CASE("oracle classes over A1") {
  const auto c = Census::build(family_quiver("A1"), 3);
  CHECK(all_torsion_classes(c).size() == 2);
  CHECK(all_torsionfree_classes(c).size() == 2);
  CHECK(all_thick_subcategories(c).size() == 2);
}

TEST_CASE("oracle bounds") {
  const auto d5 = Census::build(family_quiver("D5"), 2);
  CHECK_THROWS_AS(all_torsion_classes(d5), InputError);
  ClosureSpec tight;
  tight.dim_bound = 2;
  CHECK_THROWS_AS(all_closed_classes(Census::build(family_quiver("A3"), 2), tight), InputError);
}

TEST_CASE("torsion classes and torsionfree classes are Hom-perpendicular partners") {
  for (const auto& tag : family_orientations("A3")) {
    const auto c = Census::build(family_quiver(tag), 2);
    const auto torsion = all_torsion_classes(c);
    const auto torsionfree = all_torsionfree_classes(c);
    CHECK(torsion.size() == torsionfree.size());
    for (const auto& t : torsion) {
      IndexSet perp;
      for (int x = 0; x < c.size(); ++x) {
        bool orthogonal = true;
        t.for_each([&](int y) { orthogonal = orthogonal && c.hom(y, x) == 0; });
        if (orthogonal) perp.insert(x);
      }
      CHECK(std::find(torsionfree.begin(), torsionfree.end(), perp) != torsionfree.end());
    }
  }
}

TEST_CASE("oracle agrees with the constructive side on A3 and D4") {
  for (const char* tag : {"A3:<>", "D4:<<>"}) {
    const auto c = Census::build(family_quiver(tag), 2);
    const auto op = Census::build(c.quiver().opposite(), 2);
    CHECK(all_torsion_classes(c) == enumerate_set(c, op, SetKind::torsion));
    CHECK(all_torsionfree_classes(c) == enumerate_set(c, op, SetKind::torsionfree));
    CHECK(all_thick_subcategories(c) == enumerate_set(c, op, SetKind::thick));
  }
}

TEST_CASE("property: serial and parallel oracle scans agree") {
  const auto c = Census::build(family_quiver("A4:<>>"), 2);
  for (auto kind : {ClosureKind::torsion, ClosureKind::torsionfree, ClosureKind::thick}) {
    ClosureSpec spec;
    spec.kind = kind;
    CHECK(all_closed_classes(c, spec, Exec::serial) == all_closed_classes(c, spec, Exec::parallel));
  }
}
