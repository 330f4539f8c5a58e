#include "doctest.h"
#include "support.hpp"
#include "tiltlab/errors.hpp"

using namespace tiltlab;
using testsupport::a2;
using testsupport::a2_p1;

TEST_CASE("hom bases over A2") {
  const auto q = a2();
  const auto s1 = Representation::simple(q, 2, 0);
  const auto s2 = Representation::simple(q, 2, 1);
  const auto p1 = a2_p1();
  const auto b = hom_basis(p1, s1);
  CHECK(b.size() == 1);
  for (const auto& f : b) CHECK(f.commutes());
  CHECK(hom_basis(s1, p1).empty());
  CHECK(hom_basis(s1, s1).size() == 1);
  CHECK(hom_dim(s2, p1) == 1);
  CHECK_THROWS_AS(hom_basis(s1, Representation::simple(Quiver(2, {{1, 0}}), 2, 0)), ContractError);
}

TEST_CASE("ext dimensions over A2") {
  const auto q = a2();
  const auto s1 = Representation::simple(q, 2, 0);
  const auto s2 = Representation::simple(q, 2, 1);
  const auto p1 = a2_p1();
  CHECK(ext_dim(s1, s2) == 1);
  CHECK(ext_dim(s2, s1) == 0);
  CHECK(ext_dim_by_cokernel(s1, s2) == 1);
  for (const auto& x : {s1, s2, p1}) {
    CHECK(ext_dim(p1, x) == 0);
    CHECK(ext_dim(s2, x) == 0);
  }
  CHECK(ext_cocycle_basis(s1, s2).size() == 1);
}

TEST_CASE("kernels, cokernels and images") {
  const auto q = a2();
  const auto p1 = a2_p1();
  const auto s2 = Representation::simple(q, 2, 1);
  const Morphism id(p1, p1, {Mat::identity(1, 2), Mat::identity(1, 2)});
  CHECK(kernel(id).object.is_zero());
  const auto socle = hom_basis(s2, p1);
  REQUIRE(socle.size() == 1);
  const auto c = cokernel(socle[0]);
  CHECK(c.object.dims() == DimVector{1, 0});
  CHECK(c.map.commutes());
  CHECK(c.map.is_surjective());
  const Morphism zero(p1, p1, {Mat(1, 1, 2), Mat(1, 1, 2)});
  CHECK(image(zero).object.is_zero());
  CHECK(kernel(zero).object.dims() == DimVector{1, 1});
}

TEST_CASE("extension middle terms") {
  const auto q = a2();
  const auto s1 = Representation::simple(q, 2, 0);
  const auto s2 = Representation::simple(q, 2, 1);
  const auto split = ext_cocycle_middle(s1, s2, {Mat(1, 1, 2)});
  CHECK(split == direct_sum(s2, s1));
  const auto e = extension(s1, s2, {Mat::from_rows({{1}}, 2)});
  CHECK(e.is_exact());
  CHECK(e.middle.dims() == DimVector{1, 1});
  CHECK(rank(e.middle.mat(0)) == 1);
  CHECK_THROWS_AS(ext_cocycle_middle(s1, s2, {Mat(2, 1, 2)}), ContractError);
}

TEST_CASE("duality") {
  const auto q = a2();
  const auto s1 = Representation::simple(q, 3, 0);
  CHECK(dual(s1) == Representation::simple(q.opposite(), 3, 0));
  const auto d = dual(a2_p1(3));
  CHECK(d.quiver() == Quiver(2, {{1, 0}}));
  CHECK(d.dims() == DimVector{1, 1});
  CHECK(dual(Representation::zero(q, 3)).is_zero());
  CHECK(dual(dual(a2_p1(3))) == a2_p1(3));
}

TEST_CASE("subrepresentations") {
  const auto q = a2();
  CHECK(sub_reps(Representation::simple(q, 2, 0)).size() == 2);
  CHECK(sub_reps(a2_p1()).size() == 3);
  // Over F_2, S1 + S2 with zero arrow has all four vertex-subspace pairs.
  CHECK(sub_reps(direct_sum(Representation::simple(q, 2, 0), Representation::simple(q, 2, 1))).size() == 4);
  for (const auto& s : sub_reps(a2_p1())) {
    CHECK(s.map.commutes());
    CHECK(s.map.is_injective());
  }
  CHECK(all_subspaces(2, 2).size() == 5);
  CHECK(all_subspaces(3, 2).size() == 16);
  CHECK(all_subspaces(2, 3).size() == 6);
  CHECK_THROWS_AS(sub_reps(Representation(q, 2, {5, 5}, {Mat(5, 5, 2)})), ContractError);
}

TEST_CASE("property: hom and ext agree on random representations") {
  std::mt19937 rng(5150);
  for (Scalar p : testsupport::small_primes()) {
    for (const char* tag : {"A2", "A3:><", "A3:<>", "D4:><<"}) {
      const auto q = family_quiver(tag);
      for (int trial = 0; trial < 15; ++trial) {
        const auto m = testsupport::random_rep(rng, q, p, 2);
        const auto w = testsupport::random_rep(rng, q, p, 2);
        const auto basis = hom_basis(m, w);
        CHECK(basis.size() == hom_dim(m, w));
        for (const auto& f : basis) CHECK(f.commutes());
        CHECK(ext_dim(m, w) == ext_dim_by_cokernel(m, w));
        CHECK(ext_cocycle_basis(m, w).size() == ext_dim(m, w));
        // Every basis element yields a kernel/image pair of matching size.
        for (const auto& f : basis) {
          const auto k = kernel(f);
          const auto im = image(f);
          CHECK(k.map.commutes());
          CHECK(im.map.commutes());
          CHECK(k.object.total_dim() + im.object.total_dim() == m.total_dim());
          const auto c = cokernel(f);
          CHECK(c.object.total_dim() + im.object.total_dim() == w.total_dim());
        }
        CHECK(dual(dual(m)) == m);
        CHECK(hom_dim(dual(w), dual(m)) == hom_dim(m, w));
      }
    }
  }
}
