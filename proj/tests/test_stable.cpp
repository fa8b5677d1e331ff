#include <doctest.h>

#include <random>

#include "algebras.hpp"
#include "extri/decompose.hpp"
#include "extri/errors.hpp"
#include "extri/homalg.hpp"
#include "extri/stable.hpp"
#include "oracle.hpp"

using namespace extri;

namespace {

bool stably_iso(const Representation& a, const Representation& b) {
  return is_isomorphic(strip_projective_summands(a), strip_projective_summands(b));
}

}  // namespace

TEST_SUITE("stable") {
  TEST_CASE("requires a self-injective algebra") {
    CHECK_THROWS_AS(StableCategory(fixtures::a2()), NotSelfInjectiveError);
    CHECK_NOTHROW(StableCategory(fixtures::nak32()));
  }

  TEST_CASE("dual numbers") {
    auto dn = fixtures::dual_numbers();
    StableCategory st(dn);
    auto s = simple_module(dn, 0);
    auto lam = projective_module(dn, 0);
    CHECK(st.stable_hom_dim(s, s) == 1);
    CHECK(st.stable_hom_dim(lam, s) == 0);
    CHECK(st.stable_hom_dim(s, lam) == 0);
    CHECK(is_isomorphic(st.suspension(s), s));
    CHECK(st.suspension(zero_representation(dn)).is_zero());
    auto f = st.stable_hom_basis(s, s).at(0);
    auto tri = st.cone(s, s, f);
    CHECK(strip_projective_summands(tri.cone).is_zero());
  }

  TEST_CASE("cyclic Nakayama (10, 4)") {
    auto alg = nakayama_cyclic(10, 4);
    StableCategory st(alg);
    auto amb = Ambient::stable(alg);
    REQUIRE(amb->size() == 30);
    std::vector<bool> hit_sigma(30, false), hit_omega(30, false);
    for (int i = 0; i < 30; ++i) {
      const auto& m = amb->object(i).module;
      CHECK(st.stable_hom_dim(m, m) == 1);
      int sig = amb->find(st.suspension(m));
      int om = amb->find(st.loop(m));
      REQUIRE(sig >= 0);
      REQUIRE(om >= 0);
      hit_sigma[static_cast<std::size_t>(sig)] = true;
      hit_omega[static_cast<std::size_t>(om)] = true;
      CHECK(amb->find(st.loop(st.suspension(m))) == i);
      CHECK(amb->find(st.suspension(st.loop(m))) == i);
    }
    for (int i = 0; i < 30; ++i) {
      CHECK(hit_sigma[static_cast<std::size_t>(i)]);
      CHECK(hit_omega[static_cast<std::size_t>(i)]);
    }
    for (int v = 0; v < 10; ++v) CHECK(st.stable_hom_dim(projective_module(alg, v), amb->object(v % 30).module) == 0);
  }

  TEST_CASE("stable Hom into a suspension is Ext^1") {
    auto alg = nakayama_cyclic(10, 4);
    StableCategory st(alg);
    auto amb = Ambient::stable(alg);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pick(0, 29);
    for (int i = 0; i < 100; ++i) {
      const auto& m = amb->object(pick(rng)).module;
      const auto& n = amb->object(pick(rng)).module;
      CHECK(st.stable_hom_dim(m, st.suspension(n)) == oracle::ext1_dim(m, n));
    }
    for (auto small : {fixtures::dual_numbers(), fixtures::nak22(), fixtures::nak32()}) {
      StableCategory s2(small);
      auto a2 = Ambient::stable(small);
      for (const auto& m : a2->objects())
        for (const auto& n : a2->objects())
          CHECK(s2.stable_hom_dim(m.module, s2.suspension(n.module)) == oracle::ext1_dim(m.module, n.module));
    }
  }

  TEST_CASE("shifts preserve stable Hom") {
    auto alg = nakayama_cyclic(5, 3);
    StableCategory st(alg);
    auto amb = Ambient::stable(alg);
    for (const auto& m : amb->objects())
      for (const auto& n : amb->objects()) {
        auto d = st.stable_hom_dim(m.module, n.module);
        CHECK(st.stable_hom_dim(st.suspension(m.module), st.suspension(n.module)) == d);
        CHECK(st.stable_hom_dim(st.loop(m.module), st.loop(n.module)) == d);
      }
  }

  TEST_CASE("cones") {
    auto alg = nakayama_cyclic(4, 3);
    StableCategory st(alg);
    auto amb = Ambient::stable(alg);
    std::mt19937_64 rng(32);
    for (const auto& m : amb->objects()) {
      auto id = st.cone(m.module, m.module, identity_map(m.module));
      CHECK(strip_projective_summands(id.cone).is_zero());
      for (const auto& n : amb->objects()) {
        auto z = st.cone(m.module, n.module, zero_map(m.module, n.module));
        CHECK(stably_iso(z.cone, direct_sum(alg, {n.module, st.suspension(m.module)}).sum));
        for (const auto& f : st.stable_hom_basis(m.module, n.module)) {
          auto tri = st.cone(m.module, n.module, f);
          CHECK(is_homomorphism(n.module, tri.cone, tri.to_cone));
          CHECK(is_homomorphism(tri.cone, tri.shift, tri.to_shift));
          // Rotation: the cone of N -> C recovers the suspension of M.
          auto rot = st.cone(n.module, tri.cone, tri.to_cone);
          CHECK(stably_iso(rot.cone, st.suspension(m.module)));
        }
      }
    }
  }

  TEST_CASE("projectively factoring maps") {
    auto dn = fixtures::dual_numbers();
    StableCategory st(dn);
    auto lam = projective_module(dn, 0);
    CHECK(st.projectively_factoring(lam, lam).size() == hom_dim(lam, lam));
    auto s = simple_module(dn, 0);
    CHECK(st.projectively_factoring(s, s).empty());
  }
}
