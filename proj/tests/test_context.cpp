#include <doctest.h>

#include <algorithm>

#include "algebras.hpp"
#include "extri/errors.hpp"
#include "extri/homalg.hpp"
#include "les.hpp"
#include "oracle.hpp"

using namespace extri;

namespace {

std::vector<std::string> labels(const Context& ctx, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(ctx.label(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> indices(const Ambient& amb, std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* n : names) out.push_back(amb.find_label(n));
  return out;
}

}  // namespace

TEST_SUITE("context") {
  TEST_CASE("object counts of the exact models") {
    CHECK(Ambient::exact(fixtures::a2())->size() == 3);
    CHECK(Ambient::exact(fixtures::dual_numbers())->size() == 2);
    CHECK(Ambient::exact(fixtures::t3())->size() == 5);
    CHECK(Ambient::exact(fixtures::nak22())->size() == 4);
    CHECK(Ambient::exact(fixtures::nak32())->size() == 6);
    CHECK(Ambient::exact(nakayama_cyclic(10, 4))->size() == 40);
  }

  TEST_CASE("object counts of the stable models") {
    CHECK(Ambient::stable(nakayama_cyclic(10, 4))->size() == 30);
    CHECK(Ambient::stable(fixtures::dual_numbers())->size() == 1);
    CHECK(Ambient::stable(fixtures::nak22())->size() == 2);
    CHECK_THROWS_AS(Ambient::stable(fixtures::a2()), NotSelfInjectiveError);
  }

  TEST_CASE("labels and aliases of T3") {
    auto amb = Ambient::exact(fixtures::t3());
    CHECK(amb->find_label("P3") == amb->find_label("S3"));
    CHECK(amb->find_label("I1") == amb->find_label("S1"));
    CHECK(amb->find_label("P1") >= 0);
    CHECK(amb->find_label("Q7") == -1);
  }

  TEST_CASE("extension closure in kA2") {
    auto amb = Ambient::exact(fixtures::a2());
    auto r = check_extension_closed(*amb, indices(*amb, {"S1", "S2"}));
    CHECK_FALSE(r.closed);
    CHECK(amb->object(r.outside).label == "P1");
    CHECK_THROWS_AS(Context::sub(amb, indices(*amb, {"S1", "S2"})), NotExtensionClosedError);
    CHECK(check_extension_closed(*amb, indices(*amb, {"P1", "P2"})).closed);
    CHECK(check_extension_closed(*amb, indices(*amb, {"S1", "S2", "P1"})).closed);
    auto whole = Context::sub(amb, indices(*amb, {"S1", "S2", "P1"}));
    CHECK(whole.size() == 3);
    CHECK(whole.id_hash() != Context::sub(amb, indices(*amb, {"P1", "P2"})).id_hash());
  }

  TEST_CASE("the unique nonsplit extension of kA2") {
    auto amb = Ambient::exact(fixtures::a2());
    int s1 = amb->find_label("S1"), s2 = amb->find_label("S2"), p1 = amb->find_label("P1");
    CHECK(amb->e_dim(s1, s2) == 1);
    REQUIRE(amb->middles(s1, s2).size() == 1);
    auto mid = amb->middles(s1, s2)[0];
    CHECK(mid[static_cast<std::size_t>(p1)] == 1);
    CHECK(std::count(mid.begin(), mid.end(), 0) == 2);
    auto conf = realize(amb->ext_space(s1, s2), {1});
    CHECK(conf.b.dims == std::vector<int>{1, 1});
  }

  TEST_CASE("nonzero classes do not split") {
    for (const auto& [name, alg] : fixtures::all()) {
      CAPTURE(name);
      auto amb = Ambient::exact(alg);
      for (std::size_t c = 0; c < amb->size(); ++c)
        for (std::size_t a = 0; a < amb->size(); ++a)
          for (const auto& cls : amb->classes(static_cast<int>(c), static_cast<int>(a))) {
            auto s = realize(amb->ext_space(static_cast<int>(c), static_cast<int>(a)), cls);
            // A section of y would make id_C a combination of y . s.
            SpanBuilder span(s.c.p(), map_length(s.c, s.c));
            for (const auto& sec : hom_basis(s.c, s.b)) span.add(flatten(compose(s.y, sec)));
            CHECK_FALSE(span.contains(flatten(identity_map(s.c))));
          }
    }
  }

  TEST_CASE("E is additive in the second argument") {
    auto alg = fixtures::t3();
    auto amb = Ambient::exact(alg);
    for (const auto& c : amb->objects())
      for (const auto& a1 : amb->objects())
        for (const auto& a2 : amb->objects()) {
          auto sum = direct_sum(alg, {a1.module, a2.module}).sum;
          CHECK(extension_space(c.module, sum).basis.size() ==
                extension_space(c.module, a1.module).basis.size() + extension_space(c.module, a2.module).basis.size());
        }
  }

  TEST_CASE("projectives and injectives") {
    auto ctx = Context::whole(Ambient::exact(fixtures::a2()));
    CHECK(labels(ctx, ctx.projectives()) == std::vector<std::string>{"P1", "S2"});
    CHECK(labels(ctx, ctx.injectives()) == std::vector<std::string>{"P1", "S1"});
    CHECK(ctx.enough_projectives());
    CHECK(ctx.enough_injectives());
    auto st = Context::whole(Ambient::stable(nakayama_cyclic(10, 4)));
    CHECK(st.projectives().empty());
    CHECK(st.injectives().empty());
    CHECK(st.enough_projectives());
    CHECK(st.enough_injectives());
  }

  TEST_CASE("E^k of whole contexts matches the oracle") {
    for (const auto& [name, alg] : fixtures::all()) {
      CAPTURE(name);
      auto ctx = Context::whole(Ambient::exact(alg));
      auto table = oracle::ext_table(ctx, 4);
      for (int k = 1; k <= 4; ++k)
        for (std::size_t a = 0; a < ctx.size(); ++a)
          for (std::size_t b = 0; b < ctx.size(); ++b) {
            CHECK(ctx.e_k(k, static_cast<int>(a), static_cast<int>(b)) == table[static_cast<std::size_t>(k - 1)][a][b]);
            CHECK(ctx.e_k(k, static_cast<int>(a), static_cast<int>(b)) ==
                  ext_dim(k, ctx.module(static_cast<int>(a)), ctx.module(static_cast<int>(b))));
          }
      CHECK(oracle::projective_mask(table) == [&] {
        std::uint64_t m = 0;
        for (int i : ctx.projectives()) m |= std::uint64_t{1} << i;
        return m;
      }());
    }
    for (auto alg : {fixtures::dual_numbers(), fixtures::nak22(), fixtures::nak32()}) {
      auto ctx = Context::whole(Ambient::stable(alg));
      auto table = oracle::ext_table(ctx, 4);
      for (int k = 1; k <= 4; ++k)
        for (std::size_t a = 0; a < ctx.size(); ++a)
          for (std::size_t b = 0; b < ctx.size(); ++b)
            CHECK(ctx.e_k(k, static_cast<int>(a), static_cast<int>(b)) == table[static_cast<std::size_t>(k - 1)][a][b]);
    }
  }

  TEST_CASE("stable dual numbers are periodic") {
    auto ctx = Context::whole(Ambient::stable(fixtures::dual_numbers()));
    REQUIRE(ctx.size() == 1);
    CHECK(ctx.e_dim(0, 0) == 1);
    for (int k = 1; k <= 4; ++k) CHECK(ctx.e_k(k, 0, 0) == 1);
  }

  TEST_CASE("projectives are E^k-acyclic") {
    for (const auto& [name, alg] : fixtures::all()) {
      auto ctx = Context::whole(Ambient::exact(alg));
      for (int p : ctx.projectives())
        for (std::size_t m = 0; m < ctx.size(); ++m)
          for (int k = 1; k <= 4; ++k) CHECK(ctx.e_k(k, p, static_cast<int>(m)) == 0);
    }
  }

  TEST_CASE("syzygy and cosyzygy routes agree") {
    auto check_routes = [](const Context& ctx) {
      if (!ctx.enough_projectives() || !ctx.enough_injectives()) return;
      for (int k = 1; k <= ctx.options().kmax; ++k)
        for (std::size_t a = 0; a < ctx.size(); ++a)
          for (std::size_t b = 0; b < ctx.size(); ++b)
            CHECK(ctx.e_k_omega(k, static_cast<int>(a), static_cast<int>(b)) ==
                  ctx.e_k_sigma(k, static_cast<int>(a), static_cast<int>(b)));
    };
    for (const auto& [name, alg] : fixtures::all()) check_routes(Context::whole(Ambient::exact(alg)));
    check_routes(Context::whole(Ambient::stable(nakayama_cyclic(10, 4))));
    auto amb = Ambient::exact(fixtures::t3());
    check_routes(Context::sub(amb, indices(*amb, {"S1", "S3", "P1", "P2"})));
  }

  TEST_CASE("sub-contexts inherit E from the parent") {
    auto amb = Ambient::exact(fixtures::nak32());
    auto whole = Context::whole(amb);
    auto sub = Context::sub(amb, indices(*amb, {"S1", "P1", "P2", "P3"}));
    for (std::size_t a = 0; a < sub.size(); ++a)
      for (std::size_t b = 0; b < sub.size(); ++b)
        CHECK(sub.e_dim(static_cast<int>(a), static_cast<int>(b)) ==
              whole.e_dim(whole.local_index(sub.ambient_index(static_cast<int>(a))),
                          whole.local_index(sub.ambient_index(static_cast<int>(b)))));
  }

  TEST_CASE("deflations and inflations from add X") {
    auto amb = Ambient::exact(fixtures::a2());
    auto ctx = Context::whole(amb);
    int s1 = ctx.find_label("S1"), p1 = ctx.find_label("P1"), s2 = ctx.find_label("S2");
    auto approx = ctx.right_approximation({p1, s2}, s1);
    REQUIRE(approx);
    CHECK(approx->source[static_cast<std::size_t>(p1)] == 1);
    CHECK(approx->third[static_cast<std::size_t>(s2)] == 1);
    CHECK_FALSE(ctx.right_approximation({s2}, s1));
    auto cones = ctx.all_inflation_cones({p1}, s2, 2, 4096);
    CHECK(std::find(cones.begin(), cones.end(), Multiset{1, 0, 0}) != cones.end());
  }

  TEST_CASE("long exact sequences of every conflation") {
    auto run = [](const AmbientPtr& amb) {
      const int depth = 4;
      std::vector<les::Resolution> res;
      std::vector<les::Coresolution> cores;
      for (const auto& o : amb->objects()) {
        res.push_back(les::resolve(o.module, depth));
        cores.push_back(les::coresolve(o.module, depth));
      }
      for (std::size_t c = 0; c < amb->size(); ++c)
        for (std::size_t a = 0; a < amb->size(); ++a)
          for (const auto& cls : amb->classes(static_cast<int>(c), static_cast<int>(a))) {
            auto s = realize(amb->ext_space(static_cast<int>(c), static_cast<int>(a)), cls);
            for (std::size_t x = 0; x < amb->size(); ++x) {
              auto out = les::check(s, res[x], cores[x], depth);
              CAPTURE(out.failure);
              CHECK(out.exact);
            }
          }
    };
    for (const auto& [name, alg] : fixtures::all()) run(Ambient::exact(alg));
    run(Ambient::stable(fixtures::nak32()));
  }
}
