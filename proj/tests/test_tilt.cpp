#include <doctest.h>

#include <random>

#include "algebras.hpp"
#include "extri/errors.hpp"
#include "extri/tilt.hpp"
#include "oracle.hpp"

using namespace extri;

namespace {

Subcat named(const Context& ctx, std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* n : names) {
    int i = ctx.find_label(n);
    REQUIRE(i >= 0);
    out.push_back(i);
  }
  return Subcat(ctx.size(), out);
}

Subcat from_mask(std::size_t n, std::uint64_t mask) { return Subcat(n, oracle::bits(mask, n)); }

std::vector<std::uint64_t> masks(const std::vector<Subcat>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& s : v) {
    std::uint64_t m = 0;
    for (int i : s.members()) m |= std::uint64_t{1} << i;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const ClauseResult& clause(const Verdict& v, const std::string& name) {
  for (const auto& c : v.clauses)
    if (c.clause == name) return c;
  FAIL("missing clause " << name);
  return v.clauses.front();
}

}  // namespace

TEST_SUITE("tilt") {
  TEST_CASE("orthogonals") {
    auto ctx = Context::whole(Ambient::exact(fixtures::a2()));
    Checker ch(ctx);
    const auto n = ctx.size();
    CHECK(ch.orthogonal(Subcat(n, {}), Side::Right, 1, 3) == Subcat::all(n));
    CHECK(ch.orthogonal(named(ctx, {"S1"}), Side::Right, 1, 1) == named(ctx, {"S1", "P1"}));
    CHECK(ch.orthogonal(Subcat(n, ctx.projectives()), Side::Right, 1, 3) == Subcat::all(n));
    CHECK(ch.orthogonal(Subcat(n, ctx.injectives()), Side::Left, 1, 3) == Subcat::all(n));
  }

  TEST_CASE("orthogonals shrink as X or the degree range grows") {
    for (const auto& [name, alg] : fixtures::all()) {
      auto ctx = Context::whole(Ambient::exact(alg));
      Checker ch(ctx);
      const auto n = ctx.size();
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        auto sx = from_mask(n, x);
        for (auto side : {Side::Left, Side::Right}) {
          for (int k = 1; k < 3; ++k) CHECK(ch.orthogonal(sx, side, 1, k + 1).subset_of(ch.orthogonal(sx, side, 1, k)));
          for (std::size_t i = 0; i < n; ++i) {
            auto bigger = from_mask(n, x | std::uint64_t{1} << i);
            CHECK(ch.orthogonal(bigger, side, 1, 2).subset_of(ch.orthogonal(sx, side, 1, 2)));
          }
        }
      }
    }
  }

  TEST_CASE("resolution dimensions") {
    auto a2 = Context::whole(Ambient::exact(fixtures::a2()));
    Checker ca(a2);
    auto proj = Subcat(a2.size(), a2.projectives());
    CHECK(ca.resdim(proj, a2.find_label("S1"), 1) == 1);
    CHECK(ca.resdim(proj, a2.find_label("P1"), 3) == 0);
    CHECK(ca.wedge(proj, 0) == proj);
    CHECK(ca.wedge(proj, 1) == Subcat::all(a2.size()));

    auto t3 = Context::whole(Ambient::exact(fixtures::t3()));
    Checker ct(t3);
    auto tp = Subcat(t3.size(), t3.projectives());
    CHECK(ct.resdim(tp, t3.find_label("S1"), 2) == 2);
    CHECK(ct.resdim(tp, t3.find_label("S1"), 1) == kUnbounded);
    CHECK(ct.resdim(tp, t3.find_label("S2"), 2) == 1);

    auto dn = Context::whole(Ambient::exact(fixtures::dual_numbers()));
    Checker cd(dn);
    auto lam = named(dn, {"P1"});
    CHECK(cd.resdim(lam, dn.find_label("S1"), 5) == kUnbounded);
    for (int m = 0; m <= 5; ++m) CHECK(cd.wedge(lam, m) == lam);
  }

  TEST_CASE("greedy and exhaustive resolution dimensions agree") {
    for (const auto& [name, alg] : fixtures::all()) {
      CAPTURE(name);
      auto ctx = Context::whole(Ambient::exact(alg));
      Checker ch(ctx);
      const auto n = ctx.size();
      for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
        auto sx = from_mask(n, x);
        for (std::size_t c = 0; c < n; ++c) {
          CHECK(ch.resdim_greedy(sx, static_cast<int>(c), 3) == ch.resdim_exhaustive(sx, static_cast<int>(c), 3));
          CHECK(ch.coresdim_greedy(sx, static_cast<int>(c), 3) == ch.coresdim_exhaustive(sx, static_cast<int>(c), 3));
        }
        for (int m = 0; m < 3; ++m) {
          CHECK(ch.wedge(sx, m).subset_of(ch.wedge(sx, m + 1)));
          CHECK(ch.vee(sx, m).subset_of(ch.vee(sx, m + 1)));
          CHECK(sx.subset_of(ch.wedge(sx, m)));
        }
      }
    }
  }

  TEST_CASE("trivial cotorsion pairs") {
    for (const auto& [name, alg] : fixtures::all()) {
      CAPTURE(name);
      auto ctx = Context::whole(Ambient::exact(alg));
      Checker ch(ctx);
      auto all = Subcat::all(ctx.size());
      for (int n = 1; n <= 3; ++n) {
        CHECK(ch.check_cotorsion(Subcat(ctx.size(), ctx.projectives()), all, n).pass);
        CHECK(ch.check_cotorsion(all, Subcat(ctx.size(), ctx.injectives()), n).pass);
      }
    }
  }

  TEST_CASE("a failing pair reports its witness") {
    auto ctx = Context::whole(Ambient::exact(fixtures::a2()));
    Checker ch(ctx);
    auto x = named(ctx, {"P1", "P2", "S1"});
    auto v = ch.check_cotorsion(x, x, 1);
    CHECK_FALSE(v.pass);
    const auto& c = clause(v, "e_vanishing");
    CHECK_FALSE(c.pass);
    REQUIRE(c.witness);
    CHECK(ctx.label(c.witness->object) == "S1");
    CHECK(ctx.label(c.witness->partner) == "S2");
    CHECK(c.witness->degree == 1);
  }

  TEST_CASE("cluster tilting examples") {
    auto t3 = Context::whole(Ambient::exact(fixtures::t3()));
    Checker ct(t3);
    CHECK(ct.check_cluster_tilting(named(t3, {"P1", "P2", "P3", "S1"}), 2).pass);
    CHECK_FALSE(ct.check_cluster_tilting(Subcat::all(t3.size()), 2).pass);
    auto e = ct.enumerate_cluster_tilting(2);
    REQUIRE(e.size() == 1);
    CHECK(e[0] == named(t3, {"P1", "P2", "P3", "S1"}));

    auto a2 = Context::whole(Ambient::exact(fixtures::a2()));
    Checker ca(a2);
    for (std::uint64_t x = 0; x < 8; ++x) CHECK_FALSE(ca.check_cluster_tilting(from_mask(3, x), 2).pass);
    CHECK(ca.enumerate_cluster_tilting(2).empty());
  }

  TEST_CASE("semisimple contexts") {
    auto ctx = Context::whole(Ambient::exact(parse_algebra("field 2; vertices 1 2")));
    Checker ch(ctx);
    auto all = Subcat::all(ctx.size());
    CHECK(ch.enumerate_cluster_tilting(2) == std::vector<Subcat>{all});
    for (int n = 1; n <= 3; ++n) {
      auto r = ch.verify_theorem(n);
      CHECK(r.equal);
      CHECK(r.cluster_tilting == std::vector<Subcat>{all});
    }
  }

  TEST_CASE("theorem examples") {
    auto a2 = Context::whole(Ambient::exact(fixtures::a2()));
    Checker ca(a2);
    for (int n = 1; n <= 3; ++n) {
      auto r = ca.verify_theorem(n);
      CHECK(r.equal);
      CHECK(r.cluster_tilting.empty());
      CHECK(r.cotorsion.empty());
    }
    auto t3 = Context::whole(Ambient::exact(fixtures::t3()));
    Checker ct(t3);
    auto r = ct.verify_theorem(1);
    CHECK(r.equal);
    CHECK(r.cotorsion == std::vector<Subcat>{named(t3, {"P1", "P2", "P3", "S1"})});
  }

  TEST_CASE("theorem sets match the Ext-table oracle") {
    for (const auto& [name, alg] : fixtures::all()) {
      CAPTURE(name);
      auto ctx = Context::whole(Ambient::exact(alg));
      auto table = oracle::ext_table(ctx, 4);
      Checker ch(ctx);
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        auto expected = oracle::cluster_tilting_sets(table, n + 1);
        auto r = ch.verify_theorem(n);
        CHECK(r.equal);
        CHECK(masks(r.cluster_tilting) == expected);
        CHECK(masks(r.cotorsion) == expected);
      }
    }
  }

  TEST_CASE("exhaustive mode agrees with the default") {
    CheckOptions exhaustive;
    exhaustive.exhaustive = true;
    for (auto alg : {fixtures::a2(), fixtures::t3(), fixtures::nak22()}) {
      auto ctx = Context::whole(Ambient::exact(alg));
      Checker fast(ctx), slow(ctx, exhaustive);
      const auto n = ctx.size();
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        for (int k = 1; k <= 2; ++k) {
          auto sx = from_mask(n, x);
          CHECK(fast.check_cotorsion(sx, sx, k).pass == slow.check_cotorsion(sx, sx, k).pass);
        }
    }
  }

  TEST_CASE("degree beyond the table depth is refused") {
    ContextOptions shallow;
    shallow.kmax = 1;
    auto ctx = Context::whole(Ambient::exact(fixtures::t3()), shallow);
    Checker ch(ctx);
    CHECK_THROWS_AS(ch.check_cluster_tilting(Subcat::all(ctx.size()), 3), Error);
    CHECK_THROWS_AS(ch.check_cotorsion(Subcat::all(ctx.size()), Subcat::all(ctx.size()), 2), Error);
  }

  TEST_CASE("lemma checks on small contexts") {
    for (auto alg : {fixtures::a2(), fixtures::t3()}) {
      auto ctx = Context::whole(Ambient::exact(alg));
      Checker ch(ctx);
      const auto n = ctx.size();
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        for (int k = 1; k <= 3; ++k) CHECK(ch.verify_lemma_32(from_mask(n, x), k).holds);
    }
  }

  TEST_CASE("subcategory algebra") {
    Subcat a(5, {0, 2}), b(5, {2, 4});
    CHECK(a.unite(b) == Subcat(5, {0, 2, 4}));
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(1));
    CHECK(Subcat(5, {2}).subset_of(a));
    CHECK(a < Subcat(5, {0, 1, 2}));
    CHECK(a.key() == "10100");
  }
}
