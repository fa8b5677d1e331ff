#include <doctest.h>

#include "algebras.hpp"
#include "extri/errors.hpp"
#include "extri/report.hpp"
#include "extri/search.hpp"

using namespace extri;

TEST_SUITE("report") {
  TEST_CASE("verdict fields") {
    auto ctx = Context::whole(Ambient::exact(fixtures::a2()));
    Checker ch(ctx);
    auto all = Subcat::all(ctx.size());
    auto j = report::verdict(ctx, ch.check_cotorsion(all, all, 1));
    CHECK(j["pass"] == false);
    bool witnessed = false;
    for (const auto& c : j["clauses"]) {
      CHECK(c.contains("clause"));
      if (c["clause"] == "e_vanishing") {
        CHECK(c["witness"]["witness_object"] == "S1");
        CHECK(c["witness"]["degree"] == 1);
        witnessed = true;
      }
      if (c["clause"] == "deflation_resolution") CHECK(c.contains("conflation"));
    }
    CHECK(witnessed);
  }

  TEST_CASE("headers identify the context") {
    auto amb = Ambient::exact(fixtures::t3());
    auto whole = Context::whole(amb);
    auto h = report::context_header(whole);
    CHECK(h["objects"] == 5);
    CHECK(h["kind"] == "mod");
    CHECK(h["algebra_hash"] == report::hex(fixtures::t3()->hash()));
    CHECK(report::hex(0xabcULL).size() == 16);
  }

  TEST_CASE("reports are reproducible") {
    auto render = [] {
      auto ctx = Context::whole(Ambient::exact(fixtures::nak32()));
      Checker ch(ctx);
      report::Json j;
      j["objects"] = report::objects(ctx);
      j["ext"] = report::ext_tables(ctx, 3);
      j["theorem"] = report::theorem(ctx, ch.verify_theorem(2));
      return j.dump() + report::theorem_text(ctx, ch.verify_theorem(2)) + report::ext_tables_text(ctx, 3);
    };
    CHECK(render() == render());
  }

  TEST_CASE("multiset text") {
    auto ctx = Context::whole(Ambient::exact(fixtures::a2()));
    CHECK(report::multiset_text(ctx, Multiset{0, 0, 0}) == "0");
    CHECK(report::multiset_text(ctx, Multiset{1, 0, 2}) == "S1 + 2*P1");
  }

  TEST_CASE("small subcategory search") {
    auto amb = Ambient::stable(nakayama_cyclic(4, 3));
    SubcontextSearchOptions opt;
    opt.ct_size = 2;
    opt.ct_degree = 2;
    opt.budget = 3;
    opt.generator_samples = 16;
    opt.generator_size = 2;
    auto r = search_cluster_tilting_subcontexts(amb, opt);
    CHECK(r.frontier == 3);
    CHECK(r.generator_sets_examined == 16);
    for (const auto& h : r.hits) {
      CHECK(h.x.size() == 2);
      CHECK(h.cluster_tilting.pass);
      CHECK(h.cotorsion.pass);
      CHECK(h.theorem_checked);
      CHECK(h.theorem_equal);
    }
    auto again = search_cluster_tilting_subcontexts(amb, opt);
    CHECK(report::search(amb, r).dump() == report::search(amb, again).dump());
    opt.ct_degree = 1;
    CHECK_THROWS_AS(search_cluster_tilting_subcontexts(amb, opt), Error);
  }
}
