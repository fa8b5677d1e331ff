#include <doctest.h>

#include <algorithm>
#include <map>

#include "algebras.hpp"
#include "extri/errors.hpp"
#include "extri/representation.hpp"
#include "extri/stable.hpp"

using namespace extri;

namespace {

SparseVec normalized(SparseVec v, std::uint32_t p) {
  std::map<int, Scalar> acc;
  for (auto [i, c] : v) acc[i] = (acc[i] + c) % p;
  SparseVec out;
  for (auto [i, c] : acc)
    if (c) out.emplace_back(i, c);
  return out;
}

int trivial_path(const BoundQuiverAlgebra& alg, int v) {
  for (int i : alg.basis_from(v))
    if (alg.basis_path(i).length() == 0) return i;
  return -1;
}

// Reduces a path arrow by arrow from the left, then from the right, and
// compares both with the one-shot normal form.
void check_confluence(const AlgebraPtr& alg) {
  const auto& q = alg->quiver();
  const std::uint32_t p = alg->p();
  const std::size_t max_len = alg->loewy_length() + 1;
  std::vector<std::pair<int, std::vector<int>>> frontier;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) frontier.push_back({static_cast<int>(v), {}});
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::pair<int, std::vector<int>>> next;
    for (const auto& [src, arrows] : frontier) {
      int end = arrows.empty() ? src : q.arrow(arrows.back()).target;
      for (std::size_t a = 0; a < q.num_arrows(); ++a)
        if (q.arrow(static_cast<int>(a)).source == end) {
          auto ext = arrows;
          ext.push_back(static_cast<int>(a));
          next.push_back({src, ext});
        }
    }
    for (const auto& [src, arrows] : next) {
      SparseVec left{{trivial_path(*alg, src), 1}};
      for (int a : arrows) {
        SparseVec acc;
        for (auto [i, c] : left)
          for (auto [j, d] : alg->append_arrow(i, a)) acc.emplace_back(j, c * d % p);
        left = normalized(acc, p);
      }
      SparseVec right{{trivial_path(*alg, q.arrow(arrows.back()).target), 1}};
      for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
        SparseVec acc;
        for (auto [i, c] : right)
          for (auto [j, d] : alg->prepend_arrow(*it, i)) acc.emplace_back(j, c * d % p);
        right = normalized(acc, p);
      }
      SparseVec direct = normalized(alg->normal_form(src, arrows), p);
      CHECK(left == direct);
      CHECK(right == direct);
    }
    frontier = std::move(next);
  }
}

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("parse small algebras") {
    auto a2 = fixtures::a2();
    CHECK(a2->dim() == 3);
    CHECK(a2->num_vertices() == 2);
    CHECK(a2->p() == 2);
    auto dn = fixtures::dual_numbers();
    CHECK(dn->dim() == 2);
    CHECK(dn->loewy_length() == 2);
  }

  TEST_CASE("a loop without relations is rejected") {
    CHECK_THROWS_AS(parse_algebra("field 2; vertices 1; arrow x: 1->1"), NonAdmissibleError);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_algebra("field 4; vertices 1"), Error);
    CHECK_THROWS_AS(parse_algebra("field 2; vertices 1 1"), Error);
    CHECK_THROWS_AS(parse_algebra("field 2; vertices 1; arrow x: 1->2"), Error);
    CHECK_THROWS_AS(parse_algebra("field 2; vertices 1 2; arrow a: 1->2; relation b*b"), Error);
    CHECK_THROWS_AS(parse_algebra("field 2; vertices 1 2; arrow a: 1->2; frobnicate"), ParseError);
  }

  TEST_CASE("comments, newlines and field override") {
    auto alg = parse_algebra("# cycle\nfield 2\nvertices 1 2 # two\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation a*b\nrelation b*a\n", 3);
    CHECK(alg->p() == 3);
    CHECK(alg->dim() == 4);
  }

  TEST_CASE("commutative square") {
    // Paths: four trivial, four arrows, and one length-two path after a*b = c*d.
    auto alg = parse_algebra(
        "field 3; vertices 1 2 3 4; arrow a: 1->2; arrow b: 2->4; arrow c: 1->3; arrow d: 3->4; relation a*b + 2*c*d");
    CHECK(alg->dim() == 9);
    check_confluence(alg);
  }

  TEST_CASE("canonical text round-trips") {
    for (const auto& [name, alg] : fixtures::all()) {
      CAPTURE(name);
      auto again = parse_algebra(alg->to_text());
      CHECK(again->hash() == alg->hash());
      CHECK(again->dim() == alg->dim());
    }
  }

  TEST_CASE("cyclic Nakayama algebras") {
    auto big = nakayama_cyclic(10, 4);
    CHECK(big->dim() == 40);
    for (int v = 0; v < 10; ++v) CHECK(projective_module(big, v).total_dim() == 4);
    auto one = nakayama_cyclic(1, 2);
    CHECK(one->dim() == 2);
    CHECK(one->num_vertices() == 1);
    CHECK(nakayama_cyclic(2, 2)->dim() == 4);
    for (int n = 1; n <= 5; ++n)
      for (int r = 2; r <= 5; ++r) CHECK(nakayama_cyclic(n, r)->dim() == static_cast<std::size_t>(n * r));
  }

  TEST_CASE("projective dimensions add up to the algebra") {
    for (const auto& [name, alg] : fixtures::all()) {
      CAPTURE(name);
      std::size_t sum = 0;
      for (std::size_t v = 0; v < alg->num_vertices(); ++v)
        sum += static_cast<std::size_t>(projective_module(alg, static_cast<int>(v)).total_dim());
      CHECK(sum == alg->dim());
    }
  }

  TEST_CASE("canonical modules of kA2 and the dual numbers") {
    auto a2 = fixtures::a2();
    CHECK(projective_module(a2, 0).dims == std::vector<int>{1, 1});
    CHECK(projective_module(a2, 1).dims == std::vector<int>{0, 1});
    CHECK(injective_module(a2, 0).dims == std::vector<int>{1, 0});
    CHECK(injective_module(a2, 1).dims == std::vector<int>{1, 1});
    CHECK(simple_module(a2, 1).dims == std::vector<int>{0, 1});
    auto dn = fixtures::dual_numbers();
    CHECK(projective_module(dn, 0).total_dim() == 2);
    CHECK(injective_module(dn, 0).total_dim() == 2);
    for (const auto& [name, alg] : fixtures::all())
      for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
        CHECK(projective_module(alg, static_cast<int>(v)).satisfies_relations());
        CHECK(injective_module(alg, static_cast<int>(v)).satisfies_relations());
      }
  }

  TEST_CASE("self-injectivity") {
    CHECK(is_self_injective(nakayama_cyclic(10, 4)));
    CHECK(is_self_injective(fixtures::dual_numbers()));
    CHECK(is_self_injective(fixtures::nak22()));
    CHECK_FALSE(is_self_injective(fixtures::a2()));
    CHECK_FALSE(is_self_injective(fixtures::t3()));
  }

  TEST_CASE("path reduction is confluent") {
    for (const auto& [name, alg] : fixtures::all()) {
      CAPTURE(name);
      check_confluence(alg);
    }
    check_confluence(nakayama_cyclic(4, 3));
  }
}
