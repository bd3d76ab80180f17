#include <doctest.h>

#include <set>
#include <sstream>

#include "higman/families.hpp"
#include "higman/groups.hpp"

using namespace higman;

TEST_SUITE("groups") {

TEST_CASE("built-in families satisfy the group axioms and have the right shape") {
  struct row {
    const char* spec;
    std::size_t order;
    bool abelian;
    std::size_t exponent;
    std::size_t center;
  };
  const row rows[] = {
      {"C:12", 12, true, 12, 12},         {"EA:2:3", 8, true, 2, 8},
      {"EA:3:3", 27, true, 3, 27},        {"Heis:3:1", 27, false, 3, 3},
      {"Heis:5:1", 125, false, 5, 5},     {"Q8cp:1", 8, false, 4, 2},
      {"Q8cp:2", 32, false, 4, 2},        {"GenDih:C:4", 8, false, 4, 2},
      {"GenDih:C:5", 10, false, 10, 1},    {"Prod:(C:2),(C:4)", 8, true, 4, 8},
  };
  for (const auto& r : rows) {
    CAPTURE(r.spec);
    const auto g = build_family(r.spec);
    CHECK(g->order() == r.order);
    CHECK(g->is_abelian() == r.abelian);
    CHECK(g->exponent() == r.exponent);
    CHECK(center(g).order() == r.center);
    CHECK(g->name() == r.spec);
    for (element x = 0; x < g->order(); ++x) {
      CHECK(g->mul(x, g->inv(x)) == 0);
      CHECK(g->mul(0, x) == x);
    }
  }
}

TEST_CASE("Heisenberg product follows the unitriangular law") {
  const auto g = heisenberg(3, 1);
  auto idx = [](unsigned a, unsigned b, unsigned c) { return static_cast<element>(a + 3 * b + 9 * c); };
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned a2 = 0; a2 < 3; ++a2)
        for (unsigned b2 = 0; b2 < 3; ++b2)
          CHECK(g->mul(idx(a, b, 1), idx(a2, b2, 2)) ==
                idx((a + a2) % 3, (b + b2) % 3, (1 + 2 + a * b2) % 3));
}

TEST_CASE("Q8 and its central products") {
  const auto q = build_family("Q8cp:1");
  std::size_t order_four = 0;
  for (element x = 0; x < q->order(); ++x) order_four += q->element_order(x) == 4;
  CHECK(order_four == 6);
  CHECK(describe_group(*q) == "Q_8");
  CHECK(q->has_labels());
  CHECK(describe_group(*build_family("GenDih:(C:4)")) == "D_8");
  // Extraspecial of order 32: every square is central.
  const auto q2 = build_family("Q8cp:2");
  const auto z = center(q2);
  for (element x = 0; x < q2->order(); ++x) CHECK(z.contains(q2->mul(x, x)));
}

TEST_CASE("non-groups are rejected") {
  // Latin square of order 5 with all elements self-inverse: a loop, not a group.
  std::vector<element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                               3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(finite_group(5, loop), std::invalid_argument);
  std::vector<element> no_identity = {1, 0, 0, 1};
  CHECK_THROWS_AS(finite_group(2, no_identity), std::invalid_argument);
  CHECK_THROWS_AS(build_family("Heis:6:1"), std::invalid_argument);
  CHECK_THROWS_AS(build_family("nonsense:3"), std::invalid_argument);
}

TEST_CASE("subgroups, normality and right cosets") {
  const auto g = build_family("GenDih:(C:6)");
  CHECK(subgroups_of_order(g, 6).size() == 3);
  for (const auto& h : subgroups_of_order(g, 2)) CHECK(h.order() == 2);
  const auto rot = make_subgroup(g, {0, 1, 2, 3, 4, 5});
  CHECK(is_normal(rot));
  const auto refl = make_subgroup(g, {0, 6});
  CHECK_FALSE(is_normal(refl));
  CHECK_THROWS_AS(make_subgroup(g, {0, 1}), std::invalid_argument);

  const auto cosets = right_cosets(*g, refl);
  CHECK(cosets.size() == 6);
  std::set<element> seen;
  for (const auto& c : cosets) {
    CHECK(c.size() == 2);
    // Hg: consecutive elements differ by an element of H on the left.
    CHECK(refl.contains(g->mul(c[1], g->inv(c[0]))));
    seen.insert(c.begin(), c.end());
  }
  CHECK(seen.size() == 12);
}

TEST_CASE("automorphism and isomorphism counts") {
  CHECK(automorphisms(cyclic_group(3)).size() == 2);
  CHECK(automorphisms(cyclic_group(4)).size() == 2);
  CHECK(automorphisms(elementary_abelian(2, 2)).size() == 6);
  CHECK(automorphisms(build_family("Q8cp:1")).size() == 24);
  CHECK(automorphisms(build_family("GenDih:(C:4)")).size() == 8);
  const auto a = automorphisms(cyclic_group(5));
  CHECK(a.front().map == std::vector<element>{0, 1, 2, 3, 4});
  CHECK(isomorphisms(cyclic_group(4), elementary_abelian(2, 2)).empty());
  CHECK(isomorphisms(build_family("Prod:(C:2),(C:3)"), cyclic_group(6)).size() == 2);
  const auto phi = isomorphisms(build_family("Prod:(C:2),(C:3)"), cyclic_group(6)).front();
  CHECK(phi.is_valid());
  CHECK(compose(phi.inverse(), phi).map == std::vector<element>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("group descriptions") {
  CHECK(describe_group(*cyclic_group(4)) == "C_4");
  CHECK(describe_group(*elementary_abelian(2, 2)) == "E(4)");
  CHECK(is_cyclic(*cyclic_group(7)));
  CHECK(is_elementary_abelian(*elementary_abelian(3, 2)));
  CHECK_FALSE(is_elementary_abelian(*cyclic_group(4)));
}

TEST_CASE("finite fields") {
  for (auto [p, d] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 1u}, {2u, 6u}}) {
    const galois_field f(p, d);
    const unsigned q = f.size();
    CAPTURE(q);
    for (unsigned a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, 1) == a);
      unsigned inverses = 0;
      for (unsigned b = 0; b < q; ++b) {
        inverses += f.mul(a, b) == 1;
        for (unsigned c = 0; c < q; c += (q > 16 ? 7 : 1))
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
      CHECK(inverses == (a == 0 ? 0u : 1u));
    }
  }
  CHECK(prime_power(81) == std::pair{3u, 4u});
  CHECK_THROWS_AS(prime_power(12), std::invalid_argument);
}

TEST_CASE("group files round-trip") {
  const auto g = build_family("Heis:3:1");
  std::ostringstream out;
  write_group(out, *g);
  std::istringstream in(out.str());
  const auto back = read_group(in);
  CHECK(back->same_table(*g));
  std::ostringstream again;
  write_group(again, *back);
  CHECK(again.str() == out.str());

  std::istringstream bad("group 2\n0 1\n1 1\n");
  CHECK_THROWS(read_group(bad));
}

}  // TEST_SUITE
