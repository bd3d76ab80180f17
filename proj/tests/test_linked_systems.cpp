#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "higman/families.hpp"
#include "higman/group_ring.hpp"
#include "higman/higmanian.hpp"
#include "higman/linked_systems.hpp"
#include "higman/report.hpp"

using namespace higman;

namespace {

struct expected_row {
  family_point point;
  linked_params linked;
  const char* associate;
  higmanian_params scheme;
};

const expected_row table_rows[] = {
    {{family::q8cp, 2, 1, 1}, {4, 2, 4, 2, 2, 1, 3}, "C_3", {3, 4, 2, 4, 3}},
    {{family::heis, 3, 1, 1}, {9, 3, 9, 3, 3, 1, 4}, "C_4", {4, 9, 3, 18, 16}},
    {{family::ea, 3, 1, 1}, {9, 3, 9, 3, 2, 5, 2}, "C_3", {3, 9, 3, 18, 4}},
};

const construction& built(std::size_t row) {
  static std::map<std::size_t, construction> cache;
  auto it = cache.find(row);
  if (it == cache.end()) it = cache.emplace(row, construct_family(table_rows[row].point)).first;
  return it->second;
}

// Coefficient in X Y of one element of Z^(-1), scaled by |Z|.
std::int64_t triangle(const group_ptr& g, const std::vector<element>& x,
                      const std::vector<element>& y, const std::vector<element>& z) {
  const auto prod = group_ring_element::indicator(g, x) * group_ring_element::indicator(g, y);
  return static_cast<std::int64_t>(z.size()) * prod[g->inv(z.front())];
}

}  // namespace

TEST_SUITE("linked_systems") {

TEST_CASE("(mu, nu) from the quadratic constraint") {
  const auto a = semiregular_mu_nu(2, 2);
  CHECK(a[0].mu == quadratic_number(3));
  CHECK(a[0].nu == quadratic_number(1));
  CHECK(a[1].mu == quadratic_number(1));
  CHECK(a[1].nu == quadratic_number(3));
  CHECK(a[0].admissible);
  const auto b = semiregular_mu_nu(3, 3);
  CHECK(b[0].mu == quadratic_number(5));
  CHECK(b[0].nu == quadratic_number(2));
  CHECK(b[1].mu == quadratic_number(1));
  CHECK(b[1].nu == quadratic_number(4));
  const auto c = semiregular_mu_nu(2, 1);
  CHECK_FALSE(c[0].admissible);
  CHECK_FALSE(c[1].admissible);
}

TEST_CASE("linked systems at the first family points") {
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& row = table_rows[i];
    CAPTURE(row.point.str());
    const auto& c = built(i);
    CHECK(c.system.params == row.linked);
    CHECK(c.expected.linked == row.linked);
    CHECK(describe_group(*c.associate) == row.associate);
    CHECK(c.expected.associate == row.associate);
    CHECK(example2_params(c.system.params) == row.scheme);

    // The recovered (mu, nu) must be one of the two admissible pairs.
    const auto& p = c.system.params;
    const auto pairs = semiregular_mu_nu(p.n, p.lambda);
    bool matched = false;
    for (const auto& pr : pairs)
      matched |= pr.admissible && pr.mu == quadratic_number(p.mu) && pr.nu == quadratic_number(p.nu);
    CHECK(matched);

    // Every member is a semiregular RDS and chi is an involution.
    for (std::size_t a = 0; a < c.system.size(); ++a) {
      CHECK(semiregular_rds_lambda(c.system.forbidden, c.system.members[a]) == p.lambda);
      CHECK(c.system.chi[c.system.chi[a]] == a);
    }

    const auto again = verify_linked_system(c.system.forbidden, c.system.members);
    REQUIRE(again.system.has_value());
    CHECK(again.system->params == p);
  }
}

TEST_CASE("schemes from linked systems") {
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& row = table_rows[i];
    CAPTURE(row.point.str());
    const auto& c = built(i);
    REQUIRE(c.cayley.has_value());
    CHECK(c.cayley->points() == static_cast<std::size_t>(row.scheme.points()));
    REQUIRE(c.report.detected.structure.has_value());
    CHECK(c.report.detected.structure->params == row.scheme);
    REQUIRE(c.report.verdicts.has_value());
    CHECK(c.report.verdicts->uniform());
    CHECK(c.report.exit_code() == 0);

    REQUIRE(c.products.size() == 6);
    for (const auto& prod : c.products) {
      CAPTURE(prod.name);
      CHECK(prod.holds);
    }
    const auto& p = c.system.params;
    CHECK(table2_params(row.point) == row.scheme);
    // Substituting the recipe's parameters into the criterion lands on t.
    CHECK(is_uniform_by_criterion(example2_params(p)));
    REQUIRE(c.partition.parts.size() == 5);
    const auto& g = c.partition.group;
    for (const auto& part : c.partition.parts) {
      std::vector<element> inv;
      for (element x : part) inv.push_back(g->inv(x));
      std::sort(inv.begin(), inv.end());
      CHECK(inv == part);
    }
    CHECK(static_cast<std::int64_t>(c.partition.parts[3].size()) == p.w * p.n * p.lambda);
  }
}

TEST_CASE("triangle identity on every basic-set triple") {
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = built(i);
    const auto& g = c.partition.group;
    const auto& parts = c.partition.parts;
    for (const auto& x : parts)
      for (const auto& y : parts)
        for (const auto& z : parts) {
          const auto a = triangle(g, x, y, z);
          CHECK(a == triangle(g, y, z, x));
          CHECK(a == triangle(g, z, x, y));
        }
  }
}

TEST_CASE("changing the identification of U gives Cayley-isomorphic schemes") {
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = built(i);
    CAPTURE(table_rows[i].point.str());
    const auto autos = automorphisms(c.u);
    REQUIRE(autos.size() >= 2);
    std::set<std::vector<std::vector<element>>> distinct;
    for (const auto& a : autos) {
      const auto phi2 = compose(c.phi, a);
      REQUIRE(phi2.is_valid());
      const auto part2 = example2_construct(c.system, phi2);
      distinct.insert(part2.parts);
      const auto iso = cayley_isomorphic(c.system, c.phi, phi2);
      CHECK(iso.automorphism);
      CHECK(iso.maps_parts);
    }
    CHECK(distinct.size() >= 2);
  }
}

TEST_CASE("linked-system files round-trip") {
  const auto& c = built(0);
  std::ostringstream out;
  write_linked_system(out, c.system);
  std::istringstream in(out.str());
  const auto file = read_linked_file(in);
  CHECK(file.group->same_table(*c.system.group));
  CHECK(file.forbidden.elements == c.system.forbidden.elements);
  CHECK(file.members == c.system.members);
  std::ostringstream again;
  write_linked_system(again, *verify_linked_system(file.forbidden, file.members).system);
  CHECK(again.str() == out.str());
}

TEST_CASE("verification failures") {
  const auto q8 = build_family("Q8cp:1");
  const auto z = center(q8);
  const auto empty = verify_linked_system(z, {});
  CHECK_FALSE(empty.system.has_value());
  // Not a transversal of the center.
  const auto bad = verify_linked_system(z, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  CHECK_FALSE(bad.system.has_value());
  CHECK_FALSE(bad.failure.empty());
  // A single RDS whose inverse is not in the family.
  const auto& good = built(0).system;
  for (std::size_t a = 0; a < good.size(); ++a)
    if (good.chi[a] != a) {
      const auto lone = verify_linked_system(good.forbidden, {good.members[a]});
      CHECK_FALSE(lone.system.has_value());
    }
}

TEST_CASE("table formulas and rejected points") {
  const auto ea2 = tabulate({family::ea, 2, 1, 1});
  CHECK_FALSE(ea2.linked.has_value());
  CHECK(ea2.note.find("w = p^j - 1 = 1 < 2") != std::string::npos);
  CHECK_FALSE(tabulate({family::heis, 2, 1, 1}).linked.has_value());
  CHECK_THROWS_AS(table2_params({family::ea, 2, 1, 1}), std::invalid_argument);
  CHECK_FALSE(tabulate({family::ea, 3, 1, 2}).linked.has_value());
  const auto q2 = tabulate({family::q8cp, 2, 2, 1});
  REQUIRE(q2.linked.has_value());
  CHECK(*q2.linked == linked_params{16, 2, 16, 8, 2, 6, 10});
  CHECK(q2.scheme_params == higmanian_params{3, 16, 2, 16, 10});
  const auto e = tabulate({family::ea, 4, 1, 2});
  REQUIRE(e.linked.has_value());
  CHECK(*e.linked == linked_params{16, 4, 16, 4, 3, 7, 3});
  CHECK(e.associate == "E(4)");
}

}  // TEST_SUITE
