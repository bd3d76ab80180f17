#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "higman/constructions.hpp"
#include "higman/families.hpp"
#include "higman/higmanian.hpp"
#include "higman/report.hpp"

using namespace higman;

namespace {

std::vector<element> complement(const finite_group& g, const std::vector<element>& x) {
  std::vector<element> out;
  for (element e = 0; e < g.order(); ++e)
    if (!std::binary_search(x.begin(), x.end(), e)) out.push_back(e);
  return out;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("divisible difference sets") {
  const auto c4 = cyclic_group(4);
  const auto n = make_subgroup(c4, {0, 2});
  const std::vector<element> x{0, 1};
  const auto d = verify_dds(n, x);
  REQUIRE(d.params.has_value());
  CHECK(*d.params == dds_params{2, 2, 2, 0, 1});
  CHECK(intersection_condition(n, x));

  const std::vector<element> inside{0, 2};
  CHECK(verify_dds(n, inside).params == dds_params{2, 2, 2, 2, 0});
  CHECK_FALSE(intersection_condition(n, inside));

  const auto c6 = cyclic_group(6);
  const auto n6 = make_subgroup(c6, {0, 3});
  const std::vector<element> bad{0, 1};
  const auto fail = verify_dds(n6, bad);
  CHECK_FALSE(fail.params.has_value());
  CHECK(fail.witness.has_value());
  CHECK_FALSE(fail.reason.empty());
}

TEST_CASE("dihedral recipe over C_4") {
  const auto c4 = cyclic_group(4);
  const auto n = make_subgroup(c4, {0, 2});
  const std::vector<element> x{0, 1};
  const auto part = example1_construct(n, x);
  CHECK(part.group->order() == 8);
  CHECK(part.parts.size() == 5);
  CHECK(part.parts.front() == std::vector<element>{0});
  const auto s = cayley_scheme(part);
  const auto d = detect_higmanian(s);
  REQUIRE(d.structure.has_value());
  CHECK(d.structure->params == higmanian_params{2, 2, 2, 2, 0});
  CHECK(verdict_bundle(s, *d.structure).uniform());

  const std::vector<element> inside{0, 2};
  CHECK_THROWS_AS(example1_construct(n, inside), std::invalid_argument);
  const auto q8 = build_family("Q8cp:1");
  const std::vector<element> any{0, 1};
  CHECK_THROWS_AS(example1_construct(center(q8), any), std::invalid_argument);
}

TEST_CASE("dihedral recipe from semiregular RDSs in E(9) and E(27)") {
  for (auto [spec, expect] : {std::pair{"EA:3:2", higmanian_params{2, 3, 3, 6, 0}},
                              std::pair{"EA:3:3", higmanian_params{2, 9, 3, 18, 0}}}) {
    CAPTURE(spec);
    const auto g = build_family(spec);
    const auto n = resolve_subgroups(g, "auto:3").front();
    const auto rds = search_semiregular_rds(n);
    REQUIRE_FALSE(rds.empty());
    const auto& x = rds.front();
    // Both X and its complement give the same scheme parameters; k is the
    // larger of |X| and mn - |X| under the n_T <= n_S labeling.
    for (const auto& set : {x, complement(*g, x)}) {
      const auto part = example1_construct(n, set);
      const auto s = cayley_scheme(part);
      const auto d = detect_higmanian(s);
      REQUIRE(d.structure.has_value());
      CHECK(d.structure->params == expect);
      CHECK(verdict_bundle(s, *d.structure).uniform());
    }
  }
}

TEST_CASE("semiregular RDS search") {
  const auto c4 = cyclic_group(4);
  const auto n = make_subgroup(c4, {0, 2});
  CHECK(search_semiregular_rds(n).size() == 4);
  const std::vector<element> x{0, 1}, y{0, 2};
  CHECK(semiregular_rds_lambda(n, x) == 1);
  CHECK_FALSE(semiregular_rds_lambda(n, y).has_value());

  const auto q8 = build_family("Q8cp:1");
  const auto all = search_semiregular_rds(center(q8));
  CHECK(all.size() == 16);
  for (const auto& r : all) CHECK(semiregular_rds_lambda(center(q8), r) == 2);
  CHECK(std::is_sorted(all.begin(), all.end()));

  CHECK_THROWS_AS(search_semiregular_rds(center(build_family("Q8cp:2")), 10), search_cap_exceeded);
}

TEST_CASE("subgroup specs") {
  CHECK(resolve_subgroups(build_family("Q8cp:1"), "center").size() == 1);
  CHECK(resolve_subgroups(build_family("EA:3:2"), "auto:3").size() == 4);
  const auto explicit_n = resolve_subgroups(cyclic_group(4), "0,2");
  REQUIRE(explicit_n.size() == 1);
  CHECK(explicit_n.front().elements == std::vector<element>{0, 2});
  CHECK(resolve_subgroups(cyclic_group(4), "1").front().order() == 4);  // generators
}

TEST_CASE("partition files round-trip") {
  const auto c4 = cyclic_group(4);
  const std::vector<element> x{0, 1};
  const auto part = example1_construct(make_subgroup(c4, {0, 2}), x);
  std::ostringstream out;
  write_partition(out, part);
  std::istringstream in(out.str());
  const auto back = read_partition(in);
  CHECK(back.parts == part.parts);
  CHECK(back.group->same_table(*part.group));
  CHECK(cayley_scheme(back) == cayley_scheme(part));
  std::istringstream bad("C:4\n2\n0\n1 2\n");
  CHECK_THROWS(read_partition(bad));
}

}  // TEST_SUITE
