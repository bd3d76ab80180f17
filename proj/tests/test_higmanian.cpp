#include <doctest.h>

#include "higman/families.hpp"
#include "higman/higmanian.hpp"
#include "higman/report.hpp"

using namespace higman;

namespace {

const scheme& q8_scheme() {
  static const scheme s = *construct_family({family::q8cp, 2, 1, 1}).cayley;
  return s;
}

scheme wreath_chain(std::size_t depth) {
  scheme s = trivial_scheme(2);
  for (std::size_t i = 1; i < depth; ++i) s = wreath_product(s, trivial_scheme(2));
  return s;
}

}  // namespace

TEST_SUITE("higmanian") {

TEST_CASE("detection on the Q8 construction") {
  const auto& s = q8_scheme();
  const auto d = detect_higmanian(s);
  REQUIRE(d.structure.has_value());
  const auto& h = *d.structure;
  CHECK(h.params == higmanian_params{3, 4, 2, 4, 3});
  CHECK(h.E.class_size() == 2);
  CHECK(h.F.class_size() == 8);
  CHECK(h.relation_order[0] == 0);
  CHECK(s.valency(h.T) <= s.valency(h.S));
  CHECK(s.p(h.T, h.S, h.T) == 3);
  // n_S = n_T here, so the other labeling is reported too.
  REQUIRE(h.swapped_params.has_value());
  CHECK(h.swapped_params->k == 4);
}

TEST_CASE("wreath products and other non-Higmanian schemes are rejected") {
  const auto small = detect_higmanian(wreath_product(trivial_scheme(2), trivial_scheme(3)));
  CHECK_FALSE(small.structure.has_value());
  CHECK(small.reason == rejection::wrong_rank);

  const auto chain = wreath_chain(4);
  REQUIRE(chain.rank() == 5);
  for (bool strict : {true, false}) {
    const auto d = detect_higmanian(chain, strict);
    CHECK_FALSE(d.structure.has_value());
    CHECK(d.reason != rejection::none);
  }
  CHECK(detect_higmanian(chain, false).reason == rejection::decomposable);

  const auto thin = cayley_scheme(*cyclic_group(5), {{0}, {1}, {2}, {3}, {4}});
  CHECK(detect_higmanian(thin).reason == rejection::not_symmetric);

  // EA(8) with the thin E(4) wrapped by its coset: many parabolics.
  const auto fused = cayley_scheme(*elementary_abelian(2, 3), {{0}, {1}, {2}, {3}, {4, 5, 6, 7}});
  CHECK(detect_higmanian(fused, true).reason == rejection::parabolic_count);
  CHECK_FALSE(detect_higmanian(fused, false).structure.has_value());
}

TEST_CASE("closed-form uniformity criterion") {
  const auto rhs = uniformity_rhs(3, 4, 2, 4);
  CHECK(rhs[0] == quadratic_number(3));
  CHECK(rhs[1] == quadratic_number(1));
  CHECK(is_uniform_by_criterion({3, 4, 2, 4, 3}));
  CHECK(is_uniform_by_criterion({3, 4, 2, 4, 1}));
  CHECK_FALSE(is_uniform_by_criterion({3, 4, 2, 4, 2}));
  CHECK(is_uniform_by_criterion({4, 9, 3, 18, 16}));
  CHECK(is_uniform_by_criterion({3, 9, 3, 18, 4}));
  CHECK(is_uniform_by_criterion({2, 9, 3, 18, 0}));
  // Irrational right-hand sides admit no integer t.
  const auto irr = uniformity_rhs(3, 3, 2, 4);
  CHECK_FALSE(is_admissible_t(irr[0]));
  CHECK_FALSE(is_admissible_t(irr[1]));
  CHECK_FALSE(is_admissible_t(quadratic_number(-1)));
  CHECK(is_admissible_t(quadratic_number(0)));
}

TEST_CASE("definitional and dismantlability routes") {
  const auto& s = q8_scheme();
  const auto h = *detect_higmanian(s).structure;
  const auto def = is_uniform_by_definition(s, h.F);
  CHECK(def.corank_two);
  CHECK(def.holds);
  CHECK_FALSE(def.witness.has_value());
  CHECK(def.triples_checked == 27);
  CHECK_FALSE(is_uniform_by_definition(s, h.E).corank_two);

  const auto dis = is_dismantlable(s, h.F);
  CHECK(dis.holds);
  CHECK(dis.exhaustive);
  CHECK(dis.witness.empty());
}

TEST_CASE("verdict bundle agrees on constructions") {
  const auto& s = q8_scheme();
  const auto h = *detect_higmanian(s).structure;
  bundle_options opt;
  opt.oracle = true;
  const auto r = verdict_bundle(s, h, opt);
  CHECK(r.consistent());
  CHECK(r.uniform());
  CHECK(r.spectral.holds);
  REQUIRE(r.oracle_deviation.has_value());
  CHECK(*r.oracle_deviation < 1e-8);
  CHECK(r.oracle_multiplicities);
  CHECK(r.swapped.has_value());
}

TEST_CASE("parameter admissibility") {
  CHECK(higmanian_params{3, 4, 2, 4, 3}.is_admissible());
  CHECK_FALSE(higmanian_params{3, 4, 2, 3, 0}.is_admissible());  // k < mn - k
  CHECK_FALSE(higmanian_params{1, 4, 2, 4, 0}.is_admissible());
  CHECK(higmanian_params{3, 4, 2, 4, 3}.points() == 24);
  CHECK(higmanian_params{3, 4, 2, 4, 3}.valency_s() == 8);
  CHECK(higmanian_params{4, 9, 3, 18, 16}.valency_t() == 27);
  CHECK(higmanian_params{3, 4, 2, 4, 3}.str() == "(3,4,2,4,3)");
}

}  // TEST_SUITE
