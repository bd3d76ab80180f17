#include <doctest.h>

#include <sstream>

#include "higman/families.hpp"
#include "higman/schemes.hpp"

using namespace higman;

namespace {

scheme pentagon() { return cayley_scheme(*cyclic_group(5), {{0}, {1, 4}, {2, 3}}); }

std::string text(const scheme& s) {
  std::ostringstream out;
  write_scheme(out, s);
  return out.str();
}

}  // namespace

TEST_SUITE("schemes") {

TEST_CASE("trivial scheme and pentagon intersection numbers") {
  const auto t = trivial_scheme(4);
  CHECK(t.rank() == 2);
  CHECK(t.valency(1) == 3);
  CHECK(t.p(1, 1, 1) == 2);
  CHECK(t.p(1, 1, 0) == 3);

  const auto p = pentagon();
  CHECK(p.rank() == 3);
  CHECK(p.is_symmetric());
  CHECK(p.valencies() == std::vector<std::int64_t>{1, 2, 2});
  CHECK(p.p(1, 1, 1) == 0);
  CHECK(p.p(1, 1, 2) == 1);
  CHECK(p.p(1, 2, 1) == 1);
  CHECK(nontrivial_parabolics(p).empty());
}

TEST_CASE("intersection numbers satisfy the valency identities") {
  const auto s = cayley_scheme(*build_family("GenDih:(C:4)"),
                               {{0}, {2}, {1, 3}, {4, 5}, {6, 7}});
  for (color_t i = 0; i < s.rank(); ++i)
    for (color_t j = 0; j < s.rank(); ++j) {
      std::int64_t sum = 0;
      for (color_t k = 0; k < s.rank(); ++k) {
        sum += s.p(i, j, k) * s.valency(k);
        CHECK(s.valency(k) * s.p(i, j, k) ==
              s.valency(i) * s.p(k, s.inverse_color(j), i));
      }
      CHECK(sum == s.valency(i) * s.valency(j));
    }
}

TEST_CASE("axiom violations are reported with the axiom") {
  auto axiom_of = [](std::size_t v, std::vector<color_t> c) {
    try {
      scheme::validate(v, std::move(c));
    } catch (const scheme_error& e) {
      return e.axiom();
    }
    FAIL("expected a scheme_error");
    return scheme_axiom::shape;
  };
  CHECK(axiom_of(2, {0, 1, 1}) == scheme_axiom::shape);
  CHECK(axiom_of(2, {1, 1, 1, 0}) == scheme_axiom::diagonal);
  CHECK(axiom_of(2, {0, 2, 2, 0}) == scheme_axiom::color_range);
  // Directed 3-cycle colored 1 forward; the backward arcs mix colors 1 and 2.
  CHECK(axiom_of(3, {0, 1, 2, 1, 0, 1, 1, 2, 0}) == scheme_axiom::inverse_closure);
  // Path on 4 points: adjacency alone is not a scheme.
  const std::vector<color_t> path = {0, 1, 2, 2, 1, 0, 1, 2, 2, 1, 0, 1, 2, 2, 1, 0};
  try {
    scheme::validate(4, path);
    FAIL("path graph accepted");
  } catch (const scheme_error& e) {
    CHECK(e.axiom() == scheme_axiom::intersection_number);
    CHECK(e.witness().size() == 7);
  }
}

TEST_CASE("wreath products, parabolics, quotient and restriction") {
  const auto w = wreath_product(trivial_scheme(2), trivial_scheme(3));
  CHECK(w.points() == 6);
  CHECK(w.rank() == 3);
  const auto ps = nontrivial_parabolics(w);
  REQUIRE(ps.size() == 1);
  const auto& e = ps.front();
  CHECK(e.class_size() == 2);
  CHECK(e.class_count() == 3);
  CHECK(is_wreath_over(w, e));
  CHECK_FALSE(is_indecomposable(w));
  CHECK(quotient(w, e) == trivial_scheme(3));
  CHECK(restriction(w, e, 1) == trivial_scheme(2));
  CHECK(parabolic_rank(w, e) == 2);
  CHECK(parabolic_corank(w, e) == 2);
  CHECK(parabolics(w).size() == 3);

  const auto d8 = cayley_scheme(*build_family("GenDih:(C:4)"), {{0}, {2}, {1, 3}, {4, 5}, {6, 7}});
  CHECK(is_indecomposable(d8));
  CHECK(nontrivial_parabolics(d8).size() == 2);
}

TEST_CASE("Cayley schemes reject partitions that are not S-rings") {
  const auto g = cyclic_group(6);
  CHECK_THROWS_AS(cayley_scheme(*g, {{0}, {1, 5}, {2, 4}}), std::invalid_argument);   // 3 missing
  CHECK_THROWS_AS(cayley_scheme(*g, {{0, 1}, {2, 3, 4, 5}}), std::invalid_argument);  // part 0
  CHECK_THROWS_AS(cayley_scheme(*g, {{0}, {1, 2}, {3, 4, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(cayley_scheme(*g, {{0}, {1, 2, 3}, {4, 5}}), std::invalid_argument);
  // Non-symmetric but inverse-closed as a partition, and an S-ring.
  CHECK_NOTHROW(cayley_scheme(*g, {{0}, {1, 5, 3}, {2}, {4}}));
  CHECK_THROWS_AS(cayley_scheme(*g, {{0}, {1, 5}, {2, 3, 4}}), scheme_error);
}

TEST_CASE("scheme files round-trip byte for byte") {
  for (const auto& s : {pentagon(), wreath_product(trivial_scheme(3), trivial_scheme(2)),
                        cayley_scheme(*build_family("Q8cp:1"), {{0}, {1}, {2, 3, 4, 5, 6, 7}})}) {
    const auto first = text(s);
    std::istringstream in(first);
    const auto back = read_scheme(in);
    CHECK(back == s);
    CHECK(text(back) == first);
  }
}

TEST_CASE("malformed scheme files carry line numbers") {
  auto message = [](const std::string& body) -> std::string {
    std::istringstream in(body);
    try {
      read_scheme(in);
    } catch (const std::exception& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message("scheme 2 2\n0 1\n1 x\n").find("line 3") != std::string::npos);
  CHECK(message("schema 2 2\n").find("line 1") != std::string::npos);
  CHECK(message("scheme 2 2\n0 1\n") != "");
  CHECK(message("scheme 2 3\n0 1\n1 0\n") != "");
}

}  // TEST_SUITE
