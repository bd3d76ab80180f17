#include <doctest.h>

#include <cmath>
#include <random>

#include "higman/quadratic.hpp"

using namespace higman;

TEST_SUITE("quadratic") {

TEST_CASE("square roots normalize to square-free radicands") {
  CHECK(quadratic_number::sqrt(9) == quadratic_number(3));
  CHECK(quadratic_number::sqrt(8) == quadratic_number(0, 2, 2));
  CHECK(quadratic_number::sqrt(rational(1, 2)) == quadratic_number(0, rational(1, 2), 2));
  CHECK(quadratic_number::sqrt(0).is_zero());
  CHECK_THROWS_AS(quadratic_number::sqrt(-1), std::domain_error);
  CHECK(quadratic_number(1, 2, 8) == quadratic_number(1, 4, 2));
  CHECK(quadratic_number(5, 0, 7).is_rational());
}

TEST_CASE("field operations agree with floating point") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const quadratic_number a(rational(d(rng), 1 + std::abs(d(rng))), d(rng), 5);
    const quadratic_number b(d(rng), rational(d(rng), 3), 5);
    CHECK((a + b).to_double() == doctest::Approx(a.to_double() + b.to_double()));
    CHECK((a * b).to_double() == doctest::Approx(a.to_double() * b.to_double()));
    if (!b.is_zero()) {
      CHECK(((a / b) * b) == a);
      CHECK((a / b).to_double() == doctest::Approx(a.to_double() / b.to_double()));
    }
    CHECK((a < b) == (a.to_double() < b.to_double()));
    CHECK(a.sign() == (a.to_double() > 0) - (a.to_double() < 0));
  }
}

TEST_CASE("exact sign near cancellation") {
  // 99 - 70 sqrt2 is about 0.00505, and its conjugate is large.
  const quadratic_number x(99, -70, 2);
  CHECK(x.sign() == 1);
  CHECK(x.conjugate().sign() == 1);
  CHECK((x * x.conjugate()) == quadratic_number(1));
  CHECK(quadratic_number(-99, 70, 2).sign() == -1);
  CHECK(quadratic_number(0, -1, 3).abs() == quadratic_number(0, 1, 3));
}

TEST_CASE("integrality and rational extraction") {
  CHECK(quadratic_number(4).is_integer());
  CHECK_FALSE(quadratic_number(rational(1, 2)).is_integer());
  CHECK_FALSE(quadratic_number(0, 1, 2).is_integer());
  CHECK(quadratic_number(rational(7, 3)).as_rational() == rational(7, 3));
  CHECK_THROWS_AS(quadratic_number(0, 1, 2).as_rational(), std::domain_error);
}

TEST_CASE("mixing radicands is an error") {
  CHECK_THROWS_AS(quadratic_number(0, 1, 2) + quadratic_number(0, 1, 3), std::domain_error);
  CHECK_NOTHROW(quadratic_number(0, 1, 2) + quadratic_number(5));
}

TEST_CASE("printing") {
  CHECK(quadratic_number(1, 2, 2).str() == "1+2√2");
  CHECK(quadratic_number(0, -2, 2).str() == "-2√2");
  CHECK(quadratic_number(rational(-3, 4)).str() == "-3/4");
  CHECK(quadratic_number(2, -1, 5).str() == "2-√5");
}

}  // TEST_SUITE
