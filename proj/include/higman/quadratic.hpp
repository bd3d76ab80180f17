#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace higman {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Exact a + b sqrt(D) with a, b rational and D square-free. Rationals carry
// D = 0, so equality is structural. Mixing two different nonzero radicands
// throws std::domain_error.
class quadratic_number {
 public:
  quadratic_number() = default;
  quadratic_number(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  quadratic_number(rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  quadratic_number(rational a, rational b, std::int64_t radicand);

  // Exact square root of a nonnegative rational.
  static quadratic_number sqrt(const rational& r);

  const rational& rational_part() const { return a_; }
  const rational& radical_part() const { return b_; }
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_integer() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;
  quadratic_number abs() const { return sign() < 0 ? -*this : *this; }
  quadratic_number conjugate() const { return {a_, -b_, d_}; }
  double to_double() const;
  // Throws std::domain_error unless rational.
  rational as_rational() const;
  std::string str() const;

  quadratic_number operator-() const { return {-a_, -b_, d_}; }
  quadratic_number& operator+=(const quadratic_number& o);
  quadratic_number& operator-=(const quadratic_number& o);
  quadratic_number& operator*=(const quadratic_number& o);
  quadratic_number& operator/=(const quadratic_number& o);

  friend quadratic_number operator+(quadratic_number a, const quadratic_number& b) { return a += b; }
  friend quadratic_number operator-(quadratic_number a, const quadratic_number& b) { return a -= b; }
  friend quadratic_number operator*(quadratic_number a, const quadratic_number& b) { return a *= b; }
  friend quadratic_number operator/(quadratic_number a, const quadratic_number& b) { return a /= b; }
  friend bool operator==(const quadratic_number& a, const quadratic_number& b) {
    return a.a_ == b.a_ && a.b_ == b.b_ && a.d_ == b.d_;
  }
  friend bool operator<(const quadratic_number& a, const quadratic_number& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const quadratic_number& a, const quadratic_number& b) { return b < a; }
  friend std::ostream& operator<<(std::ostream& os, const quadratic_number& q);

 private:
  void normalize();
  std::int64_t common_radicand(const quadratic_number& o) const;

  rational a_ = 0;
  rational b_ = 0;
  std::int64_t d_ = 0;
};

std::string to_string(const rational& r);

}  // namespace higman
