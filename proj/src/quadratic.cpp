#include "higman/quadratic.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace higman {

namespace {

// n = s^2 * core with core square-free.
std::pair<integer, std::int64_t> split_square(integer n) {
  integer s = 1;
  integer core = 1;
  for (integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) core *= p;
  }
  core *= n;
  if (core > std::numeric_limits<std::int64_t>::max())
    throw std::domain_error("radicand too large");
  return {s, static_cast<std::int64_t>(core)};
}

}  // namespace

std::string to_string(const rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

quadratic_number::quadratic_number(rational a, rational b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  if (d_ < 0) throw std::domain_error("negative radicand");
  normalize();
}

void quadratic_number::normalize() {
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  const auto [s, core] = split_square(integer(d_));
  if (core == 1) {
    a_ += b_ * rational(s);
    b_ = 0;
    d_ = 0;
    return;
  }
  b_ *= rational(s);
  d_ = core;
}

quadratic_number quadratic_number::sqrt(const rational& r) {
  if (r < 0) throw std::domain_error("square root of a negative rational");
  if (r == 0) return {};
  // sqrt(p/q) = sqrt(p q) / q
  const integer pq = numerator(r) * denominator(r);
  const auto [s, core] = split_square(pq);
  const rational coeff = rational(s) / rational(denominator(r));
  if (core == 1) return quadratic_number(coeff);
  return {0, coeff, core};
}

bool quadratic_number::is_integer() const { return b_ == 0 && denominator(a_) == 1; }

int quadratic_number::sign() const {
  const int sa = a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
  const int sb = b_ > 0 ? 1 : (b_ < 0 ? -1 : 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 D.
  const rational lhs = a_ * a_, rhs = b_ * b_ * rational(d_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double quadratic_number::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
}

rational quadratic_number::as_rational() const {
  if (b_ != 0) throw std::domain_error("value " + str() + " is irrational");
  return a_;
}

std::string quadratic_number::str() const {
  if (b_ == 0) return to_string(a_);
  std::ostringstream os;
  if (a_ != 0) os << to_string(a_) << (b_ > 0 ? "+" : "-");
  else if (b_ < 0) os << '-';
  const rational mag = b_ > 0 ? b_ : rational(-b_);
  if (mag != 1) os << to_string(mag);
  os << "√" << d_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const quadratic_number& q) { return os << q.str(); }

std::int64_t quadratic_number::common_radicand(const quadratic_number& o) const {
  if (b_ == 0) return o.d_;
  if (o.b_ == 0 || o.d_ == d_) return d_;
  throw std::domain_error("arithmetic mixes sqrt(" + std::to_string(d_) + ") and sqrt(" +
                          std::to_string(o.d_) + ")");
}

quadratic_number& quadratic_number::operator+=(const quadratic_number& o) {
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

quadratic_number& quadratic_number::operator-=(const quadratic_number& o) {
  d_ = common_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

quadratic_number& quadratic_number::operator*=(const quadratic_number& o) {
  const std::int64_t d = common_radicand(o);
  const rational a = a_ * o.a_ + b_ * o.b_ * rational(d);
  const rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

quadratic_number& quadratic_number::operator/=(const quadratic_number& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  const std::int64_t d = common_radicand(o);
  const rational norm = o.a_ * o.a_ - o.b_ * o.b_ * rational(d);
  *this *= quadratic_number(o.a_ / norm, -o.b_ / norm, o.b_ == 0 ? 0 : d);
  return *this;
}

}  // namespace higman
