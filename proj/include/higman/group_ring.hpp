#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "higman/groups.hpp"

namespace higman {

// Element of the integral group ring ZG, dense over the element indices.
class group_ring_element {
 public:
  using coeff = std::int64_t;

  explicit group_ring_element(group_ptr g);
  group_ring_element(group_ptr g, std::vector<coeff> coeffs);

  // The indicator sum of a set of elements; duplicates are rejected.
  static group_ring_element indicator(group_ptr g, std::span<const element> xs);
  static group_ring_element identity(group_ptr g);
  static group_ring_element whole(group_ptr g);

  const group_ptr& group() const { return group_; }
  coeff operator[](element x) const { return coeffs_[x]; }
  coeff& operator[](element x) { return coeffs_[x]; }
  std::span<const coeff> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  // X^(-1): coefficient at x moves to x^{-1}.
  group_ring_element inverted() const;
  std::vector<element> support() const;
  coeff augmentation() const;

  group_ring_element& operator+=(const group_ring_element& o);
  group_ring_element& operator-=(const group_ring_element& o);
  group_ring_element& operator*=(coeff s);

  friend group_ring_element operator+(group_ring_element a, const group_ring_element& b) { return a += b; }
  friend group_ring_element operator-(group_ring_element a, const group_ring_element& b) { return a -= b; }
  friend group_ring_element operator*(coeff s, group_ring_element a) { return a *= s; }
  friend group_ring_element operator*(const group_ring_element& a, const group_ring_element& b);
  friend bool operator==(const group_ring_element& a, const group_ring_element& b);

 private:
  void require_same_group(const group_ring_element& o) const;

  group_ptr group_;
  std::vector<coeff> coeffs_;
};

// Convolution: coefficient of g is the sum of a(x)b(y) over xy = g.
group_ring_element gre_multiply(const group_ring_element& a, const group_ring_element& b);

}  // namespace higman
