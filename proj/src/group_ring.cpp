#include "higman/group_ring.hpp"

#include <numeric>
#include <stdexcept>

namespace higman {

group_ring_element::group_ring_element(group_ptr g)
    : group_(std::move(g)), coeffs_(group_->order(), 0) {}

group_ring_element::group_ring_element(group_ptr g, std::vector<coeff> coeffs)
    : group_(std::move(g)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_->order())
    throw std::invalid_argument("group ring element: coefficient count differs from group order");
}

group_ring_element group_ring_element::indicator(group_ptr g, std::span<const element> xs) {
  group_ring_element r(std::move(g));
  for (element x : xs) {
    if (x >= r.size()) throw std::invalid_argument("indicator: element out of range");
    if (r.coeffs_[x]) throw std::invalid_argument("indicator: repeated element");
    r.coeffs_[x] = 1;
  }
  return r;
}

group_ring_element group_ring_element::identity(group_ptr g) {
  group_ring_element r(std::move(g));
  r.coeffs_[0] = 1;
  return r;
}

group_ring_element group_ring_element::whole(group_ptr g) {
  group_ring_element r(std::move(g));
  std::fill(r.coeffs_.begin(), r.coeffs_.end(), 1);
  return r;
}

group_ring_element group_ring_element::inverted() const {
  group_ring_element r(group_);
  for (element x = 0; x < size(); ++x) r.coeffs_[group_->inv(x)] = coeffs_[x];
  return r;
}

std::vector<element> group_ring_element::support() const {
  std::vector<element> s;
  for (element x = 0; x < size(); ++x)
    if (coeffs_[x]) s.push_back(x);
  return s;
}

group_ring_element::coeff group_ring_element::augmentation() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), coeff{0});
}

void group_ring_element::require_same_group(const group_ring_element& o) const {
  if (group_ != o.group_ && !group_->same_table(*o.group_))
    throw std::invalid_argument("group ring elements over different groups");
}

group_ring_element& group_ring_element::operator+=(const group_ring_element& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

group_ring_element& group_ring_element::operator-=(const group_ring_element& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

group_ring_element& group_ring_element::operator*=(coeff s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

group_ring_element operator*(const group_ring_element& a, const group_ring_element& b) {
  return gre_multiply(a, b);
}

bool operator==(const group_ring_element& a, const group_ring_element& b) {
  a.require_same_group(b);
  return a.coeffs_ == b.coeffs_;
}

group_ring_element gre_multiply(const group_ring_element& a, const group_ring_element& b) {
  if (a.group() != b.group() && !a.group()->same_table(*b.group()))
    throw std::invalid_argument("gre_multiply: operands over different groups");
  const auto& g = *a.group();
  group_ring_element r(a.group());
  const auto sa = a.support();
  const auto sb = b.support();
  for (element x : sa) {
    const auto ax = a[x];
    for (element y : sb) r[g.mul(x, y)] += ax * b[y];
  }
  return r;
}

}  // namespace higman
