#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "higman/groups.hpp"

namespace higman {

// Arithmetic in GF(p^i). Elements are encoded as base-p digit strings of the
// polynomial coefficients (constant term least significant).
class galois_field {
 public:
  galois_field(unsigned p, unsigned degree);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  unsigned size() const { return q_; }
  // Coefficients of the monic defining polynomial, constant term first.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }

 private:
  unsigned p_, degree_, q_;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> add_, neg_, mul_;
};

bool is_prime(unsigned long long n);
// Returns (p, i) with q = p^i, or throws std::invalid_argument.
std::pair<unsigned, unsigned> prime_power(unsigned long long q);

group_ptr cyclic_group(std::size_t n);
group_ptr elementary_abelian(unsigned p, unsigned rank);
// Upper unitriangular model: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a.b')
// over GF(q)^r x GF(q)^r x GF(q); index = a + q^r b + q^{2r} c.
group_ptr heisenberg(unsigned q, unsigned r);
// Central product of r copies of Q8; index bit 0 is the central sign and
// base-4 digits above it are the unit parts (1, i, j, k) per factor.
group_ptr q8_central_product(unsigned r);
// <G, u> with u inverting the abelian group G; elements G then G*u.
group_ptr generalized_dihedral(group_ptr g);
// G x H with index g + |G| h.
group_ptr direct_product(group_ptr g, group_ptr h);

// Spec strings: C:<n>, EA:<p>:<k>, Heis:<q>:<r>, Q8cp:<r>, GenDih:<spec>,
// Prod:<spec>,<spec> (parenthesize operands to nest: Prod:(A),(B)).
group_ptr build_family(std::string_view spec);

}  // namespace higman
