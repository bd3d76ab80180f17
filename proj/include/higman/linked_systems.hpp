#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "higman/constructions.hpp"
#include "higman/group_ring.hpp"
#include "higman/groups.hpp"
#include "higman/params.hpp"
#include "higman/quadratic.hpp"

namespace higman {

struct linked_params {
  std::int64_t m = 0, n = 0, k = 0, lambda = 0, w = 0, mu = 0, nu = 0;
  friend bool operator==(const linked_params&, const linked_params&) = default;
  std::string str() const;
};

// A closed linked system {X_alpha : alpha in W} of RDSs relative to N with
// its characteristic functions. W is 0..w-1.
struct linked_system {
  group_ptr group;
  subgroup forbidden;
  std::vector<std::vector<element>> members;  // each sorted
  std::vector<std::size_t> chi;               // X_alpha^(-1) = X_chi(alpha)
  // psi[alpha][beta]; unset exactly when beta = chi(alpha).
  std::vector<std::vector<std::optional<std::size_t>>> psi;
  linked_params params;

  std::size_t size() const { return members.size(); }
};

struct linked_check {
  std::optional<linked_system> system;
  std::string failure;
  explicit operator bool() const { return system.has_value(); }
};

// Recovers chi, psi, lambda, mu, nu from the products X_a X_b and checks the
// closed-system product law with global (mu, nu).
linked_check verify_linked_system(const subgroup& forbidden,
                                  std::vector<std::vector<element>> members);

struct mu_nu_pair {
  quadratic_number mu;
  quadratic_number nu;
  bool admissible = false;  // both nonnegative integers
};

// The two (mu, nu) pairs a closed linked system of semiregular RDSs must
// take: upper sign first.
std::array<mu_nu_pair, 2> semiregular_mu_nu(std::int64_t n, std::int64_t lambda);

// Group on W u {oo} with oo = index 0 and alpha = index alpha + 1, product
// psi-hat and inverse chi-hat. Throws std::invalid_argument if the table is
// not a group.
group_ptr associate_group(const linked_system& system);

struct linked_search_options {
  std::uint64_t rds_cap = std::uint64_t{1} << 24;
  std::uint64_t closure_cap = 1000000;  // closure attempts before giving up
  // Branches of semiregular_mu_nu to try, in order (0 = upper sign).
  std::vector<std::size_t> branches{1, 0};
};

// C:n or EA:p:k copy of a cyclic or elementary abelian group, else g itself.
group_ptr standard_model(group_ptr g);

// Closed linked system of w semiregular RDSs relative to N, built by closing
// seed sets under inversion and the product law. Returns nullopt on
// exhaustion; throws search_cap_exceeded past the caps.
std::optional<linked_system> search_linked_system(const subgroup& forbidden, std::size_t w,
                                                  const linked_search_options& options = {});

// Recipe over G x U (index g + |G| u): {e}, N^#, G\N,
// T3 = union over u != e of u X_phi(u), T4 = the rest of (G x U) \ G.
// phi maps U onto the associate group with phi(e) = oo.
sring_partition example2_construct(const linked_system& system, const group_isomorphism& phi);

struct product_identity {
  std::string name;
  bool holds = false;
};

// The six group-ring product identities for T1..T3 of a construction.
std::vector<product_identity> linked_product_identities(const linked_system& system,
                                                    const sring_partition& partition);

// Identity on G and phi2^{-1} o phi1 on U, as a map on G x U indices; the
// flag reports whether it carried every part of `a` onto the same part of `b`.
struct cayley_isomorphism_result {
  std::vector<element> map;
  bool automorphism = false;
  bool maps_parts = false;
};

cayley_isomorphism_result cayley_isomorphic(const linked_system& system,
                                            const group_isomorphism& phi1,
                                            const group_isomorphism& phi2);

// Higmanian parameters the recipe must produce:
// (w+1, n lambda, n, n lambda (n-1), (n-1)(w-1) nu).
higmanian_params example2_params(const linked_params& p);

// Linked-system file: group spec line, forbidden subgroup elements, w, then
// w lines of member elements. chi and psi are recovered on reading.
void write_linked_system(std::ostream& out, const linked_system& system);
struct linked_file {
  group_ptr group;
  subgroup forbidden;
  std::vector<std::vector<element>> members;
};
linked_file read_linked_file(std::istream& in);

}  // namespace higman
