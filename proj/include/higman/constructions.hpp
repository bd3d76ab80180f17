#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "higman/groups.hpp"
#include "higman/params.hpp"
#include "higman/schemes.hpp"

namespace higman {

// (m, n, k, lambda1, lambda2): |G| = mn, |N| = n, |X| = k; every element of
// N^# is a difference of X exactly lambda1 times, of G\N lambda2 times.
struct dds_params {
  std::int64_t m = 0, n = 0, k = 0, lambda1 = 0, lambda2 = 0;
  friend bool operator==(const dds_params&, const dds_params&) = default;
};

struct dds_check {
  std::optional<dds_params> params;
  std::optional<element> witness;  // element whose difference count breaks constancy
  std::string reason;
  explicit operator bool() const { return params.has_value(); }
};

// Reads the difference multiset off X * X^(-1) in the group ring.
dds_check verify_dds(const subgroup& forbidden, std::span<const element> set);

// |X cap Ng| is the same for every right coset Ng.
bool intersection_condition(const subgroup& forbidden, std::span<const element> set);

// A partition of a group whose first part is {e}.
struct sring_partition {
  group_ptr group;
  std::vector<std::vector<element>> parts;
};

scheme cayley_scheme(const sring_partition& p);

// Dihedral recipe: over <G,u> the parts {e}, N^#, G\N, Xu, (G\X)u. Requires G
// abelian, X a divisible difference set relative to N with the intersection
// condition; throws std::invalid_argument otherwise.
sring_partition example1_construct(const subgroup& forbidden, std::span<const element> set);

// Semiregular RDS test: X is a transversal of N and X X^(-1) = k e +
// lambda (G - N). Returns lambda.
std::optional<std::int64_t> semiregular_rds_lambda(const subgroup& forbidden,
                                                   std::span<const element> set);

class search_cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every transversal of N (one element per right coset) that is a
// semiregular RDS, in lexicographic order of coset choices. Throws
// search_cap_exceeded once the backtracking visits more than `cap` nodes.
std::vector<std::vector<element>> search_semiregular_rds(const subgroup& forbidden,
                                                         std::uint64_t cap = std::uint64_t{1} << 24);

// Whole-subgroup helpers used by callers that name N by a spec string:
// "center", "auto:<order>" (every subgroup of that order) or "a,b,c".
std::vector<subgroup> resolve_subgroups(group_ptr g, const std::string& spec);

// Partition files: group spec line, part count, then one line per part.
void write_partition(std::ostream& out, const sring_partition& p);
sring_partition read_partition(std::istream& in);

}  // namespace higman
