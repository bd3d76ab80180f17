#pragma once

#include <cstdint>
#include <limits>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace higman {

using element = std::uint32_t;

// A finite group given by its full multiplication table. Element 0 is always
// the identity; every built-in family and the group file format honor this.
class finite_group {
 public:
  // Validates identity, inverses and associativity (exhaustively for
  // order <= 512, on 200000 random triples above that). Throws
  // std::invalid_argument on failure.
  finite_group(std::size_t order, std::vector<element> table,
               std::vector<std::string> labels = {}, std::string name = {});

  std::size_t order() const { return order_; }
  element identity() const { return 0; }
  element mul(element a, element b) const { return table_[a * order_ + b]; }
  element inv(element a) const { return inverse_[a]; }
  element conj(element a, element g) const { return mul(mul(inv(g), a), g); }
  element pow(element a, long long e) const;
  std::size_t element_order(element a) const;
  std::size_t exponent() const;
  bool is_abelian() const;

  const std::string& name() const { return name_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(element a) const;
  std::span<const element> table() const { return table_; }

  bool same_table(const finite_group& other) const { return table_ == other.table_; }

 private:
  std::size_t order_;
  std::vector<element> table_;
  std::vector<element> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
};

using group_ptr = std::shared_ptr<const finite_group>;

struct subgroup {
  group_ptr parent;
  std::vector<element> elements;  // sorted, contains 0

  std::size_t order() const { return elements.size(); }
  bool contains(element x) const;
};

// Throws std::invalid_argument unless `elements` form a subgroup.
subgroup make_subgroup(group_ptr g, std::vector<element> elements);
subgroup generated_subgroup(group_ptr g, std::span<const element> generators);
subgroup center(group_ptr g);
subgroup whole_group(group_ptr g);
subgroup trivial_subgroup(group_ptr g);
bool is_normal(const subgroup& h);

// All subgroups of the given order, sorted lexicographically by element list.
// Built by closing generating sets; `limit` bounds the number of distinct
// subgroups visited.
std::vector<subgroup> subgroups_of_order(group_ptr g, std::size_t order,
                                         std::size_t limit = 100000);

// Right cosets Hg, each sorted, blocks ordered by minimal element.
std::vector<std::vector<element>> right_cosets(const finite_group& g, const subgroup& h);

// Bijection between two groups that respects multiplication.
struct group_isomorphism {
  group_ptr source;
  group_ptr target;
  std::vector<element> map;

  element operator()(element x) const { return map[x]; }
  bool is_valid() const;
  group_isomorphism inverse() const;
};

group_isomorphism compose(const group_isomorphism& outer, const group_isomorphism& inner);

// Every automorphism of g, identity first, via images of a small generating
// set. Intended for small groups (the associate groups of linked systems).
std::vector<group_isomorphism> automorphisms(group_ptr g);
// Isomorphisms from g onto h, at most `limit` of them, sorted by map.
std::vector<group_isomorphism> isomorphisms(group_ptr g, group_ptr h,
                                            std::size_t limit = SIZE_MAX);

// "C_3", "E(4)", "Q_8", or "order 12, nonabelian" style description.
std::string describe_group(const finite_group& g);
bool is_cyclic(const finite_group& g);
bool is_elementary_abelian(const finite_group& g);

// Group file: `group <order>` then order rows of the table; 0 is identity.
group_ptr read_group(std::istream& in);
void write_group(std::ostream& out, const finite_group& g);

}  // namespace higman
