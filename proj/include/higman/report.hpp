#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "higman/constructions.hpp"
#include "higman/higmanian.hpp"
#include "higman/linked_systems.hpp"
#include "higman/schemes.hpp"

namespace higman {

struct analysis_options {
  bool strict = true;
  bundle_options bundle;
};

struct analysis_report {
  std::string input;
  std::size_t points = 0;
  std::size_t rank = 0;
  std::vector<std::string> parabolics;  // nontrivial ones, by colors
  detection detected;
  std::optional<verdict_report> verdicts;
  std::string inconsistency;  // set when the four routes disagreed
  double seconds = 0;

  // 0 uniform Higmanian, 1 Higmanian non-uniform, 2 not Higmanian,
  // 3 inconsistent verdicts.
  int exit_code() const;
};

analysis_report analyze_scheme(const scheme& s, const analysis_options& options = {},
                               std::string input = {});
nlohmann::json to_json(const analysis_report& r);
void print_report(std::ostream& out, const analysis_report& r);

enum class family { q8cp, heis, ea };

struct family_point {
  family kind = family::q8cp;
  unsigned q = 2;  // ignored for q8cp
  unsigned r = 1;
  unsigned j = 1;  // ea only

  std::string str() const;
};

family parse_family(const std::string& name);

// Closed-form rows of the two parameter tables at one point, with the group
// spec that hosts the linked system. `note` explains a rejected point.
struct table_entry {
  family_point point;
  std::string group_spec;
  std::string forbidden_spec;  // "center" or "auto:<q>"
  std::string associate;       // expected associate group, e.g. "C_4"
  std::optional<linked_params> linked;
  std::optional<higmanian_params> scheme_params;
  std::string note;
};

table_entry tabulate(const family_point& p);
// Scheme parameters at a family point; throws std::invalid_argument with the
// note when the point is rejected.
higmanian_params table2_params(const family_point& p);

struct construction_options {
  linked_search_options search;
  analysis_options analysis;
};

struct construction {
  table_entry expected;
  linked_system system;
  group_ptr associate;  // on W u {oo}
  group_ptr u;          // standard copy used as the U factor
  group_isomorphism phi;
  sring_partition partition;
  std::optional<scheme> cayley;
  analysis_report report;
  std::vector<product_identity> products;
};

// Finds the linked system, builds the S-ring over G x U and analyzes it.
// Throws std::runtime_error when no linked system turns up.
construction construct_family(const family_point& p, const construction_options& options = {});

// Dihedral recipe driven from a group spec, subgroup spec and element list.
struct dihedral_construction {
  dds_params params;
  sring_partition partition;
  std::optional<scheme> cayley;
  analysis_report report;
};

dihedral_construction construct_dihedral(const std::string& group_spec,
                                         const std::string& forbidden_spec,
                                         const std::vector<element>& set,
                                         const analysis_options& options = {});

}  // namespace higman
