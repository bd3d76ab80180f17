#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "higman/params.hpp"
#include "higman/quadratic.hpp"
#include "higman/schemes.hpp"
#include "higman/spectral.hpp"

namespace higman {

enum class rejection {
  none,
  wrong_rank,
  not_symmetric,
  parabolic_count,  // strict mode: not exactly two nontrivial parabolics
  parabolic_chain,  // no chain E < F with the required ranks and coranks
  decomposable,
  k_not_constant,
};

std::string to_string(rejection r);

struct higmanian_structure {
  parabolic E;
  parabolic F;
  color_t S = 0;  // n_T <= n_S
  color_t T = 0;
  // Colors in the order R0, E\R0, S, T, F\E used by the closed-form spectrum.
  std::array<color_t, 5> relation_order{};
  higmanian_params params;
  // When n_S = n_T both labelings are legitimate; these are the parameters
  // read with S and T exchanged.
  std::optional<higmanian_params> swapped_params;
};

struct detection {
  std::optional<higmanian_structure> structure;
  rejection reason = rejection::none;
  std::string detail;

  explicit operator bool() const { return structure.has_value(); }
};

// With strict = true the scheme must have exactly two nontrivial parabolics.
detection detect_higmanian(const scheme& s, bool strict = true);

// Both sign choices of the uniformity right-hand side for t.
std::array<quadratic_number, 2> uniformity_rhs(std::int64_t f, std::int64_t m, std::int64_t n,
                                               std::int64_t k);
bool is_admissible_t(const quadratic_number& candidate);
bool is_uniform_by_criterion(const higmanian_params& p);

struct block_triple {
  std::size_t delta = 0, gamma = 0, lambda = 0;  // class indices
  color_t i = 0, j = 0;
};

struct definition_verdict {
  bool holds = false;
  bool corank_two = false;
  std::optional<block_triple> witness;  // first failing triple
  // Whether each a_ij^k came out the same on every class triple; reported,
  // not required.
  bool coefficients_global = true;
  std::size_t triples_checked = 0;
};

// Block-restricted products A_i^{DG} A_j^{GL} must be constant on every
// color of D x L, for every triple of classes of E.
definition_verdict is_uniform_by_definition(const scheme& s, const parabolic& e);

struct dismantle_options {
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 20;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
};

struct dismantle_verdict {
  bool holds = false;
  bool exhaustive = false;
  std::uint64_t unions_checked = 0;
  std::vector<std::size_t> witness;  // classes of a failing union
};

dismantle_verdict is_dismantlable(const scheme& s, const parabolic& e,
                                  const dismantle_options& options = {});

struct bundle_options {
  dismantle_options dismantle;
  bool oracle = false;
};

struct verdict_report {
  higmanian_params params;
  bool criterion = false;
  bool definition = false;
  bool q_higmanian = false;
  bool dismantlable = false;

  std::array<quadratic_number, 2> rhs;
  std::string definition_parabolic;   // colors of the parabolic that passed
  std::string dismantle_parabolic;
  std::optional<block_triple> definition_witness;
  std::vector<std::size_t> dismantle_witness;
  q_higmanian_verdict spectral;
  std::string spectral_error;        // set when the closed forms do not apply
  std::optional<double> oracle_deviation;
  bool oracle_multiplicities = false;
  // Results under the exchanged S/T labeling when n_S = n_T.
  std::optional<std::array<bool, 2>> swapped;  // {criterion, q_higmanian}

  bool consistent() const;
  bool uniform() const { return criterion && definition && q_higmanian && dismantlable; }
};

class inconsistent_verdicts : public std::logic_error {
 public:
  explicit inconsistent_verdicts(verdict_report report);
  const verdict_report& report() const { return report_; }

 private:
  verdict_report report_;
};

// All four routes. Throws inconsistent_verdicts when they disagree.
verdict_report verdict_bundle(const scheme& s, const higmanian_structure& h,
                              const bundle_options& options = {});

std::string describe_colors(const parabolic& e);

}  // namespace higman
