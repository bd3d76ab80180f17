#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "higman/params.hpp"
#include "higman/quadratic.hpp"
#include "higman/schemes.hpp"

namespace higman {

using qvector = std::vector<quadratic_number>;
using qmatrix = std::vector<qvector>;

// First eigenmatrix with rows indexed by primitive idempotents E_j and
// columns by basic relations R_i, so row 0 is the valency vector.
struct eigen_data {
  std::size_t points = 0;
  qmatrix P;
  qvector multiplicities;  // empty until computed
  qvector valencies;

  std::size_t rank() const { return P.size(); }
};

struct higmanian_spectrum {
  quadratic_number x1;  // |x1| >= |x3|, ties broken by x1 > x3
  quadratic_number x3;
  eigen_data data;      // relations ordered R0, E\R0, S, T, F\E
};

// Closed-form eigenmatrix of a Higmanian scheme. Throws std::domain_error
// when k = 0 or the quadratic for x1, x3 has a negative discriminant.
higmanian_spectrum higmanian_eigenmatrix(const higmanian_params& params);

enum class multiplicity_policy { require_integral, allow_irrational };

// m_0..m_4 from the closed forms. With require_integral, throws
// std::domain_error if a value is not a positive integer.
qvector higmanian_multiplicities(const higmanian_params& params, const quadratic_number& x1,
                                 const quadratic_number& x3,
                                 multiplicity_policy policy = multiplicity_policy::require_integral);

// Eigenmatrix plus closed-form multiplicities in one call.
eigen_data higmanian_eigen_data(const higmanian_params& params,
                                multiplicity_policy policy = multiplicity_policy::require_integral);

// m_j = v / sum_i P_ji^2 / n_i. Throws std::domain_error on a zero sum.
qvector multiplicity_check(const qmatrix& P, const qvector& valencies, std::size_t points);

class krein_tensor {
 public:
  krein_tensor() = default;
  explicit krein_tensor(std::size_t rank) : rank_(rank), q_(rank * rank * rank) {}

  std::size_t rank() const { return rank_; }
  const quadratic_number& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return q_[(i * rank_ + j) * rank_ + k];
  }
  quadratic_number& at(std::size_t i, std::size_t j, std::size_t k) {
    return q_[(i * rank_ + j) * rank_ + k];
  }
  bool all_nonnegative() const;
  bool all_rational() const;

 private:
  std::size_t rank_ = 0;
  qvector q_;
};

// q_ij^k = (m_i m_j / v) sum_l P_il P_jl P_kl / n_l^2. Needs multiplicities.
krein_tensor krein(const eigen_data& data);

// <E_i : i in I> is closed under the entrywise product: q_ij^k = 0 for all
// i, j in I and k outside I.
bool spans_hadamard_subalgebra(std::span<const std::size_t> index_set, const krein_tensor& q);

// Classes of the transitive closure of i ~ j iff q_ij^k != 0 for some k in I,
// each class sorted, classes ordered by least member.
std::vector<std::vector<std::size_t>> sim_classes(std::span<const std::size_t> index_set,
                                                  const krein_tensor& q);

struct q_higmanian_verdict {
  bool holds = false;
  // ordering[i] is the original idempotent placed at position i.
  std::vector<std::size_t> ordering;
  std::size_t l = 0;
  quadratic_number f;                 // |Omega/E(I)| for the certificate
  std::size_t admissible_orderings = 0;
  std::string reason;
};

// Exhaustive search over idempotent orderings with E_0 fixed.
q_higmanian_verdict is_q_higmanian(const eigen_data& data);
// Same, after checking the scheme is commutative (throws std::invalid_argument).
q_higmanian_verdict is_q_higmanian(const scheme& s, const eigen_data& data);

// Floating-point oracle: eigenspaces of a generic combination of the
// adjacency matrices, listed by ascending eigenvalue of that combination.
struct numeric_spectrum {
  std::vector<std::vector<double>> P;  // columns follow relation_order
  std::vector<std::size_t> multiplicities;
};

numeric_spectrum numeric_eigendecomposition(const scheme& s,
                                            std::span<const color_t> relation_order);

struct oracle_comparison {
  double max_deviation = 0.0;
  bool multiplicities_match = false;
  std::vector<std::size_t> row_of;  // numeric row -> exact row
};

// Matches rows by nearest valency-normalized profile, then reports the
// largest entrywise deviation.
oracle_comparison compare_with_oracle(const eigen_data& exact, const numeric_spectrum& numeric);

// Exact eigen data read off the oracle when every eigenvalue is within
// 1e-8 of an integer; columns in natural color order.
std::optional<eigen_data> integral_eigen_data(const scheme& s);

}  // namespace higman
