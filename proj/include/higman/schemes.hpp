#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "higman/groups.hpp"

namespace higman {

using point = std::uint32_t;
using color_t = std::uint32_t;

// Which association-scheme axiom a color matrix violates.
enum class scheme_axiom {
  shape,               // not square, or header mismatch
  color_range,         // entry outside {0..d} or some color unused
  diagonal,            // color(x,x) != 0, or color 0 off the diagonal
  inverse_closure,     // no color i* with color(y,x) = i* whenever color(x,y) = i
  intersection_number  // p_ij^k depends on the pair (x,y), not only on k
};

std::string to_string(scheme_axiom a);

class scheme_error : public std::runtime_error {
 public:
  scheme_error(scheme_axiom axiom, std::string what, std::vector<std::int64_t> witness = {})
      : std::runtime_error(std::move(what)), axiom_(axiom), witness_(std::move(witness)) {}
  scheme_axiom axiom() const { return axiom_; }
  // For intersection_number: (i, j, k, x, y, x', y') with the two pairs of
  // color k giving different counts for colors (i, j).
  const std::vector<std::int64_t>& witness() const { return witness_; }

 private:
  scheme_axiom axiom_;
  std::vector<std::int64_t> witness_;
};

// Dense (d+1)^3 tensor of intersection numbers p_ij^k.
class intersection_numbers {
 public:
  intersection_numbers() = default;
  explicit intersection_numbers(std::size_t rank) : rank_(rank), p_(rank * rank * rank, 0) {}

  std::size_t rank() const { return rank_; }
  std::int64_t operator()(color_t i, color_t j, color_t k) const {
    return p_[(i * rank_ + j) * rank_ + k];
  }
  std::int64_t& at(color_t i, color_t j, color_t k) { return p_[(i * rank_ + j) * rank_ + k]; }

  friend bool operator==(const intersection_numbers&, const intersection_numbers&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> p_;
};

// An association scheme stored as its v x v color matrix. Instances only
// come out of `validate`, so every scheme object satisfies the axioms.
class scheme {
 public:
  static scheme validate(std::size_t v, std::vector<color_t> colors);

  std::size_t points() const { return v_; }
  std::size_t rank() const { return rank_; }
  color_t color(point x, point y) const { return colors_[x * v_ + y]; }
  std::span<const color_t> row(point x) const { return {colors_.data() + x * v_, v_}; }
  std::span<const color_t> colors() const { return colors_; }

  const intersection_numbers& numbers() const { return p_; }
  std::int64_t p(color_t i, color_t j, color_t k) const { return p_(i, j, k); }
  std::int64_t valency(color_t i) const { return valency_[i]; }
  const std::vector<std::int64_t>& valencies() const { return valency_; }
  color_t inverse_color(color_t i) const { return inverse_[i]; }

  bool is_symmetric() const;
  bool is_commutative() const;

  friend bool operator==(const scheme& a, const scheme& b) {
    return a.v_ == b.v_ && a.colors_ == b.colors_;
  }

 private:
  scheme() = default;

  std::size_t v_ = 0;
  std::size_t rank_ = 0;
  std::vector<color_t> colors_;
  std::vector<color_t> inverse_;
  std::vector<std::int64_t> valency_;
  intersection_numbers p_;
};

struct parabolic {
  std::vector<color_t> colors;                // sorted, contains 0
  std::vector<std::vector<point>> classes;    // each sorted, ordered by min point
  std::vector<std::uint32_t> class_of;        // point -> class index

  std::size_t class_size() const { return classes.front().size(); }
  std::size_t class_count() const { return classes.size(); }
  bool contains_color(color_t c) const;
  bool is_trivial() const { return classes.size() == 1 || classes.front().size() == 1; }
};

// True iff the union of the given colors is an equivalence relation.
bool is_parabolic_colors(const scheme& s, std::span<const color_t> colors);
parabolic make_parabolic(const scheme& s, std::vector<color_t> colors);

// Every parabolic (trivial ones included) ordered by class size, then by
// color list. Exhaustive over the 2^d subsets containing 0; rank <= 20.
std::vector<parabolic> parabolics(const scheme& s);
std::vector<parabolic> nontrivial_parabolics(const scheme& s);

// Colors of the result are relabeled by first occurrence in row-major order.
scheme quotient(const scheme& s, const parabolic& e);
scheme restriction(const scheme& s, std::span<const point> points);
scheme restriction(const scheme& s, const parabolic& e, std::size_t class_index);
// rk(E); throws std::logic_error if classes disagree.
std::size_t parabolic_rank(const scheme& s, const parabolic& e);
// cork(E)
std::size_t parabolic_corank(const scheme& s, const parabolic& e);

// Every off-diagonal block of E-classes is monochromatic.
bool is_wreath_over(const scheme& s, const parabolic& e);
bool is_indecomposable(const scheme& s);

// Wreath product: points (outer, inner) -> outer * inner_v + inner; color
// within a fiber from `inner`, across fibers inner.rank - 1 + outer color.
scheme wreath_product(const scheme& inner, const scheme& outer);
scheme trivial_scheme(std::size_t v);

// Cayley scheme of a partition of G: color(x,y) is the part containing
// y x^{-1}. Throws std::invalid_argument if the parts do not partition G,
// part 0 is not {e}, or the partition is not inverse-closed; throws
// scheme_error if the color matrix is not a scheme (not an S-ring).
scheme cayley_scheme(const finite_group& g, const std::vector<std::vector<element>>& parts);

// Scheme file: `scheme <v> <rank>` then v rows of colors.
scheme read_scheme(std::istream& in);
void write_scheme(std::ostream& out, const scheme& s);

}  // namespace higman
