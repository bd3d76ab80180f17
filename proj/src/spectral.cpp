#include "higman/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

namespace higman {

namespace {

quadratic_number q_of(std::int64_t x) { return quadratic_number(static_cast<long long>(x)); }

}  // namespace

higmanian_spectrum higmanian_eigenmatrix(const higmanian_params& p) {
  if (p.k == 0) throw std::domain_error("eigenmatrix: k = 0");
  if (p.m < 1 || p.n < 2) throw std::domain_error("eigenmatrix: need m >= 1 and n >= 2");
  const std::int64_t mn = p.m * p.n;
  // x^2 + B x + C = 0
  const rational B = rational((p.f - 2) * (mn - p.k)) - rational(p.t * mn, p.k);
  const rational C = -rational((p.f - 1) * p.k * (mn - p.k), p.m * (p.n - 1));
  const rational disc = B * B - 4 * C;
  if (disc < 0)
    throw std::domain_error("eigenmatrix: negative discriminant for " + p.str() +
                            "; no symmetric scheme has these parameters");
  const quadratic_number root = quadratic_number::sqrt(disc);
  quadratic_number a = (quadratic_number(-B) + root) / quadratic_number(2);
  quadratic_number b = (quadratic_number(-B) - root) / quadratic_number(2);
  const int cmp = (a.abs() - b.abs()).sign();
  if (cmp < 0 || (cmp == 0 && a < b)) std::swap(a, b);

  higmanian_spectrum out{a, b, {}};
  auto& d = out.data;
  d.points = static_cast<std::size_t>(p.points());
  d.P = {
      {1, q_of(p.n - 1), q_of(p.k * (p.f - 1)), q_of((mn - p.k) * (p.f - 1)), q_of(mn - p.n)},
      {1, -1, a, -a, 0},
      {1, q_of(p.n - 1), 0, 0, q_of(-p.n)},
      {1, -1, b, -b, 0},
      {1, q_of(p.n - 1), q_of(-p.k), q_of(-mn + p.k), q_of(mn - p.n)},
  };
  d.valencies = d.P[0];
  return out;
}

qvector higmanian_multiplicities(const higmanian_params& p, const quadratic_number& x1,
                                 const quadratic_number& x3, multiplicity_policy policy) {
  const std::int64_t mn = p.m * p.n;
  const quadratic_number core = q_of((p.f - 1) * p.k * (mn - p.k));
  const quadratic_number top = q_of(p.f) * core * q_of(p.m * (p.n - 1));
  auto fraction = [&](const quadratic_number& x) {
    const quadratic_number den = core + x * x * q_of(p.m * (p.n - 1));
    if (den.is_zero()) throw std::domain_error("multiplicities: zero denominator for " + p.str());
    return top / den;
  };
  qvector m = {1, fraction(x1), q_of(p.f * (p.m - 1)), fraction(x3), q_of(p.f - 1)};
  if (policy == multiplicity_policy::require_integral)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!m[j].is_integer() || m[j].sign() <= 0)
        throw std::domain_error("multiplicity m_" + std::to_string(j) + " = " + m[j].str() +
                                " is not a positive integer; " + p.str() + " is not realizable");
  return m;
}

eigen_data higmanian_eigen_data(const higmanian_params& p, multiplicity_policy policy) {
  auto spec = higmanian_eigenmatrix(p);
  spec.data.multiplicities = higmanian_multiplicities(p, spec.x1, spec.x3, policy);
  return spec.data;
}

qvector multiplicity_check(const qmatrix& P, const qvector& valencies, std::size_t points) {
  qvector m;
  for (const auto& row : P) {
    quadratic_number sum;
    for (std::size_t i = 0; i < row.size(); ++i) sum += row[i] * row[i] / valencies[i];
    if (sum.is_zero()) throw std::domain_error("multiplicity_check: zero row sum");
    m.push_back(quadratic_number(static_cast<long long>(points)) / sum);
  }
  return m;
}

bool krein_tensor::all_nonnegative() const {
  return std::all_of(q_.begin(), q_.end(), [](const auto& x) { return x.sign() >= 0; });
}

bool krein_tensor::all_rational() const {
  return std::all_of(q_.begin(), q_.end(), [](const auto& x) { return x.is_rational(); });
}

krein_tensor krein(const eigen_data& d) {
  const std::size_t r = d.rank();
  if (d.multiplicities.size() != r) throw std::invalid_argument("krein: multiplicities missing");
  const quadratic_number v(static_cast<long long>(d.points));
  qvector inv_n2(r);
  for (std::size_t l = 0; l < r; ++l) inv_n2[l] = quadratic_number(1) / (d.valencies[l] * d.valencies[l]);
  krein_tensor q(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      qvector ij(r);
      for (std::size_t l = 0; l < r; ++l) ij[l] = d.P[i][l] * d.P[j][l] * inv_n2[l];
      const quadratic_number scale = d.multiplicities[i] * d.multiplicities[j] / v;
      for (std::size_t k = 0; k < r; ++k) {
        quadratic_number sum;
        for (std::size_t l = 0; l < r; ++l) sum += ij[l] * d.P[k][l];
        q.at(i, j, k) = scale * sum;
      }
    }
  return q;
}

bool spans_hadamard_subalgebra(std::span<const std::size_t> index_set, const krein_tensor& q) {
  std::vector<char> in(q.rank(), 0);
  for (auto i : index_set) in.at(i) = 1;
  for (auto i : index_set)
    for (auto j : index_set)
      for (std::size_t k = 0; k < q.rank(); ++k)
        if (!in[k] && !q(i, j, k).is_zero()) return false;
  return true;
}

std::vector<std::vector<std::size_t>> sim_classes(std::span<const std::size_t> index_set,
                                                  const krein_tensor& q) {
  const std::size_t r = q.rank();
  std::vector<std::size_t> root(r);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (auto k : index_set)
        if (!q(i, j, k).is_zero()) {
          const auto a = find(i), b = find(j);
          if (a != b) root[std::max(a, b)] = std::min(a, b);
        }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> slot(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto rt = find(i);
    if (slot[rt] == r) {
      slot[rt] = classes.size();
      classes.emplace_back();
    }
    classes[slot[rt]].push_back(i);
  }
  return classes;
}

namespace {

// Relabeled copy of q and m under ordering[i] = old index.
krein_tensor permuted(const krein_tensor& q, const std::vector<std::size_t>& ord) {
  krein_tensor out(q.rank());
  for (std::size_t i = 0; i < q.rank(); ++i)
    for (std::size_t j = 0; j < q.rank(); ++j)
      for (std::size_t k = 0; k < q.rank(); ++k) out.at(i, j, k) = q(ord[i], ord[j], ord[k]);
  return out;
}

bool classes_match_pattern(const std::vector<std::vector<std::size_t>>& classes, std::size_t d,
                           std::size_t l) {
  std::vector<std::vector<std::size_t>> want;
  for (std::size_t i = 0; i < l; ++i) want.push_back({i, d - i});
  for (std::size_t i = l; i <= d - l; ++i) want.push_back({i});
  std::sort(want.begin(), want.end());
  auto got = classes;
  std::sort(got.begin(), got.end());
  return got == want;
}

}  // namespace

q_higmanian_verdict is_q_higmanian(const eigen_data& data) {
  q_higmanian_verdict verdict;
  const std::size_t r = data.rank();
  if (r < 3) {
    verdict.reason = "rank below 3 admits no proper nontrivial subalgebra";
    return verdict;
  }
  const std::size_t d = r - 1;
  const krein_tensor q = krein(data);
  std::vector<std::size_t> ord(r);
  std::iota(ord.begin(), ord.end(), std::size_t{0});
  const std::array<std::size_t, 2> index_set{0, d};
  bool any_subalgebra = false;
  do {
    const krein_tensor qp = permuted(q, ord);
    if (!spans_hadamard_subalgebra(index_set, qp)) continue;
    any_subalgebra = true;
    const auto classes = sim_classes(index_set, qp);
    auto m = [&](std::size_t i) { return data.multiplicities[ord[i]]; };
    const quadratic_number f = m(0) + m(d);
    for (std::size_t l = 1; l <= d / 2; ++l) {
      if (!classes_match_pattern(classes, d, l)) continue;
      bool ratios = true;
      for (std::size_t i = 0; i < l && ratios; ++i) ratios = m(d - i) == (f - 1) * m(i);
      if (!ratios) continue;
      if (!verdict.holds) {
        verdict.holds = true;
        verdict.ordering = ord;
        verdict.l = l;
        verdict.f = f;
      }
      ++verdict.admissible_orderings;
    }
  } while (std::next_permutation(ord.begin() + 1, ord.end()));
  if (!verdict.holds)
    verdict.reason = any_subalgebra
                         ? "no ordering meets the class pattern and multiplicity ratios"
                         : "no ordering makes {0,d} span a Hadamard-closed subalgebra";
  return verdict;
}

q_higmanian_verdict is_q_higmanian(const scheme& s, const eigen_data& data) {
  if (!s.is_commutative()) throw std::invalid_argument("is_q_higmanian: scheme is not commutative");
  return is_q_higmanian(data);
}

numeric_spectrum numeric_eigendecomposition(const scheme& s,
                                            std::span<const color_t> relation_order) {
  if (!s.is_symmetric()) throw std::invalid_argument("numeric oracle needs a symmetric scheme");
  const std::size_t v = s.points(), r = s.rank();
  if (relation_order.size() != r) throw std::invalid_argument("relation order has wrong length");

  // Weights sqrt(prime) keep the eigenvalues of the combination distinct.
  static constexpr double primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  std::vector<double> weight(r, 0.0);
  for (color_t c = 1; c < r; ++c) weight[c] = std::sqrt(primes[c % 16]) + c;

  Eigen::MatrixXd M(v, v);
  for (point x = 0; x < v; ++x)
    for (point y = 0; y < v; ++y) M(x, y) = weight[s.color(x, y)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();

  numeric_spectrum out;
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  std::size_t start = 0;
  for (std::size_t i = 1; i <= v; ++i) {
    if (i < v && values(i) - values(i - 1) < 1e-7 * scale) continue;
    const std::size_t dim = i - start;
    const Eigen::MatrixXd V = vectors.middleCols(start, dim);
    std::vector<double> row(r);
    for (std::size_t col = 0; col < r; ++col) {
      const color_t c = relation_order[col];
      Eigen::MatrixXd AV = Eigen::MatrixXd::Zero(v, dim);
      for (point x = 0; x < v; ++x) {
        const auto rx = s.row(x);
        for (point y = 0; y < v; ++y)
          if (rx[y] == c) AV.row(x) += V.row(y);
      }
      row[col] = (V.transpose() * AV).trace() / static_cast<double>(dim);
    }
    out.P.push_back(std::move(row));
    out.multiplicities.push_back(dim);
    start = i;
  }
  return out;
}

oracle_comparison compare_with_oracle(const eigen_data& exact, const numeric_spectrum& numeric) {
  oracle_comparison cmp;
  const std::size_t r = exact.rank();
  if (numeric.P.size() != r) {
    cmp.max_deviation = INFINITY;
    return cmp;
  }
  std::vector<std::vector<double>> ex(r, std::vector<double>(r));
  std::vector<double> n(r);
  for (std::size_t i = 0; i < r; ++i) n[i] = exact.valencies[i].to_double();
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) ex[j][i] = exact.P[j][i].to_double();

  std::vector<char> used(r, 0);
  cmp.row_of.assign(r, r);
  cmp.multiplicities_match = exact.multiplicities.size() == r;
  for (std::size_t a = 0; a < r; ++a) {
    double best = INFINITY;
    std::size_t pick = r;
    for (std::size_t j = 0; j < r; ++j) {
      if (used[j]) continue;
      double dist = 0;
      for (std::size_t i = 0; i < r; ++i)
        dist = std::max(dist, std::abs(numeric.P[a][i] - ex[j][i]) / n[i]);
      if (dist < best) {
        best = dist;
        pick = j;
      }
    }
    used[pick] = 1;
    cmp.row_of[a] = pick;
    for (std::size_t i = 0; i < r; ++i)
      cmp.max_deviation = std::max(cmp.max_deviation, std::abs(numeric.P[a][i] - ex[pick][i]));
    if (cmp.multiplicities_match)
      cmp.multiplicities_match =
          std::abs(exact.multiplicities[pick].to_double() - double(numeric.multiplicities[a])) < 1e-9;
  }
  return cmp;
}

std::optional<eigen_data> integral_eigen_data(const scheme& s) {
  std::vector<color_t> order(s.rank());
  std::iota(order.begin(), order.end(), color_t{0});
  const auto numeric = numeric_eigendecomposition(s, order);
  if (numeric.P.size() != s.rank()) return std::nullopt;
  eigen_data d;
  d.points = s.points();
  for (std::size_t j = 0; j < numeric.P.size(); ++j) {
    qvector row;
    for (double x : numeric.P[j]) {
      const double rounded = std::round(x);
      if (std::abs(x - rounded) > 1e-8) return std::nullopt;
      row.emplace_back(static_cast<long long>(rounded));
    }
    d.P.push_back(std::move(row));
    d.multiplicities.emplace_back(static_cast<long long>(numeric.multiplicities[j]));
  }
  // Principal idempotent first: its row is the valency vector.
  for (std::size_t j = 0; j < d.P.size(); ++j)
    if (d.multiplicities[j] == quadratic_number(1) && d.P[j][0] == quadratic_number(1)) {
      bool principal = true;
      for (color_t c = 0; c < s.rank(); ++c)
        principal &= d.P[j][c] == quadratic_number(static_cast<long long>(s.valency(c)));
      if (principal) {
        std::swap(d.P[0], d.P[j]);
        std::swap(d.multiplicities[0], d.multiplicities[j]);
        break;
      }
    }
  for (color_t c = 0; c < s.rank(); ++c)
    d.valencies.emplace_back(static_cast<long long>(s.valency(c)));
  return d;
}

}  // namespace higman
