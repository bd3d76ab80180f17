#include "higman/higmanian.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace higman {

bool higmanian_params::is_admissible() const {
  return f >= 2 && m >= 2 && n >= 2 && m * n - k <= k && k <= m * n;
}

std::string higmanian_params::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const higmanian_params& p) {
  return os << '(' << p.f << ',' << p.m << ',' << p.n << ',' << p.k << ',' << p.t << ')';
}

std::string to_string(rejection r) {
  switch (r) {
    case rejection::none: return "none";
    case rejection::wrong_rank: return "wrong rank";
    case rejection::not_symmetric: return "not symmetric";
    case rejection::parabolic_count: return "not exactly two nontrivial parabolics";
    case rejection::parabolic_chain: return "parabolic chain mismatch";
    case rejection::decomposable: return "decomposable";
    case rejection::k_not_constant: return "k not constant";
  }
  return "unknown";
}

std::string describe_colors(const parabolic& e) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < e.colors.size(); ++i) os << (i ? "," : "") << e.colors[i];
  os << '}';
  return os.str();
}

namespace {

detection reject(rejection r, std::string detail) {
  detection d;
  d.reason = r;
  d.detail = std::move(detail);
  return d;
}

// |alpha T' cap Delta| for Delta an F-class other than alpha's; nullopt if
// it varies.
std::optional<std::int64_t> constant_k(const scheme& s, const parabolic& F, color_t outside) {
  std::optional<std::int64_t> k;
  std::vector<std::int64_t> per_class(F.class_count());
  for (point a = 0; a < s.points(); ++a) {
    std::fill(per_class.begin(), per_class.end(), 0);
    const auto row = s.row(a);
    for (point y = 0; y < s.points(); ++y)
      if (row[y] == outside) ++per_class[F.class_of[y]];
    for (std::size_t c = 0; c < F.class_count(); ++c) {
      if (c == F.class_of[a]) continue;
      if (!k) k = per_class[c];
      else if (*k != per_class[c]) return std::nullopt;
    }
  }
  return k;
}

color_t single_extra_color(const parabolic& big, const parabolic& small) {
  for (color_t c : big.colors)
    if (!small.contains_color(c)) return c;
  return 0;
}

}  // namespace

detection detect_higmanian(const scheme& s, bool strict) {
  if (s.rank() != 5)
    return reject(rejection::wrong_rank, "rank is " + std::to_string(s.rank()) + ", not 5");
  if (!s.is_symmetric()) return reject(rejection::not_symmetric, "some relation is not symmetric");

  const auto nontrivial = nontrivial_parabolics(s);
  if (strict && nontrivial.size() != 2)
    return reject(rejection::parabolic_count,
                  std::to_string(nontrivial.size()) + " nontrivial parabolics");
  for (const auto& e : nontrivial)
    if (is_wreath_over(s, e))
      return reject(rejection::decomposable, "wreath product over parabolic " + describe_colors(e));

  for (std::size_t a = 0; a < nontrivial.size(); ++a)
    for (std::size_t b = 0; b < nontrivial.size(); ++b) {
      const auto& E = nontrivial[a];
      const auto& F = nontrivial[b];
      if (a == b || E.colors.size() >= F.colors.size()) continue;
      if (!std::includes(F.colors.begin(), F.colors.end(), E.colors.begin(), E.colors.end()))
        continue;
      if (parabolic_rank(s, E) != 2 || parabolic_corank(s, F) != 2 || parabolic_rank(s, F) != 3 ||
          parabolic_corank(s, E) != 3)
        continue;

      std::vector<color_t> outside;
      for (color_t c = 1; c < 5; ++c)
        if (!F.contains_color(c)) outside.push_back(c);
      if (outside.size() != 2) continue;
      color_t T = outside[0], S = outside[1];  // on a valency tie T is the lower color
      if (s.valency(T) > s.valency(S)) std::swap(S, T);

      higmanian_structure h;
      h.E = E;
      h.F = F;
      h.S = S;
      h.T = T;
      h.relation_order = {0, E.colors.back(), S, T, single_extra_color(F, E)};
      const auto k = constant_k(s, F, S);
      if (!k) return reject(rejection::k_not_constant, "|aS cap D| varies over points and classes");
      h.params = {static_cast<std::int64_t>(s.points() / F.class_size()),
                  static_cast<std::int64_t>(F.class_size() / E.class_size()),
                  static_cast<std::int64_t>(E.class_size()), *k, s.p(T, S, T)};
      if (s.valency(S) == s.valency(T)) {
        const auto k2 = constant_k(s, F, T);
        if (!k2)
          return reject(rejection::k_not_constant, "|aT cap D| varies over points and classes");
        h.swapped_params = higmanian_params{h.params.f, h.params.m, h.params.n, *k2, s.p(S, T, S)};
      }
      detection d;
      d.structure = std::move(h);
      return d;
    }
  return reject(rejection::parabolic_chain,
                "no chain E < F with rk(E)=cork(F)=2 and rk(F)=cork(E)=3");
}

std::array<quadratic_number, 2> uniformity_rhs(std::int64_t f, std::int64_t m, std::int64_t n,
                                               std::int64_t k) {
  const std::int64_t mn = m * n;
  const quadratic_number scale(rational(k * (f - 2), mn));
  const quadratic_number root = quadratic_number::sqrt(rational(k * (mn - k), m * (n - 1)));
  const quadratic_number base(static_cast<long long>(mn - k));
  return {scale * (base + root), scale * (base - root)};
}

bool is_admissible_t(const quadratic_number& candidate) {
  return candidate.is_integer() && candidate.sign() >= 0;
}

bool is_uniform_by_criterion(const higmanian_params& p) {
  const auto rhs = uniformity_rhs(p.f, p.m, p.n, p.k);
  const quadratic_number t(static_cast<long long>(p.t));
  return t == rhs[0] || t == rhs[1];
}

definition_verdict is_uniform_by_definition(const scheme& s, const parabolic& e) {
  definition_verdict out;
  out.corank_two = parabolic_corank(s, e) == 2;
  if (!out.corank_two) return out;

  const std::size_t r = s.rank();
  const std::size_t c = e.class_count();
  // Global record of a_ij^k, -1 = unseen, -2 = varies.
  std::vector<std::int64_t> global(r * r * r, -1);
  std::vector<std::int64_t> local(r * r * r);
  std::vector<std::int64_t> counts(r * r);
  constexpr std::int64_t unseen = -1;

  for (std::size_t D = 0; D < c; ++D)
    for (std::size_t G = 0; G < c; ++G)
      for (std::size_t L = 0; L < c; ++L) {
        ++out.triples_checked;
        std::fill(local.begin(), local.end(), unseen);
        std::vector<char> in_dg(r, 0), in_gl(r, 0);
        for (point x : e.classes[D])
          for (point y : e.classes[G]) in_dg[s.color(x, y)] = 1;
        for (point y : e.classes[G])
          for (point z : e.classes[L]) in_gl[s.color(y, z)] = 1;

        for (point x : e.classes[D]) {
          const auto rx = s.row(x);
          for (point z : e.classes[L]) {
            std::fill(counts.begin(), counts.end(), 0);
            for (point y : e.classes[G]) ++counts[rx[y] * r + s.color(y, z)];
            const color_t k = rx[z];
            for (color_t i = 0; i < r; ++i) {
              if (!in_dg[i]) continue;
              for (color_t j = 0; j < r; ++j) {
                if (!in_gl[j]) continue;
                auto& slot = local[(i * r + j) * r + k];
                const auto value = counts[i * r + j];
                if (slot == unseen) slot = value;
                else if (slot != value) {
                  out.witness = block_triple{D, G, L, i, j};
                  return out;
                }
              }
            }
          }
        }
        for (std::size_t idx = 0; idx < local.size(); ++idx) {
          if (local[idx] == unseen) continue;
          if (global[idx] == -1) global[idx] = local[idx];
          else if (global[idx] != local[idx]) out.coefficients_global = false;
        }
      }
  out.holds = true;
  return out;
}

dismantle_verdict is_dismantlable(const scheme& s, const parabolic& e,
                                  const dismantle_options& options) {
  dismantle_verdict out;
  const std::size_t c = e.class_count();
  auto check = [&](const std::vector<std::size_t>& chosen) {
    ++out.unions_checked;
    std::vector<point> pts;
    for (auto idx : chosen) pts.insert(pts.end(), e.classes[idx].begin(), e.classes[idx].end());
    std::sort(pts.begin(), pts.end());
    try {
      (void)restriction(s, pts);
      return true;
    } catch (const scheme_error&) {
      out.witness = chosen;
      return false;
    }
  };
  auto from_mask = [&](std::uint64_t mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t b = 0; b < c; ++b)
      if (mask >> b & 1) chosen.push_back(b);
    return chosen;
  };

  if (c < 64 && (std::uint64_t{1} << c) - 1 <= options.exhaustive_cap) {
    out.exhaustive = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask)
      if (!check(from_mask(mask))) return out;
    out.holds = true;
    return out;
  }

  // All unions of at most two classes or all but at most two, then samples.
  std::set<std::vector<std::size_t>> seen;
  auto visit = [&](std::vector<std::size_t> chosen) {
    std::sort(chosen.begin(), chosen.end());
    if (chosen.empty() || !seen.insert(chosen).second) return true;
    return check(chosen);
  };
  auto complement = [&](const std::vector<std::size_t>& drop) {
    std::vector<std::size_t> keep;
    for (std::size_t b = 0; b < c; ++b)
      if (std::find(drop.begin(), drop.end(), b) == drop.end()) keep.push_back(b);
    return keep;
  };
  for (std::size_t a = 0; a < c; ++a) {
    if (!visit({a}) || !visit(complement({a}))) return out;
    for (std::size_t b = a + 1; b < c; ++b)
      if (!visit({a, b}) || !visit(complement({a, b}))) return out;
  }
  if (!visit(complement({}))) return out;
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < options.samples; ++i) {
    std::vector<std::size_t> chosen;
    for (std::size_t b = 0; b < c; ++b)
      if (coin(rng)) chosen.push_back(b);
    if (!visit(std::move(chosen))) return out;
  }
  out.holds = true;
  return out;
}

bool verdict_report::consistent() const {
  const bool all = criterion && definition && q_higmanian && dismantlable;
  const bool none = !criterion && !definition && !q_higmanian && !dismantlable;
  if (!(all || none)) return false;
  if (swapped) return (*swapped)[0] == criterion && (*swapped)[1] == criterion;
  return true;
}

namespace {

std::string bundle_summary(const verdict_report& r) {
  std::ostringstream os;
  os << "verdicts disagree for " << r.params << ": criterion=" << r.criterion
     << " definition=" << r.definition << " q_higmanian=" << r.q_higmanian
     << " dismantlable=" << r.dismantlable;
  if (r.swapped) os << " swapped(criterion,q)=(" << (*r.swapped)[0] << "," << (*r.swapped)[1] << ")";
  if (!r.spectral_error.empty()) os << " spectral: " << r.spectral_error;
  return os.str();
}

bool spectral_route(const higmanian_params& p, verdict_report* report) {
  try {
    const auto data = higmanian_eigen_data(p, multiplicity_policy::allow_irrational);
    auto verdict = is_q_higmanian(data);
    const bool holds = verdict.holds;
    if (report) report->spectral = std::move(verdict);
    return holds;
  } catch (const std::domain_error& err) {
    if (report) report->spectral_error = err.what();
    return false;
  }
}

}  // namespace

inconsistent_verdicts::inconsistent_verdicts(verdict_report report)
    : std::logic_error(bundle_summary(report)), report_(std::move(report)) {}

verdict_report verdict_bundle(const scheme& s, const higmanian_structure& h,
                              const bundle_options& options) {
  verdict_report r;
  r.params = h.params;
  r.rhs = uniformity_rhs(h.params.f, h.params.m, h.params.n, h.params.k);
  r.criterion = is_uniform_by_criterion(h.params);
  r.q_higmanian = spectral_route(h.params, &r);

  // Existential over nontrivial parabolics; fewest classes first.
  auto candidates = nontrivial_parabolics(s);
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return a.class_count() < b.class_count();
  });
  for (const auto& e : candidates) {
    const auto d = is_uniform_by_definition(s, e);
    if (d.holds) {
      r.definition = true;
      r.definition_parabolic = describe_colors(e);
      break;
    }
    if (d.witness && !r.definition_witness) r.definition_witness = d.witness;
  }
  for (const auto& e : candidates) {
    const auto d = is_dismantlable(s, e, options.dismantle);
    if (d.holds) {
      r.dismantlable = true;
      r.dismantle_parabolic = describe_colors(e);
      break;
    }
    if (r.dismantle_witness.empty()) r.dismantle_witness = d.witness;
  }

  if (h.swapped_params)
    r.swapped = std::array<bool, 2>{is_uniform_by_criterion(*h.swapped_params),
                                    spectral_route(*h.swapped_params, nullptr)};

  if (options.oracle) {
    try {
      const auto spec = higmanian_eigenmatrix(h.params);
      auto exact = spec.data;
      exact.multiplicities =
          higmanian_multiplicities(h.params, spec.x1, spec.x3, multiplicity_policy::allow_irrational);
      const auto numeric = numeric_eigendecomposition(s, h.relation_order);
      const auto cmp = compare_with_oracle(exact, numeric);
      r.oracle_deviation = cmp.max_deviation;
      r.oracle_multiplicities = cmp.multiplicities_match;
    } catch (const std::domain_error&) {
      r.oracle_deviation.reset();
    }
  }

  if (!r.consistent()) throw inconsistent_verdicts(std::move(r));
  return r;
}

}  // namespace higman
