#include "higman/schemes.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace higman {

std::string to_string(scheme_axiom a) {
  switch (a) {
    case scheme_axiom::shape: return "shape";
    case scheme_axiom::color_range: return "color range";
    case scheme_axiom::diagonal: return "diagonal";
    case scheme_axiom::inverse_closure: return "inverse closure";
    case scheme_axiom::intersection_number: return "intersection number";
  }
  return "unknown";
}

scheme scheme::validate(std::size_t v, std::vector<color_t> colors) {
  if (v == 0 || colors.size() != v * v)
    throw scheme_error(scheme_axiom::shape, "color matrix must be a nonempty square");
  const color_t top = *std::max_element(colors.begin(), colors.end());
  const std::size_t rank = static_cast<std::size_t>(top) + 1;

  scheme s;
  s.v_ = v;
  s.rank_ = rank;
  s.colors_ = std::move(colors);

  std::vector<std::int64_t> row_count(rank, 0);
  for (point x = 0; x < v; ++x)
    for (point y = 0; y < v; ++y) {
      const color_t c = s.color(x, y);
      if ((c == 0) != (x == y))
        throw scheme_error(scheme_axiom::diagonal,
                           "color 0 must occur exactly on the diagonal; violated at (" +
                               std::to_string(x) + "," + std::to_string(y) + ")",
                           {x, y});
      if (x == 0) ++row_count[c];
    }
  for (color_t c = 0; c < rank; ++c)
    if (row_count[c] == 0) {
      bool used = false;
      for (color_t e : s.colors_) used |= e == c;
      if (!used)
        throw scheme_error(scheme_axiom::color_range, "color " + std::to_string(c) + " is unused",
                           {c});
    }

  constexpr color_t unset = ~color_t{0};
  s.inverse_.assign(rank, unset);
  for (point x = 0; x < v; ++x)
    for (point y = 0; y < v; ++y) {
      const color_t c = s.color(x, y), back = s.color(y, x);
      if (s.inverse_[c] == unset) s.inverse_[c] = back;
      else if (s.inverse_[c] != back)
        throw scheme_error(scheme_axiom::inverse_closure,
                           "transposes of color " + std::to_string(c) +
                               " carry more than one color; witness (" + std::to_string(x) + "," +
                               std::to_string(y) + ")",
                           {c, x, y});
    }

  s.p_ = intersection_numbers(rank);
  std::vector<char> seen(rank, 0);
  std::vector<std::pair<point, point>> rep(rank);
  std::vector<std::int64_t> counts(rank * rank);
  for (point x = 0; x < v; ++x) {
    const auto rx = s.row(x);
    for (point y = 0; y < v; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (point z = 0; z < v; ++z) ++counts[rx[z] * rank + s.colors_[z * v + y]];
      const color_t k = rx[y];
      if (!seen[k]) {
        seen[k] = 1;
        rep[k] = {x, y};
        for (color_t i = 0; i < rank; ++i)
          for (color_t j = 0; j < rank; ++j) s.p_.at(i, j, k) = counts[i * rank + j];
        continue;
      }
      for (color_t i = 0; i < rank; ++i)
        for (color_t j = 0; j < rank; ++j)
          if (s.p_(i, j, k) != counts[i * rank + j])
            throw scheme_error(
                scheme_axiom::intersection_number,
                "p_" + std::to_string(i) + "," + std::to_string(j) + "^" + std::to_string(k) +
                    " differs between pairs (" + std::to_string(rep[k].first) + "," +
                    std::to_string(rep[k].second) + ") and (" + std::to_string(x) + "," +
                    std::to_string(y) + ")",
                {i, j, k, rep[k].first, rep[k].second, x, y});
    }
  }

  s.valency_.assign(rank, 0);
  for (color_t c = 0; c < rank; ++c) s.valency_[c] = s.p_(c, s.inverse_[c], 0);
  return s;
}

bool scheme::is_symmetric() const {
  for (color_t c = 0; c < rank_; ++c)
    if (inverse_[c] != c) return false;
  return true;
}

bool scheme::is_commutative() const {
  for (color_t i = 0; i < rank_; ++i)
    for (color_t j = 0; j < rank_; ++j)
      for (color_t k = 0; k < rank_; ++k)
        if (p_(i, j, k) != p_(j, i, k)) return false;
  return true;
}

bool parabolic::contains_color(color_t c) const {
  return std::binary_search(colors.begin(), colors.end(), c);
}

bool is_parabolic_colors(const scheme& s, std::span<const color_t> colors) {
  std::vector<char> in(s.rank(), 0);
  for (color_t c : colors) in.at(c) = 1;
  if (!in[0]) return false;
  for (color_t c : colors)
    if (!in[s.inverse_color(c)]) return false;
  for (color_t i : colors)
    for (color_t j : colors)
      for (color_t k = 0; k < s.rank(); ++k)
        if (!in[k] && s.p(i, j, k) > 0) return false;
  return true;
}

parabolic make_parabolic(const scheme& s, std::vector<color_t> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  if (!is_parabolic_colors(s, colors))
    throw std::invalid_argument("color set is not a parabolic");
  std::vector<char> in(s.rank(), 0);
  for (color_t c : colors) in[c] = 1;

  // Union-find over the pairs whose color lies in the set.
  std::vector<point> root(s.points());
  for (point x = 0; x < s.points(); ++x) root[x] = x;
  auto find = [&](point x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (point x = 0; x < s.points(); ++x)
    for (point y = x + 1; y < s.points(); ++y)
      if (in[s.color(x, y)]) {
        const point a = find(x), b = find(y);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }

  parabolic e;
  e.colors = std::move(colors);
  e.class_of.assign(s.points(), 0);
  std::map<point, std::uint32_t> index;
  for (point x = 0; x < s.points(); ++x) {
    const point r = find(x);
    auto [it, fresh] = index.emplace(r, static_cast<std::uint32_t>(e.classes.size()));
    if (fresh) e.classes.emplace_back();
    e.classes[it->second].push_back(x);
    e.class_of[x] = it->second;
  }
  for (const auto& c : e.classes)
    if (c.size() != e.classes.front().size())
      throw std::logic_error("parabolic classes differ in size");
  return e;
}

std::vector<parabolic> parabolics(const scheme& s) {
  const std::size_t d = s.rank() - 1;
  if (d > 20) throw std::invalid_argument("parabolics: rank too large for exhaustive scan");
  std::vector<parabolic> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    std::vector<color_t> colors{0};
    for (std::size_t b = 0; b < d; ++b)
      if (mask >> b & 1) colors.push_back(static_cast<color_t>(b + 1));
    if (is_parabolic_colors(s, colors)) out.push_back(make_parabolic(s, std::move(colors)));
  }
  std::stable_sort(out.begin(), out.end(), [](const parabolic& a, const parabolic& b) {
    if (a.class_size() != b.class_size()) return a.class_size() < b.class_size();
    return a.colors < b.colors;
  });
  return out;
}

std::vector<parabolic> nontrivial_parabolics(const scheme& s) {
  std::vector<parabolic> out;
  for (auto& e : parabolics(s))
    if (!e.is_trivial()) out.push_back(std::move(e));
  return out;
}

namespace {

// Relabel colors densely by first occurrence in row-major order.
scheme relabel_and_validate(std::size_t v, const std::vector<std::uint64_t>& raw) {
  std::map<std::uint64_t, color_t> label;
  std::vector<color_t> colors(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = label.emplace(raw[i], static_cast<color_t>(label.size()));
    colors[i] = it->second;
  }
  return scheme::validate(v, std::move(colors));
}

}  // namespace

scheme quotient(const scheme& s, const parabolic& e) {
  if (!is_parabolic_colors(s, e.colors)) throw std::invalid_argument("quotient: not a parabolic");
  if (s.rank() > 64) throw std::invalid_argument("quotient: rank too large");
  const std::size_t c = e.class_count();
  std::vector<std::uint64_t> masks(c * c, 0);
  for (point x = 0; x < s.points(); ++x)
    for (point y = 0; y < s.points(); ++y)
      masks[e.class_of[x] * c + e.class_of[y]] |= std::uint64_t{1} << s.color(x, y);
  return relabel_and_validate(c, masks);
}

scheme restriction(const scheme& s, std::span<const point> points) {
  const std::size_t n = points.size();
  if (n == 0) throw std::invalid_argument("restriction: empty point set");
  std::vector<std::uint64_t> raw(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) raw[a * n + b] = s.color(points[a], points[b]);
  return relabel_and_validate(n, raw);
}

scheme restriction(const scheme& s, const parabolic& e, std::size_t class_index) {
  return restriction(s, e.classes.at(class_index));
}

std::size_t parabolic_rank(const scheme& s, const parabolic& e) {
  const std::size_t r = restriction(s, e, 0).rank();
  for (std::size_t i = 1; i < e.class_count(); ++i)
    if (restriction(s, e, i).rank() != r)
      throw std::logic_error("restriction rank differs between classes of one parabolic");
  return r;
}

std::size_t parabolic_corank(const scheme& s, const parabolic& e) { return quotient(s, e).rank(); }

bool is_wreath_over(const scheme& s, const parabolic& e) {
  // Color of every off-diagonal class block, checked against its first cell.
  const std::size_t c = e.class_count();
  std::vector<color_t> block(c * c, ~color_t{0});
  for (point x = 0; x < s.points(); ++x)
    for (point y = 0; y < s.points(); ++y) {
      const auto a = e.class_of[x], b = e.class_of[y];
      if (a == b) continue;
      color_t& want = block[a * c + b];
      if (want == ~color_t{0}) want = s.color(x, y);
      else if (want != s.color(x, y)) return false;
    }
  return true;
}

bool is_indecomposable(const scheme& s) {
  for (const auto& e : nontrivial_parabolics(s))
    if (is_wreath_over(s, e)) return false;
  return true;
}

scheme wreath_product(const scheme& inner, const scheme& outer) {
  const std::size_t a = inner.points(), b = outer.points(), v = a * b;
  const color_t shift = static_cast<color_t>(inner.rank() - 1);
  std::vector<color_t> colors(v * v);
  for (point x = 0; x < v; ++x)
    for (point y = 0; y < v; ++y) {
      const point ox = x / a, oy = y / a;
      colors[x * v + y] = ox == oy ? inner.color(x % a, y % a) : shift + outer.color(ox, oy);
    }
  return scheme::validate(v, std::move(colors));
}

scheme trivial_scheme(std::size_t v) {
  std::vector<color_t> colors(v * v, 1);
  for (point x = 0; x < v; ++x) colors[x * v + x] = 0;
  return scheme::validate(v, std::move(colors));
}

scheme cayley_scheme(const finite_group& g, const std::vector<std::vector<element>>& parts) {
  const std::size_t n = g.order();
  constexpr color_t unset = ~color_t{0};
  std::vector<color_t> part_of(n, unset);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw std::invalid_argument("cayley_scheme: empty part");
    for (element x : parts[i]) {
      if (x >= n) throw std::invalid_argument("cayley_scheme: element out of range");
      if (part_of[x] != unset) throw std::invalid_argument("cayley_scheme: parts overlap");
      part_of[x] = static_cast<color_t>(i);
    }
  }
  for (element x = 0; x < n; ++x)
    if (part_of[x] == unset) throw std::invalid_argument("cayley_scheme: parts do not cover G");
  if (parts[0].size() != 1 || parts[0][0] != 0)
    throw std::invalid_argument("cayley_scheme: part 0 must be {e}");
  for (const auto& part : parts) {
    const color_t target = part_of[g.inv(part.front())];
    if (parts[target].size() != part.size())
      throw std::invalid_argument("cayley_scheme: partition is not inverse-closed");
    for (element x : part)
      if (part_of[g.inv(x)] != target)
        throw std::invalid_argument("cayley_scheme: partition is not inverse-closed");
  }
  std::vector<color_t> colors(n * n);
  for (element x = 0; x < n; ++x) {
    const element xi = g.inv(x);
    for (element y = 0; y < n; ++y) colors[x * n + y] = part_of[g.mul(y, xi)];
  }
  return scheme::validate(n, std::move(colors));
}

scheme read_scheme(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> std::istringstream {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return std::istringstream(line);
    }
    throw scheme_error(scheme_axiom::shape,
                       "scheme file: unexpected end of input after line " + std::to_string(line_no));
  };
  auto header = next_line();
  std::string tag;
  long long v = 0, rank = 0;
  if (!(header >> tag >> v >> rank) || tag != "scheme" || v <= 0 || rank <= 0)
    throw scheme_error(scheme_axiom::shape, "scheme file line " + std::to_string(line_no) +
                                                ": expected `scheme <v> <rank>`");
  std::vector<color_t> colors;
  colors.reserve(static_cast<std::size_t>(v * v));
  for (long long i = 0; i < v; ++i) {
    auto row = next_line();
    long long c;
    long long count = 0;
    while (row >> c) {
      if (c < 0 || c >= rank)
        throw scheme_error(scheme_axiom::color_range,
                           "scheme file line " + std::to_string(line_no) + ": color " +
                               std::to_string(c) + " outside 0.." + std::to_string(rank - 1));
      colors.push_back(static_cast<color_t>(c));
      ++count;
    }
    if (count != v || !row.eof())
      throw scheme_error(scheme_axiom::shape, "scheme file line " + std::to_string(line_no) +
                                                  ": expected " + std::to_string(v) + " colors");
  }
  auto s = scheme::validate(static_cast<std::size_t>(v), std::move(colors));
  if (static_cast<long long>(s.rank()) != rank)
    throw scheme_error(scheme_axiom::color_range, "scheme file header declares rank " +
                                                      std::to_string(rank) + " but " +
                                                      std::to_string(s.rank()) + " colors occur");
  return s;
}

void write_scheme(std::ostream& out, const scheme& s) {
  out << "scheme " << s.points() << ' ' << s.rank() << '\n';
  for (point x = 0; x < s.points(); ++x) {
    const auto r = s.row(x);
    for (point y = 0; y < s.points(); ++y) out << (y ? " " : "") << r[y];
    out << '\n';
  }
}

}  // namespace higman
