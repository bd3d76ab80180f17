#include "higman/groups.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace higman {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

finite_group::finite_group(std::size_t order, std::vector<element> table,
                           std::vector<std::string> labels, std::string name)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
  if (order_ == 0) fail("group order must be positive");
  if (table_.size() != order_ * order_) fail("multiplication table has wrong size");
  if (!labels_.empty() && labels_.size() != order_) fail("label count differs from group order");
  for (element x : table_)
    if (x >= order_) fail("multiplication table entry out of range");
  for (element x = 0; x < order_; ++x)
    if (mul(0, x) != x || mul(x, 0) != x) fail("element 0 is not a two-sided identity");

  inverse_.assign(order_, order_);
  for (element x = 0; x < order_; ++x) {
    for (element y = 0; y < order_; ++y) {
      if (mul(x, y) == 0) {
        if (mul(y, x) != 0) fail("element " + std::to_string(x) + " has only a one-sided inverse");
        inverse_[x] = y;
        break;
      }
    }
    if (inverse_[x] == order_) fail("element " + std::to_string(x) + " has no inverse");
  }

  auto check = [&](element a, element b, element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      fail("multiplication is not associative at (" + std::to_string(a) + "," +
           std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (order_ <= 512) {
    for (element a = 0; a < order_; ++a)
      for (element b = 0; b < order_; ++b) {
        const element ab = mul(a, b);
        const element* row_b = &table_[b * order_];
        const element* row_ab = &table_[ab * order_];
        for (element c = 0; c < order_; ++c)
          if (row_ab[c] != table_[a * order_ + row_b[c]]) check(a, b, c);
      }
  } else {
    std::mt19937_64 rng(order_);
    std::uniform_int_distribution<element> pick(0, static_cast<element>(order_ - 1));
    for (int i = 0; i < 200000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
}

element finite_group::pow(element a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  element result = 0;
  element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t finite_group::element_order(element a) const {
  std::size_t k = 1;
  for (element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::size_t finite_group::exponent() const {
  std::size_t e = 1;
  for (element x = 0; x < order_; ++x) e = std::lcm(e, element_order(x));
  return e;
}

bool finite_group::is_abelian() const {
  for (element a = 0; a < order_; ++a)
    for (element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string finite_group::label(element a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

bool subgroup::contains(element x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

subgroup make_subgroup(group_ptr g, std::vector<element> elements) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    fail("subgroup element list has duplicates");
  if (elements.empty() || elements.front() != 0) fail("subgroup must contain the identity");
  if (elements.back() >= g->order()) fail("subgroup element out of range");
  if (g->order() % elements.size() != 0) fail("subgroup order does not divide group order");
  subgroup h{std::move(g), std::move(elements)};
  for (element x : h.elements) {
    if (!h.contains(h.parent->inv(x))) fail("subset is not closed under inverses");
    for (element y : h.elements)
      if (!h.contains(h.parent->mul(x, y))) fail("subset is not closed under multiplication");
  }
  return h;
}

subgroup generated_subgroup(group_ptr g, std::span<const element> generators) {
  std::vector<char> in(g->order(), 0);
  std::vector<element> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (element s : generators) {
      const element y = g->mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return subgroup{std::move(g), std::move(members)};
}

subgroup center(group_ptr g) {
  std::vector<element> z;
  for (element x = 0; x < g->order(); ++x) {
    bool central = true;
    for (element y = 0; y < g->order() && central; ++y) central = g->mul(x, y) == g->mul(y, x);
    if (central) z.push_back(x);
  }
  return subgroup{std::move(g), std::move(z)};
}

subgroup whole_group(group_ptr g) {
  std::vector<element> all(g->order());
  std::iota(all.begin(), all.end(), element{0});
  return subgroup{std::move(g), std::move(all)};
}

subgroup trivial_subgroup(group_ptr g) { return subgroup{std::move(g), {0}}; }

bool is_normal(const subgroup& h) {
  const auto& g = *h.parent;
  for (element x : h.elements)
    for (element y = 0; y < g.order(); ++y)
      if (!h.contains(g.conj(x, y))) return false;
  return true;
}

std::vector<subgroup> subgroups_of_order(group_ptr g, std::size_t order, std::size_t limit) {
  std::set<std::vector<element>> seen;
  std::set<std::vector<element>> found;
  std::vector<std::vector<element>> frontier{{0}};
  seen.insert({0});
  if (order == 1) found.insert({0});
  while (!frontier.empty() && seen.size() < limit) {
    std::vector<std::vector<element>> next;
    for (const auto& h : frontier) {
      std::vector<char> in(g->order(), 0);
      for (element x : h) in[x] = 1;
      for (element x = 1; x < g->order(); ++x) {
        if (in[x]) continue;
        std::vector<element> gens = h;
        gens.push_back(x);
        auto k = generated_subgroup(g, gens).elements;
        if (k.size() > order || order % k.size() != 0) continue;
        if (!seen.insert(k).second) continue;
        if (k.size() == order) found.insert(k);
        else next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  std::vector<subgroup> out;
  for (const auto& k : found) out.push_back(subgroup{g, k});
  return out;
}

std::vector<std::vector<element>> right_cosets(const finite_group& g, const subgroup& h) {
  std::vector<char> used(g.order(), 0);
  std::vector<std::vector<element>> blocks;
  for (element x = 0; x < g.order(); ++x) {
    if (used[x]) continue;
    std::vector<element> block;
    for (element n : h.elements) block.push_back(g.mul(n, x));
    std::sort(block.begin(), block.end());
    for (element y : block) {
      if (used[y]) fail("element list is not a subgroup: cosets overlap");
      used[y] = 1;
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool group_isomorphism::is_valid() const {
  if (!source || !target || source->order() != target->order()) return false;
  if (map.size() != source->order()) return false;
  std::vector<char> hit(target->order(), 0);
  for (element y : map) {
    if (y >= target->order() || hit[y]) return false;
    hit[y] = 1;
  }
  for (element a = 0; a < source->order(); ++a)
    for (element b = 0; b < source->order(); ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) return false;
  return true;
}

group_isomorphism group_isomorphism::inverse() const {
  std::vector<element> back(map.size());
  for (element x = 0; x < map.size(); ++x) back[map[x]] = x;
  return {target, source, std::move(back)};
}

group_isomorphism compose(const group_isomorphism& outer, const group_isomorphism& inner) {
  std::vector<element> m(inner.map.size());
  for (element x = 0; x < m.size(); ++x) m[x] = outer.map[inner.map[x]];
  return {inner.source, outer.target, std::move(m)};
}

namespace {

std::vector<element> small_generating_set(const finite_group& g) {
  std::vector<element> gens;
  std::size_t reached = 1;
  // Prefer elements of large order so cyclic groups get one generator.
  std::vector<element> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), element{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](element a, element b) {
    return g.element_order(a) > g.element_order(b);
  });
  auto shared = std::make_shared<finite_group>(g);
  for (element x : by_order) {
    if (reached == g.order()) break;
    gens.push_back(x);
    const std::size_t now = generated_subgroup(shared, gens).order();
    if (now == reached) gens.pop_back();
    else reached = now;
  }
  return gens;
}

}  // namespace

std::vector<group_isomorphism> isomorphisms(group_ptr g, group_ptr h, std::size_t limit) {
  std::vector<group_isomorphism> out;
  if (g->order() != h->order() || limit == 0) return out;
  const auto gens = small_generating_set(*g);
  std::vector<element> images(gens.size());

  // Elements as words in the generators, found by breadth-first search.
  std::vector<std::pair<element, std::size_t>> parent(g->order(), {0, 0});
  std::vector<char> seen(g->order(), 0);
  std::vector<element> bfs{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const element y = g->mul(bfs[i], gens[s]);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = {bfs[i], s};
        bfs.push_back(y);
      }
    }

  auto try_images = [&]() {
    std::vector<element> m(g->order(), 0);
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      const element x = bfs[i];
      m[x] = h->mul(m[parent[x].first], images[parent[x].second]);
    }
    group_isomorphism phi{g, h, std::move(m)};
    if (phi.is_valid()) out.push_back(std::move(phi));
  };

  std::vector<std::size_t> orders(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) orders[s] = g->element_order(gens[s]);
  auto recurse = [&](auto&& self, std::size_t s) -> void {
    if (out.size() >= limit) return;
    if (s == gens.size()) {
      try_images();
      return;
    }
    for (element y = 1; y < h->order(); ++y) {
      if (h->element_order(y) != orders[s]) continue;
      images[s] = y;
      self(self, s + 1);
    }
  };
  if (gens.empty()) {
    out.push_back({g, h, {0}});
    return out;
  }
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.map < b.map; });
  return out;
}

std::vector<group_isomorphism> automorphisms(group_ptr g) { return isomorphisms(g, g); }

bool is_cyclic(const finite_group& g) {
  for (element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

bool is_elementary_abelian(const finite_group& g) {
  if (!g.is_abelian()) return false;
  if (g.order() == 1) return true;
  const std::size_t e = g.exponent();
  for (std::size_t d = 2; d < e; ++d)
    if (e % d == 0) return false;
  return true;
}

std::string describe_group(const finite_group& g) {
  const std::size_t n = g.order();
  if (is_cyclic(g)) return "C_" + std::to_string(n);
  if (is_elementary_abelian(g)) return "E(" + std::to_string(n) + ")";
  if (n == 8 && !g.is_abelian()) {
    std::size_t involutions = 0;
    for (element x = 1; x < n; ++x) involutions += g.element_order(x) == 2;
    return involutions == 1 ? "Q_8" : "D_8";
  }
  std::ostringstream os;
  os << "order " << n << ", " << (g.is_abelian() ? "abelian" : "nonabelian") << ", exponent "
     << g.exponent();
  return os.str();
}

group_ptr read_group(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> std::istringstream {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
        return std::istringstream(line);
    }
    fail("group file: unexpected end of input after line " + std::to_string(line_no));
  };
  auto header = next_line();
  std::string tag;
  long long order = 0;
  if (!(header >> tag >> order) || tag != "group" || order <= 0)
    fail("group file line " + std::to_string(line_no) + ": expected `group <order>`");
  std::vector<element> table;
  table.reserve(static_cast<std::size_t>(order * order));
  for (long long i = 0; i < order; ++i) {
    auto row = next_line();
    long long x;
    long long count = 0;
    while (row >> x) {
      if (x < 0 || x >= order)
        fail("group file line " + std::to_string(line_no) + ": entry out of range");
      table.push_back(static_cast<element>(x));
      ++count;
    }
    if (count != order || !row.eof())
      fail("group file line " + std::to_string(line_no) + ": expected " + std::to_string(order) +
           " indices");
  }
  return std::make_shared<finite_group>(static_cast<std::size_t>(order), std::move(table));
}

void write_group(std::ostream& out, const finite_group& g) {
  out << "group " << g.order() << '\n';
  for (element a = 0; a < g.order(); ++a) {
    for (element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
}

}  // namespace higman
