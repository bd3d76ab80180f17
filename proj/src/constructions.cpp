#include "higman/constructions.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "higman/families.hpp"
#include "higman/group_ring.hpp"

namespace higman {

namespace {

std::vector<element> sorted_unique(std::span<const element> xs, std::size_t order) {
  std::vector<element> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("set has repeated elements");
  if (!out.empty() && out.back() >= order) throw std::invalid_argument("element out of range");
  return out;
}

std::vector<element> parse_elements(const std::string& line) {
  std::vector<element> out;
  std::istringstream in(line);
  long long x;
  while (in >> x) {
    if (x < 0) throw std::invalid_argument("negative element in `" + line + "`");
    out.push_back(static_cast<element>(x));
  }
  if (!in.eof()) throw std::invalid_argument("cannot parse element list `" + line + "`");
  return out;
}

}  // namespace

dds_check verify_dds(const subgroup& forbidden, std::span<const element> set) {
  const group_ptr& g = forbidden.parent;
  const auto xs = sorted_unique(set, g->order());
  const auto x = group_ring_element::indicator(g, xs);
  const auto diff = x * x.inverted();

  dds_check out;
  const std::int64_t n = static_cast<std::int64_t>(forbidden.order());
  const std::int64_t v = static_cast<std::int64_t>(g->order());
  if (v % n != 0) {
    out.reason = "subgroup order does not divide group order";
    return out;
  }
  std::optional<std::int64_t> l1, l2;
  for (element e = 1; e < g->order(); ++e) {
    auto& slot = forbidden.contains(e) ? l1 : l2;
    if (!slot) {
      slot = diff[e];
    } else if (*slot != diff[e]) {
      out.witness = e;
      out.reason = std::string("difference count not constant on ") +
                   (forbidden.contains(e) ? "N^#" : "G\\N") + " at element " +
                   std::to_string(e);
      return out;
    }
  }
  out.params = dds_params{v / n, n, static_cast<std::int64_t>(xs.size()), l1.value_or(0),
                          l2.value_or(0)};
  return out;
}

bool intersection_condition(const subgroup& forbidden, std::span<const element> set) {
  const auto blocks = right_cosets(*forbidden.parent, forbidden);
  std::optional<std::size_t> common;
  for (const auto& b : blocks) {
    std::size_t c = 0;
    for (element x : set)
      if (std::binary_search(b.begin(), b.end(), x)) ++c;
    if (common && *common != c) return false;
    common = c;
  }
  return true;
}

scheme cayley_scheme(const sring_partition& p) { return cayley_scheme(*p.group, p.parts); }

sring_partition example1_construct(const subgroup& forbidden, std::span<const element> set) {
  const group_ptr& g = forbidden.parent;
  if (!g->is_abelian()) throw std::invalid_argument("dihedral recipe needs an abelian group");
  const auto check = verify_dds(forbidden, set);
  if (!check) throw std::invalid_argument("not a divisible difference set: " + check.reason);
  if (!intersection_condition(forbidden, set))
    throw std::invalid_argument("set meets the cosets of N unevenly");

  const auto xs = sorted_unique(set, g->order());
  const group_ptr d = generalized_dihedral(g);
  const element offset = static_cast<element>(g->order());

  sring_partition out{d, std::vector<std::vector<element>>(5)};
  out.parts[0] = {0};
  for (element e = 1; e < g->order(); ++e) out.parts[forbidden.contains(e) ? 1 : 2].push_back(e);
  for (element e = 0; e < g->order(); ++e)
    out.parts[std::binary_search(xs.begin(), xs.end(), e) ? 3 : 4].push_back(offset + e);
  // Degenerate pieces (N trivial, N = G, X = G) would leave empty parts.
  std::erase_if(out.parts, [](const auto& part) { return part.empty(); });
  return out;
}

std::optional<std::int64_t> semiregular_rds_lambda(const subgroup& forbidden,
                                                   std::span<const element> set) {
  const group_ptr& g = forbidden.parent;
  const std::size_t n = forbidden.order();
  if (g->order() % n) return std::nullopt;
  const std::size_t m = g->order() / n;
  if (set.size() != m || m % n) return std::nullopt;
  if (!intersection_condition(forbidden, set)) return std::nullopt;
  const auto check = verify_dds(forbidden, set);
  if (!check || check.params->lambda1 != 0) return std::nullopt;
  return check.params->lambda2;
}

std::vector<std::vector<element>> search_semiregular_rds(const subgroup& forbidden,
                                                         std::uint64_t cap) {
  const group_ptr& g = forbidden.parent;
  const std::size_t n = forbidden.order();
  const std::size_t m = g->order() / n;
  std::vector<std::vector<element>> found;
  if (g->order() % n || m % n) return found;
  const std::int64_t lambda = static_cast<std::int64_t>(m / n);

  const auto blocks = right_cosets(*g, forbidden);
  std::vector<element> chosen;
  std::vector<std::int64_t> count(g->order(), 0);
  std::uint64_t nodes = 0;

  auto place = [&](auto&& self, std::size_t depth) -> void {
    if (depth == blocks.size()) {
      auto xs = chosen;
      std::sort(xs.begin(), xs.end());
      found.push_back(std::move(xs));
      return;
    }
    for (element x : blocks[depth]) {
      if (++nodes > cap)
        throw search_cap_exceeded("RDS search visited more than " + std::to_string(cap) +
                                  " nodes");
      bool ok = true;
      std::size_t done = 0;
      for (; done < chosen.size(); ++done) {
        const element y = chosen[done];
        const element a = g->mul(x, g->inv(y));
        const element b = g->mul(y, g->inv(x));
        if (++count[a] > lambda) ok = false;
        if (++count[b] > lambda) ok = false;
        if (!ok) {
          ++done;
          break;
        }
      }
      if (ok) {
        chosen.push_back(x);
        self(self, depth + 1);
        chosen.pop_back();
      }
      for (std::size_t i = 0; i < done; ++i) {
        const element y = chosen[i];
        --count[g->mul(x, g->inv(y))];
        --count[g->mul(y, g->inv(x))];
      }
    }
  };
  place(place, 0);
  return found;
}

std::vector<subgroup> resolve_subgroups(group_ptr g, const std::string& spec) {
  if (spec == "center") return {center(g)};
  if (spec.rfind("auto:", 0) == 0) {
    const auto order = std::stoull(spec.substr(5));
    return subgroups_of_order(g, order);
  }
  std::string list = spec;
  std::replace(list.begin(), list.end(), ',', ' ');
  const auto gens = parse_elements(list);
  for (element x : gens)
    if (x >= g->order()) throw std::invalid_argument("subgroup generator out of range");
  return {generated_subgroup(g, gens)};
}

void write_partition(std::ostream& out, const sring_partition& p) {
  out << p.group->name() << '\n' << p.parts.size() << '\n';
  for (const auto& part : p.parts) {
    for (std::size_t i = 0; i < part.size(); ++i) out << (i ? " " : "") << part[i];
    out << '\n';
  }
}

sring_partition read_partition(std::istream& in) {
  std::string line;
  auto next = [&](const char* what) {
    while (std::getline(in, line))
      if (!line.empty() && line[0] != '#') return;
    throw std::invalid_argument(std::string("partition file ends before ") + what);
  };
  next("the group spec");
  sring_partition p;
  p.group = build_family(line);
  next("the part count");
  const auto count = std::stoull(line);
  for (std::size_t i = 0; i < count; ++i) {
    next("all parts are listed");
    auto part = parse_elements(line);
    for (element x : part)
      if (x >= p.group->order())
        throw std::invalid_argument("partition element " + std::to_string(x) + " out of range");
    p.parts.push_back(std::move(part));
  }
  std::vector<char> seen(p.group->order(), 0);
  for (const auto& part : p.parts)
    for (element x : part) {
      if (seen[x]) throw std::invalid_argument("partition element " + std::to_string(x) + " repeated");
      seen[x] = 1;
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::invalid_argument("partition does not cover the group");
  if (p.parts.empty() || p.parts.front() != std::vector<element>{0})
    throw std::invalid_argument("first part of a partition must be {e}");
  return p;
}

}  // namespace higman
