#include "higman/linked_systems.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "higman/families.hpp"

namespace higman {

namespace {

using gre = group_ring_element;

// Coefficients (a, b) with P = a Y + b (G - Y), if P is two-valued that way.
std::optional<std::pair<std::int64_t, std::int64_t>> levels_on(const gre& p,
                                                               const std::vector<char>& in_y) {
  std::optional<std::int64_t> a, b;
  for (element g = 0; g < p.size(); ++g) {
    auto& slot = in_y[g] ? a : b;
    if (!slot)
      slot = p[g];
    else if (*slot != p[g])
      return std::nullopt;
  }
  if (!a || !b) return std::nullopt;
  return std::pair{*a, *b};
}

std::vector<char> mask_of(const std::vector<element>& xs, std::size_t order) {
  std::vector<char> m(order, 0);
  for (element x : xs) m[x] = 1;
  return m;
}

std::vector<element> inverse_set(const finite_group& g, const std::vector<element>& xs) {
  std::vector<element> out;
  out.reserve(xs.size());
  for (element x : xs) out.push_back(g.inv(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<element> parse_line(const std::string& line) {
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

std::string linked_params::str() const {
  std::ostringstream os;
  os << '(' << m << ',' << n << ',' << k << ',' << lambda << ',' << w << ',' << mu << ',' << nu
     << ')';
  return os.str();
}

std::array<mu_nu_pair, 2> semiregular_mu_nu(std::int64_t n, std::int64_t lambda) {
  if (n <= 0 || lambda <= 0) throw std::domain_error("n and lambda must be positive");
  const auto root = quadratic_number::sqrt(rational(n * lambda));
  const quadratic_number nl(n * lambda), nn(n), n1(n - 1);
  std::array<mu_nu_pair, 2> out;
  for (int s = 0; s < 2; ++s) {
    const quadratic_number sign(s == 0 ? 1 : -1);
    out[s].mu = (nl + sign * n1 * root) / nn;
    out[s].nu = (nl - sign * root) / nn;
    out[s].admissible = out[s].mu.is_integer() && out[s].nu.is_integer() &&
                        out[s].mu.sign() >= 0 && out[s].nu.sign() >= 0;
  }
  return out;
}

group_ptr associate_group(const linked_system& system) {
  const std::size_t w = system.size();
  const std::size_t order = w + 1;
  std::vector<element> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      element c;
      if (a == 0)
        c = static_cast<element>(b);
      else if (b == 0)
        c = static_cast<element>(a);
      else if (b - 1 == system.chi[a - 1])
        c = 0;
      else
        c = static_cast<element>(*system.psi[a - 1][b - 1] + 1);
      table[a * order + b] = c;
    }
  std::vector<std::string> labels{"oo"};
  for (std::size_t a = 0; a < w; ++a) labels.push_back(std::to_string(a));
  return std::make_shared<finite_group>(order, std::move(table), std::move(labels),
                                        "associate group");
}

linked_check verify_linked_system(const subgroup& forbidden,
                                  std::vector<std::vector<element>> members) {
  linked_check out;
  const group_ptr& g = forbidden.parent;
  const std::size_t w = members.size();
  if (w < 2) {
    out.failure = "a linked system needs at least two members";
    return out;
  }
  for (auto& x : members) {
    std::sort(x.begin(), x.end());
    if (std::adjacent_find(x.begin(), x.end()) != x.end()) {
      out.failure = "member with repeated elements";
      return out;
    }
    if (!x.empty() && x.back() >= g->order()) {
      out.failure = "member element out of range";
      return out;
    }
  }
  std::map<std::vector<element>, std::size_t> index;
  for (std::size_t a = 0; a < w; ++a)
    if (!index.emplace(members[a], a).second) {
      out.failure = "members " + std::to_string(index[members[a]]) + " and " +
                    std::to_string(a) + " coincide";
      return out;
    }

  std::optional<std::int64_t> lambda;
  for (std::size_t a = 0; a < w; ++a) {
    const auto l = semiregular_rds_lambda(forbidden, members[a]);
    if (!l) {
      out.failure = "member " + std::to_string(a) + " is not a semiregular RDS";
      return out;
    }
    if (lambda && *lambda != *l) {
      out.failure = "members have different lambda";
      return out;
    }
    lambda = l;
  }

  linked_system sys;
  sys.group = g;
  sys.forbidden = forbidden;
  sys.members = members;
  sys.chi.resize(w);
  for (std::size_t a = 0; a < w; ++a) {
    const auto it = index.find(inverse_set(*g, members[a]));
    if (it == index.end()) {
      out.failure = "the inverse of member " + std::to_string(a) + " is not in the system";
      return out;
    }
    sys.chi[a] = it->second;
  }

  std::vector<gre> ind;
  std::vector<std::vector<char>> masks;
  for (const auto& x : members) {
    ind.push_back(gre::indicator(g, x));
    masks.push_back(mask_of(x, g->order()));
  }

  // For each ordered pair, every member Y the product can be written over.
  using candidate = std::tuple<std::int64_t, std::int64_t, std::size_t>;
  std::vector<std::vector<std::vector<candidate>>> cands(w, std::vector<std::vector<candidate>>(w));
  std::set<std::pair<std::int64_t, std::int64_t>> common;
  bool first = true;
  for (std::size_t a = 0; a < w; ++a)
    for (std::size_t b = 0; b < w; ++b) {
      if (b == sys.chi[a]) continue;
      const gre p = ind[a] * ind[b];
      std::set<std::pair<std::int64_t, std::int64_t>> here;
      for (std::size_t c = 0; c < w; ++c) {
        const auto lv = levels_on(p, masks[c]);
        if (!lv || lv->first == lv->second) continue;
        cands[a][b].emplace_back(lv->first, lv->second, c);
        here.insert(*lv);
      }
      if (here.empty()) {
        out.failure = "X_" + std::to_string(a) + " X_" + std::to_string(b) +
                      " is not two-valued over any member";
        return out;
      }
      if (first) {
        common = here;
        first = false;
      } else {
        std::set<std::pair<std::int64_t, std::int64_t>> keep;
        for (const auto& c : here)
          if (common.count(c)) keep.insert(c);
        common = std::move(keep);
      }
    }
  if (common.empty()) {
    out.failure = "the products admit no common (mu, nu)";
    return out;
  }

  // With n = 2 a family can be read with (mu, nu) either way round, and both
  // readings may give a group; the smaller mu is taken first.
  std::vector<std::pair<std::int64_t, std::int64_t>> order(common.begin(), common.end());
  std::optional<linked_system> fallback;
  for (const auto& [mu, nu] : order) {
    linked_system trial = sys;
    trial.psi.assign(w, std::vector<std::optional<std::size_t>>(w));
    for (std::size_t a = 0; a < w; ++a)
      for (std::size_t b = 0; b < w; ++b)
        for (const auto& [x, y, c] : cands[a][b])
          if (x == mu && y == nu) trial.psi[a][b] = c;
    const std::int64_t n = static_cast<std::int64_t>(forbidden.order());
    trial.params = {n * *lambda, n, n * *lambda, *lambda, static_cast<std::int64_t>(w), mu, nu};
    try {
      associate_group(trial);
      out.system = std::move(trial);
      return out;
    } catch (const std::invalid_argument&) {
      if (!fallback) fallback = std::move(trial);
    }
  }
  out.system = std::move(fallback);
  return out;
}

std::optional<linked_system> search_linked_system(const subgroup& forbidden, std::size_t w,
                                                  const linked_search_options& options) {
  if (w < 2) throw std::invalid_argument("a linked system needs w >= 2");
  const group_ptr& g = forbidden.parent;
  const std::int64_t n = static_cast<std::int64_t>(forbidden.order());
  if (g->order() % (n * n)) return std::nullopt;
  const std::int64_t lambda = static_cast<std::int64_t>(g->order()) / (n * n);

  const auto rds = search_semiregular_rds(forbidden, options.rds_cap);
  if (rds.size() < w) return std::nullopt;
  std::map<std::vector<element>, std::size_t> index;
  for (std::size_t i = 0; i < rds.size(); ++i) index.emplace(rds[i], i);

  std::vector<std::optional<std::size_t>> inv_of(rds.size());
  for (std::size_t i = 0; i < rds.size(); ++i) {
    const auto it = index.find(inverse_set(*g, rds[i]));
    if (it != index.end()) inv_of[i] = it->second;
  }
  std::vector<gre> ind;
  for (const auto& x : rds) ind.push_back(gre::indicator(g, x));

  std::uint64_t attempts = 0;
  const auto pairs = semiregular_mu_nu(n, lambda);
  for (std::size_t which : options.branches) {
    const auto& branch = pairs.at(which);
    if (!branch.admissible) continue;
    const std::int64_t mu = static_cast<std::int64_t>(numerator(branch.mu.as_rational()));
    const std::int64_t nu = static_cast<std::int64_t>(numerator(branch.nu.as_rational()));

    // Grows `members` to its closure; false if it leaves the RDS list or
    // exceeds w members.
    std::map<std::pair<std::size_t, std::size_t>, std::optional<std::size_t>> memo;
    auto close = [&](std::vector<std::size_t>& members) {
      if (++attempts > options.closure_cap)
        throw search_cap_exceeded("linked-system search exceeded " +
                                  std::to_string(options.closure_cap) + " closure attempts");
      std::set<std::size_t> have(members.begin(), members.end());
      for (std::size_t done = 0; done < members.size();) {
        const std::size_t upto = members.size();
        auto add = [&](std::size_t c) {
          if (have.insert(c).second) members.push_back(c);
        };
        for (std::size_t i = 0; i < upto; ++i) {
          if (!inv_of[members[i]]) return false;
          add(*inv_of[members[i]]);
        }
        for (std::size_t i = 0; i < members.size() && members.size() <= w; ++i)
          for (std::size_t j = 0; j < members.size() && members.size() <= w; ++j) {
            if (i < done && j < done) continue;
            const std::size_t a = members[i], b = members[j];
            if (inv_of[a] == b) continue;
            auto [it, fresh] = memo.try_emplace({a, b});
            if (fresh) {
              const gre p = ind[a] * ind[b];
              std::vector<element> y;
              bool ok = true;
              for (element x = 0; x < g->order() && ok; ++x) {
                if (p[x] == mu)
                  y.push_back(x);
                else if (p[x] != nu)
                  ok = false;
              }
              if (ok) {
                const auto f = index.find(y);
                if (f != index.end()) it->second = f->second;
              }
            }
            if (!it->second) return false;
            add(*it->second);
          }
        if (members.size() > w) return false;
        done = upto;
        if (members.size() == upto) break;
      }
      return members.size() <= w;
    };

    auto finish = [&](const std::vector<std::size_t>& members) -> std::optional<linked_system> {
      std::vector<std::vector<element>> sets;
      for (std::size_t i : members) sets.push_back(rds[i]);
      auto check = verify_linked_system(forbidden, std::move(sets));
      if (!check) return std::nullopt;
      try {
        associate_group(*check.system);
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
      return check.system;
    };

    auto extend = [&](auto&& self, std::vector<std::size_t> members,
                      std::size_t next) -> std::optional<linked_system> {
      if (members.size() == w) return finish(members);
      for (std::size_t s = next; s < rds.size(); ++s) {
        if (std::find(members.begin(), members.end(), s) != members.end()) continue;
        auto grown = members;
        grown.push_back(s);
        if (!close(grown)) continue;
        if (auto found = self(self, std::move(grown), s + 1)) return found;
      }
      return std::nullopt;
    };

    if (auto found = extend(extend, {}, 0)) return found;
  }
  return std::nullopt;
}

sring_partition example2_construct(const linked_system& system, const group_isomorphism& phi) {
  const group_ptr& u = phi.source;
  if (!phi.is_valid()) throw std::invalid_argument("phi is not an isomorphism");
  const group_ptr assoc = associate_group(system);
  if (!phi.target->same_table(*assoc))
    throw std::invalid_argument("phi does not land in the associate group");
  const group_ptr& g = system.group;
  const group_ptr prod = direct_product(g, u);
  const element go = static_cast<element>(g->order());

  sring_partition out{prod, std::vector<std::vector<element>>(5)};
  out.parts[0] = {0};
  for (element x = 1; x < go; ++x) out.parts[system.forbidden.contains(x) ? 1 : 2].push_back(x);
  for (element v = 1; v < u->order(); ++v) {
    const auto mask = mask_of(system.members[phi(v) - 1], g->order());
    for (element x = 0; x < go; ++x) out.parts[mask[x] ? 3 : 4].push_back(x + go * v);
  }
  for (auto& part : out.parts) std::sort(part.begin(), part.end());
  return out;
}

std::vector<product_identity> linked_product_identities(const linked_system& system,
                                                    const sring_partition& partition) {
  const group_ptr& h = partition.group;
  if (partition.parts.size() != 5) throw std::invalid_argument("expected five parts");
  std::vector<gre> t;
  for (const auto& part : partition.parts) t.push_back(gre::indicator(h, part));
  const auto& p = system.params;
  const std::int64_t n = p.n, l = p.lambda, w = p.w;

  std::vector<product_identity> out;
  auto add = [&](const char* name, bool holds) { out.push_back({name, holds}); };
  const gre t12 = t[1] * t[2], t31 = t[3] * t[1], t32 = t[3] * t[2];
  add("T1*T1 = (n-1)T0 + (n-2)T1", t[1] * t[1] == (n - 1) * t[0] + (n - 2) * t[1]);
  add("T1*T2 = T2*T1 = (n-1)T2", t12 == t[2] * t[1] && t12 == (n - 1) * t[2]);
  add("T2*T2 = (n^2 l - n)(T0 + T1) + (n^2 l - 2n)T2",
      t[2] * t[2] == (n * n * l - n) * (t[0] + t[1]) + (n * n * l - 2 * n) * t[2]);
  add("T3*T1 = T1*T3 = T4", t31 == t[1] * t[3] && t31 == t[4]);
  add("T3*T2 = T2*T3 = (n l - 1)(T3 + T4)",
      t32 == t[2] * t[3] && t32 == (n * l - 1) * (t[3] + t[4]));
  add("T3*T3 = w n l T0 + w l T2 + (w-1) mu T3 + (w-1) nu T4",
      t[3] * t[3] == (w * n * l) * t[0] + (w * l) * t[2] + ((w - 1) * p.mu) * t[3] +
                         ((w - 1) * p.nu) * t[4]);
  return out;
}

cayley_isomorphism_result cayley_isomorphic(const linked_system& system,
                                            const group_isomorphism& phi1,
                                            const group_isomorphism& phi2) {
  const auto a = example2_construct(system, phi1);
  const auto b = example2_construct(system, phi2);
  const group_isomorphism on_u = compose(phi2.inverse(), phi1);
  const element go = static_cast<element>(system.group->order());

  cayley_isomorphism_result out;
  out.map.resize(a.group->order());
  for (element v = 0; v < phi1.source->order(); ++v)
    for (element x = 0; x < go; ++x) out.map[x + go * v] = x + go * on_u(v);
  out.automorphism = group_isomorphism{a.group, b.group, out.map}.is_valid();
  out.maps_parts = true;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    std::vector<element> image;
    for (element x : a.parts[i]) image.push_back(out.map[x]);
    std::sort(image.begin(), image.end());
    if (image != b.parts[i]) out.maps_parts = false;
  }
  return out;
}

higmanian_params example2_params(const linked_params& p) {
  return {p.w + 1, p.n * p.lambda, p.n, p.n * p.lambda * (p.n - 1), (p.n - 1) * (p.w - 1) * p.nu};
}

group_ptr standard_model(group_ptr g) {
  if (is_cyclic(*g)) return cyclic_group(g->order());
  if (is_elementary_abelian(*g) && g->order() > 1) {
    const auto [p, k] = prime_power(g->order());
    return elementary_abelian(p, k);
  }
  return g;
}

void write_linked_system(std::ostream& out, const linked_system& system) {
  out << system.group->name() << '\n';
  for (std::size_t i = 0; i < system.forbidden.elements.size(); ++i)
    out << (i ? " " : "") << system.forbidden.elements[i];
  out << '\n' << system.size() << '\n';
  for (const auto& x : system.members) {
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << x[i];
    out << '\n';
  }
}

linked_file read_linked_file(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](const char* what) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] != '#') return;
    }
    throw std::invalid_argument(std::string("linked-system file ends before ") + what);
  };
  auto range_check = [&](const std::vector<element>& xs, std::size_t order) {
    for (element x : xs)
      if (x >= order)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": element " +
                                    std::to_string(x) + " out of range");
  };
  linked_file f;
  next("the group spec");
  f.group = build_family(line);
  next("the forbidden subgroup");
  auto n = parse_line(line);
  range_check(n, f.group->order());
  f.forbidden = make_subgroup(f.group, std::move(n));
  next("the member count");
  const auto w = std::stoull(line);
  for (std::size_t i = 0; i < w; ++i) {
    next("all members are listed");
    auto x = parse_line(line);
    range_check(x, f.group->order());
    f.members.push_back(std::move(x));
  }
  return f;
}

}  // namespace higman
