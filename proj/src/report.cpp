#include "higman/report.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "higman/families.hpp"

namespace higman {

namespace {

std::int64_t ipow(std::int64_t b, unsigned e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

nlohmann::json params_json(const higmanian_params& p) {
  return {{"f", p.f}, {"m", p.m}, {"n", p.n}, {"k", p.k}, {"t", p.t}};
}

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

}  // namespace

int analysis_report::exit_code() const {
  if (!inconsistency.empty()) return 3;
  if (!detected) return 2;
  return verdicts && verdicts->uniform() ? 0 : 1;
}

analysis_report analyze_scheme(const scheme& s, const analysis_options& options,
                               std::string input) {
  const auto start = std::chrono::steady_clock::now();
  analysis_report r;
  r.input = std::move(input);
  r.points = s.points();
  r.rank = s.rank();
  for (const auto& e : nontrivial_parabolics(s)) r.parabolics.push_back(describe_colors(e));
  r.detected = detect_higmanian(s, options.strict);
  if (r.detected) {
    try {
      r.verdicts = verdict_bundle(s, *r.detected.structure, options.bundle);
    } catch (const inconsistent_verdicts& e) {
      r.verdicts = e.report();
      r.inconsistency = e.what();
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json to_json(const analysis_report& r) {
  nlohmann::json j;
  j["input"] = r.input;
  j["points"] = r.points;
  j["rank"] = r.rank;
  j["parabolics"] = r.parabolics;
  j["higmanian"] = static_cast<bool>(r.detected);
  if (!r.detected) {
    j["rejection"] = to_string(r.detected.reason);
    j["detail"] = r.detected.detail;
  }
  if (r.verdicts) {
    const auto& v = *r.verdicts;
    j["params"] = params_json(v.params);
    j["verdicts"] = {{"criterion", v.criterion},
                     {"definition", v.definition},
                     {"q_higmanian", v.q_higmanian},
                     {"dismantlable", v.dismantlable}};
    j["uniformity_rhs"] = {v.rhs[0].str(), v.rhs[1].str()};
    nlohmann::json cert;
    if (!v.definition_parabolic.empty()) cert["definition_parabolic"] = v.definition_parabolic;
    if (!v.dismantle_parabolic.empty()) cert["dismantle_parabolic"] = v.dismantle_parabolic;
    if (v.definition_witness) {
      const auto& w = *v.definition_witness;
      cert["definition_witness"] = {{"classes", {w.delta, w.gamma, w.lambda}},
                                    {"colors", {w.i, w.j}}};
    }
    if (!v.dismantle_witness.empty()) cert["dismantle_witness"] = v.dismantle_witness;
    if (v.spectral.holds) {
      cert["idempotent_ordering"] = v.spectral.ordering;
      cert["l"] = v.spectral.l;
    } else if (!v.spectral.reason.empty()) {
      cert["spectral_reason"] = v.spectral.reason;
    }
    if (!v.spectral_error.empty()) cert["spectral_error"] = v.spectral_error;
    j["certificates"] = cert;
    if (r.detected.structure->swapped_params) {
      j["swapped_params"] = params_json(*r.detected.structure->swapped_params);
      if (v.swapped)
        j["swapped_verdicts"] = {{"criterion", (*v.swapped)[0]}, {"q_higmanian", (*v.swapped)[1]}};
    }
    if (v.oracle_deviation) {
      j["oracle"] = {{"max_deviation", *v.oracle_deviation},
                     {"multiplicities_match", v.oracle_multiplicities}};
    }
    j["uniform"] = v.uniform();
  }
  if (!r.inconsistency.empty()) j["inconsistency"] = r.inconsistency;
  j["seconds"] = r.seconds;
  j["exit_code"] = r.exit_code();
  return j;
}

void print_report(std::ostream& out, const analysis_report& r) {
  if (!r.input.empty()) out << "input: " << r.input << '\n';
  out << "points: " << r.points << "  rank: " << r.rank << '\n';
  out << "nontrivial parabolics:";
  if (r.parabolics.empty()) out << " none";
  for (const auto& p : r.parabolics) out << ' ' << p;
  out << '\n';
  if (!r.detected) {
    out << "not Higmanian: " << to_string(r.detected.reason);
    if (!r.detected.detail.empty()) out << " (" << r.detected.detail << ')';
    out << '\n';
    return;
  }
  const auto& h = *r.detected.structure;
  out << "Higmanian, parameters " << h.params << '\n';
  if (h.swapped_params) out << "n_S = n_T; exchanged labeling gives " << *h.swapped_params << '\n';
  if (r.verdicts) {
    const auto& v = *r.verdicts;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "uniformity right-hand side: t in {" << v.rhs[0] << ", " << v.rhs[1] << "}\n";
    out << "criterion:     " << yn(v.criterion) << '\n';
    out << "definition:    " << yn(v.definition);
    if (!v.definition_parabolic.empty()) out << " (parabolic " << v.definition_parabolic << ')';
    if (!v.definition && v.definition_witness) {
      const auto& w = *v.definition_witness;
      out << " (fails on classes " << w.delta << ',' << w.gamma << ',' << w.lambda
          << " colors " << w.i << ',' << w.j << ')';
    }
    out << '\n';
    out << "Q-Higmanian:   " << yn(v.q_higmanian);
    if (v.spectral.holds)
      out << " (ordering " << join(v.spectral.ordering) << ", l = " << v.spectral.l << ')';
    else if (!v.spectral.reason.empty())
      out << " (" << v.spectral.reason << ')';
    if (!v.spectral_error.empty()) out << " [" << v.spectral_error << ']';
    out << '\n';
    out << "dismantlable:  " << yn(v.dismantlable);
    if (!v.dismantle_parabolic.empty()) out << " (parabolic " << v.dismantle_parabolic << ')';
    if (!v.dismantlable && !v.dismantle_witness.empty())
      out << " (fails on union of classes " << join(v.dismantle_witness) << ')';
    out << '\n';
    if (v.oracle_deviation)
      out << "oracle: max deviation " << *v.oracle_deviation << ", multiplicities "
          << (v.oracle_multiplicities ? "match" : "differ") << '\n';
    out << (v.uniform() ? "uniform" : "not uniform") << '\n';
  }
  if (!r.inconsistency.empty()) out << "INCONSISTENT: " << r.inconsistency << '\n';
}

std::string family_point::str() const {
  std::ostringstream os;
  switch (kind) {
    case family::q8cp: os << "q8cp r=" << r; break;
    case family::heis: os << "heis q=" << q << " r=" << r; break;
    case family::ea: os << "ea q=" << q << " r=" << r << " j=" << j; break;
  }
  return os.str();
}

family parse_family(const std::string& name) {
  if (name == "q8cp" || name == "Q8cp") return family::q8cp;
  if (name == "heis" || name == "Heis") return family::heis;
  if (name == "ea" || name == "EA") return family::ea;
  throw std::invalid_argument("unknown family `" + name + "` (expected q8cp, heis or ea)");
}

table_entry tabulate(const family_point& p) {
  table_entry e;
  e.point = p;
  const unsigned r = p.r;
  if (r == 0) {
    e.note = "r must be positive";
    return e;
  }
  switch (p.kind) {
    case family::q8cp: {
      const std::int64_t a = ipow(2, 2 * r), b = ipow(2, r), c = ipow(2, r - 1);
      e.group_spec = "Q8cp:" + std::to_string(r);
      e.forbidden_spec = "center";
      e.associate = "C_3";
      e.linked = linked_params{a, 2, a, a / 2, 2, a / 2 - b + c, a / 2 + c};
      e.scheme_params = higmanian_params{3, a, 2, a, c * (b + 1)};
      break;
    }
    case family::heis: {
      const std::int64_t q = p.q;
      if (q < 3 || q % 2 == 0) {
        e.note = "q must be odd";
        return e;
      }
      try {
        prime_power(p.q);
      } catch (const std::invalid_argument&) {
        e.note = "q must be a prime power";
        return e;
      }
      const std::int64_t a = ipow(q, 2 * r), qr = ipow(q, r), qr1 = ipow(q, r - 1);
      e.group_spec = "Heis:" + std::to_string(q) + ":" + std::to_string(r);
      e.forbidden_spec = "center";
      e.associate = "C_" + std::to_string(q + 1);
      e.linked = linked_params{a, q, a, a / q, q, a / q - qr + qr1, a / q + qr1};
      e.scheme_params = higmanian_params{q + 1, a, q, a * (q - 1), qr1 * (q - 1) * (q - 1) * (qr + 1)};
      break;
    }
    case family::ea: {
      std::pair<unsigned, unsigned> pi;
      try {
        pi = prime_power(p.q);
      } catch (const std::invalid_argument&) {
        e.note = "q must be a prime power";
        return e;
      }
      const auto [prime, i] = pi;
      if (p.j == 0 || p.j > i) {
        e.note = "j must satisfy 1 <= j <= i = " + std::to_string(i);
        return e;
      }
      const std::int64_t q = p.q, pj = ipow(prime, p.j);
      if (pj - 1 < 2) {
        e.note = "w = p^j - 1 = " + std::to_string(pj - 1) + " < 2";
        return e;
      }
      const std::int64_t a = ipow(q, 2 * r), qr = ipow(q, r), qr1 = ipow(q, r - 1);
      e.group_spec = "EA:" + std::to_string(prime) + ":" + std::to_string(i * (2 * r + 1));
      e.forbidden_spec = "auto:" + std::to_string(q);
      e.associate = p.j == 1 ? "C_" + std::to_string(prime) : "E(" + std::to_string(pj) + ")";
      e.linked = linked_params{a, q, a, a / q, pj - 1, a / q + qr - qr1, a / q - qr1};
      e.scheme_params = higmanian_params{pj, a, q, a * (q - 1), qr1 * (q - 1) * (qr - 1) * (pj - 2)};
      break;
    }
  }
  return e;
}

higmanian_params table2_params(const family_point& p) {
  const auto e = tabulate(p);
  if (!e.scheme_params) throw std::invalid_argument(p.str() + ": " + e.note);
  return *e.scheme_params;
}

construction construct_family(const family_point& p, const construction_options& options) {
  construction c;
  c.expected = tabulate(p);
  if (!c.expected.linked) throw std::invalid_argument(p.str() + ": " + c.expected.note);
  const group_ptr g = build_family(c.expected.group_spec);
  const auto w = static_cast<std::size_t>(c.expected.linked->w);

  // The tabulated (mu, nu) names the sign branch; the other one is a fallback.
  auto search = options.search;
  const auto& lp = *c.expected.linked;
  const auto pairs = semiregular_mu_nu(lp.n, lp.lambda);
  search.branches = pairs[1].mu == quadratic_number(lp.mu) ? std::vector<std::size_t>{1, 0}
                                                           : std::vector<std::size_t>{0, 1};
  std::optional<linked_system> found;
  for (const auto& n : resolve_subgroups(g, c.expected.forbidden_spec)) {
    found = search_linked_system(n, w, search);
    if (found) break;
  }
  if (!found) throw std::runtime_error(p.str() + ": no closed linked system found");
  c.system = std::move(*found);
  c.associate = associate_group(c.system);
  c.u = standard_model(c.associate);
  const auto isos = isomorphisms(c.u, c.associate, 1);
  if (isos.empty()) throw std::logic_error("standard model is not isomorphic to the associate group");
  c.phi = isos.front();
  c.partition = example2_construct(c.system, c.phi);
  c.cayley = cayley_scheme(c.partition);
  c.products = linked_product_identities(c.system, c.partition);
  c.report = analyze_scheme(*c.cayley, options.analysis, p.str());
  return c;
}

dihedral_construction construct_dihedral(const std::string& group_spec,
                                         const std::string& forbidden_spec,
                                         const std::vector<element>& set,
                                         const analysis_options& options) {
  const group_ptr g = build_family(group_spec);
  const auto ns = resolve_subgroups(g, forbidden_spec);
  if (ns.size() != 1) throw std::invalid_argument("forbidden subgroup spec must name one subgroup");
  for (element x : set)
    if (x >= g->order()) throw std::invalid_argument("set element out of range");
  dihedral_construction d;
  const auto check = verify_dds(ns.front(), set);
  if (!check) throw std::invalid_argument("not a divisible difference set: " + check.reason);
  d.params = *check.params;
  d.partition = example1_construct(ns.front(), set);
  d.cayley = cayley_scheme(d.partition);
  d.report = analyze_scheme(*d.cayley, options, "dihedral over " + group_spec);
  return d;
}

}  // namespace higman
