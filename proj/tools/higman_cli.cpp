// Command-line front end: construct, analyze, search and verify Higmanian
// schemes and linked systems.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "higman/families.hpp"
#include "higman/report.hpp"

using namespace higman;

namespace {

constexpr int exit_error = 4;

struct global_flags {
  bool strict = true;
  bool oracle = false;
  bool json = false;
  std::uint64_t max_search = std::uint64_t{1} << 24;
  std::uint64_t seed = 0;

  analysis_options analysis() const {
    analysis_options o;
    o.strict = strict;
    o.bundle.oracle = oracle;
    o.bundle.dismantle.seed = seed;
    return o;
  }
  construction_options construction() const {
    construction_options o;
    o.analysis = analysis();
    o.search.rds_cap = max_search;
    return o;
  }
};

std::vector<element> parse_list(const std::string& s) {
  std::vector<element> out;
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  long long x;
  while (in >> x) {
    if (x < 0) throw std::invalid_argument("negative element in `" + s + "`");
    out.push_back(static_cast<element>(x));
  }
  if (!in.eof()) throw std::invalid_argument("cannot parse element list `" + s + "`");
  return out;
}

family_point parse_point(const std::vector<std::string>& args) {
  if (args.empty()) throw std::invalid_argument("missing family");
  family_point p;
  p.kind = parse_family(args[0]);
  std::vector<unsigned> v;
  for (std::size_t i = 1; i < args.size(); ++i) v.push_back(static_cast<unsigned>(std::stoul(args[i])));
  const std::size_t want = p.kind == family::q8cp ? 1 : p.kind == family::heis ? 2 : 3;
  if (v.size() != want)
    throw std::invalid_argument(args[0] + " takes " + std::to_string(want) + " parameter(s)");
  if (p.kind == family::q8cp) {
    p.r = v[0];
  } else {
    p.q = v[0];
    p.r = v[1];
    if (p.kind == family::ea) p.j = v[2];
  }
  return p;
}

void print_elements(std::ostream& out, const std::vector<element>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  out << '\n';
}

void print_system(std::ostream& out, const linked_system& sys) {
  out << "parameters (m,n,k,lambda,w,mu,nu) = " << sys.params.str() << '\n';
  out << "chi:";
  for (auto c : sys.chi) out << ' ' << c;
  out << '\n';
  const auto assoc = associate_group(sys);
  out << "associate group: " << describe_group(*assoc) << '\n';
  const auto pairs = semiregular_mu_nu(sys.params.n, sys.params.lambda);
  for (std::size_t b = 0; b < 2; ++b)
    if (pairs[b].mu == quadratic_number(sys.params.mu) && pairs[b].nu == quadratic_number(sys.params.nu))
      out << "(mu, nu) on the " << (b == 0 ? "upper" : "lower") << " sign branch\n";
}

int cmd_analyze(const std::string& path, const global_flags& g) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return exit_error;
  }
  const scheme s = read_scheme(in);
  const auto r = analyze_scheme(s, g.analysis(), path);
  if (g.json)
    std::cout << to_json(r).dump(2) << '\n';
  else
    print_report(std::cout, r);
  return r.exit_code();
}

int cmd_construct(const std::vector<std::string>& args, const std::string& output,
                  const std::string& partition_out, const global_flags& g) {
  if (!args.empty() && args[0] == "dihedral") {
    if (args.size() != 4)
      throw std::invalid_argument("dihedral takes <group spec> <subgroup spec> <set>");
    const auto d = construct_dihedral(args[1], args[2], parse_list(args[3]), g.analysis());
    if (!output.empty()) {
      std::ofstream out(output);
      write_scheme(out, *d.cayley);
    }
    if (!partition_out.empty()) {
      std::ofstream out(partition_out);
      write_partition(out, d.partition);
    }
    if (g.json) {
      auto j = to_json(d.report);
      j["dds"] = {d.params.m, d.params.n, d.params.k, d.params.lambda1, d.params.lambda2};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "DDS parameters (m,n,k,lambda1,lambda2) = (" << d.params.m << ',' << d.params.n
                << ',' << d.params.k << ',' << d.params.lambda1 << ',' << d.params.lambda2 << ")\n";
      print_report(std::cout, d.report);
    }
    return d.report.exit_code();
  }

  const auto c = construct_family(parse_point(args), g.construction());
  if (!output.empty()) {
    std::ofstream out(output);
    write_scheme(out, *c.cayley);
  }
  if (!partition_out.empty()) {
    std::ofstream out(partition_out);
    write_partition(out, c.partition);
  }
  const auto& detected = c.report.detected;
  const bool match = detected && detected.structure->params == *c.expected.scheme_params;
  bool products = true;
  for (const auto& p : c.products) products = products && p.holds;
  if (g.json) {
    auto j = to_json(c.report);
    j["group"] = c.partition.group->name();
    j["linked_params"] = c.system.params.str();
    j["table_params"] = c.expected.scheme_params->str();
    j["match"] = match;
    j["product_identities"] = products;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "group: " << c.partition.group->name() << " (order " << c.partition.group->order()
              << ")\n";
    print_system(std::cout, c.system);
    std::cout << "table parameters: " << *c.expected.scheme_params << '\n';
    print_report(std::cout, c.report);
    std::cout << "product identities: " << (products ? "all hold" : "FAIL") << '\n';
    std::cout << (match ? "match" : "MISMATCH") << '\n';
  }
  if (!match || !products) return 1;
  return c.report.exit_code();
}

int cmd_search_rds(const std::string& group_spec, const std::string& n_spec, bool count_only,
                   const global_flags& g) {
  const auto grp = build_family(group_spec);
  for (const auto& n : resolve_subgroups(grp, n_spec)) {
    const auto rds = search_semiregular_rds(n, g.max_search);
    std::cout << "# N = {";
    for (std::size_t i = 0; i < n.elements.size(); ++i) std::cout << (i ? "," : "") << n.elements[i];
    std::cout << "}: " << rds.size() << " semiregular RDS\n";
    if (!count_only)
      for (const auto& x : rds) print_elements(std::cout, x);
  }
  return 0;
}

int cmd_search_linked(const std::vector<std::string>& args, const std::string& forbidden,
                      std::size_t w, const std::string& branch, const std::string& output,
                      const global_flags& g) {
  linked_search_options o;
  o.rds_cap = g.max_search;
  if (branch == "upper")
    o.branches = {0};
  else if (branch == "lower")
    o.branches = {1};
  else if (branch != "any")
    throw std::invalid_argument("--branch must be upper, lower or any");

  std::string group_spec = args.empty() ? "" : args[0];
  std::string n_spec = forbidden;
  if (!args.empty() && args[0].find(':') == std::string::npos) {
    const auto e = tabulate(parse_point(args));
    if (!e.linked) throw std::invalid_argument(e.note);
    group_spec = e.group_spec;
    if (n_spec.empty()) n_spec = e.forbidden_spec;
    if (w == 0) w = static_cast<std::size_t>(e.linked->w);
    if (branch == "any") {
      const auto pairs = semiregular_mu_nu(e.linked->n, e.linked->lambda);
      o.branches = pairs[1].mu == quadratic_number(e.linked->mu) ? std::vector<std::size_t>{1, 0}
                                                                   : std::vector<std::size_t>{0, 1};
    }
  } else if (args.size() != 1) {
    throw std::invalid_argument("search-linked takes a family point or a single group spec");
  }
  if (n_spec.empty()) n_spec = "center";
  if (w < 2) throw std::invalid_argument("--w must be at least 2");

  const auto grp = build_family(group_spec);
  for (const auto& n : resolve_subgroups(grp, n_spec)) {
    const auto sys = search_linked_system(n, w, o);
    if (!sys) continue;
    std::cout << "group: " << group_spec << '\n';
    print_system(std::cout, *sys);
    if (!output.empty()) {
      std::ofstream out(output);
      write_linked_system(out, *sys);
    } else {
      write_linked_system(std::cout, *sys);
    }
    return 0;
  }
  std::cout << "no closed linked system of size " << w << " found\n";
  return 1;
}

int cmd_verify_linked(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return exit_error;
  }
  auto f = read_linked_file(in);
  const auto check = verify_linked_system(f.forbidden, std::move(f.members));
  if (!check) {
    std::cout << "not a closed linked system: " << check.failure << '\n';
    return 1;
  }
  print_system(std::cout, *check.system);
  return 0;
}

std::vector<family_point> desk_points() {
  return {
      {family::q8cp, 2, 1, 1}, {family::q8cp, 2, 2, 1}, {family::q8cp, 2, 3, 1},
      {family::heis, 3, 1, 1}, {family::heis, 5, 1, 1}, {family::heis, 3, 2, 1},
      {family::ea, 2, 1, 1},   {family::ea, 3, 1, 1},   {family::ea, 4, 1, 1},
      {family::ea, 4, 1, 2},   {family::ea, 5, 1, 1},   {family::ea, 3, 2, 1},
  };
}

int cmd_tables(const global_flags& g) {
  nlohmann::json rows = nlohmann::json::array();
  bool all_match = true;
  for (const auto& p : desk_points()) {
    const auto e = tabulate(p);
    nlohmann::json row{{"point", p.str()}};
    std::ostringstream line;
    line << p.str() << ": ";
    if (!e.linked) {
      row["skipped"] = e.note;
      line << "skipped (" << e.note << ")";
    } else if (build_family(e.group_spec)->order() > 512) {
      row["skipped"] = "group order above 512";
      line << "skipped (group order above 512)";
    } else {
      row["linked"] = e.linked->str();
      row["scheme"] = e.scheme_params->str();
      line << "linked " << e.linked->str() << " " << e.associate << ", scheme "
           << *e.scheme_params;
      try {
        const auto c = construct_family(p, g.construction());
        const auto& d = c.report.detected;
        const bool m1 = c.system.params == *e.linked && describe_group(*c.associate) == e.associate;
        const bool m2 = d && d.structure->params == *e.scheme_params && c.report.exit_code() == 0;
        row["found_linked"] = c.system.params.str();
        row["associate"] = describe_group(*c.associate);
        if (d) row["found_scheme"] = d.structure->params.str();
        row["match"] = m1 && m2;
        all_match = all_match && m1 && m2;
        line << " | found " << c.system.params.str() << " " << describe_group(*c.associate);
        if (d) line << ", " << d.structure->params;
        line << (m1 && m2 ? " match" : " MISMATCH");
      } catch (const search_cap_exceeded& ex) {
        row["skipped"] = ex.what();
        line << " | skipped (" << ex.what() << ")";
      } catch (const std::runtime_error& ex) {
        row["error"] = ex.what();
        all_match = false;
        line << " | " << ex.what();
      }
    }
    rows.push_back(row);
    if (!g.json) std::cout << line.str() << '\n';
  }
  if (g.json) std::cout << rows.dump(2) << '\n';
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higmanian association schemes: construction, analysis and uniformity"};
  app.require_subcommand(1);
  global_flags g;
  app.add_flag("--strict-higmanian,!--no-strict-higmanian", g.strict,
               "require exactly two nontrivial parabolics (default on)");
  app.add_flag("--oracle", g.oracle, "cross-check spectra against a floating-point eigensolver");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--max-search", g.max_search, "node cap for RDS enumeration");
  app.add_option("--seed", g.seed, "seed for sampled dismantlability checks");

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "analyze a scheme file");
  analyze->add_option("file", path, "scheme file")->required();

  std::vector<std::string> cargs;
  std::string output, partition_out;
  auto* construct = app.add_subcommand(
      "construct", "build a scheme: q8cp <r> | heis <q> <r> | ea <q> <r> <j> | dihedral <G> <N> <X>");
  construct->add_option("args", cargs, "family and parameters")->required();
  construct->add_option("-o,--output", output, "write the scheme file here");
  construct->add_option("--partition", partition_out, "write the S-ring partition here");

  std::string group_spec, n_spec;
  bool count_only = false;
  auto* rds = app.add_subcommand("search-rds", "list semiregular RDSs relative to N");
  rds->add_option("group", group_spec, "group spec")->required();
  rds->add_option("subgroup", n_spec, "center | auto:<order> | generator list")->required();
  rds->add_flag("--count", count_only, "print counts only");

  std::vector<std::string> largs;
  std::string forbidden, branch = "any", linked_out;
  std::size_t w = 0;
  auto* linked = app.add_subcommand("search-linked", "search a closed linked system of RDSs");
  linked->alias("search-linked-system");
  linked->add_option("args", largs, "family point, or a group spec")->required();
  linked->add_option("--forbidden", forbidden, "subgroup spec for N");
  linked->add_option("--w", w, "number of members");
  linked->add_option("--branch", branch, "upper | lower | any");
  linked->add_option("-o,--output", linked_out, "write the linked-system file here");

  std::string lpath;
  auto* verify = app.add_subcommand("verify-linked", "verify a linked-system file");
  verify->add_option("file", lpath, "linked-system file")->required();

  auto* tables = app.add_subcommand("tables", "reproduce the parameter tables at desk scale");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*analyze) return cmd_analyze(path, g);
    if (*construct) return cmd_construct(cargs, output, partition_out, g);
    if (*rds) return cmd_search_rds(group_spec, n_spec, count_only, g);
    if (*linked) return cmd_search_linked(largs, forbidden, w, branch, linked_out, g);
    if (*verify) return cmd_verify_linked(lpath);
    if (*tables) return cmd_tables(g);
  } catch (const scheme_error& e) {
    std::cerr << "scheme error: " << e.what() << '\n';
    return exit_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
