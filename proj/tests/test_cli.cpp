#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "higman/families.hpp"
#include "higman/schemes.hpp"

using namespace higman;

namespace {

std::string scratch(const std::string& name) { return std::string(HIGMAN_SCRATCH) + "/cli_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct result {
  int code = -1;
  std::string out;
};

result run(const std::string& args, const std::string& tag) {
  const auto out = scratch(tag + ".out");
  const std::string cmd = std::string("\"") + HIGMAN_CLI + "\" " + args + " > \"" + out + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream(path) << body;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construct then analyze round-trips the parameters") {
  const auto file = scratch("q8.scheme");
  const auto c = run("construct q8cp 1 -o \"" + file + "\"", "construct");
  CHECK(c.code == 0);
  CHECK(c.out.find("(3,4,2,4,3)") != std::string::npos);
  const auto a = run("--json analyze \"" + file + "\"", "analyze");
  CHECK(a.code == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["higmanian"] == true);
  CHECK(j["params"] == nlohmann::json{{"f", 3}, {"m", 4}, {"n", 2}, {"k", 4}, {"t", 3}});

  std::ifstream in(file);
  const auto s = read_scheme(in);
  CHECK(s.points() == 24);
  CHECK(s.rank() == 5);
}

TEST_CASE("exit codes") {
  const auto rank2 = scratch("rank2.scheme");
  write_file(rank2, "scheme 3 2\n0 1 1\n1 0 1\n1 1 0\n");
  CHECK(run("analyze \"" + rank2 + "\"", "rank2").code == 2);

  const auto broken = scratch("broken.scheme");
  write_file(broken, "scheme 3 2\n0 1\n");
  const auto b = run("analyze \"" + broken + "\"", "broken");
  CHECK(b.code > 3);
  CHECK(b.out.find("line") != std::string::npos);

  CHECK(run("analyze \"" + scratch("missing.scheme") + "\"", "missing").code > 3);
  CHECK(run("construct nonsense 1", "nonsense").code > 3);
}

TEST_CASE("dihedral construction from the command line") {
  const auto r = run("construct dihedral C:4 0,2 0,1", "dihedral");
  CHECK(r.code == 0);
  CHECK(r.out.find("(2,2,2,2,0)") != std::string::npos);
}

TEST_CASE("linked-system search and verification") {
  const auto file = scratch("q8.linked");
  const auto s = run("search-linked-system q8cp 1 -o \"" + file + "\"", "search");
  CHECK(s.code == 0);
  CHECK(s.out.find("(4,2,4,2,2,1,3)") != std::string::npos);
  const auto v = run("verify-linked \"" + file + "\"", "verify");
  CHECK(v.code == 0);
  CHECK(v.out.find("(4,2,4,2,2,1,3)") != std::string::npos);

  const auto bogus = scratch("bogus.linked");
  write_file(bogus, "Q8cp:1\n0 1\n2\n0 1 2 3\n4 5 6 7\n");
  CHECK(run("verify-linked \"" + bogus + "\"", "bogus").code != 0);

  const auto rds = run("search-rds Q8cp:1 center --count", "rds");
  CHECK(rds.code == 0);
  CHECK(rds.out.find("16") != std::string::npos);
}

TEST_CASE("tables skip the w < 2 point with its note") {
  const auto t = run("tables", "tables");
  CHECK(t.code == 0);
  CHECK(t.out.find("w = p^j - 1 = 1 < 2") != std::string::npos);
  CHECK(t.out.find("MISMATCH") == std::string::npos);
}

}  // TEST_SUITE
