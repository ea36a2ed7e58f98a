// End-to-end tests of the command-line binary.  The build exports its path in
// the HITORB_CLI environment variable.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("HITORB_CLI");
  REQUIRE_MESSAGE(p != nullptr, "HITORB_CLI must point at the built binary");
  return p;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("chi subcommand") {
  auto r = run("chi --sphere --cones 2,3,7");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "chi = -1/42 (hyperbolic)\n");

  auto j = run("chi --disk --corners 2,3,7 --format json");
  CHECK(j.exit_code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("result").at("chi") == "-1/84");
  CHECK(parsed.at("request").at("command") == "chi");
  CHECK(parsed.at("provenance").contains("formula_routes_checked"));
}

TEST_CASE("dim subcommand") {
  auto r = run("dim --sphere --boundary-circles 3 --group pgl:3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "dim Hit = 8\n");

  auto j = run("dim --genus 2 --group pgl:2 --format json");
  CHECK(j.exit_code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("result").at("dim") == 6);
  auto routes = parsed.at("provenance").at("formula_routes_checked");
  CHECK(routes.size() >= 2);

  auto open = run("dim --sphere --mixed-circles 1 --full-boundaries 2 --cones 5 "
                  "--group psp:2 --format json");
  CHECK(open.exit_code == 0);
  auto popen_parsed = nlohmann::json::parse(open.out);
  bool has_mirror_route = false;
  for (auto& route : popen_parsed.at("provenance").at("formula_routes_checked"))
    if (route == "mirror_double") has_mirror_route = true;
  CHECK(has_mirror_route);
}

TEST_CASE("base, bounds and expected subcommands") {
  auto b = run("base --sphere --cones 2,3,7 --group pgl:6 --format json");
  CHECK(b.exit_code == 0);
  auto base = nlohmann::json::parse(b.out);
  CHECK(base.at("result").at("total") == 2);

  auto bounds = run("bounds --sphere --cones 2,3,7 --group pgl:2 --format json");
  CHECK(bounds.exit_code == 0);
  auto bj = nlohmann::json::parse(bounds.out);
  CHECK(bj.at("result").at("defect") == "1/14");
  CHECK(bj.at("result").at("lower") == "-85/42");
  CHECK(bj.at("result").at("upper") == "167/42");

  auto e = run("expected --genus 2 --group pgl:3");
  CHECK(e.exit_code == 0);
  CHECK(e.out == "dim Hit = 16\n");
}

TEST_CASE("classify subcommand") {
  auto r = run("classify --mode zero-dim --group g2 --orientable-only --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("result").at("families").size() == 2);

  auto v = run("classify --mode vanishing --degree 8 --expand --format json");
  CHECK(v.exit_code == 0);
  auto vj = nlohmann::json::parse(v.out);
  auto members = vj.at("result").at("members_up_to_horizon");
  REQUIRE(members.size() == 1);
  CHECK(members[0].at("cones") == nlohmann::json::array({2, 3, 7}));

  auto csv = run("classify --mode zero-dim --group psp:2 --orientable-only --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("orientable,genus,mirror_circles,cones,corners\n", 0) == 0);

  // Tail slots carry their stabilization certificate.
  auto zd = run("classify --mode zero-dim --group pgl:4 --orientable-only --format json");
  auto zj = nlohmann::json::parse(zd.out);
  bool saw_cert = false;
  for (auto& fam : zj.at("result").at("families"))
    for (auto& slot : fam.at("cones"))
      if (slot.at("slot") == "at_least") {
        CHECK(slot.at("certificate").contains("stabilization_degree"));
        CHECK(slot.at("certificate").contains("checked_range"));
        saw_cert = true;
      }
  CHECK(saw_cert);
}

TEST_CASE("table subcommand") {
  auto t1 = run("table 1");
  CHECK(t1.exit_code == 0);
  CHECK(t1.out.find("pgl:n,n^2-1,n-1,1 2 ... n-1") != std::string::npos);
  CHECK(t1.out.find("e8,248,8,1 7 11 13 17 19 23 29") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("chi --sphere --cones 1,3").exit_code == 2);     // invalid order
  CHECK(run("dim --genus 2 --group su:3").exit_code == 2);   // unknown group
  CHECK(run("frobnicate").exit_code == 2);                   // unknown subcommand
  CHECK(run("chi --disk --sphere").exit_code == 2);          // conflicting shorthands
  CHECK(run("classify --mode zero-dim --group g2",
            "HITCHIN_MAX_HORIZON=1 ").exit_code == 2);       // bad horizon
  CHECK(run("dim --genus 1 --group pgl:2").exit_code == 2);  // not hyperbolic
}
