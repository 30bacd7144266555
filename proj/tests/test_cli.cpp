#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "ckzeta/int_matrix.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CKZETA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/ckzeta_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("cli ktheory reports canonical groups") {
  std::string m = write_temp("m4.txt", "1 1\n4\n");
  RunResult r = run_cli("ktheory --matrix " + m);
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["k0"]["group"] == "Z/3");
  CHECK(doc["k0"]["torsion"][0] == "3");
  CHECK(doc["k1"]["group"] == "0");
  CHECK(doc["validation"]["nonnegative"] == true);
}

TEST_CASE("cli snf output satisfies the transform identity") {
  std::string m = write_temp("snf.txt", "2 3\n2 4 4\n-6 6 12\n");
  RunResult r = run_cli("snf --matrix " + m);
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  auto load = [&](const char* key) {
    return ckzeta::IntMatrix::parse(doc[key].dump());
  };
  ckzeta::IntMatrix a = load("matrix"), d = load("D"), u = load("U"), v = load("V");
  CHECK(u * a * v == d);
  CHECK(d(0, 0) == 2);
}

TEST_CASE("cli count and zeta agree") {
  RunResult c = run_cli("count --curve ec:a=0,b=1 --p 13");
  REQUIRE(c.exit_code == 0);
  json cd = json::parse(c.out);
  CHECK(cd["count"] == "12");
  CHECK(cd["trace"] == "2");
  CHECK(cd["a_p"] == "2");

  RunResult z = run_cli("zeta --curve ec:a=0,b=1 --p 13 --order 3");
  REQUIRE(z.exit_code == 0);
  json zd = json::parse(z.out);
  CHECK(zd["a_p"] == "2");
  CHECK(zd["P1"][0] == "1");
  CHECK(zd["P1"][1] == "-2");
  CHECK(zd["P1"][2] == "13");
  CHECK(zd["N"][0] == "12");

  RunResult ext = run_cli("count --curve ec:a=0,b=1 --p 13 --ext 2");
  json ed = json::parse(ext.out);
  CHECK(ed["count"] == zd["N"][1]);
  CHECK_FALSE(ed.contains("a_p"));  // only the base field carries a_p
}

TEST_CASE("cli factors") {
  RunResult r = run_cli("factors --curve ec:a=0,b=1 --s 2 --bound 20");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["precision_bits"] == 128);
  CHECK(doc["skipped_primes"].size() == 2);
  std::string zp = doc["zeta_partial"];
  CHECK(zp.substr(0, 6) == "2.2381");
}

TEST_CASE("cli scan is deterministic") {
  std::string a = run_cli("scan --curve ec:a=1,b=1 --bound 60").out;
  std::string b = run_cli("scan --curve ec:a=1,b=1 --bound 60").out;
  CHECK(a == b);
  std::string c = run_cli("scan --curve ec:a=1,b=1 --bound 60 --threads 4").out;
  CHECK(a == c);
}

TEST_CASE("cli scan csv projection") {
  RunResult r = run_cli("scan --curve ec:a=0,b=1 --bound 13 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.substr(0, 46) == "prime,point_count,raw_det,normalized,zero_flag");
  CHECK(r.out.find("\n5,6,6,") != std::string::npos);
  CHECK(r.out.find(",false\n") != std::string::npos);
}

TEST_CASE("cli scan json sections") {
  RunResult r = run_cli("scan --curve ec:a=0,b=1 --bound 13 --window 2");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["family"]["blocks"].size() == 4);
  CHECK(doc["family"]["skipped"].size() == 2);
  CHECK(doc["k0_sequence"]["entries"].size() == 4);
  CHECK(doc["k0_sequence"]["stabilization"]["evaluated"] == true);
  CHECK(doc["k0_sequence"]["stabilization"]["stable"] == false);
  CHECK(doc["scan"].size() == 4);
  CHECK(doc["hasse_weil"]["zeta_pole"] == true);
  CHECK(doc["hasse_weil"]["zeta_partial"].is_null());
  CHECK(doc["hasse_weil"]["s"] == "1");
}

TEST_CASE("cli scan below the first usable prime yields empty sections") {
  RunResult r = run_cli("scan --curve ec:a=0,b=1 --bound 1");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["family"]["blocks"].empty());
  CHECK(doc["family"]["skipped"].empty());
  CHECK(doc["k0_sequence"]["entries"].empty());
  CHECK(doc["k0_sequence"]["stabilization"]["evaluated"] == false);
  CHECK(doc["scan"].empty());
}

TEST_CASE("cli verify-t11") {
  std::string m = write_temp("v.txt", "2 2\n3 1\n2 5\n");
  RunResult r = run_cli("verify-t11 --matrix " + m);
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["isomorphic"] == true);
  CHECK(doc["group"] == doc["k0"]["group"]);
  CHECK(doc["k0"]["group"] == doc["pic"]["group"]);
}

TEST_CASE("cli --out writes the report to a file") {
  std::string out = "/tmp/ckzeta_test_out.json";
  std::remove(out.c_str());
  RunResult r = run_cli("count --curve ec:a=0,b=1 --p 5 --out " + out);
  REQUIRE(r.exit_code == 0);
  std::ifstream f(out);
  REQUIRE(f.good());
  json doc = json::parse(f);
  CHECK(doc["count"] == "6");
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("").exit_code == 2);                 // missing subcommand
  CHECK(run_cli("snf").exit_code == 2);              // missing --matrix
  CHECK(run_cli("unknown-verb").exit_code == 2);
  CHECK(run_cli("snf --matrix /nonexistent").exit_code == 2);
  CHECK(run_cli("count --curve ec:a=0,b=1 --p 6").exit_code == 2);
  CHECK(run_cli("count --curve ec:a=0,b=0 --p 5").exit_code == 2);
  CHECK(run_cli("count --curve ec:a=0,b=1 --p 3").exit_code == 1);
  CHECK(run_cli("factors --curve ec:a=0,b=1 --s 1 --bound 20").exit_code == 1);
  CHECK(run_cli("factors --curve ec:a=0,b=1 --s 2 --bound 20 --prec 50").exit_code == 2);
  CHECK(run_cli("scan --curve ec:a=0,b=1 --bound 13 --format xml").exit_code == 2);
  CHECK(run_cli("scan --curve ec:a=0,b=1 --bound 13 --window 1").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli error messages name the failing precondition") {
  RunResult r = run_cli("count --curve ec:a=0,b=1 --p 6");
  CHECK(r.out.find("prime") != std::string::npos);
  r = run_cli("count --curve ec:a=0,b=1 --p 3");
  CHECK(r.out.find("characteristic 3") != std::string::npos);
  r = run_cli("factors --curve ec:a=0,b=1 --s 1 --bound 20");
  CHECK(r.out.find("s = 1") != std::string::npos);
}
