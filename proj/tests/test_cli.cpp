#include <doctest.h>

#include <cstdio>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef BCAT_CLI_PATH
#error "BCAT_CLI_PATH must point at the command-line tool"
#endif

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BCAT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (const std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("enumerate") {
  const Run all = run("enumerate --m 2 --n 11 --method all");
  CHECK(all.code == 0);
  CHECK(all.out.find("1,1,2,5,8,12,18,26,37,53,76,109") != std::string::npos);
  CHECK(all.out.find("AGREE") != std::string::npos);
  CHECK(all.out.find("DISAGREE") == std::string::npos);
  CHECK(count(all.out, "1,1,2,5,8,12,18,26,37,53,76,109") == 3);

  const Run dp = run("enumerate --m 3 --n 14 --method dp");
  CHECK(dp.code == 0);
  CHECK(dp.out == "1,1,2,5,14,28,55,108,214,412,787,1497,2841,5364,10088\n");
  CHECK(run("enumerate --m 1 --n 5").out == "1,1,2,2,2,2\n");

  const Run csv = run("enumerate --m 2 --n 3 --method all --format csv");
  CHECK(csv.out == "n,oracle,dp,series\n0,1,1,1\n1,1,1,1\n2,2,2,2\n3,5,5,5\n");
}

TEST_CASE("validation errors exit with code 2") {
  CHECK(run("enumerate --m 2 --n 20 --method oracle").code == 2);
  CHECK(run("enumerate --m 0 --n 3").code == 2);
  CHECK(run("enumerate --m 2 --n 3 --method guess").code == 2);
  CHECK(run("gf --m 2 --format dot").code == 2);
  CHECK(run("gf --m 2 --format csv").code == 2);
  CHECK(run("table --m-list 5-2").code == 2);
  CHECK(run("gf").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("gf and recurrence") {
  CHECK(run("gf --m 2").out == "(1 - 2*x + 2*x^2 - x^4 - x^6) / (1 - 3*x + 3*x^2 - 2*x^3 + 2*x^4 - x^5)\n");
  const Run rec = run("recurrence --m 3");
  CHECK(rec.out.find("order 13\ncoeffs 2,1,-1,-1,-2,-2,-2,4,2,-1,2,0,-1\nvalid_from 13\n") == 0);
}

TEST_CASE("JSON outputs round-trip byte for byte") {
  for (const char* args : {"gf --m 3 --format json", "recurrence --m 2 --format json", "growth --m 3 --format json",
                           "enumerate --m 2 --n 8 --method all --format json", "table --m-list 2-4 --format json"}) {
    const Run r = run(args);
    CHECK(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
  }
  const auto g = nlohmann::ordered_json::parse(run("growth --m 2 --format json").out);
  CHECK(g["pole"]["pole_simple"] == true);
  CHECK(g["pole"]["kappa"].get<double>() == doctest::Approx(1.51).epsilon(0.01));
}

TEST_CASE("graph") {
  const Run r = run("graph --m 2 --format dot");
  CHECK(r.code == 0);
  CHECK(count(r.out, "style=dashed") == 3);
  const std::regex node(R"re(^\s*"\([^"]*\)";$)re");
  std::istringstream lines(r.out);
  std::size_t nodes = 0;
  for (std::string line; std::getline(lines, line);) nodes += std::regex_match(line, node);
  CHECK(nodes == 9);
}

TEST_CASE("table") {
  const Run r = run("table --m-list 2-5 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "m,lambda_U,lambda_V,alpha,lower_bound\n"
        "2,1.466,1.000,1.466,1.000\n"
        "3,1.827,1.691,1.827,1.189\n"
        "4,2.100,2.091,2.100,1.380\n"
        "5,2.312,2.352,2.352,1.552\n");
  const std::string threaded = std::string("BOUNDED_CATALAN_THREADS=3 ") + BCAT_CLI_PATH + " table --m-list 2-5 --format csv";
  FILE* pipe = popen(threaded.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[1024];
  while (const std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  pclose(pipe);
  CHECK(out == r.out);
}
