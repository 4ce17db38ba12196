#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "realpoincare/cli.hpp"
#include "support.hpp"

using namespace realpoincare;
using testsupport::corpus;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "realpoincare");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = std::string(REALPOINCARE_BINARY_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze reports the splitting data") {
    auto r = cli({"analyze", corpus("quartic_alpha_i.branch"), "--json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["splitting"]["rho"] == 1);
    CHECK(doc["splitting"]["q"] == 0);
    CHECK(doc["real_invariants"]["M_sigma"] == std::vector<long>{4, 10, 21});
    CHECK(doc["real_invariants"]["m_rho"] == 4);
    CHECK(doc["real_invariants"]["recipe_b"] == std::vector<long>{4, 10, 11});
    CHECK(nlohmann::json::parse(doc.dump()) == doc);

    auto t = cli({"analyze", corpus("quartic_split_tau1.branch"), "--json"});
    auto d2 = nlohmann::json::parse(t.out);
    CHECK(d2["splitting"]["rho"] == 3);
    CHECK(d2["splitting"]["q"] == 1);
    CHECK(d2["real_invariants"]["m_rho"] == 12);
  }

  TEST_CASE("real branches get classical data only") {
    auto r = cli({"analyze", corpus("cusp.branch")});
    CHECK(r.code == 0);
    CHECK(r.out.find("real branch: C = conj(C); splitting undefined") != std::string::npos);
    CHECK(r.out.find("<2,3>") != std::string::npos);

    auto s = cli({"series", corpus("cusp.branch"), "--which", "classical", "--json"});
    CHECK(s.code == 3);
    auto doc = nlohmann::json::parse(s.out);
    CHECK(doc.contains("PS"));
    CHECK_FALSE(doc.contains("P"));
    CHECK(s.err.find("undefined") != std::string::npos);
    CHECK(cli({"series", corpus("cusp.branch"), "--which", "s"}).code == 0);
    CHECK(cli({"conjugate", corpus("cusp.branch")}).code == 3);
  }

  TEST_CASE("series output") {
    auto r = cli({"series", corpus("quartic_alpha_i.branch"), "--which", "s"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(1-t^20)(1-t^42) / ((1-t^4)(1-t^10)(1-t^21))") != std::string::npos);
    auto j = nlohmann::json::parse(cli({"series", corpus("quartic_alpha_i.branch"), "--json", "--order", "16"}).out);
    CHECK(j["expansion"]["order"] == 16);
    CHECK(j["expansion"]["P"] == std::vector<int>{1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 1, 0, 2, 0, 2, 0, 2});
    CHECK(j["P"]["num"] == std::vector<long>{8, 20, 42});
    CHECK(j["PR"]["den"] == std::vector<long>{10, 21});
  }

  TEST_CASE("verify exit codes on the corpus") {
    for (const char* f : {"quartic_alpha_i.branch", "quartic_split_tau1.branch", "quartic_split_late.branch", "cusp.branch",
                          "smooth.branch", "real_in_disguise.branch", "g3_alpha_i.branch", "g3_split_tau1.branch",
                          "cusp_twisted.branch", "cusp_late_split.branch", "smooth_nonreal.branch", "swapped.branch"}) {
      CAPTURE(f);
      auto r = cli({"verify", corpus(f)});
      CHECK(r.code == 0);
      CHECK(r.out.find("all checks agree") != std::string::npos);
    }
    for (const char* f : {"negative/quartic_alpha_i_bad_mrho.branch", "negative/quartic_alpha_i_bad_M.branch",
                          "negative/quartic_split_late_bad_mrho.branch", "negative/quartic_split_tau1_bad_M.branch"}) {
      CAPTURE(f);
      auto r = cli({"verify", corpus(f)});
      CHECK(r.code == 4);
      CHECK(r.out.find("MISMATCH") != std::string::npos);
    }
  }

  TEST_CASE("conjugate") {
    auto r = cli({"conjugate", corpus("quartic_split_tau1.branch"), "--json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["recipe"] == "(t^4, t^6 + t^19)");
    CHECK(doc["semigroup_equal"] == true);
  }

  TEST_CASE("error exit codes") {
    CHECK(cli({"analyze", temp_file("bad_parse.branch", "n = 4\ny = t^6 +\n")}).code == 2);
    CHECK(cli({"analyze", temp_file("bad_n.branch", "n = -1\ny = t^3\n")}).code == 2);
    CHECK(cli({"analyze", temp_file("nonprimitive.branch", "n = 4\ny = t^6 + t^10\n")}).code == 3);
    CHECK(cli({"analyze", "/nonexistent/file.branch"}).code == 2);
    CHECK(cli({"verify", corpus("quartic_alpha_i.branch"), "--size-cap", "20"}).code == 5);
    CHECK(cli({"frobnicate", corpus("cusp.branch")}).code == 1);
    CHECK(cli({"series", corpus("cusp.branch"), "--which", "everything"}).code == 1);
    CHECK(cli({"--help"}).code == 0);
  }
}

TEST_SUITE("pipeline") {
  TEST_CASE("random non-real branches pass the full verification") {
    std::mt19937 rng(7);
    const std::vector<std::string> coeffs{"1", "3", "2", "i", "2*i", "(1+i)", "(1-i)", "(2+i)", "(1/2+i)", "3*i"};
    int checked = 0;
    for (int trial = 0; checked < 25 && trial < 400; ++trial) {
      const int n = std::vector<int>{2, 3, 4, 6}[rng() % 4];
      std::string y;
      int e = n + 1 + static_cast<int>(rng() % n);
      for (int k = 0; k < 3; ++k) {
        y += (k ? " + " : "") + coeffs[rng() % coeffs.size()] + "*t^" + std::to_string(e);
        e += 1 + static_cast<int>(rng() % 3);
      }
      BranchParam b = testsupport::branch(n, y);
      if (!validate(b).valid || is_real_branch(b).is_real) continue;
      ++checked;
      InputFile in{b, {}};
      auto o = cmd_verify(in, RunOptions{});
      const std::string context = b.describe() + "\n" + o.doc.dump(2);
      CHECK_MESSAGE(o.code == 0, context);
    }
    CHECK(checked == 25);
  }
}
