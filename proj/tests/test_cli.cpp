#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ltf/serialize.hpp"

namespace fs = std::filesystem;
using ltf::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> rows(const std::string& csv) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) out.push_back(ltf::split_csv_line(line));
  return out;
}

fs::path write_temp(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / ("ltf_cli_" + name);
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("span-check writes the report and timing lines") {
  const auto r = invoke({"span-check", "--p", "3", "--d", "2", "--kind", "ram", "--max-n", "20"});
  REQUIRE(r.code == 0);
  const auto t = rows(r.out);
  REQUIRE(t.size() == 21);
  CHECK(t[0] == std::vector<std::string>{"n", "a", "b", "wq", "s0", "cap", "status", "best_val"});
  CHECK(t[1] == std::vector<std::string>{"0", "0", "0", "0", "0", "0", "exact", "0"});
  CHECK(r.err.find("phase,total,") != std::string::npos);
}

TEST_CASE("span-check output is the same for any thread count, window and engine") {
  const std::vector<std::string> base = {"span-check", "--p", "2", "--d", "2", "--kind", "unram", "--max-n", "45"};
  const auto ref = invoke(base);
  REQUIRE(ref.code == 0);
  for (const std::vector<std::string>& extra :
       {std::vector<std::string>{"--threads", "4"}, {"--window", "0"}, {"--window", "3"}, {"--engine", "exact"}}) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    CHECK(invoke(args).out == ref.out);
  }
}

TEST_CASE("span-check writes to a file") {
  const fs::path p = fs::temp_directory_path() / "ltf_cli_span.csv";
  const auto r = invoke({"span-check", "--max-n", "10", "--out", p.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(p);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,a,b,wq,s0,cap,status,best_val");
  fs::remove(p);
}

TEST_CASE("bad input exits with code 2") {
  CHECK(invoke({"span-check", "--max-n", "7"}).code == 2);
  CHECK(invoke({"span-check", "--p", "4", "--max-n", "8"}).code == 2);
  CHECK(invoke({"span-check"}).code == 2);
  CHECK(invoke({"span-check", "--max-n", "8", "--engine", "slow"}).code == 2);
  CHECK(invoke({"span-check", "--max-n", "8", "--kind", "wild"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"psi-int", "--coeffs", "/nonexistent/file.csv"}).code == 2);
  CHECK(invoke({"pi-ordering", "--count", "30", "--precision", "2"}).code == 2);
  CHECK(invoke({"span-check", "--max-n", "8", "--out", "/nonexistent/dir/x.csv"}).code == 2);
}

TEST_CASE("pn, matrices and psi tables") {
  const auto pn = invoke({"pn", "--p", "3", "--d", "2", "--max-deg", "3"});
  REQUIRE(pn.code == 0);
  const auto t = rows(pn.out);
  CHECK(t[0] == std::vector<std::string>{"n", "degree", "coeff"});
  CHECK(t[1] == std::vector<std::string>{"0", "0", "1/1;0/1"});
  CHECK(t.back() == std::vector<std::string>{"3", "3", "1/6;0/1"});

  const auto m = invoke({"matrices", "--p", "3", "--d", "2", "--a", "1", "--size", "4"});
  REQUIRE(m.code == 0);
  CHECK(rows(m.out).size() == 1 + 10);

  const auto psi = invoke({"psi", "--p", "2", "--d", "2", "--kind", "unram", "--max-k", "8"});
  REQUIRE(psi.code == 0);
  const auto pt = rows(psi.out);
  CHECK(pt[0] == std::vector<std::string>{"k", "result_poly"});
  CHECK(pt[4] == std::vector<std::string>{"3", "-3/2"});
  CHECK(pt[9] == std::vector<std::string>{"8", "0/1|0/1|1/1"});
}

TEST_CASE("psi-int trace") {
  const auto good = write_temp("good.csv", "degree,coeff\n15,4\n");
  const auto r = invoke({"psi-int", "--p", "2", "--d", "2", "--kind", "unram", "--coeffs", good.string()});
  REQUIRE(r.code == 0);
  const auto t = rows(r.out);
  CHECK(t[0] == std::vector<std::string>{"iterate", "degree", "min_val", "integral"});
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i][3] == "yes");
  const auto bad = write_temp("bad.csv", "degree,coeff\n15,2\n");
  const auto b = invoke({"psi-int", "--p", "2", "--d", "2", "--kind", "unram", "--coeffs", bad.string()});
  REQUIRE(b.code == 0);
  CHECK(b.out.find(",no\n") != std::string::npos);
  const auto zero = write_temp("zero.csv", "degree,coeff\n");
  const auto z = invoke({"psi-int", "--p", "2", "--d", "2", "--kind", "unram", "--coeffs", zero.string()});
  CHECK(rows(z.out)[1] == std::vector<std::string>{"0", "-1", "inf", "yes"});
  const auto broken = write_temp("broken.csv", "degree,coeff\n0,1\n0,2\n");
  CHECK(invoke({"psi-int", "--coeffs", broken.string()}).code == 2);
  for (const auto& p : {good, bad, zero, broken}) fs::remove(p);
}

TEST_CASE("newton, pi-ordering and int-check") {
  const auto n = invoke({"newton", "--p", "3", "--d", "2", "--kind", "unram", "--max-m", "2"});
  REQUIRE(n.code == 0);
  CHECK(rows(n.out)[2] == std::vector<std::string>{"1", "3", "1", "1", "8", "1", "8"});

  const auto o = invoke({"pi-ordering", "--p", "3", "--d", "2", "--count", "10"});
  REQUIRE(o.code == 0);
  const auto ot = rows(o.out);
  REQUIRE(ot.size() == 11);
  for (std::size_t k = 1; k < ot.size(); ++k) CHECK(ot[k][2] == ot[k][3]);

  const auto g = write_temp("fermat.csv", "degree,coeff\n1,0;-1/3\n3,0;1/3\n");
  const auto ic = invoke({"int-check", "--p", "3", "--d", "2", "--coeffs", g.string()});
  REQUIRE(ic.code == 0);
  const auto it = rows(ic.out);
  CHECK(it[0] == std::vector<std::string>{"k", "lambda", "valuation", "integral"});
  for (std::size_t k = 1; k < it.size(); ++k) CHECK(it[k][3] == "yes");
  const auto h = write_temp("cube.csv", "degree,coeff\n3,0;1/3\n");
  const auto hc = invoke({"int-check", "--p", "3", "--d", "2", "--coeffs", h.string()});
  REQUIRE(hc.code == 0);
  CHECK(hc.out.find(",no\n") != std::string::npos);
  fs::remove(g);
  fs::remove(h);
}

TEST_CASE("selfcheck passes and detects an injected fault") {
  for (const std::vector<std::string>& spec :
       {std::vector<std::string>{"--p", "3", "--d", "2", "--kind", "ram"},
        {"--p", "2", "--d", "2", "--kind", "unram"},
        {"--p", "2", "--d", "1", "--kind", "ram"}}) {
    std::vector<std::string> args = {"selfcheck"};
    args.insert(args.end(), spec.begin(), spec.end());
    const auto r = invoke(args);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("check,status\n", 0) == 0);
    CHECK(r.out.find(",fail") == std::string::npos);
  }
  const auto f = invoke({"selfcheck", "--inject-fault", "r-entry"});
  CHECK(f.code == 3);
  CHECK(f.err.find("selfcheck failed: IntegralMCs") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("span-check") != std::string::npos);
}
