#include <gtest/gtest.h>

#include <sstream>

#include "combpoly/cli.hpp"
#include "combpoly/families.hpp"

using namespace combpoly;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ComputeJson) {
  CliResult r = invoke({"compute", "--family", "R", "--n", "4", "--method", "triangle", "--format", "json"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "{\"family\":\"R\",\"n\":4,\"method\":\"triangle\",\"coeffs\":[0,2,12,10]}\n");
}

TEST(Cli, ComputeText) {
  CliResult r = invoke({"compute", "--family", "A", "--n", "4"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("x+11x^2+11x^3+x^4"), std::string::npos);
}

TEST(Cli, ComputeCsv) {
  CliResult r = invoke({"compute", "--family", "S", "--n", "3", "--format", "csv"});
  EXPECT_EQ(r.out, "k,coeff\n0,0\n1,1\n2,3\n3,2\n");
}

TEST(Cli, AndreTerms) {
  CliResult r = invoke({"compute", "--family", "Andre", "--n", "4", "--format", "json"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("\"terms\":[{\"xexp\":1,\"yexp\":3,\"coeff\":1},{\"xexp\":2,\"yexp\":1,\"coeff\":4}]"),
            std::string::npos)
      << r.out;
}

TEST(Cli, BigIntegersAsStrings) {
  CliResult r = invoke({"compute", "--family", "F", "--n", "25", "--format", "json"});
  EXPECT_EQ(r.code, cli::kExitOk);
  UniPoly f = family_poly(FamilyId::F, 25, "diff_recurrence");
  Int big = f.coeff(12);
  ASSERT_FALSE(fits_double_exactly(big));
  EXPECT_NE(r.out.find("\"" + big.get_str() + "\""), std::string::npos);
  EXPECT_NE(r.out.find("[0,1,"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  CliResult r = invoke({"compute", "--family", "X", "--n", "3"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"compute", "--family", "R"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"compute", "--family", "R", "--n", "4", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"compute", "--family", "A", "--n", "12", "--method", "enumeration"}).code,
            cli::kExitUsage);
  EXPECT_EQ(invoke({"verify", "--suite", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"det", "--variant", "nope", "--n", "3"}).code, cli::kExitUsage);
}

TEST(Cli, Verify) {
  EXPECT_EQ(invoke({"verify", "--suite", "bona", "--max-n", "6"}).code, cli::kExitOk);
  CliResult q = invoke({"verify", "--suite", "qi_flag", "--format", "json"});
  EXPECT_EQ(q.code, cli::kExitOk);
  EXPECT_NE(q.out.find("\"status\":\"flag\""), std::string::npos);
  EXPECT_NE(q.out.find("\"summary\":{\"pass\":0,\"fail\":0,\"flag\":1}"), std::string::npos) << q.out;
  EXPECT_EQ(invoke({"verify", "--suite", "qi_flag", "--strict-flags"}).code, cli::kExitCheckFailed);
}

TEST(Cli, VerifyCsv) {
  CliResult r = invoke({"verify", "--suite", "bona,div_S", "--max-n", "5", "--format", "csv"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "id,n_min,n_max,status,n,lhs,rhs,observed");
  EXPECT_NE(r.out.find("bona,2,5,pass"), std::string::npos);
}

TEST(Cli, Det) {
  CliResult r = invoke({"det", "--variant", "kit93", "--n", "2", "--format", "csv"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "i,j,entry\n1,1,2\n1,2,-1\n2,1,3\n2,2,3\n");
  CliResult t = invoke({"det", "--variant", "sr_thmB", "--n", "3", "--target", "R"});
  EXPECT_NE(t.out.find("2x+12x^2+10x^3"), std::string::npos) << t.out;
  EXPECT_EQ(invoke({"det", "--variant", "eulerian_thm", "--n", "3", "--target", "F"}).code,
            cli::kExitUsage);
}

TEST(Cli, TableMatchesTriangle) {
  CliResult r = invoke({"table", "--family", "R", "--rows", "8", "--format", "csv"});
  EXPECT_EQ(r.code, cli::kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,k,value");
  int rows = 0;
  while (std::getline(in, line)) {
    int n, k;
    char c1, c2;
    std::string value;
    std::istringstream ls(line);
    ls >> n >> c1 >> k >> c2 >> value;
    EXPECT_EQ(Int(value), triangle_entry(FamilyId::R, n, k)) << line;
    ++rows;
  }
  // Row n holds k = 0..n-1.
  EXPECT_EQ(rows, 36);
}

TEST(Cli, Deterministic) {
  std::vector<std::vector<std::string>> cmds = {
      {"compute", "--family", "T", "--n", "9", "--format", "json"},
      {"table", "--family", "T", "--rows", "6"},
      {"verify", "--suite", "bona,qi_flag", "--format", "json"},
      {"det", "--variant", "f_ff_thm", "--n", "3", "--format", "json"},
  };
  for (const auto& c : cmds) {
    CliResult a = invoke(c), b = invoke(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}
