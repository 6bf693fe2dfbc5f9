#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "grammalc.hpp"
#include "grammalc/cli.hpp"

using namespace grammalc;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& text, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find(sep, start)) != std::string::npos; start = pos + sep.size()) {
    out.push_back(text.substr(start, pos - start));
  }
  out.push_back(text.substr(start));
  return out;
}

}  // namespace

TEST(Derive, TextOutput) {
  const CliRun r = run({"derive", "--grammar", "G", "--word", "A*S", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*A^3*S^3 + 4*A^4*S^3 + 3*A^5*S^3\n");

  EXPECT_EQ(run({"derive", "--grammar", "H", "--word", "x*w^-1", "--n", "1"}).out, "0\n");
  EXPECT_EQ(run({"derive", "--grammar", "H", "--word", "a", "--n", "0"}).out, "a\n");
}

TEST(Derive, JsonOutput) {
  const CliRun r = run({"derive", "--grammar", "H", "--word", "a", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["grammar"], "H");
  EXPECT_EQ(j["n"], 2);
  const LaurentPoly expected = builtin("H").parse("a*x^2*y^2 + a*x*y^2*w + a*x*y^3*w");
  EXPECT_EQ(builtin("H").parse(j["result"].get<std::string>()), expected);
  ASSERT_EQ(j["terms"].size(), 3u);
  LaurentPoly rebuilt(alphabets::ramanujan_shor());
  for (const auto& t : j["terms"]) {
    LaurentPoly term = LaurentPoly::constant(alphabets::ramanujan_shor(), Integer(t["coefficient"].get<std::string>()));
    for (const auto& [letter, e] : t["exponents"].items()) {
      term *= LaurentPoly::letter(alphabets::ramanujan_shor(), letter, e.get<int>());
    }
    rebuilt += term;
  }
  EXPECT_EQ(rebuilt, expected);
}

TEST(Derive, Errors) {
  EXPECT_EQ(run({"derive", "--grammar", "G", "--word", "A*+S", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"derive", "--grammar", "G", "--word", "A*x", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"derive", "--grammar", "K", "--word", "A", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"derive", "--grammar", "G", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"derive", "--grammar", "G", "--word", "A", "--n", "-1"}).code, 2);
}

TEST(Derive, GrammarFile) {
  const std::string file = std::string(GRAMMALC_TEST_DATA) + "/eulerian.grammar";
  const CliRun r = run({"derive", "--grammar-file", file, "--word", "x", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Grammar e = parse_grammar("x -> x*y\ny -> x*y\n");
  EXPECT_EQ(e.parse(lines(r.out).at(0)), e.parse("x*y^3 + 4*x^2*y^2 + x^3*y"));
  EXPECT_EQ(run({"derive", "--grammar-file", file + ".missing", "--word", "x", "--n", "1"}).code, 2);
}

TEST(Qtable, CsvRows) {
  const CliRun r = run({"qtable", "--nmax", "4", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1u + 1u + 2u + 3u + 4u);
  EXPECT_EQ(rows[0], "n,k,coefficients");
  EXPECT_EQ(rows[1], "1,0,[1]");
  EXPECT_EQ(rows[2], "2,0,[1,1]");
  EXPECT_EQ(rows[3], "2,1,[1]");
  EXPECT_EQ(rows[5], "3,1,[4,3]");
  EXPECT_EQ(rows[6], "3,2,[3]");
}

TEST(Qtable, RowFourSumsToCayleyAtOne) {
  const CliRun r = run({"qtable", "--nmax", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  Integer total = 0;
  for (const auto& row : j) {
    if (row["n"] != 4) continue;
    for (const auto& c : row["coefficients"]) total += Integer(c.get<std::string>());
  }
  EXPECT_EQ(total, 125);
}

TEST(Qtable, TextAndRangeErrors) {
  EXPECT_EQ(lines(run({"qtable", "--nmax", "3", "--format", "text"}).out).at(4), "Q_{3,1}(x) = 3*x + 4");
  EXPECT_EQ(run({"qtable", "--nmax", "0"}).code, 2);
  EXPECT_EQ(run({"qtable", "--nmax", "3", "--format", "xml"}).code, 2);
}

TEST(Trees, StatsHistogram) {
  const CliRun r = run({"trees", "--n", "3", "--stats"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[9], "# rows: 9");
  EXPECT_EQ(rows[10], "# k-histogram: 2,4,3");
  for (int i = 0; i < 9; ++i) EXPECT_NE(rows[static_cast<std::size_t>(i)].find(" k="), std::string::npos);
}

TEST(Trees, CountsAndCsv) {
  EXPECT_EQ(lines(run({"trees", "--n", "1"}).out).size(), 1u);
  EXPECT_EQ(lines(run({"trees", "--n", "4"}).out).size(), 64u);
  const auto csv = lines(run({"trees", "--n", "3", "--csv"}).out);
  ASSERT_EQ(csv.size(), 10u);
  EXPECT_EQ(csv[0], "n,root,parents,k,deg1");
  for (std::size_t i = 1; i < csv.size(); ++i) EXPECT_EQ(csv[i].substr(0, 2), "3,");
}

TEST(Trees, WeightSchemes) {
  const auto g = lines(run({"trees", "--n", "2", "--scheme", "G", "--csv"}).out);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], "n,root,parents,k,deg1,weight");
  // Rooted-at-1 schemes only list trees rooted at 1; Fr multiplies rows by colourings.
  EXPECT_EQ(lines(run({"trees", "--n", "4", "--scheme", "H"}).out).size(), 16u);
  EXPECT_GT(lines(run({"trees", "--n", "3", "--scheme", "Fr", "--r", "1"}).out).size(), 3u);
}

TEST(Trees, LimitsAndUsage) {
  EXPECT_EQ(run({"trees", "--n", "9"}).code, 2);
  EXPECT_EQ(run({"trees", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"trees", "--n", "3", "--r", "2"}).code, 2);
  EXPECT_EQ(run({"trees"}).code, 2);
}

TEST(Verify, SuitesPass) {
  const std::vector<std::pair<std::string, std::string>> runs{{"rowsums", "6"}, {"abel", "6"}, {"lacasse", "30"}};
  for (const auto& [suite, nmax] : runs) {
    const CliRun r = run({"verify", "--suite", suite, "--nmax", nmax});
    EXPECT_EQ(r.code, 0) << suite << "\n" << r.out;
    EXPECT_NE(r.out.find(suite + ": "), std::string::npos);
  }
  const CliRun all = run({"verify", "--suite", "all", "--nmax", "5", "--rmax", "2", "--N", "5"});
  EXPECT_EQ(all.code, 0) << all.out;
  EXPECT_EQ(lines(all.out).size(), 1u);
}

TEST(Verify, VerboseListsEveryCheck) {
  const CliRun r = run({"verify", "--suite", "rowsums", "--nmax", "3", "--verbose"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS q_row_sum(n=3)"), std::string::npos);
  EXPECT_NE(r.out.find("  lhs: "), std::string::npos);
}

TEST(Verify, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
  EXPECT_EQ(run({"verify", "--nmax", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "egf", "--N", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--bogus"}).code, 2);
}

TEST(Verify, Deterministic) {
  const std::vector<std::string> args{"verify", "--suite", "all", "--nmax", "4", "--format", "json", "--verbose"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> trees{"trees", "--n", "5", "--stats"};
  EXPECT_EQ(run(trees).out, run(trees).out);
}

TEST(Verify, JsonSidesReparse) {
  const CliRun r = run({"verify", "--suite", "all", "--nmax", "4", "--format", "json", "--verbose"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_EQ(j["total"], j["checks"].size());
  std::size_t parsed = 0;
  for (const auto& c : j["checks"]) {
    EXPECT_EQ(c["status"], "pass");
    for (const char* side : {"lhs", "rhs"}) {
      const std::string text = c[side].get<std::string>();
      if (text.empty() || text == "(rational)") continue;
      for (const auto& part : split(text, "; ")) {
        const auto letters = scan_letters(part);
        const AlphabetPtr alpha = letters.empty() ? make_alphabet({"x"}) : make_alphabet(letters);
        const LaurentPoly p = parse_expr(part, alpha);
        EXPECT_EQ(parse_expr(canonical_text(p), alpha), p) << c["check"];
        ++parsed;
      }
    }
  }
  EXPECT_GT(parsed, 100u);
}
