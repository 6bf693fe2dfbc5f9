#pragma once

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grammalc/abel.hpp"
#include "grammalc/error.hpp"
#include "grammalc/grammar.hpp"
#include "grammalc/identities.hpp"
#include "grammalc/qtable.hpp"
#include "grammalc/report.hpp"
#include "grammalc/tree.hpp"
#include "grammalc/tree_weight.hpp"

namespace grammalc {

namespace cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::string grammar = "G";
  std::string grammar_file;
  std::string word;
  std::string scheme;
  std::string suite = "all";
  std::string format;
  int n = 0;
  int r = 0;
  int nmax = 6;
  int rmax = 2;
  int order = 6;
  bool stats = false;
  bool csv = false;
  bool verbose = false;
};

inline Grammar load_grammar(const RunConfig& cfg) {
  if (!cfg.grammar_file.empty()) {
    std::ifstream in(cfg.grammar_file);
    if (!in) throw Error("cannot read grammar file '" + cfg.grammar_file + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_grammar(text, cfg.grammar_file);
  }
  return builtin(cfg.grammar);
}

inline nlohmann::ordered_json terms_json(const LaurentPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  const Alphabet& alpha = p.alphabet();
  for (const auto& [m, c] : p.sorted_terms()) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (m[i] != 0) exps[alpha.name(i)] = m[i];
    }
    terms.push_back({{"coefficient", to_string(c)}, {"exponents", std::move(exps)}});
  }
  return terms;
}

inline int cmd_derive(const RunConfig& cfg, std::ostream& out) {
  const Grammar g = load_grammar(cfg);
  const LaurentPoly result = derive_n(g, g.parse(cfg.word), static_cast<unsigned>(cfg.n));
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["grammar"] = cfg.grammar_file.empty() ? cfg.grammar : cfg.grammar_file;
    j["word"] = cfg.word;
    j["n"] = cfg.n;
    j["result"] = canonical_text(result);
    j["terms"] = terms_json(result);
    out << j.dump(2) << "\n";
  } else {
    out << canonical_text(result) << "\n";
  }
  return kPass;
}

inline int cmd_qtable(const RunConfig& cfg, std::ostream& out) {
  const QTable q = q_table(cfg.nmax);
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (format == "csv") out << "n,k,coefficients\n";
  for (int n = 1; n <= cfg.nmax; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const UniPoly& p = q.at(n, k);
      const auto coeffs = p.ascending(n - k);
      if (format == "csv") {
        out << n << "," << k << ",[";
        for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? "," : "") << coeffs[i];
        out << "]\n";
      } else if (format == "json") {
        nlohmann::ordered_json c = nlohmann::ordered_json::array();
        for (const auto& v : coeffs) c.push_back(to_string(v));
        rows.push_back({{"n", n}, {"k", k}, {"coefficients", std::move(c)}});
      } else {
        out << "Q_{" << n << "," << k << "}(x) = " << to_text(p) << "\n";
      }
    }
  }
  if (format == "json") out << rows.dump(2) << "\n";
  return kPass;
}

inline int cmd_trees(const RunConfig& cfg, std::ostream& out) {
  require_desk_limit(cfg.n);
  std::optional<WeightScheme> scheme;
  if (!cfg.scheme.empty()) scheme = scheme_from_name(cfg.scheme);
  const bool colored = scheme && (*scheme == WeightScheme::Fr || *scheme == WeightScheme::Rr);
  const bool rooted_at_1 = scheme && *scheme != WeightScheme::G && *scheme != WeightScheme::Rr;
  const AlphabetPtr alpha = scheme ? scheme_alphabet(*scheme) : alphabets::dumont();

  if (cfg.csv) out << "n,root,parents,k,deg1" << (scheme ? ",weight" : "") << "\n";
  std::vector<long long> histogram(static_cast<std::size_t>(cfg.n), 0);
  long long rows = 0;
  auto emit = [&](const RootedTree& t, const TreeStats& s, const std::optional<Monomial>& m) {
    ++rows;
    if (cfg.csv) {
      out << csv_row(t, s);
      if (m) out << "," << canonical_text(LaurentPoly::term(alpha, *m));
      out << "\n";
      return;
    }
    out << "root=" << t.root() << " parents=";
    bool first = true;
    for (int p : t.parents()) {
      out << (first ? "" : ";") << p;
      first = false;
    }
    if (cfg.stats) out << " k=" << s.k << " deg1=" << s.deg1;
    if (m) out << " weight=" << canonical_text(LaurentPoly::term(alpha, *m));
    out << "\n";
  };
  for_each_rooted(cfg.n, rooted_at_1, [&](const RootedTree& t) {
    const TreeStats s = stats(t);
    histogram[static_cast<std::size_t>(s.k)] += 1;
    if (colored) {
      for_each_coloring(t, cfg.r, [&](const ColoredTree& ct) { emit(t, s, weight(ct, *scheme, cfg.r)); });
    } else if (scheme) {
      emit(t, s, weight(t, *scheme));
    } else {
      emit(t, s, std::nullopt);
    }
  });
  if (cfg.stats && !cfg.csv) {
    out << "# rows: " << rows << "\n# k-histogram:";
    for (std::size_t k = 0; k < histogram.size(); ++k) out << (k ? "," : " ") << histogram[k];
    out << "\n";
  }
  return kPass;
}

inline CheckReports run_suite(const std::string& suite, const RunConfig& cfg) {
  CheckReports reports;
  const bool all = suite == "all";
  if (all || suite == "recurrences") append(reports, verify_recurrences(std::max(cfg.nmax, 2)));
  if (all || suite == "rowsums") append(reports, verify_row_sums(cfg.nmax));
  if (all || suite == "equivalence") {
    append(reports, verify_grammar_tree_equivalence(std::min(cfg.nmax, 7), std::min(cfg.nmax, 5), cfg.rmax));
    append(reports, verify_tree_oracle(std::min(cfg.nmax, 6)));
  }
  if (all || suite == "evaluations") append(reports, verify_evaluations(cfg.nmax, cfg.rmax));
  if (all || suite == "abel") append(reports, verify_abel(cfg.nmax));
  if (all || suite == "egf") append(reports, verify_egf_identities(cfg.order));
  if (all || suite == "lacasse") append(reports, verify_lacasse(cfg.nmax));
  if (all || suite == "series") append(reports, verify_series(cfg.rmax, cfg.order));
  return reports;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const CheckReports reports = run_suite(cfg.suite, cfg);
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.passed; });
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["suite"] = cfg.suite;
    j["total"] = reports.size();
    j["failed"] = failed;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : reports) checks.push_back(to_json(r, cfg.verbose));
    j["checks"] = std::move(checks);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      if (!r.passed || cfg.verbose) out << to_text_line(r, cfg.verbose) << "\n";
    }
    out << cfg.suite << ": " << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size()
        << " checks passed\n";
  }
  return failed == 0 ? kPass : kFail;
}

}  // namespace cli

/// Entry point shared by the executable and the tests. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli;
  RunConfig cfg;
  CLI::App app{"Exact grammar calculus for the Ramanujan-Shor polynomials", "grammalc"};
  app.require_subcommand(1);

  auto* derive = app.add_subcommand("derive", "print D^n(word) for a grammar");
  derive->add_option("--grammar", cfg.grammar, "builtin grammar")->check(CLI::IsMember({"G", "H", "Hprime", "H'"}));
  derive->add_option("--grammar-file", cfg.grammar_file, "grammar DSL file");
  derive->add_option("--word", cfg.word, "expression to differentiate")->required();
  derive->add_option("--n", cfg.n, "number of derivatives")->check(CLI::NonNegativeNumber);
  derive->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* qtable = app.add_subcommand("qtable", "tabulate Q_{n,k}(x)");
  qtable->add_option("--nmax", cfg.nmax, "largest n")->check(CLI::Range(1, 40));
  qtable->add_option("--format", cfg.format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));

  auto* trees = app.add_subcommand("trees", "enumerate rooted trees on [n]");
  trees->add_option("--n", cfg.n, "vertex count")->required()->check(CLI::PositiveNumber);
  trees->add_flag("--stats", cfg.stats, "print k and deg1 with a k-histogram");
  trees->add_option("--scheme", cfg.scheme, "weight scheme")->check(CLI::IsMember({"G", "H", "Fr", "Rr"}));
  trees->add_option("--r", cfg.r, "number of white colours for Fr/Rr")->check(CLI::NonNegativeNumber);
  trees->add_flag("--csv", cfg.csv, "CSV rows n,root,parents,k,deg1");

  auto* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("--suite", cfg.suite, "suite selector")
      ->check(CLI::IsMember({"recurrences", "rowsums", "equivalence", "evaluations", "abel", "egf", "lacasse",
                             "series", "all"}));
  verify->add_option("--nmax", cfg.nmax, "largest n")->check(CLI::Range(1, 60));
  verify->add_option("--rmax", cfg.rmax, "largest r")->check(CLI::Range(0, 10));
  verify->add_option("--N", cfg.order, "series truncation order")->check(CLI::Range(2, 30));
  verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--verbose", cfg.verbose, "show both sides of passing checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (derive->parsed()) return cmd_derive(cfg, out);
    if (qtable->parsed()) return cmd_qtable(cfg, out);
    if (trees->parsed()) {
      if (cfg.scheme.empty() && cfg.r != 0) throw Error("--r needs --scheme Fr or Rr");
      return cmd_trees(cfg, out);
    }
    if (cfg.suite == "egf" || cfg.suite == "all") {
      if (cfg.order < 2) throw Error("--N must be at least 2");
    }
    return cmd_verify(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace grammalc
