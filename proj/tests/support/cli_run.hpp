#ifndef IRRED_TESTS_CLI_RUN_HPP
#define IRRED_TESTS_CLI_RUN_HPP

#include <sstream>
#include <string>
#include <vector>

#include "irred/cli.hpp"
#include "json.hpp"

namespace irred::testing {

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;

  nlohmann::json report() const { return nlohmann::json::parse(out); }
  // The JSON report with the timing field removed.
  std::string stable() const {
    auto j = report();
    j.erase("timing");
    return j.dump();
  }
};

inline CliResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  CliResult r;
  r.status = irred::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline std::string corpus(const std::string& name) { return std::string(IRRED_CORPUS_DIR) + "/" + name; }

// Regression corpus and the commands run over each file.
inline std::vector<std::string> corpus_files() {
  return {"two_ies.cnf", "triple.cnf", "seven.cnf",  "four.cnf",  "not_a.cnf",
          "subsumed.cnf", "unsat.cnf",  "empty.cnf",  "or_not.cnf", "xy.cnf",
          "exp2.cnf",     "exp3.cnf",   "condset_unsat.cnf", "useful_xy.cnf"};
}

inline std::vector<std::vector<std::string>> corpus_commands(const std::string& file) {
  std::string f = corpus(file);
  std::string v = file == "empty.cnf" ? "" : "1";
  return {
      {"check", f, "--json", "--witness"},
      {"classify", f, "--json", "--witness"},
      {"ies", f, "--json"},
      {"ies", f, "--json", "--all"},
      {"unique", f, "--json"},
      {"minsize", f, "--json"},
      {"varred", f, "--json", "--vars", v, "--forget"},
      {"condred", f, "--json", "--witness"},
      {"revise", f, "--json", "--with", corpus("not_a.cnf")},
  };
}

}  // namespace irred::testing

#endif  // IRRED_TESTS_CLI_RUN_HPP
