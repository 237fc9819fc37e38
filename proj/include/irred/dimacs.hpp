#ifndef IRRED_DIMACS_HPP
#define IRRED_DIMACS_HPP

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "irred/cnf.hpp"

namespace irred {

struct ParsedDimacs {
  Formula formula;
  // 1-based source line on which each surviving clause started, by ClauseId.
  std::vector<std::size_t> clause_lines;
  std::vector<std::string> warnings;
};

// Reads DIMACS CNF.  Throws ParseError on malformed input and TautologyError
// (carrying the line number) on a clause with a complementary pair.
ParsedDimacs parse_dimacs(std::string_view text);
ParsedDimacs parse_dimacs(std::istream& in);

// "p cnf <universe> <clauses>" followed by one zero-terminated line per clause.
std::string write_dimacs(const Formula& f);

}  // namespace irred

#endif  // IRRED_DIMACS_HPP
