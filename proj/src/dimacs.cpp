#include "irred/dimacs.hpp"

#include <charconv>
#include <iterator>
#include <map>
#include <optional>

#include "irred/errors.hpp"

namespace irred {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::optional<long long> to_integer(std::string_view word) {
  long long value = 0;
  const char* first = word.data();
  const char* last = word.data() + word.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

ParsedDimacs parse_dimacs(std::string_view text) {
  std::optional<std::uint32_t> declared_vars;
  long long declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<std::size_t> lines;
  std::vector<Lit> pending;
  std::size_t pending_line = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0][0] == 'c') continue;
    if (words[0] == "p") {
      if (declared_vars) throw ParseError("duplicate problem line", line_no);
      if (words.size() != 4 || words[1] != "cnf") {
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'", line_no);
      }
      auto n = to_integer(words[2]);
      auto m = to_integer(words[3]);
      if (!n || !m || *n < 0 || *m < 0 || *n > 0x7fffffff) {
        throw ParseError("malformed header counts", line_no);
      }
      declared_vars = static_cast<std::uint32_t>(*n);
      declared_clauses = *m;
      continue;
    }
    if (!declared_vars) throw ParseError("clause data before 'p cnf' header", line_no);

    for (std::string_view word : words) {
      auto value = to_integer(word);
      if (!value) throw ParseError("not an integer: '" + std::string(word) + "'", line_no);
      if (*value == 0) {
        try {
          clauses.push_back(Clause::make(std::move(pending)));
        } catch (const TautologyError& e) {
          throw TautologyError(e.what(), pending_line ? pending_line : line_no);
        }
        lines.push_back(pending_line ? pending_line : line_no);
        pending.clear();
        pending_line = 0;
        continue;
      }
      long long magnitude = *value < 0 ? -*value : *value;
      if (magnitude > *declared_vars) {
        throw ParseError("literal " + std::string(word) + " exceeds declared variable count " +
                             std::to_string(*declared_vars),
                         line_no);
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(Lit::from_dimacs(static_cast<int>(*value)));
    }
  }
  if (!pending.empty()) throw ParseError("last clause is missing its 0 terminator", pending_line);
  if (!declared_vars) throw ParseError("missing 'p cnf' header", line_no == 0 ? 1 : line_no);

  ParsedDimacs out;
  if (static_cast<long long>(clauses.size()) != declared_clauses) {
    out.warnings.push_back("header declares " + std::to_string(declared_clauses) +
                           " clauses, found " + std::to_string(clauses.size()));
  }
  // Keep the line of the first occurrence of every clause.
  std::map<Clause, std::size_t> first_line;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    auto [it, inserted] = first_line.emplace(clauses[i], lines[i]);
    if (!inserted) {
      out.warnings.push_back("line " + std::to_string(lines[i]) + ": duplicate of clause on line " +
                             std::to_string(it->second) + " dropped");
    }
  }
  out.formula = Formula(std::move(clauses), *declared_vars);
  out.clause_lines.reserve(out.formula.size());
  for (const Clause& c : out.formula.clauses()) out.clause_lines.push_back(first_line.at(c));
  return out;
}

ParsedDimacs parse_dimacs(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_dimacs(text);
}

std::string write_dimacs(const Formula& f) {
  std::string out = "p cnf " + std::to_string(f.universe()) + " " + std::to_string(f.size()) + "\n";
  for (const Clause& c : f.clauses()) {
    for (const Lit& l : c.literals()) {
      out += std::to_string(l.to_dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

}  // namespace irred
