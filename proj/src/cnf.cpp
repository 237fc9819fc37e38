#include "irred/cnf.hpp"

#include <algorithm>
#include <set>

#include "irred/errors.hpp"

namespace irred {

Lit Lit::from_dimacs(int value) {
  if (value == 0) throw PreconditionError("literal 0 is not a variable");
  return value > 0 ? pos(Var{static_cast<std::uint32_t>(value)})
                   : neg(Var{static_cast<std::uint32_t>(-static_cast<long long>(value))});
}

Clause Clause::make(std::vector<Lit> literals) {
  for (const Lit& l : literals) {
    if (l.var().index == 0) throw PreconditionError("variable index must be >= 1");
  }
  std::sort(literals.begin(), literals.end());
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  for (std::size_t i = 1; i < literals.size(); ++i) {
    if (literals[i - 1].var() == literals[i].var()) {
      throw TautologyError("clause contains both " + std::to_string(literals[i - 1].to_dimacs()) +
                           " and " + std::to_string(literals[i].to_dimacs()));
    }
  }
  return Clause(std::move(literals));
}

Clause Clause::of(std::initializer_list<int> dimacs) {
  std::vector<Lit> lits;
  lits.reserve(dimacs.size());
  for (int v : dimacs) lits.push_back(Lit::from_dimacs(v));
  return make(std::move(lits));
}

bool Clause::contains(Lit l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

std::string Clause::to_string() const {
  if (lits_.empty()) return "()";
  std::string out;
  for (const Lit& l : lits_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.to_dimacs());
  }
  return out;
}

Formula::Formula(std::vector<Clause> clauses, std::uint32_t universe) : universe_(universe) {
  std::set<Clause> seen;
  clauses_.reserve(clauses.size());
  for (Clause& c : clauses) {
    if (!seen.insert(c).second) {
      ++duplicates_;
      continue;
    }
    universe_ = std::max(universe_, c.max_var().index);
    clauses_.push_back(std::move(c));
  }
}

Formula Formula::of(std::initializer_list<std::initializer_list<int>> dimacs,
                    std::uint32_t universe) {
  std::vector<Clause> clauses;
  for (const auto& c : dimacs) clauses.push_back(Clause::of(c));
  return Formula(std::move(clauses), universe);
}

const Clause& Formula::clause(ClauseId id) const {
  if (id >= clauses_.size()) {
    throw UnknownClauseId("clause id " + std::to_string(id) + " out of range (formula has " +
                          std::to_string(clauses_.size()) + " clauses)");
  }
  return clauses_[id];
}

std::optional<ClauseId> Formula::find(const Clause& c) const {
  auto it = std::find(clauses_.begin(), clauses_.end(), c);
  if (it == clauses_.end()) return std::nullopt;
  return static_cast<ClauseId>(it - clauses_.begin());
}

Formula Formula::without(ClauseId id) const {
  clause(id);
  std::vector<Clause> rest;
  rest.reserve(clauses_.size() - 1);
  for (ClauseId i = 0; i < clauses_.size(); ++i) {
    if (i != id) rest.push_back(clauses_[i]);
  }
  return Formula(std::move(rest), universe_);
}

Formula Formula::select(std::span<const ClauseId> ids) const {
  std::vector<Clause> picked;
  picked.reserve(ids.size());
  for (ClauseId id : ids) picked.push_back(clause(id));
  return Formula(std::move(picked), universe_);
}

Formula Formula::with_universe(std::uint32_t universe) const {
  Formula f = *this;
  f.universe_ = std::max(universe_, universe);
  return f;
}

std::vector<Var> Formula::vars() const {
  std::vector<bool> seen(universe_ + 1, false);
  for (const Clause& c : clauses_) {
    for (const Lit& l : c.literals()) seen[l.var().index] = true;
  }
  std::vector<Var> out;
  for (std::uint32_t v = 1; v <= universe_; ++v) {
    if (seen[v]) out.push_back(Var{v});
  }
  return out;
}

ClauseIdSet Formula::all_ids() const {
  ClauseIdSet ids(clauses_.size());
  for (ClauseId i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

Assignment Assignment::from_true(std::uint32_t universe, std::span<const Var> true_vars) {
  Assignment a(universe);
  for (Var v : true_vars) a.set(v, true);
  return a;
}

bool Assignment::value(Var v) const {
  if (v.index == 0 || v.index > values_.size()) {
    throw ScopeError("variable " + std::to_string(v.index) + " outside assignment universe " +
                     std::to_string(values_.size()));
  }
  return values_[v.index - 1];
}

void Assignment::set(Var v, bool value) {
  if (v.index == 0 || v.index > values_.size()) {
    throw ScopeError("variable " + std::to_string(v.index) + " outside assignment universe " +
                     std::to_string(values_.size()));
  }
  values_[v.index - 1] = value;
}

bool Assignment::satisfies(const Clause& c) const {
  return std::any_of(c.literals().begin(), c.literals().end(),
                     [this](const Lit& l) { return value(l); });
}

bool Assignment::satisfies(const Formula& f) const {
  return std::all_of(f.clauses().begin(), f.clauses().end(),
                     [this](const Clause& c) { return satisfies(c); });
}

std::vector<int> Assignment::to_dimacs() const {
  std::vector<int> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    int v = static_cast<int>(i + 1);
    out.push_back(values_[i] ? v : -v);
  }
  return out;
}

PartialAssignment::PartialAssignment(std::vector<std::pair<Var, bool>> values) {
  lits_.reserve(values.size());
  for (const auto& [v, b] : values) {
    if (v.index == 0) throw PreconditionError("variable index must be >= 1");
    lits_.emplace_back(v, b);
  }
  std::sort(lits_.begin(), lits_.end());
  for (std::size_t i = 1; i < lits_.size(); ++i) {
    if (lits_[i - 1].var() == lits_[i].var()) {
      throw PreconditionError("variable " + std::to_string(lits_[i].var().index) +
                              " assigned twice");
    }
  }
}

std::vector<Var> PartialAssignment::scope() const {
  std::vector<Var> out;
  out.reserve(lits_.size());
  for (const Lit& l : lits_) out.push_back(l.var());
  return out;
}

std::optional<bool> PartialAssignment::value(Var v) const {
  for (const Lit& l : lits_) {
    if (l.var() == v) return l.positive();
  }
  return std::nullopt;
}

}  // namespace irred
