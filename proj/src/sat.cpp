#include "irred/sat.hpp"

#include <algorithm>
#include <cassert>

#include "irred/errors.hpp"

namespace irred {

Solver::Solver(std::uint32_t num_vars) { ensure_vars(num_vars); }

void Solver::ensure_vars(std::uint32_t n) {
  if (n <= num_vars_) return;
  num_vars_ = n;
  assigns_.resize(n, -1);
  watches_.resize(2 * static_cast<std::size_t>(n));
}

void Solver::add_clause(std::span<const Lit> lits) {
  assert(!used_);
  std::vector<Lit> sorted(lits.begin(), lits.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1].var() == sorted[i].var()) return;  // tautology
  }
  if (sorted.empty()) {
    has_empty_ = true;
    return;
  }
  ensure_vars(sorted.back().var().index);
  if (sorted.size() == 1) {
    units_.push_back(code(sorted[0]));
    return;
  }
  std::vector<Code> codes;
  codes.reserve(sorted.size());
  for (const Lit& l : sorted) codes.push_back(code(l));
  auto idx = static_cast<std::uint32_t>(clauses_.size());
  watches_[codes[0]].push_back(idx);
  watches_[codes[1]].push_back(idx);
  clauses_.push_back(std::move(codes));
}

void Solver::add_formula(const Formula& f) {
  ensure_vars(f.universe());
  for (const Clause& c : f.clauses()) add_clause(c);
}

void Solver::assign(Code c) {
  assigns_[c >> 1] = static_cast<int>(c & 1);
  trail_.push_back(c);
}

void Solver::undo_to(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    assigns_[trail_.back() >> 1] = -1;
    trail_.pop_back();
  }
  qhead_ = std::min(qhead_, trail_size);
}

// Watches are indexed by the literal whose falsification triggers a visit.
bool Solver::propagate() {
  while (qhead_ < trail_.size()) {
    Code false_lit = trail_[qhead_++] ^ 1;
    auto& ws = watches_[false_lit];
    std::size_t i = 0, j = 0;
    bool conflict = false;
    while (i < ws.size()) {
      std::uint32_t ci = ws[i++];
      auto& c = clauses_[ci];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = ci;
      if (value(c[0]) == 0) {
        conflict = true;
        while (i < ws.size()) ws[j++] = ws[i++];
        break;
      }
      assign(c[0]);
    }
    ws.resize(j);
    if (conflict) return false;
  }
  return true;
}

SatResult Solver::solve() {
  assert(!used_);
  used_ = true;
  if (has_empty_) return {};
  for (Code u : units_) {
    int v = value(u);
    if (v == 0) return {};
    if (v < 0) assign(u);
  }
  if (!propagate()) return {};

  std::uint32_t next = 0;
  for (;;) {
    while (next < num_vars_ && assigns_[next] >= 0) ++next;
    if (next == num_vars_) break;
    levels_.push_back({trail_.size(), 2 * next, false});
    assign(2 * next);
    while (!propagate()) {
      while (!levels_.empty() && levels_.back().flipped) {
        undo_to(levels_.back().trail_start);
        levels_.pop_back();
      }
      if (levels_.empty()) return {};
      Level& top = levels_.back();
      undo_to(top.trail_start);
      top.decision ^= 1;
      top.flipped = true;
      assign(top.decision);
    }
    // Backtracking may have released variables below `next`.
    next = 0;
  }

  Assignment model(num_vars_);
  for (std::uint32_t v = 0; v < num_vars_; ++v) model.set(Var{v + 1}, assigns_[v] == 1);
  return {SatStatus::Sat, std::move(model)};
}

SatResult solve(const Formula& f) {
  Solver s(f.universe());
  s.add_formula(f);
  return s.solve();
}

bool entails(const Formula& pi, const Clause& gamma) {
  Solver s(pi.universe());
  s.add_formula(pi);
  for (const Lit& l : gamma.literals()) s.add_unit(~l);
  return !s.solve().sat();
}

bool equivalent(const Formula& p1, const Formula& p2) {
  for (const Clause& c : p2.clauses()) {
    if (!entails(p1, c)) return false;
  }
  for (const Clause& c : p1.clauses()) {
    if (!entails(p2, c)) return false;
  }
  return true;
}

std::vector<Assignment> enumerate_models(const Formula& f, std::span<const Var> universe,
                                         std::size_t cap) {
  if (universe.size() > cap) {
    throw CapExceeded("model enumeration over " + std::to_string(universe.size()) +
                      " variables exceeds cap " + std::to_string(cap));
  }
  std::uint32_t width = 0;
  for (Var v : universe) {
    if (v.index == 0) throw ScopeError("variable index must be >= 1");
    width = std::max(width, v.index);
  }
  for (Var v : f.vars()) {
    if (std::find(universe.begin(), universe.end(), v) == universe.end()) {
      throw ScopeError("formula mentions variable " + std::to_string(v.index) +
                       " outside the enumeration universe");
    }
  }
  std::vector<Assignment> models;
  const std::size_t n = universe.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Assignment a(width);
    for (std::size_t i = 0; i < n; ++i) {
      a.set(universe[i], (bits >> (n - 1 - i)) & 1);
    }
    if (a.satisfies(f)) models.push_back(std::move(a));
  }
  return models;
}

bool eval_exists_forall(const QbfInstance& q, std::size_t cap) {
  if (q.existentials.size() > cap) {
    throw CapExceeded("exists-forall evaluation over " + std::to_string(q.existentials.size()) +
                      " existential variables exceeds cap " + std::to_string(cap));
  }
  for (Var x : q.existentials) {
    if (std::find(q.universals.begin(), q.universals.end(), x) != q.universals.end()) {
      throw PreconditionError("variable " + std::to_string(x.index) +
                              " is both existential and universal");
    }
  }
  for (Var v : q.matrix.vars()) {
    bool known = std::find(q.existentials.begin(), q.existentials.end(), v) != q.existentials.end() ||
                 std::find(q.universals.begin(), q.universals.end(), v) != q.universals.end();
    if (!known) {
      throw PreconditionError("matrix variable " + std::to_string(v.index) +
                              " is neither existential nor universal");
    }
  }
  const std::size_t n = q.existentials.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Solver s(q.matrix.universe());
    s.add_formula(q.matrix);
    for (std::size_t i = 0; i < n; ++i) {
      bool value = (bits >> (n - 1 - i)) & 1;
      s.add_unit(Lit(q.existentials[i], value));
    }
    if (!s.solve().sat()) return true;
  }
  return false;
}

}  // namespace irred
