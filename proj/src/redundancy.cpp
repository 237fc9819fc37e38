#include "irred/redundancy.hpp"

#include <algorithm>
#include <set>

#include "irred/errors.hpp"
#include "irred/sat.hpp"

namespace irred {
namespace {

using Mask = std::vector<char>;

Mask full_mask(const Formula& pi) { return Mask(pi.size(), 1); }

Mask to_mask(const Formula& pi, std::span<const ClauseId> ids) {
  Mask m(pi.size(), 0);
  for (ClauseId id : ids) {
    pi.clause(id);
    m[id] = 1;
  }
  return m;
}

ClauseIdSet to_ids(const Mask& m) {
  ClauseIdSet ids;
  for (ClauseId i = 0; i < m.size(); ++i) {
    if (m[i]) ids.push_back(i);
  }
  return ids;
}

// Clauses selected by `m`, except `skip`, entail `target`.
bool mask_entails(const Formula& pi, const Mask& m, std::optional<ClauseId> skip,
                  const Clause& target) {
  Solver s(pi.universe());
  for (ClauseId i = 0; i < m.size(); ++i) {
    if (m[i] && i != skip) s.add_clause(pi[i]);
  }
  for (const Lit& l : target.literals()) s.add_unit(~l);
  return !s.solve().sat();
}

bool redundant_in(const Formula& pi, const Mask& m, ClauseId id) {
  return mask_entails(pi, m, id, pi[id]);
}

// The selected clauses entail every unselected one.
bool mask_equivalent(const Formula& pi, const Mask& m) {
  for (ClauseId i = 0; i < m.size(); ++i) {
    if (!m[i] && !mask_entails(pi, m, std::nullopt, pi[i])) return false;
  }
  return true;
}

bool mask_irredundant(const Formula& pi, const Mask& m) {
  for (ClauseId i = 0; i < m.size(); ++i) {
    if (m[i] && redundant_in(pi, m, i)) return false;
  }
  return true;
}

Mask greedy_mask(const Formula& pi, Mask cur, std::span<const ClauseId> order) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (ClauseId id : order) {
      if (cur[id] && redundant_in(pi, cur, id)) {
        cur[id] = 0;
        changed = true;
      }
    }
  }
  return cur;
}

class IesEnumerator {
 public:
  IesEnumerator(const Formula& pi, std::size_t cap) : pi_(pi), cap_(cap) {}

  IesReport run() {
    Mask s = full_mask(pi_);
    Mask forced(pi_.size(), 0);
    dfs(s, forced);
    IesReport r;
    r.ies_list.assign(found_.begin(), found_.end());
    r.truncated = truncated_;
    r.unique = !truncated_ && r.ies_list.size() == 1;
    return r;
  }

 private:
  // Invariant: s is equivalent to the input; forced clauses stay in s.
  void dfs(Mask& s, Mask& forced) {
    if (truncated_) return;
    std::optional<ClauseId> pick;
    for (ClauseId i = 0; i < s.size(); ++i) {
      if (s[i] && !forced[i] && redundant_in(pi_, s, i)) {
        pick = i;
        break;
      }
    }
    if (!pick) {
      for (ClauseId i = 0; i < s.size(); ++i) {
        if (s[i] && forced[i] && redundant_in(pi_, s, i)) return;
      }
      ClauseIdSet ies = to_ids(s);
      if (found_.count(ies)) return;
      if (found_.size() == cap_) {
        truncated_ = true;
        return;
      }
      found_.insert(std::move(ies));
      return;
    }
    s[*pick] = 0;
    dfs(s, forced);
    s[*pick] = 1;
    forced[*pick] = 1;
    dfs(s, forced);
    forced[*pick] = 0;
  }

  const Formula& pi_;
  std::size_t cap_;
  std::set<ClauseIdSet> found_;
  bool truncated_ = false;
};

// Exact bounded hitting set: extends `chosen` by at most `budget` elements so
// that every core is hit.
class HittingSetSearch {
 public:
  HittingSetSearch(const std::vector<ClauseIdSet>& cores, std::size_t n)
      : cores_(cores), chosen_(n, 0), excluded_(n, 0) {}

  std::optional<Mask> find(const Mask& base, std::size_t budget) {
    chosen_ = base;
    std::fill(excluded_.begin(), excluded_.end(), 0);
    if (search(budget)) return chosen_;
    return std::nullopt;
  }

 private:
  bool hit(const ClauseIdSet& core) const {
    return std::any_of(core.begin(), core.end(), [&](ClauseId i) { return chosen_[i]; });
  }

  bool search(std::size_t budget) {
    const ClauseIdSet* branch = nullptr;
    std::size_t best = 0;
    for (const ClauseIdSet& core : cores_) {
      if (hit(core)) continue;
      std::size_t open = 0;
      for (ClauseId i : core) open += excluded_[i] ? 0 : 1;
      if (open == 0) return false;
      if (!branch || open < best) {
        branch = &core;
        best = open;
      }
    }
    if (!branch) return true;
    if (budget == 0) return false;
    if (budget < disjoint_lower_bound()) return false;
    std::vector<ClauseId> tried;
    bool ok = false;
    for (ClauseId i : *branch) {
      if (excluded_[i]) continue;
      chosen_[i] = 1;
      ok = search(budget - 1);
      if (ok) break;
      chosen_[i] = 0;
      excluded_[i] = 1;
      tried.push_back(i);
    }
    for (ClauseId i : tried) excluded_[i] = 0;
    return ok;
  }

  // Greedy packing of pairwise disjoint unhit cores.
  std::size_t disjoint_lower_bound() const {
    Mask used(chosen_.size(), 0);
    std::size_t count = 0;
    for (const ClauseIdSet& core : cores_) {
      if (hit(core)) continue;
      bool disjoint = std::none_of(core.begin(), core.end(), [&](ClauseId i) { return used[i]; });
      if (!disjoint) continue;
      for (ClauseId i : core) used[i] = 1;
      ++count;
    }
    return count;
  }

  const std::vector<ClauseIdSet>& cores_;
  Mask chosen_;
  Mask excluded_;
};

// A model of the selected clauses that falsifies `target`, grown so that it
// satisfies as many further clauses as possible.  Returns the ids of the
// clauses it falsifies; every equivalent subset must contain one of them.
ClauseIdSet falsified_core(const Formula& pi, const Mask& selected, const Clause& target,
                           const Assignment& first) {
  Assignment model = first;
  Mask keep = selected;
  for (ClauseId i = 0; i < pi.size(); ++i) {
    if (model.satisfies(pi[i])) keep[i] = 1;
  }
  for (ClauseId i = 0; i < pi.size(); ++i) {
    if (keep[i] || pi[i] == target) continue;
    Solver s(pi.universe());
    for (ClauseId j = 0; j < pi.size(); ++j) {
      if (keep[j] || j == i) s.add_clause(pi[j]);
    }
    for (const Lit& l : target.literals()) s.add_unit(~l);
    SatResult r = s.solve();
    if (!r.sat()) continue;
    model = *r.model;
    for (ClauseId j = 0; j < pi.size(); ++j) {
      if (model.satisfies(pi[j])) keep[j] = 1;
    }
  }
  ClauseIdSet core;
  for (ClauseId i = 0; i < pi.size(); ++i) {
    if (!model.satisfies(pi[i])) core.push_back(i);
  }
  return core;
}

// Search for an equivalent subset containing `target`, in which `target` is
// irredundant.  Same keep/remove branching as the IES enumeration, restricted
// to clauses other than `target`.
class UsefulSearch {
 public:
  UsefulSearch(const Formula& pi, ClauseId target) : pi_(pi), target_(target) {}

  std::optional<ClauseIdSet> run() {
    Mask s = full_mask(pi_);
    Mask forced(pi_.size(), 0);
    forced[target_] = 1;
    return dfs(s, forced);
  }

 private:
  std::optional<ClauseIdSet> dfs(Mask& s, Mask& forced) {
    if (!visited_.insert({s, forced}).second) return std::nullopt;
    if (!redundant_in(pi_, s, target_)) {
      // Any IES of s keeps target: no subset of s without it entails it.
      auto order = pi_.all_ids();
      return to_ids(greedy_mask(pi_, s, order));
    }
    std::optional<ClauseId> pick;
    for (ClauseId i = 0; i < s.size(); ++i) {
      if (s[i] && !forced[i] && redundant_in(pi_, s, i)) {
        pick = i;
        break;
      }
    }
    if (!pick) return std::nullopt;
    s[*pick] = 0;
    auto r = dfs(s, forced);
    s[*pick] = 1;
    if (r) return r;
    forced[*pick] = 1;
    r = dfs(s, forced);
    forced[*pick] = 0;
    return r;
  }

  const Formula& pi_;
  ClauseId target_;
  std::set<std::pair<Mask, Mask>> visited_;
};

}  // namespace

const char* to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Necessary:
      return "necessary";
    case ClauseStatus::UsefulNotNecessary:
      return "useful";
    case ClauseStatus::Useless:
      return "useless";
  }
  return "?";
}

bool subset_entails(const Formula& pi, std::span<const ClauseId> ids, const Clause& target) {
  return mask_entails(pi, to_mask(pi, ids), std::nullopt, target);
}

bool subset_equivalent(const Formula& pi, std::span<const ClauseId> ids) {
  return mask_equivalent(pi, to_mask(pi, ids));
}

bool is_clause_redundant(const Formula& pi, ClauseId id) {
  pi.clause(id);
  return redundant_in(pi, full_mask(pi), id);
}

bool is_formula_redundant(const Formula& pi) {
  Mask all = full_mask(pi);
  for (ClauseId i = 0; i < pi.size(); ++i) {
    if (redundant_in(pi, all, i)) return true;
  }
  return false;
}

bool is_clause_necessary(const Formula& pi, ClauseId id) { return !is_clause_redundant(pi, id); }

ClauseIdSet necessary_clauses(const Formula& pi) {
  ClauseIdSet out;
  Mask all = full_mask(pi);
  for (ClauseId i = 0; i < pi.size(); ++i) {
    if (!redundant_in(pi, all, i)) out.push_back(i);
  }
  return out;
}

ClauseIdSet greedy_ies(const Formula& pi, std::optional<std::span<const ClauseId>> order) {
  ClauseIdSet ids = pi.all_ids();
  if (order) {
    ClauseIdSet sorted(order->begin(), order->end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ids) throw PreconditionError("greedy order is not a permutation of the clause ids");
    ids.assign(order->begin(), order->end());
  }
  return to_ids(greedy_mask(pi, full_mask(pi), ids));
}

bool is_ies(const Formula& candidate, const Formula& pi) {
  ClauseIdSet ids;
  for (const Clause& c : candidate.clauses()) {
    auto id = pi.find(c);
    if (!id) return false;
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  return is_ies(pi, ids);
}

bool is_ies(const Formula& pi, std::span<const ClauseId> ids) {
  Mask m = to_mask(pi, ids);
  return mask_equivalent(pi, m) && mask_irredundant(pi, m);
}

IesReport enumerate_ies(const Formula& pi, std::size_t cap) { return IesEnumerator(pi, cap).run(); }

std::optional<MinimumSubset> minimum_equivalent_subset(const Formula& pi,
                                                       std::optional<std::size_t> limit) {
  const ClauseIdSet necessary = necessary_clauses(pi);
  const Mask base = to_mask(pi, necessary);
  std::size_t k = necessary.size();
  std::vector<ClauseIdSet> cores;
  HittingSetSearch search(cores, pi.size());
  for (;;) {
    if (limit && k > *limit) return std::nullopt;
    auto candidate = search.find(base, k - necessary.size());
    if (!candidate) {
      ++k;
      continue;
    }
    std::optional<ClauseIdSet> core;
    for (ClauseId i = 0; i < pi.size() && !core; ++i) {
      if ((*candidate)[i]) continue;
      Solver s(pi.universe());
      for (ClauseId j = 0; j < pi.size(); ++j) {
        if ((*candidate)[j]) s.add_clause(pi[j]);
      }
      for (const Lit& l : pi[i].literals()) s.add_unit(~l);
      SatResult r = s.solve();
      if (r.sat()) core = falsified_core(pi, *candidate, pi[i], *r.model);
    }
    if (!core) {
      ClauseIdSet witness = to_ids(*candidate);
      return MinimumSubset{witness.size(), std::move(witness)};
    }
    cores.push_back(std::move(*core));
  }
}

std::size_t min_ies_size(const Formula& pi) { return minimum_equivalent_subset(pi)->size; }

bool has_ies_of_size(const Formula& pi, std::size_t k) {
  return minimum_equivalent_subset(pi, k).has_value();
}

std::optional<ClauseIdSet> useful_witness(const Formula& pi, ClauseId id) {
  pi.clause(id);
  if (is_clause_necessary(pi, id)) return greedy_ies(pi);
  return UsefulSearch(pi, id).run();
}

bool is_clause_useful(const Formula& pi, ClauseId id) { return useful_witness(pi, id).has_value(); }

ClassificationReport classify_clauses(const Formula& pi, std::size_t ies_cap) {
  ClassificationReport r;
  r.necessary_set = necessary_clauses(pi);
  r.statuses.assign(pi.size(), ClauseStatus::Useless);
  for (ClauseId id : r.necessary_set) r.statuses[id] = ClauseStatus::Necessary;
  for (ClauseId id = 0; id < pi.size(); ++id) {
    if (r.statuses[id] == ClauseStatus::Necessary) continue;
    if (UsefulSearch(pi, id).run()) r.statuses[id] = ClauseStatus::UsefulNotNecessary;
  }
  IesReport ies = enumerate_ies(pi, ies_cap);
  r.ies_count = ies.ies_list.size();
  r.ies_count_truncated = ies.truncated;
  return r;
}

bool has_unique_ies(const Formula& pi) { return subset_equivalent(pi, necessary_clauses(pi)); }

std::optional<std::pair<ClauseId, ClauseId>> two_ies_witness(const Formula& pi) {
  Mask all = full_mask(pi);
  ClauseIdSet removable;
  for (ClauseId i = 0; i < pi.size(); ++i) {
    if (redundant_in(pi, all, i)) removable.push_back(i);
  }
  for (std::size_t a = 0; a < removable.size(); ++a) {
    for (std::size_t b = a + 1; b < removable.size(); ++b) {
      ClauseId g1 = removable[a], g2 = removable[b];
      Mask m = all;
      m[g1] = 0;
      m[g2] = 0;
      if (!mask_entails(pi, m, std::nullopt, pi[g1]) || !mask_entails(pi, m, std::nullopt, pi[g2])) {
        return std::make_pair(g1, g2);
      }
    }
  }
  return std::nullopt;
}

}  // namespace irred
