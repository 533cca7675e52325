#include "pinpoint/sat.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>

#include "pinpoint/error.hpp"

namespace pinpoint {

SatSolver::SatSolver(int num_vars)
    : num_vars_(num_vars),
      watches_(2 * static_cast<std::size_t>(num_vars)),
      values_(static_cast<std::size_t>(num_vars), -1) {}

void SatSolver::add_clause(const std::vector<int>& literals) {
  std::vector<int> c;
  for (int l : literals) {
    if (l == 0 || std::abs(l) > num_vars_) {
      throw Error(ErrorCode::kInvalidArgument, "literal out of range: " + std::to_string(l));
    }
    bool dup = false;
    for (int x : c) {
      if (x == -l) return;  // tautology
      if (x == l) dup = true;
    }
    if (!dup) c.push_back(l);
  }
  if (c.empty()) {
    trivially_unsat_ = true;
    return;
  }
  if (c.size() == 1) {
    units_.push_back(c.front());
    return;
  }
  std::size_t id = clauses_.size();
  watches_[index(c[0])].push_back(id);
  watches_[index(c[1])].push_back(id);
  clauses_.push_back(std::move(c));
}

int SatSolver::lit_value(int lit) const {
  signed char v = values_[std::abs(lit) - 1];
  if (v < 0) return -1;
  return lit > 0 ? v : 1 - v;
}

bool SatSolver::assign(int lit) {
  int v = lit_value(lit);
  if (v == 1) return true;
  if (v == 0) return false;
  values_[std::abs(lit) - 1] = lit > 0 ? 1 : 0;
  trail_.push_back(lit);
  return true;
}

bool SatSolver::propagate() {
  while (head_ < trail_.size()) {
    const int falsified = -trail_[head_++];
    auto& ws = watches_[index(falsified)];
    std::size_t keep = 0;
    bool conflict = false;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::size_t cid = ws[i];
      if (conflict) {
        ws[keep++] = cid;
        continue;
      }
      auto& c = clauses_[cid];
      if (c[0] == falsified) std::swap(c[0], c[1]);
      if (lit_value(c[0]) == 1) {
        ws[keep++] = cid;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (lit_value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[index(c[1])].push_back(cid);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = cid;
      if (!assign(c[0])) conflict = true;
    }
    ws.resize(keep);
    if (conflict) return false;
  }
  return true;
}

bool SatSolver::solve() {
  if (trivially_unsat_) return false;
  std::fill(values_.begin(), values_.end(), -1);
  trail_.clear();
  head_ = 0;
  for (int u : units_) {
    if (!assign(u)) return false;
  }
  // Decision stack: trail position of each decision and whether it was flipped.
  struct Decision {
    std::size_t trail_pos;
    bool flipped;
  };
  std::vector<Decision> decisions;
  int next_var = 1;
  while (true) {
    if (!propagate()) {
      while (true) {
        if (decisions.empty()) return false;
        Decision d = decisions.back();
        decisions.pop_back();
        const int lit = trail_[d.trail_pos];
        for (std::size_t i = d.trail_pos; i < trail_.size(); ++i) {
          values_[std::abs(trail_[i]) - 1] = -1;
        }
        trail_.resize(d.trail_pos);
        head_ = trail_.size();
        next_var = 1;
        if (!d.flipped) {
          decisions.push_back(Decision{trail_.size(), true});
          assign(-lit);
          break;
        }
      }
      continue;
    }
    while (next_var <= num_vars_ && values_[next_var - 1] >= 0) ++next_var;
    if (next_var > num_vars_) return true;
    decisions.push_back(Decision{trail_.size(), false});
    assign(-next_var);
  }
}

bool satisfiable(const Cnf& f, const std::vector<bool>& enabled, std::vector<bool>* model) {
  SatSolver s(f.num_vars);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (enabled[i]) s.add_clause(f.clauses[i]);
  }
  bool sat = s.solve();
  if (sat && model) {
    model->assign(static_cast<std::size_t>(f.num_vars) + 1, false);
    for (int v = 1; v <= f.num_vars; ++v) (*model)[v] = s.value(v);
  }
  return sat;
}

bool satisfiable(const Cnf& f) {
  return satisfiable(f, std::vector<bool>(f.clauses.size(), true));
}

namespace {

bool clause_true(const std::vector<int>& c, const std::vector<bool>& model) {
  for (int l : c) {
    if ((l > 0) == model[std::abs(l)]) return true;
  }
  return false;
}

}  // namespace

bool mus_membership(const Cnf& f, std::size_t c) {
  return mus_membership(f, c, std::vector<bool>(f.clauses.size(), false));
}

bool mus_membership(const Cnf& f, std::size_t c, const std::vector<bool>& hard,
                    std::size_t* sat_calls) {
  const std::size_t n = f.clauses.size();
  if (c >= n) throw Error(ErrorCode::kInvalidArgument, "clause index out of range");
  if (hard.size() != n) throw Error(ErrorCode::kInvalidArgument, "hard flags do not match the formula");
  if (hard[c]) throw Error(ErrorCode::kInvalidArgument, "membership is asked for a hard clause");
  std::size_t calls = 0;
  auto sat = [&](const std::vector<bool>& enabled, std::vector<bool>* model) {
    ++calls;
    return satisfiable(f, enabled, model);
  };
  struct Report {
    std::size_t& calls;
    std::size_t* out;
    ~Report() {
      if (out) *out += calls;
    }
  } report{calls, sat_calls};

  if (sat(std::vector<bool>(n, true), nullptr)) {
    throw Error(ErrorCode::kPreconditionViolated, "formula is satisfiable");
  }
  if (!sat(hard, nullptr)) return false;

  // Soft clauses other than c, as selector variables 1..k of a master problem.
  std::vector<std::size_t> soft;
  for (std::size_t i = 0; i < n; ++i) {
    if (!hard[i] && i != c) soft.push_back(i);
  }
  if (n < 20) {
    for (std::uint32_t mask = 0; mask < (1u << soft.size()); ++mask) {
      std::vector<bool> enabled = hard;
      for (std::size_t j = 0; j < soft.size(); ++j) {
        if (mask >> j & 1u) enabled[soft[j]] = true;
      }
      if (!sat(enabled, nullptr)) continue;
      enabled[c] = true;
      if (!sat(enabled, nullptr)) return true;
    }
    return false;
  }

  Cnf master{static_cast<int>(soft.size()), {}};
  std::vector<bool> model;
  while (true) {
    SatSolver m(master.num_vars);
    for (const auto& cl : master.clauses) m.add_clause(cl);
    if (!m.solve()) return false;
    std::vector<bool> enabled = hard;
    for (std::size_t j = 0; j < soft.size(); ++j) {
      if (m.value(static_cast<int>(j) + 1)) enabled[soft[j]] = true;
    }
    if (!sat(enabled, &model)) {
      std::vector<int> block;
      for (std::size_t j = 0; j < soft.size(); ++j) {
        if (enabled[soft[j]]) block.push_back(-static_cast<int>(j) - 1);
      }
      master.clauses.push_back(std::move(block));
      continue;
    }
    // Grow to a maximal satisfiable set, taking every clause the model satisfies.
    for (std::size_t j = 0; j < soft.size(); ++j) {
      const std::size_t i = soft[j];
      if (enabled[i]) continue;
      if (clause_true(f.clauses[i], model)) {
        enabled[i] = true;
        continue;
      }
      enabled[i] = true;
      std::vector<bool> next;
      if (sat(enabled, &next)) {
        model = std::move(next);
      } else {
        enabled[i] = false;
      }
    }
    enabled[c] = true;
    if (!sat(enabled, nullptr)) return true;
    std::vector<int> block;
    for (std::size_t j = 0; j < soft.size(); ++j) {
      if (!enabled[soft[j]]) block.push_back(static_cast<int>(j) + 1);
    }
    if (block.empty()) return false;
    master.clauses.push_back(std::move(block));
  }
}

}  // namespace pinpoint
