#pragma once

#include <cstddef>
#include <vector>

namespace pinpoint {

/// CNF over variables 1..num_vars; literals are DIMACS-style signed ints.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// DPLL with unit propagation over two watched literals. Decisions pick the
/// lowest unassigned variable and try false first.
class SatSolver {
 public:
  explicit SatSolver(int num_vars);

  void add_clause(const std::vector<int>& literals);
  bool solve();
  /// Value of a variable in the last model; valid after solve() returned true.
  bool value(int var) const { return values_[var - 1] == 1; }

 private:
  static int index(int lit) { return lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1; }
  int lit_value(int lit) const;
  bool assign(int lit);
  bool propagate();

  int num_vars_;
  bool trivially_unsat_ = false;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<int> units_;
  std::vector<signed char> values_;  // -1 unassigned, 0 false, 1 true
  std::vector<int> trail_;
  std::size_t head_ = 0;
};

bool satisfiable(const Cnf& f);
/// Satisfiability of the clauses i with enabled[i].
bool satisfiable(const Cnf& f, const std::vector<bool>& enabled, std::vector<bool>* model = nullptr);

/// True iff clause `c` belongs to some minimal unsatisfiable subset of f.
/// f must be unsatisfiable (Error kPreconditionViolated).
bool mus_membership(const Cnf& f, std::size_t c);

/// Group variant: clauses flagged `hard` are always present. Returns true iff
/// some set S of soft clauses not containing c has hard+S satisfiable and
/// hard+S+c unsatisfiable, i.e. c lies in a minimal set of soft clauses that
/// is unsatisfiable together with the hard ones. `c` must be soft.
/// `sat_calls`, when given, is incremented by the number of SAT calls made.
bool mus_membership(const Cnf& f, std::size_t c, const std::vector<bool>& hard,
                    std::size_t* sat_calls = nullptr);

}  // namespace pinpoint
