#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pinpoint/blackbox.hpp"
#include "pinpoint/ontology.hpp"
#include "pinpoint/tableau.hpp"

namespace pinpoint {

struct BruteForceResult {
  AxiomSet core;
  AxiomSet union_set;
  AxiomFamily justifications;
  std::size_t module_size = 0;
  std::size_t oracle_calls = 0;
};

/// Every minimal entailing subset of the goal's module, by enumerating
/// subsets in order of increasing size. Throws Error(kCapExceeded) when the
/// module has more than `cap` axioms, and Error(kNotEntailed).
BruteForceResult brute_force_justifications(EntailmentOracle& oracle, const Gci& goal,
                                            std::size_t cap = 20);

enum class Profile { kEL, kALC };

struct GeneratorOptions {
  std::size_t concept_names = 8;
  std::size_t role_names = 3;
  /// Maximum nesting depth of generated concepts.
  int max_depth = 2;
};

/// Deterministic random TBox with ids ax1..axN. EL uses conjunction,
/// existentials and Top; ALC adds negation, disjunction, universals and Bot.
Ontology generate_ontology(std::uint64_t seed, std::size_t n_axioms, Profile profile,
                           GeneratorOptions options = {});

struct BenchOptions {
  /// Fill the time_ms column. Off by default so the CSV is reproducible.
  bool timing = false;
};

struct BenchSummary {
  std::size_t ontologies = 0;
  std::size_t goals = 0;
  std::size_t rows = 0;
  /// Goals on which the methods reported different unions.
  std::size_t disagreements = 0;
};

inline constexpr const char* kBenchHeader =
    "ontology,goal,method,module_size,core_size,just_size,union_size,n_justifications,"
    "oracle_calls,time_ms";

/// Runs every method on every entailed atomic inclusion of every ontology
/// file in `dir` (sorted by file name) and writes one CSV row per method.
/// Throws Error(kIo) on file errors.
BenchSummary run_bench(const std::string& dir, const std::vector<Method>& methods,
                       const std::string& out_path, BenchOptions options = {});

Method parse_method(const std::string& name);
Profile parse_profile(const std::string& name);

}  // namespace pinpoint
