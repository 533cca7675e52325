#include "pinpoint/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <tuple>

#include "pinpoint/error.hpp"
#include "pinpoint/locality.hpp"
#include "pinpoint/sat_pinpointing.hpp"
#include "pinpoint/syntax.hpp"

namespace pinpoint {

BruteForceResult brute_force_justifications(EntailmentOracle& oracle, const Gci& goal,
                                            std::size_t cap) {
  require_entailed(oracle, goal);
  const std::size_t before = oracle.calls();
  const AxiomSet module = extract_star_module(oracle.ontology(), signature_of(goal));
  if (module.size() > cap || module.size() > 30) {
    throw Error(ErrorCode::kCapExceeded, "module has " + std::to_string(module.size()) +
                                             " axioms, cap is " + std::to_string(cap));
  }
  BruteForceResult r;
  r.module_size = module.size();
  const std::vector<AxiomIndex>& items = module.items();
  const std::size_t m = items.size();
  std::vector<std::uint32_t> found_masks;
  for (std::size_t k = 0; k <= m; ++k) {
    // Gosper's hack: all m-bit masks with k bits set, in increasing order.
    std::uint32_t mask = k == 0 ? 0u : (1u << k) - 1u;
    const std::uint32_t limit = 1u << m;
    while (mask < limit) {
      bool superset = std::any_of(found_masks.begin(), found_masks.end(),
                                  [&](std::uint32_t f) { return (mask & f) == f; });
      if (!superset) {
        std::vector<AxiomIndex> subset;
        for (std::size_t i = 0; i < m; ++i) {
          if (mask >> i & 1u) subset.push_back(items[i]);
        }
        AxiomSet s(std::move(subset));
        if (oracle.entails(s, goal)) {
          found_masks.push_back(mask);
          r.justifications.push_back(std::move(s));
        }
      }
      if (mask == 0) break;
      const std::uint32_t c = mask & (~mask + 1u);
      const std::uint32_t n = mask + c;
      mask = (((n ^ mask) >> 2) / c) | n;
    }
  }
  normalize_family(r.justifications);
  r.core = r.justifications.front();
  for (const auto& j : r.justifications) {
    r.core = r.core & j;
    r.union_set = r.union_set | j;
  }
  r.oracle_calls = oracle.calls() - before;
  return r;
}

namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, Profile profile, GeneratorOptions options)
      : rng_(seed), profile_(profile), options_(options) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool chance(int percent) { return below(100) < static_cast<std::size_t>(percent); }

  std::string concept_name() {
    const std::size_t i = below(options_.concept_names);
    if (options_.concept_names <= 26) return std::string(1, static_cast<char>('A' + i));
    return "N" + std::to_string(i);
  }
  std::string role_name() {
    const std::size_t i = below(options_.role_names);
    if (options_.role_names <= 8) return std::string(1, static_cast<char>('r' + i));
    return "r" + std::to_string(i);
  }

  Concept concept_expr(int depth) {
    if (depth <= 0 || chance(40)) return Concept::atom(concept_name());
    const bool alc = profile_ == Profile::kALC;
    const std::size_t kinds = alc ? 7 : 3;
    switch (below(kinds)) {
      case 0:
        return Concept::conjunction({concept_expr(depth - 1), concept_expr(depth - 1)});
      case 1: {
        std::string r = role_name();
        return Concept::some(std::move(r), concept_expr(depth - 1));
      }
      case 2: {
        std::string r = role_name();
        return Concept::some(std::move(r), chance(25) ? Concept::top() : concept_expr(depth - 1));
      }
      case 3:
        return Concept::disjunction({concept_expr(depth - 1), concept_expr(depth - 1)});
      case 4:
        return Concept::negation(concept_expr(depth - 1));
      case 5: {
        std::string r = role_name();
        return Concept::all(std::move(r), concept_expr(depth - 1));
      }
      default:
        return chance(50) ? Concept::bot() : Concept::negation(Concept::atom(concept_name()));
    }
  }

  Axiom axiom(std::size_t k) {
    Axiom a;
    a.id = "ax" + std::to_string(k);
    if (options_.role_names >= 2 && chance(6)) {
      std::string sub = role_name(), sup = role_name();
      while (sup == sub) sup = role_name();
      a.body = RoleInclusion{sub, sup};
      return a;
    }
    const int roll = static_cast<int>(below(100));
    Concept lhs, rhs;
    if (roll < 40) {
      lhs = Concept::atom(concept_name());
      rhs = Concept::atom(concept_name());
    } else if (roll < 55) {
      lhs = Concept::atom(concept_name());
      std::string r = role_name();
      rhs = Concept::some(std::move(r), concept_expr(1));
    } else if (roll < 68) {
      std::string r = role_name();
      lhs = Concept::some(std::move(r), concept_expr(1));
      rhs = Concept::atom(concept_name());
    } else if (roll < 78) {
      lhs = Concept::conjunction({Concept::atom(concept_name()), Concept::atom(concept_name())});
      rhs = concept_expr(1);
    } else {
      lhs = chance(50) ? Concept::atom(concept_name()) : concept_expr(options_.max_depth);
      rhs = concept_expr(options_.max_depth);
    }
    a.body = Gci{std::move(lhs), std::move(rhs)};
    return a;
  }

 private:
  std::mt19937_64 rng_;
  Profile profile_;
  GeneratorOptions options_;
};

struct Row {
  std::string ontology;
  std::string goal;
  std::string method;
  std::string fields;
  AxiomSet union_set;
};

std::string field(std::size_t v) { return std::to_string(v); }

Row bench_row(EntailmentOracle& oracle, const Gci& goal, Method method, bool timing) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::string module_size, core_size, just_size, union_size, n_just, calls;
  AxiomSet u;
  oracle.reset_calls();
  switch (method) {
    case Method::kBlackbox:
    case Method::kHst: {
      AxiomSet core = compute_core(oracle, goal);
      AxiomSet just = single_justification(oracle, goal, core);
      PinpointResult r = method == Method::kBlackbox
                             ? union_of_all_justifications(oracle, goal, core)
                             : enumerate_justifications_hst(oracle, goal);
      u = r.union_set;
      module_size = field(r.module_size);
      core_size = field(core.size());
      just_size = field(just.size());
      calls = field(oracle.calls());
      break;
    }
    case Method::kMusMembership: {
      MembershipResult r = union_via_membership(oracle.ontology(), goal);
      u = r.union_set;
      module_size = field(extract_star_module(oracle.ontology(), signature_of(goal)).size());
      calls = field(r.sat_calls);
      break;
    }
    case Method::kBruteForce: {
      BruteForceResult r = brute_force_justifications(oracle, goal);
      u = r.union_set;
      module_size = field(r.module_size);
      core_size = field(r.core.size());
      just_size = field(r.justifications.front().size());
      n_just = field(r.justifications.size());
      calls = field(r.oracle_calls);
      break;
    }
  }
  union_size = field(u.size());
  std::string time_ms;
  if (timing) {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    time_ms = buf;
  }
  Row row;
  row.method = to_string(method);
  row.fields = module_size + "," + core_size + "," + just_size + "," + union_size + "," + n_just +
               "," + calls + "," + time_ms;
  row.union_set = std::move(u);
  return row;
}

}  // namespace

Ontology generate_ontology(std::uint64_t seed, std::size_t n_axioms, Profile profile,
                           GeneratorOptions options) {
  if (n_axioms == 0 || options.concept_names == 0 || options.role_names == 0) {
    throw Error(ErrorCode::kInvalidArgument, "generator needs at least one axiom, concept and role");
  }
  Generator g(seed, profile, options);
  Ontology o;
  for (std::size_t k = 1; k <= n_axioms; ++k) o.add(g.axiom(k));
  return o;
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::kBlackbox, Method::kHst, Method::kMusMembership, Method::kBruteForce}) {
    if (name == to_string(m)) return m;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + name + "'");
}

Profile parse_profile(const std::string& name) {
  if (name == "el" || name == "EL") return Profile::kEL;
  if (name == "alc" || name == "ALC") return Profile::kALC;
  throw Error(ErrorCode::kInvalidArgument, "unknown profile '" + name + "'");
}

BenchSummary run_bench(const std::string& dir, const std::vector<Method>& methods,
                       const std::string& out_path, BenchOptions options) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorCode::kIo, "not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().filename().string().front() != '.') {
      files.push_back(entry.path());
    }
  }
  if (ec) throw Error(ErrorCode::kIo, "cannot list " + dir + ": " + ec.message());
  std::sort(files.begin(), files.end());

  BenchSummary summary;
  std::vector<Row> rows;
  for (const auto& path : files) {
    const Ontology o = load_ontology(path.string());
    ++summary.ontologies;
    EntailmentOracle oracle(o);
    for (const Gci& goal : classify(o)) {
      ++summary.goals;
      const std::size_t first = rows.size();
      for (Method m : methods) {
        Row row = bench_row(oracle, goal, m, options.timing);
        row.ontology = path.filename().string();
        row.goal = to_string(goal);
        rows.push_back(std::move(row));
      }
      for (std::size_t i = first + 1; i < rows.size(); ++i) {
        if (rows[i].union_set != rows[first].union_set) {
          ++summary.disagreements;
          break;
        }
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.ontology, a.goal, a.method) < std::tie(b.ontology, b.goal, b.method);
  });

  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + out_path);
  out << kBenchHeader << '\n';
  for (const Row& r : rows) {
    out << r.ontology << ',' << r.goal << ',' << r.method << ',' << r.fields << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + out_path);
  summary.rows = rows.size();
  return summary;
}

}  // namespace pinpoint
