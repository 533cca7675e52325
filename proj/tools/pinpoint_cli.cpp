// Command-line front end over the C API.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "pinpoint/pinpoint.h"

namespace {

enum Exit { kOk = 0, kOther = 1, kParse = 2, kNotEntailed = 3, kResource = 4, kDisagreement = 5 };

int exit_code(pp_status s) {
  switch (s) {
    case PP_OK: return kOk;
    case PP_ERR_PARSE:
    case PP_ERR_DUPLICATE_ID:
    case PP_ERR_UNSUPPORTED: return kParse;
    case PP_ERR_NOT_ENTAILED: return kNotEntailed;
    case PP_ERR_RESOURCE_LIMIT:
    case PP_ERR_CAP_EXCEEDED: return kResource;
    case PP_ERR_DISAGREEMENT: return kDisagreement;
    default: return kOther;
  }
}

int report(pp_status s) {
  if (s != PP_OK) std::fprintf(stderr, "pinpoint: %s: %s\n", pp_status_name(s), pp_last_error());
  return exit_code(s);
}

int print_string(pp_status s, char* text) {
  if (s == PP_OK) {
    std::fputs(text, stdout);
    pp_string_free(text);
  }
  return report(s);
}

class Loaded {
 public:
  explicit Loaded(const std::string& path) : status_(pp_ontology_load(path.c_str(), &o_)) {}
  ~Loaded() { pp_ontology_free(o_); }
  Loaded(const Loaded&) = delete;
  Loaded& operator=(const Loaded&) = delete;

  pp_status status() const { return status_; }
  const pp_ontology* get() const { return o_; }

 private:
  pp_ontology* o_ = nullptr;
  pp_status status_;
};

using SetsQuery = std::function<pp_status(const pp_ontology*, const char*, pp_sets**)>;

int run_sets(const std::string& file, const std::string& goal, SetsQuery query) {
  Loaded o(file);
  if (o.status() != PP_OK) return report(o.status());
  pp_sets* sets = nullptr;
  pp_status s = query(o.get(), goal.c_str(), &sets);
  if (s == PP_OK) {
    char* text = nullptr;
    s = pp_sets_format(sets, &text);
    pp_sets_free(sets);
    return print_string(s, text);
  }
  return report(s);
}

using TextQuery = pp_status (*)(const pp_ontology*, const char*, char**);

int run_text(const std::string& file, const std::string& goal, TextQuery query) {
  Loaded o(file);
  if (o.status() != PP_OK) return report(o.status());
  char* text = nullptr;
  const pp_status s = query(o.get(), goal.c_str(), &text);
  return print_string(s, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Justification core, union and repairs for ALC ontologies"};
  app.require_subcommand(1);

  std::string file, goal, dir, methods, out;
  bool timing = false;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::string profile;
  pp_method method = PP_METHOD_BLACKBOX;

  auto* classify = app.add_subcommand("classify", "Entailed inclusions between concept names");
  classify->add_option("file", file, "Ontology file")->required();

  auto goal_command = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file, "Ontology file")->required();
    c->add_option("--goal", goal, "Inclusion such as '(sub A C)'")->required();
    return c;
  };
  auto* core = goal_command("core", "Intersection of all justifications");
  auto* just = goal_command("just", "One justification");
  auto* uni = goal_command("union", "Union of all justifications");
  uni->add_option("--method", method, "blackbox, hst, musmem or brute")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, pp_method>{{"blackbox", PP_METHOD_BLACKBOX},
                                           {"hst", PP_METHOD_HST},
                                           {"musmem", PP_METHOD_MUSMEM},
                                           {"brute", PP_METHOD_BRUTE}}));
  auto* all = goal_command("justifications", "All justifications, one per line");
  auto* repairs = goal_command("repairs", "Optimal repairs, one per line");
  auto* trace = goal_command("trace", "Saturation inference trace");
  auto* dimacs = goal_command("dimacs", "Pinpointing formula in DIMACS format");

  auto* bench = app.add_subcommand("bench", "Run methods on every ontology in a directory");
  bench->add_option("dir", dir, "Directory of ontology files")->required();
  bench->add_option("--methods", methods, "Comma-separated methods")->default_val("blackbox,musmem,brute");
  bench->add_option("--out", out, "CSV output path")->required();
  bench->add_flag("--timing", timing, "Fill the time_ms column");

  auto* gen = app.add_subcommand("gen", "Generate a random ontology");
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--size", size, "Number of axioms")->required()->check(CLI::PositiveNumber);
  gen->add_option("--profile", profile, "el or alc")->required()->check(CLI::IsMember({"el", "alc"}));
  gen->add_option("--out", out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kOther;
  }

  if (classify->parsed()) {
    Loaded o(file);
    if (o.status() != PP_OK) return report(o.status());
    char* text = nullptr;
    const pp_status s = pp_classify(o.get(), &text);
    return print_string(s, text);
  }
  if (core->parsed()) return run_sets(file, goal, pp_core);
  if (just->parsed()) return run_sets(file, goal, pp_justification);
  if (uni->parsed()) {
    return run_sets(file, goal, [method](const pp_ontology* o, const char* g, pp_sets** sets) {
      return pp_union(o, g, method, sets);
    });
  }
  if (all->parsed()) return run_sets(file, goal, pp_justifications);
  if (repairs->parsed()) return run_sets(file, goal, pp_repairs);
  if (trace->parsed()) return run_text(file, goal, pp_trace);
  if (dimacs->parsed()) return run_text(file, goal, pp_dimacs);
  if (bench->parsed()) {
    pp_bench_summary summary{};
    pp_status s = pp_bench(dir.c_str(), methods.c_str(), out.c_str(), timing ? 1 : 0, &summary);
    if (s == PP_OK || s == PP_ERR_DISAGREEMENT) {
      std::fprintf(stderr, "%zu ontologies, %zu goals, %zu rows\n", summary.ontologies,
                   summary.goals, summary.rows);
    }
    return report(s);
  }
  if (gen->parsed()) {
    pp_ontology* o = nullptr;
    pp_status s = pp_ontology_generate(seed, size,
                                       profile == "el" ? PP_PROFILE_EL : PP_PROFILE_ALC, &o);
    if (s == PP_OK) s = pp_ontology_save(o, out.c_str());
    pp_ontology_free(o);
    return report(s);
  }
  return kOther;
}
