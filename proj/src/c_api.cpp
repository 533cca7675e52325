#include "pinpoint/pinpoint.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "pinpoint/blackbox.hpp"
#include "pinpoint/error.hpp"
#include "pinpoint/harness.hpp"
#include "pinpoint/repair.hpp"
#include "pinpoint/sat_pinpointing.hpp"
#include "pinpoint/saturation.hpp"
#include "pinpoint/syntax.hpp"
#include "pinpoint/tableau.hpp"

struct pp_ontology {
  pinpoint::Ontology value;
};

struct pp_sets {
  std::vector<std::vector<std::string>> sets;
};

namespace {

thread_local std::string last_error;

pp_status status_of(pinpoint::ErrorCode code) {
  using pinpoint::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return PP_ERR_PARSE;
    case ErrorCode::kDuplicateId: return PP_ERR_DUPLICATE_ID;
    case ErrorCode::kUnsupportedConstruct: return PP_ERR_UNSUPPORTED;
    case ErrorCode::kNotEntailed: return PP_ERR_NOT_ENTAILED;
    case ErrorCode::kResourceLimit: return PP_ERR_RESOURCE_LIMIT;
    case ErrorCode::kPreconditionViolated: return PP_ERR_PRECONDITION;
    case ErrorCode::kEmptyMember: return PP_ERR_EMPTY_MEMBER;
    case ErrorCode::kNoRepair: return PP_ERR_NO_REPAIR;
    case ErrorCode::kCapExceeded: return PP_ERR_CAP_EXCEEDED;
    case ErrorCode::kDisagreement: return PP_ERR_DISAGREEMENT;
    case ErrorCode::kIo: return PP_ERR_IO;
    case ErrorCode::kInvalidArgument: return PP_ERR_INVALID_ARGUMENT;
  }
  return PP_ERR_INTERNAL;
}

pp_status fail(pp_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <class F>
pp_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return PP_OK;
  } catch (const pinpoint::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PP_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(PP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PP_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(bool ok, const char* what) {
  if (!ok) throw pinpoint::Error(pinpoint::ErrorCode::kInvalidArgument, what);
}

pinpoint::Method method_of(pp_method m) {
  switch (m) {
    case PP_METHOD_BLACKBOX: return pinpoint::Method::kBlackbox;
    case PP_METHOD_HST: return pinpoint::Method::kHst;
    case PP_METHOD_MUSMEM: return pinpoint::Method::kMusMembership;
    case PP_METHOD_BRUTE: return pinpoint::Method::kBruteForce;
  }
  throw pinpoint::Error(pinpoint::ErrorCode::kInvalidArgument, "unknown method");
}

pp_sets* make_sets(const pinpoint::Ontology& o, const pinpoint::AxiomFamily& family) {
  auto* out = new pp_sets;
  for (const auto& s : family) {
    std::vector<std::string> ids;
    for (pinpoint::AxiomIndex i : s) ids.push_back(o[i].id);
    out->sets.push_back(std::move(ids));
  }
  return out;
}

// Runs `query` with an oracle over `o` and the parsed goal.
template <class F>
pp_status with_goal(const pp_ontology* o, const char* goal, F&& query) {
  return guarded([&] {
    require(o != nullptr && goal != nullptr, "null argument");
    const pinpoint::Gci g = pinpoint::parse_gci(goal);
    pinpoint::EntailmentOracle oracle(o->value);
    query(oracle, g);
  });
}

template <class F>
pp_status sets_query(const pp_ontology* o, const char* goal, pp_sets** out, F&& query) {
  if (out == nullptr) return fail(PP_ERR_INVALID_ARGUMENT, "null output");
  *out = nullptr;
  return with_goal(o, goal, [&](pinpoint::EntailmentOracle& oracle, const pinpoint::Gci& g) {
    *out = make_sets(o->value, query(oracle, g));
  });
}

}  // namespace

extern "C" {

const char* pp_last_error(void) { return last_error.c_str(); }

const char* pp_status_name(pp_status status) {
  switch (status) {
    case PP_OK: return "ok";
    case PP_ERR_PARSE: return "parse error";
    case PP_ERR_DUPLICATE_ID: return "duplicate id";
    case PP_ERR_UNSUPPORTED: return "unsupported construct";
    case PP_ERR_NOT_ENTAILED: return "not entailed";
    case PP_ERR_RESOURCE_LIMIT: return "resource limit";
    case PP_ERR_PRECONDITION: return "precondition violated";
    case PP_ERR_EMPTY_MEMBER: return "empty member";
    case PP_ERR_NO_REPAIR: return "no repair";
    case PP_ERR_CAP_EXCEEDED: return "cap exceeded";
    case PP_ERR_DISAGREEMENT: return "disagreement";
    case PP_ERR_IO: return "i/o error";
    case PP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pp_string_free(char* s) { std::free(s); }

pp_status pp_ontology_parse(const char* text, pp_ontology** out) {
  if (out == nullptr) return fail(PP_ERR_INVALID_ARGUMENT, "null output");
  *out = nullptr;
  return guarded([&] {
    require(text != nullptr, "null text");
    *out = new pp_ontology{pinpoint::parse_ontology(text)};
  });
}

pp_status pp_ontology_load(const char* path, pp_ontology** out) {
  if (out == nullptr) return fail(PP_ERR_INVALID_ARGUMENT, "null output");
  *out = nullptr;
  return guarded([&] {
    require(path != nullptr, "null path");
    *out = new pp_ontology{pinpoint::load_ontology(path)};
  });
}

pp_status pp_ontology_generate(uint64_t seed, size_t n_axioms, pp_profile profile,
                               pp_ontology** out) {
  if (out == nullptr) return fail(PP_ERR_INVALID_ARGUMENT, "null output");
  *out = nullptr;
  return guarded([&] {
    require(profile == PP_PROFILE_EL || profile == PP_PROFILE_ALC, "unknown profile");
    const auto p = profile == PP_PROFILE_EL ? pinpoint::Profile::kEL : pinpoint::Profile::kALC;
    *out = new pp_ontology{pinpoint::generate_ontology(seed, n_axioms, p)};
  });
}

void pp_ontology_free(pp_ontology* o) { delete o; }

size_t pp_ontology_size(const pp_ontology* o) { return o == nullptr ? 0 : o->value.size(); }

pp_status pp_ontology_serialize(const pp_ontology* o, char** out) {
  if (out == nullptr) return fail(PP_ERR_INVALID_ARGUMENT, "null output");
  *out = nullptr;
  return guarded([&] {
    require(o != nullptr, "null ontology");
    *out = copy_string(pinpoint::serialize_ontology(o->value));
  });
}

pp_status pp_ontology_save(const pp_ontology* o, const char* path) {
  return guarded([&] {
    require(o != nullptr && path != nullptr, "null argument");
    std::string text = pinpoint::serialize_ontology(o->value);
    if (!text.empty()) text += '\n';
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw pinpoint::Error(pinpoint::ErrorCode::kIo, std::string("cannot write ") + path);
    f << text;
    f.flush();
    if (!f) throw pinpoint::Error(pinpoint::ErrorCode::kIo, std::string("write failed: ") + path);
  });
}

size_t pp_sets_count(const pp_sets* s) { return s == nullptr ? 0 : s->sets.size(); }

size_t pp_sets_size(const pp_sets* s, size_t i) {
  return s == nullptr || i >= s->sets.size() ? 0 : s->sets[i].size();
}

const char* pp_sets_id(const pp_sets* s, size_t i, size_t j) {
  if (s == nullptr || i >= s->sets.size() || j >= s->sets[i].size()) return nullptr;
  return s->sets[i][j].c_str();
}

pp_status pp_sets_format(const pp_sets* s, char** out) {
  if (out == nullptr) return fail(PP_ERR_INVALID_ARGUMENT, "null output");
  *out = nullptr;
  return guarded([&] {
    require(s != nullptr, "null sets");
    std::string text;
    for (const auto& set : s->sets) {
      for (std::size_t j = 0; j < set.size(); ++j) {
        if (j > 0) text += ',';
        text += set[j];
      }
      text += '\n';
    }
    *out = copy_string(text);
  });
}

void pp_sets_free(pp_sets* s) { delete s; }

pp_status pp_entails(const pp_ontology* o, const char* goal, int* out) {
  if (out == nullptr) return fail(PP_ERR_INVALID_ARGUMENT, "null output");
  return with_goal(o, goal, [&](pinpoint::EntailmentOracle& oracle, const pinpoint::Gci& g) {
    *out = oracle.entails(g) ? 1 : 0;
  });
}

pp_status pp_classify(const pp_ontology* o, char** out) {
  if (out == nullptr) return fail(PP_ERR_INVALID_ARGUMENT, "null output");
  *out = nullptr;
  return guarded([&] {
    require(o != nullptr, "null ontology");
    std::string text;
    for (const auto& g : pinpoint::classify(o->value)) text += pinpoint::to_string(g) + '\n';
    *out = copy_string(text);
  });
}

pp_status pp_core(const pp_ontology* o, const char* goal, pp_sets** out) {
  return sets_query(o, goal, out, [](pinpoint::EntailmentOracle& oracle, const pinpoint::Gci& g) {
    return pinpoint::AxiomFamily{pinpoint::compute_core(oracle, g)};
  });
}

pp_status pp_justification(const pp_ontology* o, const char* goal, pp_sets** out) {
  return sets_query(o, goal, out, [](pinpoint::EntailmentOracle& oracle, const pinpoint::Gci& g) {
    const pinpoint::AxiomSet core = pinpoint::compute_core(oracle, g);
    return pinpoint::AxiomFamily{pinpoint::single_justification(oracle, g, core)};
  });
}

pp_status pp_union(const pp_ontology* o, const char* goal, pp_method method, pp_sets** out) {
  return sets_query(o, goal, out, [&](pinpoint::EntailmentOracle& oracle, const pinpoint::Gci& g) {
    switch (method_of(method)) {
      case pinpoint::Method::kBlackbox: {
        const pinpoint::AxiomSet core = pinpoint::compute_core(oracle, g);
        return pinpoint::AxiomFamily{
            pinpoint::union_of_all_justifications(oracle, g, core).union_set};
      }
      case pinpoint::Method::kHst:
        return pinpoint::AxiomFamily{pinpoint::enumerate_justifications_hst(oracle, g).union_set};
      case pinpoint::Method::kMusMembership:
        return pinpoint::AxiomFamily{pinpoint::union_via_membership(o->value, g).union_set};
      case pinpoint::Method::kBruteForce:
        return pinpoint::AxiomFamily{pinpoint::brute_force_justifications(oracle, g).union_set};
    }
    return pinpoint::AxiomFamily{};
  });
}

pp_status pp_justifications(const pp_ontology* o, const char* goal, pp_sets** out) {
  return sets_query(o, goal, out, [](pinpoint::EntailmentOracle& oracle, const pinpoint::Gci& g) {
    return pinpoint::enumerate_all_justifications(oracle, g);
  });
}

pp_status pp_repairs(const pp_ontology* o, const char* goal, pp_sets** out) {
  return sets_query(o, goal, out, [](pinpoint::EntailmentOracle& oracle, const pinpoint::Gci& g) {
    return pinpoint::optimal_repairs(oracle, g).repairs;
  });
}

pp_status pp_trace(const pp_ontology* o, const char* goal, char** out) {
  if (out == nullptr) return fail(PP_ERR_INVALID_ARGUMENT, "null output");
  *out = nullptr;
  return with_goal(o, goal, [&](pinpoint::EntailmentOracle&, const pinpoint::Gci& g) {
    *out = copy_string(pinpoint::saturate_with_tracing(o->value, g).dump(o->value));
  });
}

pp_status pp_dimacs(const pp_ontology* o, const char* goal, char** out) {
  if (out == nullptr) return fail(PP_ERR_INVALID_ARGUMENT, "null output");
  *out = nullptr;
  return with_goal(o, goal, [&](pinpoint::EntailmentOracle&, const pinpoint::Gci& g) {
    *out = copy_string(pinpoint::to_dimacs(pinpoint::encode(o->value, g), o->value));
  });
}

pp_status pp_bench(const char* dir, const char* methods, const char* out_path, int timing,
                   pp_bench_summary* summary) {
  pinpoint::BenchSummary s;
  pp_status status = guarded([&] {
    require(dir != nullptr && methods != nullptr && out_path != nullptr, "null argument");
    std::vector<pinpoint::Method> list;
    std::stringstream in(methods);
    std::string name;
    while (std::getline(in, name, ',')) {
      if (!name.empty()) list.push_back(pinpoint::parse_method(name));
    }
    require(!list.empty(), "no methods given");
    s = pinpoint::run_bench(dir, list, out_path, pinpoint::BenchOptions{timing != 0});
  });
  if (summary != nullptr) *summary = {s.ontologies, s.goals, s.rows, s.disagreements};
  if (status == PP_OK && s.disagreements > 0) {
    return fail(PP_ERR_DISAGREEMENT,
                std::to_string(s.disagreements) + " goals with disagreeing unions");
  }
  return status;
}

}  // extern "C"
