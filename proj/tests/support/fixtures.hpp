#pragma once

#include <string>
#include <vector>

#include "pinpoint/harness.hpp"
#include "pinpoint/ontology.hpp"
#include "pinpoint/syntax.hpp"

namespace fixtures {

inline const char* const kO1 =
    "(sub A B)\n"
    "(sub B C)\n"
    "(sub A C)\n"
    "(sub A (some r D))\n";

inline const char* const kO2 =
    "(sub A B)\n"
    "(sub B C)\n";

inline const char* const kO3 =
    "(sub A B)\n"
    "(sub B C)\n"
    "(sub B D)\n"
    "(sub D C)\n";

inline pinpoint::Ontology o1() { return pinpoint::parse_ontology(kO1); }
inline pinpoint::Ontology o2() { return pinpoint::parse_ontology(kO2); }
inline pinpoint::Ontology o3() { return pinpoint::parse_ontology(kO3); }

inline pinpoint::Gci goal(const char* text) { return pinpoint::parse_gci(text); }

inline pinpoint::AxiomSet ids(const pinpoint::Ontology& o, std::vector<std::string> names) {
  return o.select(names);
}

inline pinpoint::AxiomFamily family(const pinpoint::Ontology& o,
                                    std::vector<std::vector<std::string>> sets) {
  pinpoint::AxiomFamily f;
  for (auto& s : sets) f.push_back(o.select(s));
  pinpoint::normalize_family(f);
  return f;
}

/// Generated instances shared by the property tests.
struct Instance {
  std::uint64_t seed;
  pinpoint::Profile profile;
  pinpoint::Ontology ontology;
};

inline std::vector<Instance> suite(std::uint64_t seeds, std::size_t base_size = 6) {
  std::vector<Instance> out;
  for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
    for (auto profile : {pinpoint::Profile::kEL, pinpoint::Profile::kALC}) {
      out.push_back({seed, profile,
                     pinpoint::generate_ontology(seed, base_size + seed % 4, profile)});
    }
  }
  return out;
}

}  // namespace fixtures
