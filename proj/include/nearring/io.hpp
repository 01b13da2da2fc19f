#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "nearring/nearring.hpp"
#include "nearring/regularity.hpp"
#include "nearring/theorems.hpp"

namespace nearring::io {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;

struct LoadedNearring {
  FiniteNearring nearring;
  std::string name;
};

// Parsed tables before the axiom scan; the identity-at-0 file rule has
// already been enforced.
struct RawNearringFile {
  int order;
  std::vector<int> add;
  std::vector<int> mul;
  std::string name;
};

// Parses either format without running the axiom scan (the `check`
// subcommand reports axiom verdicts as its result). Throws ParseError only.
RawNearringFile load_raw(const std::filesystem::path& path);

// Parses either format, validates (element 0 must be the additive identity,
// then the full axiom scan) and returns the instance. Throws ParseError on
// malformed input and AxiomViolationError when the tables parse but violate
// the axioms.
LoadedNearring load(const std::filesystem::path& path);

// Text format (.nr): header "nearring v1 order=N [name=STR]", the add block,
// a blank line, the mul block.
LoadedNearring parse_text(const std::string& content);

// Canonical format (.nr.json): fixed key order, integers only.
LoadedNearring parse_json(const std::string& content);

std::string to_text(const FiniteNearring& nr, const std::string& name);
std::string to_json(const FiniteNearring& nr, const std::string& name);

// Writes the format implied by the extension (.json => canonical).
void save(const FiniteNearring& nr, const std::string& name,
          const std::filesystem::path& path);

// Report serialization: canonical ordered keys, sorted lists, no clocks.
nlohmann::ordered_json subset_json(const Subset& s);
nlohmann::ordered_json failures_json(const std::vector<AxiomFailure>& failures);
nlohmann::ordered_json certificate_json(const RegularityCertificate& cert);
nlohmann::ordered_json witness_json(const DecompositionWitness& w);
nlohmann::ordered_json report_json(const TheoremReport& r);

}  // namespace nearring::io
