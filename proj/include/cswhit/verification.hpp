#pragma once

#include <filesystem>
#include <json.hpp>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cswhit/lattice.hpp"
#include "cswhit/root_datum.hpp"

namespace cswhit {

// Result of one identity suite: how many instances ran, whether all held,
// and on failure a counterexample rendered precisely enough to reproduce.
struct SuiteResult {
  std::string name;
  std::string description;
  long instances = 0;
  bool passed = true;
  std::string counterexample;
  long millis = 0;
};

struct VerificationReport {
  std::string type;
  int bound = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  int bound = 3;
  unsigned seed = 20240601;
  int random_instances = 200;  // per simple reflection in the kernel suite
  std::optional<std::filesystem::path> cache_dir;
};

// Runs every identity suite for one root datum. Deterministic for a fixed
// seed; all checks are exact.
VerificationReport run_verification(const RootDatum& datum, const VerifyOptions& opts);

// Randomized inputs shared by the suites and the test binaries.
LatticeElement random_lattice_element(std::mt19937& rng, int rank, int coord_bound, int max_terms);
Scalar random_scalar(std::mt19937& rng);

}  // namespace cswhit
