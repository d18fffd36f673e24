#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "obstrukt/fincat.hpp"
#include "obstrukt/io.hpp"

namespace obk {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> lines;  // deterministic detail lines
};

std::vector<std::string> verify_suite_names();

// Runs one verification suite. Each suite encodes one acceptance property of
// the workbench: it exits pass=false only when a theorem-level check fails.
// fixtures_dir (optional) lets the io suite compare against files on disk.
SuiteResult run_verify_suite(const std::string& name, uint64_t seed, long long budget,
                             const std::string& fixtures_dir = "");

// The OPEXT classification data of a module universe encoded as finite
// categories: objects are cohomology-class representative extensions, arrows
// all extension morphisms, over the category of modules and the category of
// their acting groups.
FOFTriple encode_opext_universe(const std::vector<AbelianAction>& modules, long long budget = 0);

}  // namespace obk
