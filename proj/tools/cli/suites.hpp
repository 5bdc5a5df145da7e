#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace echlat::cli {

struct SuiteReport {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;  // first few failing cases
};

const std::vector<std::string>& suite_names();

// Seeded randomized property suite. Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t trials, std::uint64_t seed);

}  // namespace echlat::cli
