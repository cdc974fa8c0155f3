#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cayley/classify.hpp"

namespace cayley {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;  // first failing assertion, empty on pass
};

using VerifyLog = std::function<void(const std::string&)>;

/// Runs one reproduction criterion (1..8). `seed` feeds the randomized
/// corpora; deterministic for a fixed seed.
CriterionResult run_criterion(int id, std::uint64_t seed, const VerifyLog& log = {});

std::vector<std::string> verify_suite_names();
std::vector<int> suite_criteria(const std::string& suite);
std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed,
                                       const VerifyLog& log = {});

// randomized corpus helpers (shared with the property tests)
IntMatrix random_matrix(std::mt19937_64& rng, int n, int lo, int hi);
IntMatrix random_unimodular(std::mt19937_64& rng, int n, int ops = 8);
SignedPermutation random_signed_permutation(std::mt19937_64& rng, int n);

}  // namespace cayley
