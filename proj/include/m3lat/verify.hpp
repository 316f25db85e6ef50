#pragma once

// Named verification suites, one per lemma of the construction. Each returns a
// report with a replayable counterexample on failure; sampled suites record
// their seed.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "m3lat/finlat.hpp"
#include "m3lat/setalg.hpp"

namespace m3lat {

struct VerifyParams {
  /// Finite universe size for the subspace suites.
  Index n = 3;
  std::uint32_t p = 2;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  /// Support bound for the complement searches in B.
  Index bound = 8;
};

struct VerificationReport {
  std::string lemma;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;  // meaningful for sampled runs
  bool pass = true;
  nlohmann::json counterexample;  // null on pass
  nlohmann::json details = nlohmann::json::object();
  std::uint64_t elapsed_ms = 0;
};

/// All lemma ids in a fixed order.
const std::vector<std::string>& lemma_ids();
bool is_known_lemma(const std::string& id);

/// Throws std::invalid_argument for an unknown id.
VerificationReport run_lemma(const std::string& id, const VerifyParams& params);
std::vector<VerificationReport> run_all(const VerifyParams& params);

nlohmann::json to_json(const VerificationReport& r, bool include_elapsed = true);

}  // namespace m3lat
