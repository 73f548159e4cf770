#pragma once
// Batch verification suites driven by the CLI `verify` subcommand and the
// acceptance gate.  Every suite is deterministic given the seed.

#include <cstdint>
#include <string>
#include <vector>

namespace t1kit {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0, failures = 0;
  std::vector<std::string> messages;  // first few failure details
  bool ok() const { return failures == 0; }
};

// {axioms, lengths, translation, stdlib-oracles, php, frege-sim, encoding,
//  soundness, bsvp, triplets}
std::vector<std::string> suite_names();

// data_dir must contain corpus/ for the frege-sim suite; unused elsewhere.
SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                      const std::string& data_dir);

std::string format_suite(const SuiteResult& r);

}  // namespace t1kit
