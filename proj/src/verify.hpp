#pragma once

#include "util.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gk {

// One checked claim: an identifier, a short phrase saying what is claimed,
// the expected and computed values rendered as text, the outcome, and the
// wall time spent.
struct Claim {
  std::string id;
  std::string detail;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0.0;
};

struct VerifyOptions {
  // Subset of {"3x3", "3x4", "ab", "ppi", "complexity"}; empty = all.
  std::vector<std::string> sections;
  // (a, b) parameters for the ab section; empty = the five bundled pairs.
  std::vector<std::pair<long, long>> ab_pairs;
  int ppi_max_n = 7;      // ppi section covers n = 2..ppi_max_n, shifts c = 2..n-1
  std::string data_dir;   // empty = the build-time data directory
  Caps caps;
};

struct VerifyReport {
  std::vector<Claim> claims;
  bool all_pass() const;
};

// Run the bundled claim suite and return one row per claim.  Claims never
// throw: a computation error is recorded as a failing row.
VerifyReport verify_claims(const VerifyOptions& opt = {});

// Human-readable table (one line per claim) and machine-readable key=value
// rendering.
std::string render_claims(const VerifyReport& rep);
std::string render_porcelain(const VerifyReport& rep);

}  // namespace gk
