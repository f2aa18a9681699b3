#pragma once

// The acceptance gate: one numbered criterion per release property, each
// with pinned tolerances, plus a canonical JSON manifest that must be
// byte-identical across runs with the same options.

#include <cstdint>
#include <string>
#include <vector>

namespace captor::verify {

inline constexpr const char* kVersion = "0.1.0";

// Carlson's symmetric elliptic integral R_F via the duplication theorem
// (Carlson 1995), used as an independent second route to the ellipsoid
// axis integral at d = 3: integral = 2 R_F(a_1^2, a_2^2, a_3^2).
double carlson_rf(double x, double y, double z);

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;    // deterministic numbers only
  double seconds = 0.0;  // measured wall time; deliberately not in manifest
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  long long walkers = 100000;
};

struct VerifyRun {
  std::vector<CriterionResult> results;
  bool all_passed = false;
  std::string manifest;  // canonical JSON, stable byte-for-byte
};

// Criteria 1 through 9.
VerifyRun run_acceptance(const VerifyOptions& opt = {});

// Criteria 1 through 10: runs the suite twice and adds the determinism
// criterion, which compares the two manifests byte for byte.
VerifyRun run_acceptance_with_determinism(const VerifyOptions& opt = {});

}  // namespace captor::verify
