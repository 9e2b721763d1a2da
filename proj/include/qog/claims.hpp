#ifndef QOG_CLAIMS_HPP
#define QOG_CLAIMS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qog {

inline constexpr std::uint64_t kDefaultSeed = 424242;

// One verifiable quantitative claim: pass iff every observed value is within
// tolerance of its expected counterpart.
struct ClaimReport {
  std::string claim_id;
  std::string description;
  std::string provenance;
  bool pass = false;
  std::vector<double> observed;
  std::vector<double> expected;
  double tolerance = 0.0;
};

// Optional scaling of the randomized draw counts; values below the built-in
// minimums are ignored so the defaults stay authoritative.
struct ClaimOptions {
  int min_samples = 0;
};

// Runs the whole claim battery with one seed; deterministic for a fixed
// seed. Order and ids are stable.
std::vector<ClaimReport> run_all_claims(std::uint64_t seed, const ClaimOptions& options = {});

bool all_pass(const std::vector<ClaimReport>& reports);

// JSON document for machine verification. Numeric values are rounded to 12
// significant digits; output is byte-stable for a fixed seed.
std::string claims_to_json(const std::vector<ClaimReport>& reports, std::uint64_t seed);

// Rounds to 12 significant digits (the JSON emission precision).
double round_12_sig(double x);

}  // namespace qog

#endif  // QOG_CLAIMS_HPP
