#ifndef VALENCE_TRANSFER_HPP
#define VALENCE_TRANSFER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "valence/forms.hpp"

namespace valence {

/// One trial of the transfer experiment: a random homogeneous form of
/// degree d in d^2+1 variables with mirrored coefficients c * pi^e
/// (c a unit, e in {0,1}), searched for primitive zeros modulo pi^(m+1)
/// on both sides, F_p((t)) and Q_p.
struct TransferTrial {
  int trial = 0;
  bool padic_found = false;
  bool series_found = false;
  bool budget_hit = false;
  std::string form_text;  // series-side text (t as the prime element)
};

struct TransferRow {
  std::int64_t p = 0;
  int both = 0, only_series = 0, only_padic = 0, neither = 0, budget = 0;
  std::vector<TransferTrial> disagreements;
};

struct TransferConfig {
  int degree = 2;
  std::vector<std::int64_t> primes{3, 5, 7};
  int trials = 25;
  int precision = 3;  // modulus exponent m: zeros modulo pi^(m+1)
  std::uint64_t seed = 17;
  long long budget = 20'000'000;
  int jobs = 1;
};

/// Runs the experiment. Trials are generated deterministically from
/// (seed, p, trial index), so results are reproducible and independent of
/// the parallelism level. This is an evidence harness at fixed (d, p, m),
/// not a verification of the transfer theorem.
std::vector<TransferRow> run_transfer(const TransferConfig& config);

}  // namespace valence

#endif
