#pragma once

// Randomized property checks for semilinear modules over W_n(F_{p^D}):
// surjectivity of 1 - Phi, reduction of fixed modules mod p, injectivity of
// M^{1-Phi} (x) W_n -> M with Phi nilpotent on the cokernel, and the trace
// identity between M^{1-Phi} and M.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lefschetz/semilinear.hpp"

namespace lefschetz {

struct LemmaConfig {
  std::uint32_t p = 2;
  int n = 1;
  int D = 1;
};

struct LemmaCase {
  SemilinearModule module;
  RingMatrix phi;
  bool structured = false;
  std::uint64_t seed = 0;  // drives the right-hand side y of the surjectivity check
};

/// One random module with its endomorphism phi = c0 + c1 F + c2 F^2.
/// Rank is uniform in 1..max_rank. Uniform draws whose fixed module would
/// not stabilize inside the field budget are replaced by structured draws;
/// `replaced` counts those.
LemmaCase random_lemma_case(const LemmaConfig& config, std::mt19937_64& rng, int max_rank, int& replaced);

struct LemmaCaseOutcome {
  bool surjective = true;      // 1 - Phi hits a random y
  bool surjective_mod_p = false;  // only shown on M / pM (full layer over budget)
  bool surjectivity_skipped = false;  // neither fit in the field budget
  bool reduction = true;       // fixed(M) mod p == fixed(M / pM)
  bool injective = true;       // fixed (x) W_n -> M
  bool nilpotent = true;       // Phi nilpotent on the cokernel within r D n steps
  bool functorial = true;      // restriction of Phi o Phi equals R^2
  bool trace = true;           // equality for m in [N, N + 4]
  bool n1_threshold = true;    // n = 1 gives N = 1
  int threshold = 1;
  int empirical_start = 1;
  int extension_degree = 1;

  bool ok() const { return surjective && reduction && injective && nilpotent && functorial && trace && n1_threshold; }
  std::string failures() const;
};

LemmaCaseOutcome check_lemma_case(const LemmaCase& c);

struct LemmaSuiteResult {
  LemmaConfig config;
  int modules = 0;
  int structured = 0;
  int replaced = 0;
  int failures = 0;
  int max_extension = 1;
  int max_threshold = 1;
  int surjective_mod_p = 0;
  int surjectivity_skipped = 0;
  std::vector<std::string> failure_details;
};

/// `per_config` modules for each configuration; deterministic for a seed
/// regardless of `threads`.
std::vector<LemmaSuiteResult> run_lemma_suite(const std::vector<LemmaConfig>& configs, int per_config,
                                              std::uint64_t seed, int max_rank = 3, int threads = 0);

/// p in {2, 3, 5}, n in {1, 2, 3}, D in {1, 2}.
std::vector<LemmaConfig> default_lemma_configs();

}  // namespace lefschetz
