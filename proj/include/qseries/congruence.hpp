#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qseries/dissection.hpp"
#include "qseries/series.hpp"

namespace qseries {

enum class ClaimSource { Theorem5col, Theorem7col, Theorem11col, Theorem13col, Conjecture, UserSupplied };

std::string to_string(ClaimSource source);

/// pbar_{-t}(m n + j) == 0 (mod 2^k) for all n >= 0.
struct CongruenceClaim {
  std::int64_t t = 1;
  std::int64_t m = 1;
  std::int64_t j = 0;
  int k = 1;
  ClaimSource source = ClaimSource::UserSupplied;

  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

/// Validates 0 <= j < m, t >= 1 and 1 <= k <= 64.
CongruenceClaim make_claim(std::int64_t t, std::int64_t m, std::int64_t j, int k,
                           ClaimSource source = ClaimSource::UserSupplied);

struct Counterexample {
  std::int64_t n;
  std::uint64_t value;  // pbar_{-t}(m n + j) mod 2^k, nonzero
};

struct ClaimReport {
  CongruenceClaim claim;
  std::int64_t n_max = 0;
  bool holds = false;
  std::optional<Counterexample> counterexample;
  /// Smallest 2-adic valuation among the checked coefficients, as far as the
  /// working ring resolves it; nullopt when all of them vanish there.
  std::optional<int> min_valuation;
  /// Bits of the ring the coefficients were inspected in.
  int ring_bits = 0;
  double elapsed_ms = 0;
};

inline constexpr std::int64_t kDefaultNMax = 2000;

/// Expands overpartition_gf(t) mod 2^k through q^(m n_max + j) and checks
/// every coefficient of the progression for n = 0..n_max.
ClaimReport check_claim(const CongruenceClaim& claim, std::int64_t n_max);

/// Same check against a precomputed overpartition_gf(claim.t), in the exact
/// ring or a mod2k ring with at least claim.k bits.
ClaimReport check_claim(const CongruenceClaim& claim, std::int64_t n_max, const LaurentSeries& gf);

/// The 24 congruences for t = 5, 7, 11, 13 in theorem order.
std::vector<CongruenceClaim> theorem_claims();

/// The seven conjectured congruences instantiated at t = q.
std::vector<CongruenceClaim> conjecture_claims(std::int64_t q);

/// Checks claims, sharing one generating-function expansion per t (done mod
/// 2^64 and reduced, which is equivalent to expanding mod 2^k). Color counts
/// are distributed over `workers` threads; reports come back sorted by
/// (t, m, j, k) whatever the worker count.
std::vector<ClaimReport> run_claims(const std::vector<CongruenceClaim>& claims,
                                    std::int64_t n_max, unsigned workers = 1);

std::vector<ClaimReport> run_theorems(std::int64_t n_max = kDefaultNMax, unsigned workers = 1);

/// Trial division; q must be <= 10^4.
bool is_prime(std::int64_t q);

/// Throws for non-prime q. Failures are verdicts in the reports.
std::vector<ClaimReport> scan_conjecture(std::int64_t q, std::int64_t n_max, unsigned workers = 1);

/// Counts t-colored overpartitions of n by enumerating multisets of
/// (part, color) classes; each occupied class contributes the choice of
/// overlining its first copy. Bounded to n <= 14, t <= 5.
std::uint64_t enumerate_colored_overpartitions(int t, int n);

/// f_m^(2^k) == f_{2m}^(2^(k-1)) (mod 2^k) through T.
IdentityReport check_lift_congruence(std::int64_t m, int k, std::int64_t T);

}  // namespace qseries
