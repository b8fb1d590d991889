#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/dissection.hpp"
#include "qseries/eta_quotient.hpp"

namespace qseries {

/// One Ramanujan-Kolberg witness: the claim that
///
///   prefactor(q) * prod_{j' in pset} sum_n a(m n + j') q^n = sum_i poly[i] * hauptmodul^i
///
/// where sum a(n) q^n = prod_{delta | M} f_delta^(r_delta). The level N of the
/// modular curve is carried as data; it is not recomputed.
struct WitnessCertificate {
  std::string id;
  std::int64_t level_n = 1;
  std::int64_t M = 1;
  std::map<std::int64_t, std::int64_t> r;
  std::int64_t m = 1;
  std::int64_t j = 0;
  std::vector<std::int64_t> pset;
  EtaQuotient prefactor;
  EtaQuotient hauptmodul;
  std::vector<BigInt> poly;  // poly[i] multiplies hauptmodul^i
  BigInt claimed_common_factor = 1;

  friend bool operator==(const WitnessCertificate&, const WitnessCertificate&) = default;
};

/// Throws Error when an invariant fails: j in pset, pset within [0, m),
/// nonempty poly, r keys dividing M, claimed factor dividing every coefficient.
void validate(const WitnessCertificate& c);

struct CommonFactor {
  BigInt gcd;                              // 0 for an all-zero polynomial
  std::optional<int> two_adic_valuation;   // undefined when gcd is 0
};

CommonFactor certificate_common_factor(const WitnessCertificate& c);

struct WitnessReport {
  std::string id;
  std::int64_t truncation = 0;
  bool identity_matched = false;
  std::optional<Mismatch> first_mismatch;
  BigInt gcd_of_poly;
  std::optional<int> two_adic_valuation;
  std::optional<BigInt> implied_modulus;  // 2^two_adic_valuation
  bool claimed_factor_divides = false;
};

/// Checks the witness identity over Z at every exponent below T, negative
/// exponents included. Input truncations are derived so both sides are known
/// through T. This is truncation-bounded evidence, not a modularity proof.
/// A claimed common factor that fails to divide the polynomial is reported,
/// not thrown; the other invariants of validate() are enforced.
WitnessReport verify_witness(const WitnessCertificate& c, std::int64_t T);

/// The t = 5, 8n + 7 certificate: N = 8, {M, r} = {2, {-10, 5}}, m = 8,
/// P = {7}, a degree-17 polynomial with common factor 128.
WitnessCertificate builtin_certificate();

/// Line-oriented certificate text; see docs/certificate-format.md.
WitnessCertificate parse_certificate(std::string_view text);
std::string serialize_certificate(const WitnessCertificate& c);
WitnessCertificate load_certificate(const std::filesystem::path& path);

}  // namespace qseries
