#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qseries/dissection.hpp"
#include "qseries/eta_quotient.hpp"

namespace qseries {

/// The four 5-colored overpartition families modulo 8. With
/// P = 3^(2a) 5^(2b) 7^(2c) the printed streams and right-hand sides are
///
///   Inf   pbar(8P n + 2P)          == 4 f1^6
///   Inf2  pbar(24P n + 18P)        == 4 f3^6
///   Inf3  pbar(40P n + 10P)        == 4 q f5^6
///   Inf4  pbar(56P n + 14P)        == 4 q f7^6
enum class FamilyVariant { Inf, Inf2, Inf3, Inf4 };

std::string to_string(FamilyVariant v);
FamilyVariant parse_family_variant(std::string_view text);

struct FamilyInstance {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  FamilyVariant variant = FamilyVariant::Inf;
};

/// Progression exactly as stated for the variant.
Progression printed_progression(const FamilyInstance& fi);

/// Progression reached from the Inf stream pbar(8P n + 2P) by the single
/// extraction the induction uses: n -> 3n + 2, 5n + 1 or 7n + 5.
Progression derived_progression(const FamilyInstance& fi);

/// 4 * q^shift * f_d^6 for the variant's modulus d; several candidates when
/// the printed q factor is in doubt (printed form first).
struct RhsForm {
  std::string label;
  EtaQuotient quotient;
};
std::vector<RhsForm> rhs_candidates(FamilyVariant v);

struct FamilyReport {
  FamilyInstance instance;
  std::int64_t n_max = 0;
  Progression printed{1, 0};
  /// Printed progression against the printed right-hand side.
  IdentityReport printed_check;
  bool matched = false;
  /// The (progression, right-hand side) pair that matched, first in the
  /// order printed/derived x candidates; empty when nothing matched.
  std::optional<Progression> selected_progression;
  std::string selected_rhs;
};

inline constexpr std::int64_t kDefaultFamilyBudget = 100000;

/// Largest n_max with s n_max + o <= budget for every progression tried.
std::int64_t max_family_n(const FamilyInstance& fi, std::int64_t budget = kDefaultFamilyBudget);

/// Compares sum_n pbar_{-5}(s n + o) q^n, n = 0..n_max, with the variant's
/// right-hand side mod 8. If the printed form fails, the derived progression
/// and the alternative q factor are tried and the selection is recorded.
FamilyReport verify_family_instance(const FamilyInstance& fi, std::int64_t n_max,
                                    std::int64_t budget = kDefaultFamilyBudget);

/// As above with a precomputed overpartition_gf(5) mod 8.
FamilyReport verify_family_instance(const FamilyInstance& fi, std::int64_t n_max,
                                    const LaurentSeries& gf_mod8);

/// 4 f4^179 / (f1^78 f2^36 f8^70).
EtaQuotient eq1_quotient();

/// Three checks, each through T:
///   [0] extract(pbar_{-5}, 8n+2) == 4 * quotient (mod 8)
///   [1] 4 * quotient == 4 f1^6 (mod 8)
///   [2] extract(p_{-5}, 8n+2) == 4 * quotient (mod 8), the plain colored
///       partition reading of the same statement (informational)
std::vector<IdentityReport> verify_eq1(std::int64_t T, const EtaQuotient& quotient = eq1_quotient());

/// The finite identities behind one induction step on 4 f1^6 mod 8, each
/// through T. base 3: 4f1^6 == 4f3^2 + 4q^2 f9^6, 3n+2 gives 4f3^6, then 3n
/// gives 4f1^6. base 5: the 5-dissection form of 4f1^6, 5n+1 gives 4q f5^6,
/// 5n+1 again gives 4f1^6. base 7: the 7-dissection form, 7n+5 gives
/// 4q f7^6, 7n+1 gives 4f1^6.
std::vector<IdentityReport> verify_induction_step(int base, std::int64_t T);

}  // namespace qseries
