#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "qseries/series.hpp"

namespace qseries {

/// q^qshift * prod_{delta | level} f_delta^(r_delta), with f_k = (q^k; q^k)_inf.
///
/// No q^(delta/24) eta prefactors are implied: every power of q is explicit
/// in qshift, so all exponents stay integral. Zero exponents are not stored.
struct EtaQuotient {
  std::int64_t level = 1;
  std::map<std::int64_t, std::int64_t> exponents;
  std::int64_t qshift = 0;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;
};

/// Validates that every divisor divides `level` and drops zero exponents.
EtaQuotient make_eta_quotient(std::int64_t level, std::map<std::int64_t, std::int64_t> exponents,
                              std::int64_t qshift = 0);

/// Parses the textual notation
///
///   quotient := term ('*' term)*
///   term     := 'q' ['^' int] | 'f' digits ['^' int] | '1'
///   int      := ['+' | '-'] digits
///
/// e.g. "q^-17 * f1^79 * f2^-38 * f4^36 * f8^-72". Whitespace between tokens
/// is ignored; repeated factors accumulate. The level is the lcm of the
/// divisors that appear (1 for a bare power of q).
EtaQuotient parse_eta_quotient(std::string_view text);

/// Canonical form: q term first (omitted when qshift is 0, bare q for 1), then f terms by
/// increasing divisor; "1" for the empty product.
std::string to_string(const EtaQuotient& eq);

/// Union of the exponent maps; levels combine by lcm, shifts add.
EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b);

/// Expansion truncated at T (> qshift). Each f_delta^(r_delta) comes from the
/// pentagonal series; factors are applied in increasing delta.
LaurentSeries expand(const EtaQuotient& eq, Ring ring, std::int64_t T);

/// f_2^t / f_1^(2t): the coefficient of q^n counts t-colored overpartitions of n.
LaurentSeries overpartition_gf(std::int64_t t, Ring ring, std::int64_t T);

/// 1 / f_1^t: the coefficient of q^n counts t-colored partitions of n.
LaurentSeries colored_partition_gf(std::int64_t t, Ring ring, std::int64_t T);

}  // namespace qseries
