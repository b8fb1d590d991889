#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <variant>
#include <vector>

#include "qseries/ring.hpp"

namespace qseries {

/// Truncated Laurent series in q over a Ring.
///
/// Index i of the coefficient vector holds the coefficient of q^(offset + i);
/// exponents >= trunc() are unknown. The offset is representational only: the
/// leading stored coefficient may be zero. Values are immutable once built.
class LaurentSeries {
 public:
  using ExactCoeffs = std::vector<BigInt>;
  using WordCoeffs = std::vector<std::uint64_t>;

  /// Coefficients are reduced into `ring`. Throws if `coeffs` is empty.
  LaurentSeries(Ring ring, std::int64_t offset, std::vector<BigInt> coeffs);
  /// Mod2k rings only; words are masked into [0, 2^k).
  LaurentSeries(Ring ring, std::int64_t offset, std::vector<std::uint64_t> residues);

  static LaurentSeries zero(Ring ring, std::int64_t offset, std::int64_t trunc);
  static LaurentSeries one(Ring ring, std::int64_t trunc);
  static LaurentSeries monomial(Ring ring, const BigInt& c, std::int64_t exponent,
                                std::int64_t trunc);
  /// c0 + c1 q + c2 q^2 + ..., zero-padded up to trunc.
  static LaurentSeries polynomial(Ring ring, std::initializer_list<long> coeffs,
                                  std::int64_t trunc);

  const Ring& ring() const noexcept { return ring_; }
  std::int64_t offset() const noexcept { return offset_; }
  std::int64_t trunc() const noexcept { return offset_ + static_cast<std::int64_t>(size()); }
  std::size_t size() const noexcept;

  /// Zero below offset(); throws for exponents >= trunc().
  BigInt coefficient(std::int64_t exponent) const;

  /// First exponent with a nonzero coefficient; nullopt means the series is
  /// zero through its truncation.
  std::optional<std::int64_t> valuation() const;

  std::size_t nonzero_count() const;

  const ExactCoeffs& exact_coeffs() const;
  const WordCoeffs& word_coeffs() const;

  /// Drops every coefficient at exponent >= new_trunc (new_trunc <= trunc()).
  LaurentSeries truncated(std::int64_t new_trunc) const;
  /// Multiplication by q^s.
  LaurentSeries shifted(std::int64_t s) const;
  /// Same series with offset moved up to the valuation.
  LaurentSeries normalized() const;
  /// Image under Exact -> Mod2k or Mod2k(k) -> Mod2k(k') with k' <= k.
  LaurentSeries reduced(Ring target) const;
  LaurentSeries scaled(const BigInt& c) const;

 private:
  Ring ring_;
  std::int64_t offset_ = 0;
  std::variant<ExactCoeffs, WordCoeffs> coeffs_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a);

/// Product; trunc = min(a.trunc + b.offset, b.trunc + a.offset).
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  return mul(a, b);
}

/// Multiplicative inverse. The coefficient at the valuation must be a unit:
/// odd in Mod2k rings, +-1 in the exact ring.
LaurentSeries inverse(const LaurentSeries& a);

/// a / b without forming 1/b; cost is proportional to the nonzeros of b.
LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b);

LaurentSeries pow(const LaurentSeries& a, std::int64_t e);

/// acc * base^e. Uses repeated sparse multiplication or division when base has
/// few nonzero coefficients, otherwise pow() followed by mul().
LaurentSeries mul_pow(const LaurentSeries& acc, const LaurentSeries& base, std::int64_t e);

/// q -> q^d.
LaurentSeries substitute_qpow(const LaurentSeries& a, std::int64_t d);

/// Same ring, same truncation, equal coefficients at every exponent below it.
/// Offsets may differ.
bool operator==(const LaurentSeries& a, const LaurentSeries& b);

}  // namespace qseries
