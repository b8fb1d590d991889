#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qseries {

using BigInt = mpz_class;

/// Base class for every error raised by the library. Verification
/// failures are never reported through exceptions; they are verdicts.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (eta-quotient notation, certificate files).
/// `position` is a 0-based character offset or, for line-oriented formats,
/// a 1-based line number.
class ParseError : public Error {
 public:
  enum class Unit { Character, Line };

  ParseError(std::size_t position, const std::string& what, Unit unit = Unit::Character)
      : Error((unit == Unit::Line ? "line " : "at position ") + std::to_string(position) + ": " +
              what),
        position_(position),
        unit_(unit) {}

  std::size_t position() const noexcept { return position_; }
  Unit unit() const noexcept { return unit_; }

 private:
  std::size_t position_;
  Unit unit_;
};

/// Coefficient ring: exact integers, or integers modulo 2^k with 1 <= k <= 64.
///
/// Mod2k values are stored as canonical residues in [0, 2^k) inside a
/// 64-bit word. Arithmetic may run in wrapping 64-bit words and mask at the
/// end, since reduction Z/2^64 -> Z/2^k is a ring homomorphism.
class Ring {
 public:
  static constexpr int kMaxBits = 64;

  Ring() = default;

  static Ring exact() noexcept { return Ring(0); }
  static Ring mod2k(int k);

  /// Accepts "exact" or "mod2k:K".
  static Ring parse(std::string_view text);

  bool is_exact() const noexcept { return bits_ == 0; }
  int bits() const noexcept { return bits_; }
  std::uint64_t mask() const noexcept {
    return bits_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
  }

  /// Residue of x modulo 2^bits() in [0, 2^bits()). Mod2k rings only.
  std::uint64_t reduce(const BigInt& x) const;

  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  explicit Ring(int bits) : bits_(bits) {}
  int bits_ = 0;
};

/// 2-adic valuation of a nonzero integer.
int two_adic_valuation(const BigInt& x);

}  // namespace qseries
