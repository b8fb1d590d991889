#include "qseries/ring.hpp"

#include <charconv>

namespace qseries {

Ring Ring::mod2k(int k) {
  if (k < 1 || k > kMaxBits) {
    throw Error("mod2k ring needs 1 <= k <= 64, got " + std::to_string(k));
  }
  return Ring(k);
}

Ring Ring::parse(std::string_view text) {
  if (text == "exact") return exact();
  constexpr std::string_view prefix = "mod2k:";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return mod2k(k);
  }
  throw ParseError(0, "ring must be 'exact' or 'mod2k:K', got '" + std::string(text) + "'");
}

std::uint64_t Ring::reduce(const BigInt& x) const {
  if (is_exact()) throw Error("Ring::reduce called on the exact ring");
  mpz_class r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(bits_));
  // r < 2^64 fits in one limb on LP64
  return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

std::string Ring::to_string() const {
  return is_exact() ? "exact" : "mod2k:" + std::to_string(bits_);
}

int two_adic_valuation(const BigInt& x) {
  if (sgn(x) == 0) throw Error("2-adic valuation of zero is undefined");
  return static_cast<int>(mpz_scan1(x.get_mpz_t(), 0));
}

}  // namespace qseries
