#include "qseries/products.hpp"

#include <string>

namespace qseries {

namespace {

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw Error(std::string(what) + " must be >= 1, got " + std::to_string(v));
}

}  // namespace

LaurentSeries pentagonal_series(std::int64_t m, Ring ring, std::int64_t T) {
  require_positive(m, "pentagonal step");
  require_positive(T, "truncation");
  std::vector<BigInt> c(static_cast<std::size_t>(T));
  c[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t lo = m * (k * (3 * k - 1) / 2);
    if (lo >= T) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(lo)] += sign;
    const std::int64_t hi = m * (k * (3 * k + 1) / 2);
    if (hi < T) c[static_cast<std::size_t>(hi)] += sign;
  }
  return LaurentSeries(ring, 0, std::move(c));
}

LaurentSeries euler_factor(std::int64_t a, std::int64_t m, std::int64_t e, Ring ring,
                           std::int64_t T) {
  require_positive(a, "euler_factor start");
  require_positive(m, "euler_factor step");
  require_positive(T, "truncation");
  if (a == m) return pow(pentagonal_series(m, ring, T), e);

  // Multiply (or divide) by each binomial 1 - q^k in place, |e| times.
  auto run = [&](auto zero) {
    std::vector<decltype(zero)> c(static_cast<std::size_t>(T));
    c[0] = 1;
    const std::int64_t reps = e < 0 ? -e : e;
    for (std::int64_t k = a; k < T; k += m) {
      const auto s = static_cast<std::size_t>(k);
      for (std::int64_t rep = 0; rep < reps; ++rep) {
        if (e > 0) {
          for (std::size_t n = c.size() - 1; n >= s; --n) c[n] -= c[n - s];
        } else {
          for (std::size_t n = s; n < c.size(); ++n) c[n] += c[n - s];
        }
      }
    }
    return LaurentSeries(ring, 0, std::move(c));
  };
  // wrapping 64-bit words reduce correctly into any mod2k ring
  if (ring.is_exact()) return run(BigInt{});
  return run(std::uint64_t{});
}

LaurentSeries theta_f(std::int64_t x, std::int64_t y, Ring ring, std::int64_t T) {
  require_positive(x, "theta_f x");
  require_positive(y, "theta_f y");
  require_positive(T, "truncation");
  std::vector<BigInt> c(static_cast<std::size_t>(T));
  c[0] = 1;
  // For n > 0 the exponent x n(n+1)/2 + y n(n-1)/2 grows with n; for n = -k
  // it is x k(k-1)/2 + y k(k+1)/2, also growing with k.
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t pos = x * (k * (k + 1) / 2) + y * (k * (k - 1) / 2);
    const std::int64_t neg = x * (k * (k - 1) / 2) + y * (k * (k + 1) / 2);
    if (pos >= T && neg >= T) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    if (pos < T) c[static_cast<std::size_t>(pos)] += sign;
    if (neg < T) c[static_cast<std::size_t>(neg)] += sign;
  }
  return LaurentSeries(ring, 0, std::move(c));
}

}  // namespace qseries
