#pragma once

#include <cstdint>

#include "qseries/series.hpp"

namespace qseries {

/// f_m = (q^m; q^m)_inf through q^(T-1), from Euler's pentagonal number
/// theorem: sum over k in Z of (-1)^k q^(m k(3k-1)/2).
LaurentSeries pentagonal_series(std::int64_t m, Ring ring, std::int64_t T);

/// (q^a; q^m)_inf^e = prod_{i>=0} (1 - q^(a + m i))^e truncated at T.
LaurentSeries euler_factor(std::int64_t a, std::int64_t m, std::int64_t e, Ring ring,
                           std::int64_t T);

/// Ramanujan's f(-q^x, -q^y) = sum over n in Z of (-1)^n q^(x n(n+1)/2 + y n(n-1)/2).
LaurentSeries theta_f(std::int64_t x, std::int64_t y, Ring ring, std::int64_t T);
inline LaurentSeries theta_f(std::int64_t x, std::int64_t y, std::int64_t T) {
  return theta_f(x, y, Ring::exact(), T);
}

}  // namespace qseries
