#include "qseries/dissection.hpp"

#include <algorithm>
#include <functional>

#include "qseries/eta_quotient.hpp"
#include "qseries/products.hpp"

namespace qseries {

Progression::Progression(std::int64_t step, std::int64_t residue)
    : step_(step), residue_(residue) {
  if (step < 1) throw Error("progression step must be >= 1");
  if (residue < 0 || residue >= step) {
    throw Error("progression residue " + std::to_string(residue) + " outside [0, " +
                std::to_string(step) + ")");
  }
}

Progression compose(const Progression& first, const Progression& second) {
  return Progression(first.step() * second.step(),
                     first.residue() + first.step() * second.residue());
}

bool all_matched(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return r.matched; });
}

IdentityReport compare_series(std::string name, const LaurentSeries& lhs, const LaurentSeries& rhs,
                              std::int64_t T) {
  if (lhs.ring() != rhs.ring()) throw Error(name + ": ring mismatch");
  if (lhs.trunc() < T || rhs.trunc() < T) {
    throw Error(name + ": insufficient truncation to compare through q^" + std::to_string(T) +
                " (lhs " + std::to_string(lhs.trunc()) + ", rhs " + std::to_string(rhs.trunc()) +
                ")");
  }
  IdentityReport report{std::move(name), T, true, std::nullopt};
  for (std::int64_t e = std::min(lhs.offset(), rhs.offset()); e < T; ++e) {
    BigInt a = lhs.coefficient(e);
    BigInt b = rhs.coefficient(e);
    if (a != b) {
      report.matched = false;
      report.first_mismatch = Mismatch{e, std::move(a), std::move(b)};
      break;
    }
  }
  return report;
}

LaurentSeries extract(const LaurentSeries& a, const Progression& p) {
  const std::int64_t m = p.step();
  const std::int64_t j = p.residue();
  for (std::int64_t e = a.offset(); e < std::min<std::int64_t>(0, a.trunc()); ++e) {
    if (sgn(a.coefficient(e)) != 0) {
      throw Error("extract: nonzero coefficient at negative exponent " + std::to_string(e));
    }
  }
  if (a.trunc() <= j) {
    throw Error("extract: series truncated at " + std::to_string(a.trunc()) +
                " holds no coefficient of the progression");
  }
  const std::int64_t len = (a.trunc() - j + m - 1) / m;
  std::vector<BigInt> out(static_cast<std::size_t>(len));
  for (std::int64_t n = 0; n < len; ++n) {
    out[static_cast<std::size_t>(n)] = a.coefficient(m * n + j);
  }
  return LaurentSeries(a.ring(), 0, std::move(out));
}

LaurentSeries rogers_ramanujan(Ring ring, std::int64_t T) {
  const auto num = euler_factor(1, 5, 1, ring, T) * euler_factor(4, 5, 1, ring, T);
  const auto den = euler_factor(2, 5, 1, ring, T) * euler_factor(3, 5, 1, ring, T);
  return divide(num, den);
}

namespace {

/// sign * q^e * body(T - e), or nothing when the shift reaches past T.
void add_term(std::optional<LaurentSeries>& acc, int sign, std::int64_t e, std::int64_t T,
              const std::function<LaurentSeries(std::int64_t)>& body) {
  if (e >= T) return;
  LaurentSeries term = body(T - e).shifted(e);
  if (sign < 0) term = -term;
  acc = acc ? *acc + term : term;
}

LaurentSeries unit(Ring ring, std::int64_t T) { return LaurentSeries::one(ring, T); }

LaurentSeries theta_quotient(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2,
                             Ring ring, std::int64_t T) {
  return divide(theta_f(x1, y1, ring, T), theta_f(x2, y2, ring, T));
}

}  // namespace

LaurentSeries dissection3_rhs(Ring ring, std::int64_t T) {
  std::optional<LaurentSeries> acc;
  add_term(acc, 1, 0, T, [&](std::int64_t t) { return pentagonal_series(3, ring, t); });
  add_term(acc, 1, 1, T, [&](std::int64_t t) { return pow(pentagonal_series(9, ring, t), 3); });
  return *acc;
}

LaurentSeries dissection5_rhs(Ring ring, std::int64_t T) {
  std::optional<LaurentSeries> acc;
  auto r5 = [&](std::int64_t t) { return substitute_qpow(rogers_ramanujan(ring, (t + 4) / 5), 5).truncated(t); };
  add_term(acc, 1, 0, T, [&](std::int64_t t) { return inverse(r5(t)); });
  add_term(acc, -1, 1, T, [&](std::int64_t t) { return unit(ring, t); });
  add_term(acc, -1, 2, T, r5);
  return mul(pentagonal_series(25, ring, T), *acc);
}

LaurentSeries dissection7_bracket(Ring ring, std::int64_t T) {
  std::optional<LaurentSeries> acc;
  add_term(acc, 1, 0, T, [&](std::int64_t t) { return theta_quotient(14, 35, 7, 42, ring, t); });
  add_term(acc, -1, 1, T, [&](std::int64_t t) { return theta_quotient(21, 28, 14, 35, ring, t); });
  add_term(acc, -1, 2, T, [&](std::int64_t t) { return unit(ring, t); });
  add_term(acc, 1, 5, T, [&](std::int64_t t) { return theta_quotient(7, 42, 21, 28, ring, t); });
  return *acc;
}

LaurentSeries dissection7_rhs(Ring ring, std::int64_t T) {
  return mul(pentagonal_series(49, ring, T), dissection7_bracket(ring, T));
}

IdentityReport dissection3_f1cubed(std::int64_t T) {
  const Ring r = Ring::mod2k(1);
  return compare_series("dissection3_f1cubed", pow(pentagonal_series(1, r, T), 3),
                        dissection3_rhs(r, T), T);
}

IdentityReport dissection5(std::int64_t T) {
  const Ring r = Ring::exact();
  return compare_series("dissection5", pentagonal_series(1, r, T), dissection5_rhs(r, T), T);
}

IdentityReport dissection7(std::int64_t T) {
  const Ring r = Ring::exact();
  return compare_series("dissection7", pentagonal_series(1, r, T), dissection7_rhs(r, T), T);
}

LaurentSeries ramanathan_bracket(std::int64_t n, Ring ring, std::int64_t T) {
  if (n < 5 || (n % 6 != 1 && n % 6 != 5)) {
    throw Error("ramanathan: n must be >= 5 with n == +-1 (mod 6), got " + std::to_string(n));
  }
  const bool plus_case = n % 6 == 1;  // n = 6g + 1
  const std::int64_t g = plus_case ? (n - 1) / 6 : (n + 1) / 6;
  const std::int64_t n2 = n * n;
  const int g_sign = g % 2 == 0 ? 1 : -1;

  std::optional<LaurentSeries> acc;
  add_term(acc, g_sign, (n2 - 1) / 24, T, [&](std::int64_t t) { return unit(ring, t); });
  for (std::int64_t k = 1; k <= (n - 1) / 2; ++k) {
    const std::int64_t d = k - g;
    const std::int64_t e = plus_case ? d * (3 * d - 1) / 2 : d * (3 * d + 1) / 2;
    const int sign = (k + g) % 2 == 0 ? 1 : -1;
    add_term(acc, sign, e, T, [&](std::int64_t t) {
      return theta_quotient(2 * n * k, n2 - 2 * n * k, n * k, n2 - n * k, ring, t);
    });
  }
  if (!acc) return LaurentSeries::zero(ring, 0, T);
  return *acc;
}

IdentityReport ramanathan(std::int64_t n, std::int64_t T) {
  const Ring r = Ring::exact();
  const auto bracket = ramanathan_bracket(n, r, T);
  return compare_series("ramanathan(" + std::to_string(n) + ")", pentagonal_series(1, r, T),
                        mul(pentagonal_series(n * n, r, T), bracket), T);
}

}  // namespace qseries
