#include "qseries/congruence.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <future>
#include <map>
#include <tuple>

#include "qseries/eta_quotient.hpp"
#include "qseries/products.hpp"

namespace qseries {

std::string to_string(ClaimSource source) {
  switch (source) {
    case ClaimSource::Theorem5col: return "theorem-t5";
    case ClaimSource::Theorem7col: return "theorem-t7";
    case ClaimSource::Theorem11col: return "theorem-t11";
    case ClaimSource::Theorem13col: return "theorem-t13";
    case ClaimSource::Conjecture: return "conjecture";
    case ClaimSource::UserSupplied: return "user";
  }
  return "unknown";
}

CongruenceClaim make_claim(std::int64_t t, std::int64_t m, std::int64_t j, int k,
                           ClaimSource source) {
  if (t < 1) throw Error("claim color count t must be >= 1");
  if (m < 1 || j < 0 || j >= m) throw Error("claim residue must satisfy 0 <= j < m");
  if (k < 1 || k > Ring::kMaxBits) throw Error("claim exponent k must be in [1, 64]");
  return CongruenceClaim{t, m, j, k, source};
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::int64_t needed_trunc(const CongruenceClaim& c, std::int64_t n_max) {
  return c.m * n_max + c.j + 1;
}

}  // namespace

ClaimReport check_claim(const CongruenceClaim& claim, std::int64_t n_max,
                        const LaurentSeries& gf) {
  if (n_max < 0) throw Error("n_max must be >= 0");
  const Ring& ring = gf.ring();
  if (!ring.is_exact() && ring.bits() < claim.k) {
    throw Error("ring " + ring.to_string() + " cannot decide divisibility by 2^" +
                std::to_string(claim.k));
  }
  if (gf.trunc() < needed_trunc(claim, n_max) || gf.offset() > 0) {
    throw Error("generating function is not known through q^" +
                std::to_string(needed_trunc(claim, n_max) - 1));
  }
  const auto start = Clock::now();
  ClaimReport report{claim, n_max, true, std::nullopt, std::nullopt, ring.bits(), 0};
  const Ring claim_ring = Ring::mod2k(claim.k);

  auto observe = [&](std::int64_t n, std::uint64_t residue, std::optional<int> v2) {
    if (v2 && (!report.min_valuation || *v2 < *report.min_valuation)) report.min_valuation = v2;
    if (residue != 0 && report.holds) {
      report.holds = false;
      report.counterexample = Counterexample{n, residue};
    }
  };

  const auto index = [&](std::int64_t n) {
    return static_cast<std::size_t>(claim.m * n + claim.j - gf.offset());
  };
  if (ring.is_exact()) {
    const auto& c = gf.exact_coeffs();
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const BigInt& x = c[index(n)];
      const auto v2 = sgn(x) == 0 ? std::nullopt : std::optional<int>(two_adic_valuation(x));
      observe(n, claim_ring.reduce(x), v2);
    }
  } else {
    const auto& c = gf.word_coeffs();
    const std::uint64_t mask = claim_ring.mask();
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const std::uint64_t x = c[index(n)];
      const auto v2 = x == 0 ? std::nullopt : std::optional<int>(std::countr_zero(x));
      observe(n, x & mask, v2);
    }
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

ClaimReport check_claim(const CongruenceClaim& claim, std::int64_t n_max) {
  if (n_max < 0) throw Error("n_max must be >= 0");
  const auto start = Clock::now();
  const auto gf = overpartition_gf(claim.t, Ring::mod2k(claim.k), needed_trunc(claim, n_max));
  ClaimReport report = check_claim(claim, n_max, gf);
  report.elapsed_ms = ms_since(start);
  return report;
}

std::vector<CongruenceClaim> theorem_claims() {
  struct Row {
    std::int64_t t;
    ClaimSource source;
    std::vector<std::pair<std::int64_t, int>> residues;  // (j, k)
  };
  const std::vector<Row> rows = {
      {5, ClaimSource::Theorem5col, {{1, 1}, {2, 2}, {3, 3}, {4, 1}, {5, 3}, {6, 3}, {7, 7}}},
      {7, ClaimSource::Theorem7col, {{1, 1}, {2, 4}, {3, 5}, {4, 1}, {7, 7}}},
      {11, ClaimSource::Theorem11col, {{1, 1}, {2, 3}, {3, 4}, {4, 1}, {7, 6}}},
      {13, ClaimSource::Theorem13col, {{1, 1}, {2, 2}, {3, 3}, {4, 1}, {5, 3}, {6, 3}, {7, 8}}},
  };
  std::vector<CongruenceClaim> claims;
  for (const auto& row : rows) {
    for (auto [j, k] : row.residues) claims.push_back(make_claim(row.t, 8, j, k, row.source));
  }
  return claims;
}

std::vector<CongruenceClaim> conjecture_claims(std::int64_t q) {
  std::vector<CongruenceClaim> claims;
  for (auto [j, k] : std::vector<std::pair<std::int64_t, int>>{
           {1, 1}, {2, 2}, {3, 3}, {4, 1}, {5, 3}, {6, 3}, {7, 5}}) {
    claims.push_back(make_claim(q, 8, j, k, ClaimSource::Conjecture));
  }
  return claims;
}

std::vector<ClaimReport> run_claims(const std::vector<CongruenceClaim>& claims,
                                    std::int64_t n_max, unsigned workers) {
  if (n_max < 0) throw Error("n_max must be >= 0");
  std::map<std::int64_t, std::vector<CongruenceClaim>> by_color;
  for (const auto& c : claims) by_color[c.t].push_back(c);

  auto run_group = [n_max](const std::vector<CongruenceClaim>& group) {
    const auto start = Clock::now();
    std::int64_t T = 1;
    for (const auto& c : group) T = std::max(T, needed_trunc(c, n_max));
    const auto gf = overpartition_gf(group.front().t, Ring::mod2k(64), T);
    const double expand_ms = ms_since(start);
    std::vector<ClaimReport> out;
    for (const auto& c : group) {
      out.push_back(check_claim(c, n_max, gf));
      out.back().elapsed_ms += expand_ms;
    }
    return out;
  };

  std::vector<std::vector<CongruenceClaim>> groups;
  for (auto& [t, g] : by_color) groups.push_back(std::move(g));

  std::vector<ClaimReport> reports;
  const std::size_t width = std::max(1u, workers);
  for (std::size_t begin = 0; begin < groups.size(); begin += width) {
    std::vector<std::future<std::vector<ClaimReport>>> batch;
    for (std::size_t i = begin; i < std::min(groups.size(), begin + width); ++i) {
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred,
                                 run_group, std::cref(groups[i])));
    }
    for (auto& f : batch) {
      auto part = f.get();
      reports.insert(reports.end(), part.begin(), part.end());
    }
  }
  std::sort(reports.begin(), reports.end(), [](const ClaimReport& a, const ClaimReport& b) {
    return std::tie(a.claim.t, a.claim.m, a.claim.j, a.claim.k) <
           std::tie(b.claim.t, b.claim.m, b.claim.j, b.claim.k);
  });
  return reports;
}

std::vector<ClaimReport> run_theorems(std::int64_t n_max, unsigned workers) {
  return run_claims(theorem_claims(), n_max, workers);
}

bool is_prime(std::int64_t q) {
  if (q > 10000) throw Error("primality check is limited to q <= 10^4");
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::vector<ClaimReport> scan_conjecture(std::int64_t q, std::int64_t n_max, unsigned workers) {
  if (!is_prime(q)) throw Error("conjecture scan needs a prime, got " + std::to_string(q));
  return run_claims(conjecture_claims(q), n_max, workers);
}

namespace {

/// Classes are visited in the order (value, color) = (v, 1..t), (v-1, 1..t), ...
std::uint64_t count_from(int remaining, int value, int color, int t) {
  if (remaining == 0) return 1;
  if (value == 0) return 0;
  const int next_value = color == t ? value - 1 : value;
  const int next_color = color == t ? 1 : color + 1;
  std::uint64_t total = 0;
  for (int copies = 0; copies * value <= remaining; ++copies) {
    const std::uint64_t rest = count_from(remaining - copies * value, next_value, next_color, t);
    // an occupied class either has its first copy overlined or not
    total += copies == 0 ? rest : 2 * rest;
  }
  return total;
}

}  // namespace

std::uint64_t enumerate_colored_overpartitions(int t, int n) {
  if (t < 1 || t > 5 || n < 0 || n > 14) {
    throw Error("enumeration is bounded to 1 <= t <= 5, 0 <= n <= 14");
  }
  return count_from(n, n, 1, t);
}

IdentityReport check_lift_congruence(std::int64_t m, int k, std::int64_t T) {
  if (m < 1 || k < 1) throw Error("lift congruence needs m >= 1 and k >= 1");
  if (k > 62) throw Error("lift congruence exponent k is limited to 62");
  const Ring ring = Ring::mod2k(k);
  const auto lhs = pow(pentagonal_series(m, ring, T), std::int64_t{1} << k);
  const auto rhs = pow(pentagonal_series(2 * m, ring, T), std::int64_t{1} << (k - 1));
  return compare_series("lift(m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")", lhs, rhs,
                        T);
}

}  // namespace qseries
