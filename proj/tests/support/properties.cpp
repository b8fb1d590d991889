#include "properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "qseries/congruence.hpp"
#include "qseries/dissection.hpp"
#include "qseries/eta_quotient.hpp"
#include "qseries/products.hpp"

namespace qseries::testing {

namespace {

/// Runs `cases` trials of `trial`, stopping at the first one that returns a
/// failure description.
PropertyOutcome check(const std::string& name, int cases,
                      const std::function<std::optional<std::string>(int)>& trial) {
  PropertyOutcome out{name, 0, std::nullopt};
  for (int i = 0; i < cases; ++i) {
    ++out.cases;
    try {
      if (auto failure = trial(i)) {
        out.failure = "case " + std::to_string(i) + ": " + *failure;
        break;
      }
    } catch (const std::exception& e) {
      out.failure = "case " + std::to_string(i) + ": exception: " + e.what();
      break;
    }
  }
  return out;
}

std::optional<std::string> mismatch(const std::string& what, const LaurentSeries& a,
                                    const LaurentSeries& b, std::int64_t T) {
  if (a.ring() != b.ring()) return what + ": ring differs";
  if (a.trunc() < T || b.trunc() < T) {
    return what + ": truncation " + std::to_string(std::min(a.trunc(), b.trunc())) + " < " +
           std::to_string(T);
  }
  const auto report = compare_series(what, a, b, T);
  if (report.matched) return std::nullopt;
  std::ostringstream s;
  s << what << ": differs at q^" << report.first_mismatch->exponent << " ("
    << report.first_mismatch->lhs << " vs " << report.first_mismatch->rhs << ")";
  return s.str();
}

std::optional<std::string> same_through_common(const std::string& what, const LaurentSeries& a,
                                               const LaurentSeries& b) {
  return mismatch(what, a, b, std::min(a.trunc(), b.trunc()));
}

Ring random_ring(SeriesGen& g) { return g.integer(0, 2) == 0 ? Ring::exact() : g.mod2k(); }

std::optional<std::string> first_of(std::initializer_list<std::optional<std::string>> list) {
  for (const auto& x : list) {
    if (x) return x;
  }
  return std::nullopt;
}

}  // namespace

std::vector<PropertyOutcome> series_properties(std::uint64_t seed) {
  SeriesGen g(seed);
  std::vector<PropertyOutcome> out;

  out.push_back(check("mul is commutative and valuations add", 300, [&](int) {
    const Ring ring = random_ring(g);
    const auto a = g.series(ring, g.integer(-3, 3), g.integer(1, 40));
    const auto b = g.series(ring, g.integer(-3, 3), g.integer(1, 40));
    const auto ab = mul(a, b);
    if (auto m = mismatch("a*b vs b*a", ab, mul(b, a), ab.trunc())) return m;
    if (ab.trunc() != std::min(a.trunc() + b.offset(), b.trunc() + a.offset())) {
      return std::optional<std::string>("product truncation");
    }
    const auto va = a.valuation(), vb = b.valuation(), vab = ab.valuation();
    if (va && vb && vab && *vab < *va + *vb) return std::optional<std::string>("valuation bound");
    return std::optional<std::string>();
  }));

  out.push_back(check("mul agrees with schoolbook oracle", 100, [&](int) {
    const auto T = g.integer(1, 60);
    const auto a = g.series(Ring::exact(), 0, T, 1000000);
    const auto b = g.series(Ring::exact(), 0, T, 1000000);
    const auto expected = from_poly(Ring::exact(), 0,
                                    naive_mul(to_poly(a, T), to_poly(b, T), static_cast<std::size_t>(T)));
    return mismatch("mul vs naive", mul(a, b), expected, T);
  }));

  out.push_back(check("pow(a, e1 + e2) = pow(a, e1) pow(a, e2)", 98, [&](int i) {
    const Ring ring = i % 2 == 0 ? Ring::exact() : g.mod2k();
    const std::int64_t e1 = i / 2 % 7 - 3;
    const std::int64_t e2 = g.integer(-3, 3);
    const auto a = g.unit(ring, g.integer(-2, 2), 100, 3);
    const auto lhs = pow(a, e1 + e2);
    const auto rhs = mul(pow(a, e1), pow(a, e2));
    return same_through_common("pow additivity", lhs, rhs);
  }));

  out.push_back(check("mod 2^k reduction commutes with arithmetic", 80, [&](int i) {
    const Ring ring = Ring::mod2k(i % 8 + 1);
    const auto a = g.series(Ring::exact(), 0, 100);
    const auto b = g.series(Ring::exact(), g.integer(-2, 2), 100);
    const auto c = g.series(Ring::exact(), 0, 100);
    const auto d = g.unit(Ring::exact(), 0, 100);
    auto expr = [](const LaurentSeries& a, const LaurentSeries& b, const LaurentSeries& c,
                   const LaurentSeries& d) {
      return mul(mul(a, b) + c, inverse(d)) - pow(d, 3) + divide(substitute_qpow(a, 2), d) -
             mul_pow(c, d, -2) + pow(d, -5).scaled(7);
    };
    const auto exact = expr(a, b, c, d).reduced(ring);
    const auto modular = expr(a.reduced(ring), b.reduced(ring), c.reduced(ring), d.reduced(ring));
    return mismatch("reduce(exact) vs mod2k", exact, modular, exact.trunc());
  }));

  out.push_back(check("f1 has +-1 exactly at generalized pentagonal numbers", 1, [&](int) {
    const std::int64_t T = 1000;
    const auto naive = from_poly(Ring::exact(), 0, naive_f(1, 1, T));
    const auto pent = pentagonal_series(1, Ring::exact(), T);
    const auto euler = euler_factor(1, 1, 1, Ring::exact(), T);
    if (auto m = first_of({mismatch("pentagonal vs product", pent, naive, T),
                           mismatch("euler_factor vs product", euler, naive, T)})) {
      return m;
    }
    std::vector<BigInt> expected(T, 0);
    for (const auto& [e, sign] : generalized_pentagonals(T)) expected[e] = sign;
    return mismatch("f1 vs pentagonal signs", pent, from_poly(Ring::exact(), 0, expected), T);
  }));

  out.push_back(check("inverse is two-sided", 200, [&](int) {
    const Ring ring = random_ring(g);
    const auto a = g.unit(ring, g.integer(-3, 3), g.integer(1, 80));
    const auto inv = inverse(a);
    if (inv.offset() != -a.offset()) return std::optional<std::string>("inverse offset");
    const auto left = mul(inv, a), right = mul(a, inv);
    const auto one = LaurentSeries::one(ring, left.trunc());
    return first_of({mismatch("inv*a", left, one, left.trunc()),
                     mismatch("a*inv", right, one, right.trunc())});
  }));

  out.push_back(check("divide(a, b) = a * inverse(b)", 150, [&](int) {
    const Ring ring = random_ring(g);
    const auto a = g.series(ring, g.integer(-3, 3), g.integer(1, 80));
    const auto b = g.unit(ring, g.integer(-3, 3), g.integer(1, 80));
    return same_through_common("divide", divide(a, b), mul(a, inverse(b)));
  }));

  out.push_back(check("mul_pow(c, a, e) = c * pow(a, e)", 150, [&](int) {
    const Ring ring = random_ring(g);
    const auto c = g.series(ring, g.integer(-3, 3), g.integer(1, 60));
    const auto a = g.unit(ring, 0, g.integer(1, 60), 2);
    const auto e = g.integer(-12, 12);
    return same_through_common("mul_pow", mul_pow(c, a, e), mul(c, pow(a, e)));
  }));

  return out;
}

std::vector<PropertyOutcome> dissection_properties(std::uint64_t seed) {
  SeriesGen g(seed + 1);
  std::vector<PropertyOutcome> out;

  out.push_back(check("extract agrees with index oracle", 200, [&](int) {
    const auto a = g.series(Ring::exact(), 0, g.integer(1, 200));
    const auto m = g.integer(1, 12), j = g.integer(0, m - 1);
    if (j >= a.trunc()) return std::optional<std::string>();
    const auto e = extract(a, Progression(m, j));
    const auto expected = extract_poly(to_poly(a, a.trunc()), m, j);
    if (e.offset() != 0 || e.trunc() != static_cast<std::int64_t>(expected.size())) {
      return std::optional<std::string>("extract shape");
    }
    return mismatch("extract vs oracle", e, from_poly(Ring::exact(), 0, expected), e.trunc());
  }));

  out.push_back(check("extract is linear", 200, [&](int) {
    const Ring ring = random_ring(g);
    const auto len = g.integer(1, 200);
    const auto a = g.series(ring, 0, len), b = g.series(ring, 0, len);
    const auto m = g.integer(1, 10), j = g.integer(0, std::min(m, len) - 1);
    const Progression p(m, j);
    return same_through_common("linearity", extract(a + b, p), extract(a, p) + extract(b, p));
  }));

  out.push_back(check("stream partition: sum_j q^j S_m(extract(a, j)) = a", 100, [&](int i) {
    const std::int64_t ms[] = {2, 3, 5, 7, 8};
    const auto m = ms[i % 5];
    const Ring ring = random_ring(g);
    const auto a = g.series(ring, 0, g.integer(m, 300));
    LaurentSeries sum = LaurentSeries::zero(ring, 0, a.trunc());
    for (std::int64_t j = 0; j < m; ++j) {
      sum = sum + substitute_qpow(extract(a, Progression(m, j)), m).shifted(j);
    }
    return mismatch("reassembled stream", sum.truncated(a.trunc()), a, a.trunc());
  }));

  out.push_back(check("extract(S_m(a), {m, 0}) = a", 100, [&](int) {
    const Ring ring = random_ring(g);
    const auto a = g.series(ring, 0, g.integer(1, 200));
    const auto m = g.integer(1, 9);
    return mismatch("extract of substitution", extract(substitute_qpow(a, m), Progression(m, 0)), a,
                    a.trunc());
  }));

  out.push_back(check("extraction composes along compose()", 150, [&](int) {
    const auto a = g.series(Ring::exact(), 0, g.integer(50, 600));
    const Progression p1(g.integer(1, 8), 0), p1r(p1.step(), g.integer(0, p1.step() - 1));
    const Progression p2(g.integer(1, 8), 0), p2r(p2.step(), g.integer(0, p2.step() - 1));
    const auto once = extract(a, p1r);
    if (once.trunc() <= p2r.residue()) return std::optional<std::string>();
    const auto twice = extract(once, p2r);
    return same_through_common("composite extraction", twice, extract(a, compose(p1r, p2r)));
  }));

  out.push_back(check("dissection identities hold through q^1000", 1, [&](int) {
    std::vector<IdentityReport> reports{dissection3_f1cubed(1000), dissection5(1000),
                                        dissection7(1000)};
    for (std::int64_t n : {5, 7, 11, 13}) reports.push_back(ramanathan(n, 1000));
    for (const auto& r : reports) {
      if (!r.matched) {
        return std::optional<std::string>(r.name + " mismatch at q^" +
                                          std::to_string(r.first_mismatch->exponent));
      }
    }
    return std::optional<std::string>();
  }));

  out.push_back(check("4 f1^6 = 4 f3^2 + 4 q^2 f9^6 (mod 8) through q^600", 1, [&](int) {
    const std::size_t T = 600;
    const auto lhs = reduce_poly(scale_poly(naive_f(1, 6, T), 4), 3);
    const auto rhs = reduce_poly(
        add_poly(scale_poly(naive_f(3, 2, T), 4), shift_poly(scale_poly(naive_f(9, 6, T), 4), 2, T)),
        3);
    if (lhs != rhs) return std::optional<std::string>("oracle identity fails");
    const Ring r8 = Ring::mod2k(3);
    const auto lib = expand(parse_eta_quotient("f1^6"), r8, T).scaled(4);
    return mismatch("library 4 f1^6 vs oracle", lib, from_poly(r8, 0, lhs), T);
  }));

  return out;
}

std::vector<PropertyOutcome> congruence_properties(std::uint64_t seed) {
  SeriesGen g(seed + 2);
  std::vector<PropertyOutcome> out;

  out.push_back(check("enumeration matches the generating function (t <= 3, n <= 10)", 3, [&](int i) {
    const int t = i + 1;
    const auto gf = overpartition_gf(t, Ring::exact(), 11);
    for (int n = 0; n <= 10; ++n) {
      const BigInt counted(static_cast<unsigned long>(enumerate_colored_overpartitions(t, n)));
      const BigInt listed(static_cast<unsigned long>(count_overpartitions_explicit(t, n)));
      if (counted != gf.coefficient(n) || listed != counted) {
        return std::optional<std::string>("t=" + std::to_string(t) + " n=" + std::to_string(n));
      }
    }
    return std::optional<std::string>();
  }));

  const auto claims = theorem_claims();
  std::map<std::int64_t, LaurentSeries> exact_gf;
  for (std::int64_t t : {5, 7, 11, 13}) exact_gf.emplace(t, overpartition_gf(t, Ring::exact(), 8 * 50 + 8));

  out.push_back(check("mod 2^k and exact verdicts agree (24 claims, n <= 50)", 24, [&](int i) {
    const auto& c = claims[static_cast<std::size_t>(i)];
    const auto modular = check_claim(c, 50);
    const auto exact = check_claim(c, 50, exact_gf.at(c.t));
    if (modular.holds != exact.holds) return std::optional<std::string>("verdicts differ");
    if (modular.counterexample.has_value() != exact.counterexample.has_value()) {
      return std::optional<std::string>("counterexamples differ");
    }
    if (modular.counterexample && (modular.counterexample->n != exact.counterexample->n ||
                                   modular.counterexample->value != exact.counterexample->value)) {
      return std::optional<std::string>("counterexample values differ");
    }
    return std::optional<std::string>();
  }));

  out.push_back(check("claims holding mod 2^k hold mod 2^(k-1)", 24, [&](int i) {
    auto c = claims[static_cast<std::size_t>(i)];
    if (!check_claim(c, 200).holds) return std::optional<std::string>("theorem claim fails");
    for (int k = c.k - 1; k >= 1; --k) {
      c.k = k;
      if (!check_claim(c, 200).holds) {
        return std::optional<std::string>("fails at k=" + std::to_string(k));
      }
    }
    return std::optional<std::string>();
  }));

  out.push_back(check("pbar5(8n+7) holds mod 2^5 and mod 2^7", 1, [&](int) {
    for (int k : {5, 7}) {
      if (!check_claim(make_claim(5, 8, 7, k), 500).holds) {
        return std::optional<std::string>("fails at k=" + std::to_string(k));
      }
    }
    return std::optional<std::string>();
  }));

  out.push_back(check("report invariants on random claims", 60, [&](int) {
    const auto m = g.integer(1, 16);
    const auto claim = make_claim(g.integer(1, 13), m, g.integer(0, m - 1),
                                  static_cast<int>(g.integer(1, 10)));
    const auto r = check_claim(claim, g.integer(0, 40));
    if (r.holds == r.counterexample.has_value()) return std::optional<std::string>("verdict/cex");
    if (r.counterexample) {
      const std::uint64_t mask = (std::uint64_t{1} << claim.k) - 1;
      if (r.counterexample->value == 0 || (r.counterexample->value & ~mask) != 0) {
        return std::optional<std::string>("counterexample value not a nonzero residue");
      }
      const auto gf = from_poly(Ring::exact(), 0,
                                naive_overpartition_gf(static_cast<int>(claim.t),
                                                       claim.m * r.counterexample->n + claim.j + 1));
      const BigInt v = gf.coefficient(claim.m * r.counterexample->n + claim.j);
      if (Ring::mod2k(claim.k).reduce(v) != r.counterexample->value) {
        return std::optional<std::string>("counterexample disagrees with oracle");
      }
    }
    return std::optional<std::string>();
  }));

  out.push_back(check("f_m^(2^k) = f_2m^(2^(k-1)) mod 2^k (m <= 3, k <= 5, T = 500)", 15, [&](int i) {
    const std::int64_t m = i / 5 + 1;
    const int k = i % 5 + 1;
    const auto r = check_lift_congruence(m, k, 500);
    if (!r.matched) return std::optional<std::string>(r.name);
    return std::optional<std::string>();
  }));

  return out;
}

}  // namespace qseries::testing
