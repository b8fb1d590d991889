#include "qseries/family.hpp"

#include <algorithm>
#include <limits>

#include "qseries/products.hpp"

namespace qseries {

std::string to_string(FamilyVariant v) {
  switch (v) {
    case FamilyVariant::Inf: return "inf";
    case FamilyVariant::Inf2: return "inf2";
    case FamilyVariant::Inf3: return "inf3";
    case FamilyVariant::Inf4: return "inf4";
  }
  return "unknown";
}

FamilyVariant parse_family_variant(std::string_view text) {
  if (text == "inf") return FamilyVariant::Inf;
  if (text == "inf2") return FamilyVariant::Inf2;
  if (text == "inf3") return FamilyVariant::Inf3;
  if (text == "inf4") return FamilyVariant::Inf4;
  throw ParseError(0, "family variant must be inf, inf2, inf3 or inf4");
}

namespace {

const Ring kMod8 = Ring::mod2k(3);

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("family parameters overflow 64-bit arithmetic");
  return r;
}

std::int64_t ipow(std::int64_t base, int e) {
  if (e < 0) throw Error("family exponents must be >= 0");
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

std::int64_t base_product(const FamilyInstance& fi) {
  return checked_mul(checked_mul(ipow(3, 2 * fi.alpha), ipow(5, 2 * fi.beta)), ipow(7, 2 * fi.gamma));
}

/// (prime, residue) of the extraction step leading from Inf to the variant.
std::pair<std::int64_t, std::int64_t> step_of(FamilyVariant v) {
  switch (v) {
    case FamilyVariant::Inf: return {1, 0};
    case FamilyVariant::Inf2: return {3, 2};
    case FamilyVariant::Inf3: return {5, 1};
    case FamilyVariant::Inf4: return {7, 5};
  }
  return {1, 0};
}

/// 4 * q^shift * f_d^e expanded mod 8 through T.
LaurentSeries four_times(const EtaQuotient& eq, std::int64_t T) {
  if (T <= eq.qshift) return LaurentSeries::zero(kMod8, 0, T);
  return expand(eq, kMod8, T).scaled(4);
}

EtaQuotient f_power(std::int64_t d, std::int64_t e, std::int64_t shift = 0) {
  return make_eta_quotient(d, {{d, e}}, shift);
}

std::int64_t stream_trunc(const Progression& p, std::int64_t n_max) {
  return checked_mul(p.step(), n_max) + p.residue() + 1;
}

std::vector<Progression> progressions_tried(const FamilyInstance& fi) {
  std::vector<Progression> out{printed_progression(fi)};
  const auto derived = derived_progression(fi);
  if (!(derived == out.front())) out.push_back(derived);
  return out;
}

}  // namespace

Progression printed_progression(const FamilyInstance& fi) {
  const std::int64_t P = base_product(fi);
  switch (fi.variant) {
    case FamilyVariant::Inf: return {checked_mul(8, P), checked_mul(2, P)};
    case FamilyVariant::Inf2: return {checked_mul(24, P), checked_mul(18, P)};
    case FamilyVariant::Inf3: return {checked_mul(40, P), checked_mul(10, P)};
    case FamilyVariant::Inf4: return {checked_mul(56, P), checked_mul(14, P)};
  }
  throw Error("unknown family variant");
}

Progression derived_progression(const FamilyInstance& fi) {
  const std::int64_t P = base_product(fi);
  const Progression base(checked_mul(8, P), checked_mul(2, P));
  const auto [prime, residue] = step_of(fi.variant);
  return compose(base, Progression(prime, residue));
}

std::vector<RhsForm> rhs_candidates(FamilyVariant v) {
  switch (v) {
    case FamilyVariant::Inf: return {{"4*f1^6", f_power(1, 6)}};
    case FamilyVariant::Inf2: return {{"4*f3^6", f_power(3, 6)}};
    case FamilyVariant::Inf3: return {{"4*q*f5^6", f_power(5, 6, 1)}, {"4*f5^6", f_power(5, 6)}};
    case FamilyVariant::Inf4: return {{"4*q*f7^6", f_power(7, 6, 1)}, {"4*f7^6", f_power(7, 6)}};
  }
  throw Error("unknown family variant");
}

std::int64_t max_family_n(const FamilyInstance& fi, std::int64_t budget) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& p : progressions_tried(fi)) {
    if (p.residue() > budget) throw Error("family offset exceeds the truncation budget");
    best = std::min(best, (budget - p.residue()) / p.step());
  }
  return best;
}

FamilyReport verify_family_instance(const FamilyInstance& fi, std::int64_t n_max,
                                    const LaurentSeries& gf_mod8) {
  if (n_max < 0) throw Error("n_max must be >= 0");
  const LaurentSeries gf = gf_mod8.reduced(kMod8);
  const auto candidates = rhs_candidates(fi.variant);
  const std::int64_t len = n_max + 1;

  FamilyReport report;
  report.instance = fi;
  report.n_max = n_max;
  report.printed = printed_progression(fi);

  for (const auto& prog : progressions_tried(fi)) {
    if (gf.trunc() < stream_trunc(prog, n_max)) {
      throw Error("family stream needs the generating function through q^" +
                  std::to_string(stream_trunc(prog, n_max) - 1));
    }
    const LaurentSeries stream = extract(gf, prog).truncated(len);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto name = to_string(fi.variant) + " pbar(" + std::to_string(prog.step()) + "n+" +
                        std::to_string(prog.residue()) + ") vs " + candidates[i].label;
      const auto check = compare_series(name, stream, four_times(candidates[i].quotient, len), len);
      if (prog == report.printed && i == 0) report.printed_check = check;
      if (check.matched && !report.matched) {
        report.matched = true;
        report.selected_progression = prog;
        report.selected_rhs = candidates[i].label;
      }
    }
    if (report.matched) break;
  }
  return report;
}

FamilyReport verify_family_instance(const FamilyInstance& fi, std::int64_t n_max,
                                    std::int64_t budget) {
  std::int64_t T = 1;
  for (const auto& p : progressions_tried(fi)) T = std::max(T, stream_trunc(p, n_max));
  if (T - 1 > budget) {
    throw Error("family instance needs q^" + std::to_string(T - 1) + ", beyond the budget " +
                std::to_string(budget));
  }
  return verify_family_instance(fi, n_max, overpartition_gf(5, kMod8, T));
}

EtaQuotient eq1_quotient() {
  return make_eta_quotient(8, {{1, -78}, {2, -36}, {4, 179}, {8, -70}});
}

std::vector<IdentityReport> verify_eq1(std::int64_t T, const EtaQuotient& quotient) {
  if (T < 1) throw Error("truncation must be >= 1");
  const Progression p(8, 2);
  const std::int64_t input = 8 * (T - 1) + 3;
  const LaurentSeries rhs = four_times(quotient, T);
  std::vector<IdentityReport> out;
  out.push_back(compare_series("eq1: pbar5(8n+2) vs 4*" + to_string(quotient),
                               extract(overpartition_gf(5, kMod8, input), p).truncated(T), rhs, T));
  out.push_back(compare_series("eq1: 4*" + to_string(quotient) + " vs 4*f1^6", rhs,
                               four_times(f_power(1, 6), T), T));
  out.push_back(compare_series("eq1: p5(8n+2) vs 4*" + to_string(quotient),
                               extract(colored_partition_gf(5, kMod8, input), p).truncated(T), rhs, T));
  return out;
}

std::vector<IdentityReport> verify_induction_step(int base, std::int64_t T) {
  if (T < 1) throw Error("truncation must be >= 1");
  const LaurentSeries start = four_times(f_power(1, 6), T);
  std::vector<IdentityReport> out;
  auto stage = [&](const std::string& name, const LaurentSeries& lhs, const EtaQuotient& target) {
    const std::int64_t t = lhs.trunc();
    out.push_back(compare_series(name, lhs, four_times(target, t), t));
  };
  const std::string tag = "step" + std::to_string(base) + ": ";

  switch (base) {
    case 3: {
      const LaurentSeries split = four_times(f_power(3, 2), T) + four_times(f_power(9, 6, 2), T);
      out.push_back(compare_series(tag + "4f1^6 vs 4f3^2 + 4q^2f9^6", start, split, T));
      const auto once = extract(start, Progression(3, 2));
      stage(tag + "[3n+2] 4f1^6 vs 4f3^6", once, f_power(3, 6));
      stage(tag + "[3n+2][3n] 4f1^6 vs 4f1^6", extract(once, Progression(3, 0)), f_power(1, 6));
      break;
    }
    case 5: {
      const LaurentSeries dissected = pow(dissection5_rhs(kMod8, T), 6).scaled(4);
      out.push_back(compare_series(tag + "4f1^6 vs 4f25^6(1/R(q^5) - q - q^2R(q^5))^6", start,
                                   dissected, T));
      const auto once = extract(start, Progression(5, 1));
      stage(tag + "[5n+1] 4f1^6 vs 4qf5^6", once, f_power(5, 6, 1));
      stage(tag + "[5n+1][5n+1] 4f1^6 vs 4f1^6", extract(once, Progression(5, 1)), f_power(1, 6));
      break;
    }
    case 7: {
      const LaurentSeries dissected = pow(dissection7_rhs(kMod8, T), 6).scaled(4);
      out.push_back(compare_series(tag + "4f1^6 vs 4f49^6(A' - qB' - q^2 + q^5C')^6", start,
                                   dissected, T));
      const auto once = extract(start, Progression(7, 5));
      stage(tag + "[7n+5] 4f1^6 vs 4qf7^6", once, f_power(7, 6, 1));
      stage(tag + "[7n+5][7n+1] 4f1^6 vs 4f1^6", extract(once, Progression(7, 1)), f_power(1, 6));
      break;
    }
    default:
      throw Error("induction step base must be 3, 5 or 7");
  }
  return out;
}

}  // namespace qseries
