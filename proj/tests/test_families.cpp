#include <doctest.h>

#include "qseries/family.hpp"
#include "qseries/products.hpp"
#include "support/oracles.hpp"

using namespace qseries;
using namespace qseries::testing;

namespace {

/// pbar_{-5}(s n + o), n <= n_max, against 4 q^shift f_d^6, both mod 8, from
/// plain products.
bool oracle_family(std::int64_t s, std::int64_t o, std::int64_t n_max, std::int64_t d,
                   std::size_t shift) {
  const auto len = static_cast<std::size_t>(n_max + 1);
  const auto gf = naive_overpartition_gf(5, static_cast<std::size_t>(s * n_max + o + 1));
  const auto lhs = reduce_poly(extract_poly(gf, static_cast<std::size_t>(s), static_cast<std::size_t>(o)), 3);
  const auto rhs = reduce_poly(shift_poly(scale_poly(naive_f(d, 6, len), 4), shift, len), 3);
  return lhs == rhs;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("progressions") {
    using V = FamilyVariant;
    CHECK(printed_progression({0, 0, 0, V::Inf}) == Progression(8, 2));
    CHECK(printed_progression({0, 1, 0, V::Inf}) == Progression(200, 50));
    CHECK(printed_progression({1, 0, 0, V::Inf2}) == Progression(216, 162));
    CHECK(printed_progression({0, 0, 0, V::Inf3}) == Progression(40, 10));
    CHECK(printed_progression({0, 0, 0, V::Inf4}) == Progression(56, 14));
    CHECK(derived_progression({0, 0, 0, V::Inf2}) == Progression(24, 18));
    CHECK(derived_progression({0, 0, 0, V::Inf3}) == Progression(40, 10));
    CHECK(derived_progression({0, 0, 0, V::Inf4}) == Progression(56, 42));
    CHECK(derived_progression({1, 1, 1, V::Inf4}) == Progression(56 * 11025, 42 * 11025));
    CHECK_THROWS_AS(printed_progression({-1, 0, 0, V::Inf}), Error);
    CHECK_THROWS_AS(printed_progression({40, 0, 0, V::Inf}), Error);
    CHECK(parse_family_variant("inf3") == V::Inf3);
    CHECK_THROWS_AS(parse_family_variant("inf5"), ParseError);
  }

  TEST_CASE("inf at the base instance") {
    const auto r = verify_family_instance({0, 0, 0, FamilyVariant::Inf}, 50);
    CHECK(r.matched);
    CHECK(r.printed_check.matched);
    CHECK(r.selected_progression == Progression(8, 2));
    CHECK(r.selected_rhs == "4*f1^6");
    CHECK(oracle_family(8, 2, 50, 1, 0));
  }

  TEST_CASE("inf2 and inf at beta = 1") {
    const auto r2 = verify_family_instance({0, 0, 0, FamilyVariant::Inf2}, 30);
    CHECK(r2.matched);
    CHECK(r2.printed_check.matched);
    CHECK(oracle_family(24, 18, 30, 3, 0));
    const auto r = verify_family_instance({0, 1, 0, FamilyVariant::Inf}, 20);
    CHECK(r.matched);
    CHECK(r.printed == Progression(200, 50));
  }

  TEST_CASE("inf3 keeps its q factor") {
    const auto r = verify_family_instance({0, 0, 0, FamilyVariant::Inf3}, 40);
    CHECK(r.matched);
    CHECK(r.printed_check.matched);
    CHECK(r.selected_rhs == "4*q*f5^6");
    CHECK(oracle_family(40, 10, 15, 5, 1));
    CHECK_FALSE(oracle_family(40, 10, 15, 5, 0));
  }

  TEST_CASE("inf4: the printed offset fails, the derived one matches") {
    const auto r = verify_family_instance({0, 0, 0, FamilyVariant::Inf4}, 40);
    CHECK_FALSE(r.printed_check.matched);
    CHECK(r.matched);
    CHECK(r.selected_progression == Progression(56, 42));
    CHECK(r.selected_rhs == "4*q*f7^6");
    CHECK_FALSE(oracle_family(56, 14, 15, 7, 1));
    CHECK_FALSE(oracle_family(56, 14, 15, 7, 0));
    CHECK(oracle_family(56, 42, 15, 7, 1));
  }

  TEST_CASE("budget") {
    const FamilyInstance fi{0, 0, 1, FamilyVariant::Inf};
    CHECK(max_family_n(fi) == (100000 - 98) / 392);
    CHECK_THROWS_AS(verify_family_instance(fi, 1000), Error);
    CHECK_THROWS_AS(verify_family_instance(fi, 10, 1000), Error);
    CHECK_THROWS_AS(verify_family_instance(fi, -1), Error);
  }

  TEST_CASE("eq1") {
    const auto reports = verify_eq1(300);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].matched);
    CHECK(reports[1].matched);
    // The same statement read with plain colored partitions does not hold.
    CHECK_FALSE(reports[2].matched);

    auto mutated = eq1_quotient();
    mutated.exponents[4] = 178;
    CHECK_FALSE(verify_eq1(300, mutated)[0].matched);
    CHECK_THROWS_AS(verify_eq1(0), Error);
  }

  TEST_CASE("induction steps") {
    for (int base : {3, 5, 7}) {
      CAPTURE(base);
      const auto reports = verify_induction_step(base, 600);
      CHECK(reports.size() == 3);
      CHECK(all_matched(reports));
    }
    CHECK_THROWS_AS(verify_induction_step(11, 100), Error);
  }

  TEST_CASE("induction closure against direct expansion") {
    // One more power of 3, 5 or 7 in P is the same as extracting the base
    // stream twice along the induction step.
    const LaurentSeries gf = overpartition_gf(5, Ring::mod2k(3), 8 * 49 * 12 + 100);
    const LaurentSeries base = extract(gf, Progression(8, 2));
    struct Step {
      FamilyInstance next;
      Progression first, second;
    };
    const std::vector<Step> steps{{{1, 0, 0, FamilyVariant::Inf}, {3, 2}, {3, 0}},
                                  {{0, 1, 0, FamilyVariant::Inf}, {5, 1}, {5, 1}},
                                  {{0, 0, 1, FamilyVariant::Inf}, {7, 5}, {7, 1}}};
    for (const auto& s : steps) {
      const auto twice = extract(extract(base, s.first), s.second);
      const auto direct = extract(gf, printed_progression(s.next));
      CHECK(compare_series("closure", twice, direct, 11).matched);
      CHECK(compose(compose(Progression(8, 2), s.first), s.second) == printed_progression(s.next));
      CHECK(verify_family_instance(s.next, 10, gf).matched);
    }
  }

  TEST_CASE("inf2 is the 3n+2 stream of inf") {
    for (int a = 0; a <= 1; ++a) {
      const FamilyInstance inf{a, 0, 0, FamilyVariant::Inf};
      const FamilyInstance inf2{a, 0, 0, FamilyVariant::Inf2};
      CHECK(compose(printed_progression(inf), Progression(3, 2)) == printed_progression(inf2));
    }
  }
}
