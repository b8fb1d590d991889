#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/// The exponent progression m*n + j, 0 <= j < m.
class Progression {
 public:
  Progression(std::int64_t step, std::int64_t residue);

  std::int64_t step() const noexcept { return step_; }
  std::int64_t residue() const noexcept { return residue_; }

  friend bool operator==(const Progression&, const Progression&) = default;

 private:
  std::int64_t step_;
  std::int64_t residue_;
};

/// Extracting `first` and then `second` is extraction along the returned
/// progression: step m1*m2, residue j1 + m1*j2.
Progression compose(const Progression& first, const Progression& second);

struct Mismatch {
  std::int64_t exponent;
  BigInt lhs;
  BigInt rhs;
};

/// Outcome of a truncation-bounded identity check: "checked through q^T",
/// never a proof.
struct IdentityReport {
  std::string name;
  std::int64_t truncation = 0;
  bool matched = false;
  std::optional<Mismatch> first_mismatch;
};

bool all_matched(const std::vector<IdentityReport>& reports);

/// Compares lhs and rhs at every exponent below T. Both series must share a
/// ring and be known through T.
IdentityReport compare_series(std::string name, const LaurentSeries& lhs, const LaurentSeries& rhs,
                              std::int64_t T);

/// sum_{n>=0} a(m n + j) q^n. The result has offset 0 and trunc
/// ceil((a.trunc - j) / m). Nonzero coefficients at negative exponents are
/// rejected: extraction is defined on genuine power series only.
LaurentSeries extract(const LaurentSeries& a, const Progression& p);

/// R(q) = (q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5)).
LaurentSeries rogers_ramanujan(Ring ring, std::int64_t T);

/// f_3 + q f_9^3, the mod-2 form of the 3-dissection of f_1^3.
LaurentSeries dissection3_rhs(Ring ring, std::int64_t T);
/// f_25 (1/R(q^5) - q - q^2 R(q^5)).
LaurentSeries dissection5_rhs(Ring ring, std::int64_t T);
/// A'(q^7) - q B'(q^7) - q^2 + q^5 C'(q^7), the theta quotients of the
/// 7-dissection (without the f_49 factor).
LaurentSeries dissection7_bracket(Ring ring, std::int64_t T);
LaurentSeries dissection7_rhs(Ring ring, std::int64_t T);

/// f_1^3 == f_3 + q f_9^3 (mod 2) through T.
IdentityReport dissection3_f1cubed(std::int64_t T);
/// f_1 == f_25 (1/R(q^5) - q - q^2 R(q^5)) over Z through T.
IdentityReport dissection5(std::int64_t T);
/// f_1 == f_49 (A' - q B' - q^2 + q^5 C') over Z through T.
IdentityReport dissection7(std::int64_t T);

/// Bracketed sum of the Ramanathan/Evans n-dissection of f_1, for
/// n = 6g + 1 or n = 6g - 1:
///
///   (-1)^g q^((n^2-1)/24)
///     + sum_{k=1}^{(n-1)/2} (-1)^(k+g) q^e(k) f(-q^(2nk), -q^(n^2-2nk)) / f(-q^(nk), -q^(n^2-nk))
///
/// with e(k) = (k-g)(3k-3g-1)/2 when n = 6g+1 and (k-g)(3k-3g+1)/2 when n = 6g-1.
/// The printed hypothesis only mentions n == 1 (mod 6); both branches are
/// implemented and checked.
LaurentSeries ramanathan_bracket(std::int64_t n, Ring ring, std::int64_t T);
IdentityReport ramanathan(std::int64_t n, std::int64_t T);

}  // namespace qseries
