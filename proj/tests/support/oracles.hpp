#pragma once

// Reference computations that share no code with the library: plain
// coefficient vectors, schoolbook products and brute-force enumeration.

#include <cstdint>
#include <vector>

#include "qseries/series.hpp"

namespace qseries::testing {

/// Coefficients of q^0 .. q^(T-1).
using Poly = std::vector<BigInt>;

Poly naive_mul(const Poly& a, const Poly& b, std::size_t T);
Poly naive_pow(const Poly& a, int e, std::size_t T);

/// prod_{i>=0} (1 - q^(a + m i))^e by multiplying one factor (or one geometric
/// series, for e < 0) at a time.
Poly naive_euler(std::int64_t a, std::int64_t m, std::int64_t e, std::size_t T);

/// f_d^e as a plain product.
Poly naive_f(std::int64_t d, std::int64_t e, std::size_t T);

/// prod_k ((1 + q^k) / (1 - q^k))^t, the overpartition product in its
/// original form rather than as f_2^t / f_1^(2t).
Poly naive_overpartition_gf(int t, std::size_t T);

Poly shift_poly(const Poly& a, std::size_t s, std::size_t T);
Poly scale_poly(const Poly& a, long c);
Poly add_poly(const Poly& a, const Poly& b);

/// Residues of every coefficient modulo 2^k, as nonnegative BigInts.
Poly reduce_poly(const Poly& a, int k);

/// Coefficients of q^(m n + j) for n with m n + j < a.size().
Poly extract_poly(const Poly& a, std::size_t m, std::size_t j);

/// Number of partitions of n, by generating every partition.
std::uint64_t count_partitions(int n);

/// Number of t-colored partitions of n: multisets of (part, color) pairs.
std::uint64_t count_colored_partitions(int t, int n);

/// Number of t-colored overpartitions of n, generated as explicit lists of
/// parts. A part is a triple (value, color, overlined); within each
/// (value, color) class at most one overlined copy occurs.
std::uint64_t count_overpartitions_explicit(int t, int n);

/// Coefficients q^0 .. q^(T-1) of a series known through T.
Poly to_poly(const LaurentSeries& s, std::size_t T);
LaurentSeries from_poly(const Ring& ring, std::int64_t offset, const Poly& p);

/// Generalized pentagonal numbers k(3k-1)/2, k in Z, below T, with their sign.
std::vector<std::pair<std::int64_t, int>> generalized_pentagonals(std::int64_t T);

}  // namespace qseries::testing
