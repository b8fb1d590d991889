#include "qseries/series.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace qseries {

namespace {

struct ExactArith {
  using value_type = BigInt;

  static bool is_zero(const BigInt& x) { return sgn(x) == 0; }
  static void addmul(BigInt& r, const BigInt& a, const BigInt& b) {
    mpz_addmul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static void submul(BigInt& r, const BigInt& a, const BigInt& b) {
    mpz_submul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static BigInt unit_inverse(const BigInt& u) {
    if (u == 1 || u == -1) return u;
    throw Error("exact-ring inverse needs leading coefficient +-1, got " + u.get_str());
  }
  static void finish(std::vector<BigInt>&) {}
};

struct WordArith {
  using value_type = std::uint64_t;
  std::uint64_t mask;

  static bool is_zero(std::uint64_t x) { return x == 0; }
  static void addmul(std::uint64_t& r, std::uint64_t a, std::uint64_t b) { r += a * b; }
  static void submul(std::uint64_t& r, std::uint64_t a, std::uint64_t b) { r -= a * b; }
  static std::uint64_t unit_inverse(std::uint64_t u) {
    if ((u & 1) == 0) throw Error("mod-2^k inverse needs an odd leading coefficient");
    // Newton iteration; u*u == 1 mod 8 seeds 3 correct bits, each step doubles.
    std::uint64_t x = u;
    for (int i = 0; i < 5; ++i) x *= 2 - u * x;
    return x;
  }
  void finish(std::vector<std::uint64_t>& v) const {
    for (auto& x : v) x &= mask;
  }
};

template <class F>
decltype(auto) with_arith(const Ring& ring, F&& f) {
  if (ring.is_exact()) return f(ExactArith{});
  return f(WordArith{ring.mask()});
}

template <class V>
const std::vector<V>& coeffs_of(const LaurentSeries& s) {
  if constexpr (std::is_same_v<V, BigInt>) {
    return s.exact_coeffs();
  } else {
    return s.word_coeffs();
  }
}

template <class V>
LaurentSeries make_series(const Ring& ring, std::int64_t offset, std::vector<V> v) {
  return LaurentSeries(ring, offset, std::move(v));
}

void require_same_ring(const LaurentSeries& a, const LaurentSeries& b, const char* op) {
  if (a.ring() != b.ring()) {
    throw Error(std::string(op) + ": ring mismatch (" + a.ring().to_string() + " vs " +
                b.ring().to_string() + ")");
  }
}

template <class V>
std::size_t count_nonzero(const std::vector<V>& v) {
  std::size_t n = 0;
  for (const auto& x : v) {
    if constexpr (std::is_same_v<V, BigInt>) {
      n += sgn(x) != 0;
    } else {
      n += x != 0;
    }
  }
  return n;
}

/// Schoolbook product of two coefficient vectors, first `len` terms.
/// The operand with fewer nonzeros drives the outer loop.
template <class A>
std::vector<typename A::value_type> convolve(const A& arith,
                                             const std::vector<typename A::value_type>& a,
                                             const std::vector<typename A::value_type>& b,
                                             std::size_t len) {
  std::vector<typename A::value_type> r(len);
  const auto* outer = &a;
  const auto* inner = &b;
  if (count_nonzero(b) < count_nonzero(a)) std::swap(outer, inner);
  const std::size_t outer_end = std::min(outer->size(), len);
  for (std::size_t i = 0; i < outer_end; ++i) {
    const auto& x = (*outer)[i];
    if (A::is_zero(x)) continue;
    const std::size_t limit = std::min(inner->size(), len - i);
    auto* dst = r.data() + i;
    const auto* src = inner->data();
    for (std::size_t j = 0; j < limit; ++j) A::addmul(dst[j], x, src[j]);
  }
  arith.finish(r);
  return r;
}

/// c = a / b for a unit-led b (b[0] invertible), first `len` terms.
template <class A>
std::vector<typename A::value_type> divide_vec(const A& arith,
                                               const std::vector<typename A::value_type>& a,
                                               const std::vector<typename A::value_type>& b,
                                               std::size_t len) {
  using V = typename A::value_type;
  const V inv0 = A::unit_inverse(b[0]);
  std::vector<std::size_t> support;
  for (std::size_t k = 1; k < std::min(b.size(), len); ++k) {
    if (!A::is_zero(b[k])) support.push_back(k);
  }
  std::vector<V> c(len);
  V acc{};
  for (std::size_t n = 0; n < len; ++n) {
    acc = n < a.size() ? a[n] : V{};
    for (std::size_t k : support) {
      if (k > n) break;
      A::submul(acc, b[k], c[n - k]);
    }
    if constexpr (std::is_same_v<V, BigInt>) {
      c[n] = inv0 > 0 ? acc : BigInt(-acc);
    } else {
      c[n] = acc * inv0;
    }
  }
  arith.finish(c);
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// construction and accessors

LaurentSeries::LaurentSeries(Ring ring, std::int64_t offset, std::vector<BigInt> coeffs)
    : ring_(ring), offset_(offset) {
  if (coeffs.empty()) throw Error("a series needs trunc > offset");
  if (ring.is_exact()) {
    coeffs_ = std::move(coeffs);
  } else {
    WordCoeffs w(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) w[i] = ring.reduce(coeffs[i]);
    coeffs_ = std::move(w);
  }
}

LaurentSeries::LaurentSeries(Ring ring, std::int64_t offset, std::vector<std::uint64_t> residues)
    : ring_(ring), offset_(offset) {
  if (residues.empty()) throw Error("a series needs trunc > offset");
  if (ring.is_exact()) throw Error("word coefficients require a mod2k ring");
  const auto m = ring.mask();
  for (auto& x : residues) x &= m;
  coeffs_ = std::move(residues);
}

LaurentSeries LaurentSeries::zero(Ring ring, std::int64_t offset, std::int64_t trunc) {
  if (trunc <= offset) throw Error("a series needs trunc > offset");
  const auto n = static_cast<std::size_t>(trunc - offset);
  if (ring.is_exact()) return LaurentSeries(ring, offset, ExactCoeffs(n));
  return LaurentSeries(ring, offset, WordCoeffs(n));
}

LaurentSeries LaurentSeries::one(Ring ring, std::int64_t trunc) {
  return monomial(ring, 1, 0, trunc);
}

LaurentSeries LaurentSeries::monomial(Ring ring, const BigInt& c, std::int64_t exponent,
                                      std::int64_t trunc) {
  if (trunc <= exponent) throw Error("monomial exponent must lie below trunc");
  std::vector<BigInt> v(static_cast<std::size_t>(trunc - exponent));
  v[0] = c;
  return LaurentSeries(ring, exponent, std::move(v));
}

LaurentSeries LaurentSeries::polynomial(Ring ring, std::initializer_list<long> coeffs,
                                        std::int64_t trunc) {
  if (trunc <= 0) throw Error("a series needs trunc > offset");
  std::vector<BigInt> v(static_cast<std::size_t>(trunc));
  std::size_t i = 0;
  for (long c : coeffs) {
    if (i >= v.size()) break;
    v[i++] = c;
  }
  return LaurentSeries(ring, 0, std::move(v));
}

std::size_t LaurentSeries::size() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, coeffs_);
}

const LaurentSeries::ExactCoeffs& LaurentSeries::exact_coeffs() const {
  if (!ring_.is_exact()) throw Error("exact_coeffs() on a mod2k series");
  return std::get<ExactCoeffs>(coeffs_);
}

const LaurentSeries::WordCoeffs& LaurentSeries::word_coeffs() const {
  if (ring_.is_exact()) throw Error("word_coeffs() on an exact series");
  return std::get<WordCoeffs>(coeffs_);
}

BigInt LaurentSeries::coefficient(std::int64_t exponent) const {
  if (exponent >= trunc()) {
    throw Error("coefficient of q^" + std::to_string(exponent) + " is beyond truncation " +
                std::to_string(trunc()));
  }
  if (exponent < offset_) return 0;
  const auto i = static_cast<std::size_t>(exponent - offset_);
  if (ring_.is_exact()) return std::get<ExactCoeffs>(coeffs_)[i];
  return BigInt(static_cast<unsigned long>(std::get<WordCoeffs>(coeffs_)[i]));
}

std::optional<std::int64_t> LaurentSeries::valuation() const {
  return std::visit(
      [&](const auto& v) -> std::optional<std::int64_t> {
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (v[i] != 0) return offset_ + static_cast<std::int64_t>(i);
        }
        return std::nullopt;
      },
      coeffs_);
}

std::size_t LaurentSeries::nonzero_count() const {
  return std::visit([](const auto& v) { return count_nonzero(v); }, coeffs_);
}

LaurentSeries LaurentSeries::truncated(std::int64_t new_trunc) const {
  if (new_trunc > trunc()) {
    throw Error("cannot extend truncation from " + std::to_string(trunc()) + " to " +
                std::to_string(new_trunc));
  }
  if (new_trunc <= offset_) throw Error("truncation must stay above the offset");
  const auto n = static_cast<std::size_t>(new_trunc - offset_);
  return std::visit(
      [&](const auto& v) {
        return make_series(ring_, offset_, std::vector(v.begin(), v.begin() + n));
      },
      coeffs_);
}

LaurentSeries LaurentSeries::shifted(std::int64_t s) const {
  LaurentSeries r = *this;
  r.offset_ += s;
  return r;
}

LaurentSeries LaurentSeries::normalized() const {
  const auto v = valuation();
  if (!v || *v == offset_) return *this;
  const auto skip = static_cast<std::size_t>(*v - offset_);
  return std::visit(
      [&](const auto& c) {
        return make_series(ring_, *v, std::vector(c.begin() + skip, c.end()));
      },
      coeffs_);
}

LaurentSeries LaurentSeries::reduced(Ring target) const {
  if (target == ring_) return *this;
  if (target.is_exact()) throw Error("cannot lift a mod2k series to the exact ring");
  if (ring_.is_exact()) return LaurentSeries(target, offset_, std::get<ExactCoeffs>(coeffs_));
  if (target.bits() > ring_.bits()) {
    throw Error("cannot reduce " + ring_.to_string() + " into " + target.to_string());
  }
  return LaurentSeries(target, offset_, std::get<WordCoeffs>(coeffs_));
}

LaurentSeries LaurentSeries::scaled(const BigInt& c) const {
  if (ring_.is_exact()) {
    auto v = std::get<ExactCoeffs>(coeffs_);
    for (auto& x : v) x *= c;
    return LaurentSeries(ring_, offset_, std::move(v));
  }
  const std::uint64_t w = Ring::mod2k(64).reduce(c);
  auto v = std::get<WordCoeffs>(coeffs_);
  for (auto& x : v) x *= w;
  return LaurentSeries(ring_, offset_, std::move(v));
}

// ---------------------------------------------------------------------------
// arithmetic

namespace {

LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
  require_same_ring(a, b, subtract ? "sub" : "add");
  const std::int64_t lo = std::min(a.offset(), b.offset());
  const std::int64_t hi = std::min(a.trunc(), b.trunc());
  return with_arith(a.ring(), [&](auto arith) {
    using V = typename decltype(arith)::value_type;
    const auto& av = coeffs_of<V>(a);
    const auto& bv = coeffs_of<V>(b);
    std::vector<V> r(static_cast<std::size_t>(hi - lo));
    for (std::int64_t e = std::max(lo, a.offset()); e < hi; ++e) {
      r[static_cast<std::size_t>(e - lo)] = av[static_cast<std::size_t>(e - a.offset())];
    }
    for (std::int64_t e = std::max(lo, b.offset()); e < hi; ++e) {
      auto& dst = r[static_cast<std::size_t>(e - lo)];
      const auto& y = bv[static_cast<std::size_t>(e - b.offset())];
      if (subtract) {
        dst -= y;
      } else {
        dst += y;
      }
    }
    arith.finish(r);
    return make_series(a.ring(), lo, std::move(r));
  });
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, false);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, true);
}

LaurentSeries operator-(const LaurentSeries& a) { return a.scaled(-1); }

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_ring(a, b, "mul");
  const std::int64_t offset = a.offset() + b.offset();
  const std::int64_t trunc = std::min(a.trunc() + b.offset(), b.trunc() + a.offset());
  const auto len = static_cast<std::size_t>(trunc - offset);
  return with_arith(a.ring(), [&](auto arith) {
    using V = typename decltype(arith)::value_type;
    return make_series(a.ring(), offset, convolve(arith, coeffs_of<V>(a), coeffs_of<V>(b), len));
  });
}

LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_ring(a, b, "divide");
  const auto vb = b.valuation();
  if (!vb) throw Error("division by a series that is zero through its truncation");
  const LaurentSeries unit = b.normalized();
  const std::int64_t unit_len = unit.trunc() - *vb;
  // a / unit has trunc min(a.trunc, unit_len + a.offset); then shift by -vb
  const std::int64_t len = std::min(a.trunc(), unit_len + a.offset()) - a.offset();
  return with_arith(a.ring(), [&](auto arith) {
    using V = typename decltype(arith)::value_type;
    auto c = divide_vec(arith, coeffs_of<V>(a), coeffs_of<V>(unit), static_cast<std::size_t>(len));
    return make_series(a.ring(), a.offset() - *vb, std::move(c));
  });
}

LaurentSeries inverse(const LaurentSeries& a) {
  const auto v = a.valuation();
  if (!v) throw Error("inverse of a series that is zero through its truncation");
  return divide(LaurentSeries::one(a.ring(), a.trunc() - *v), a);
}

namespace {

std::int64_t magnitude(std::int64_t e) { return e < 0 ? -e : e; }

/// Rough operation counts for the two powering strategies.
bool prefer_repeated(const LaurentSeries& base, std::int64_t e, std::size_t len) {
  const auto n = static_cast<double>(magnitude(e));
  const double nnz = static_cast<double>(base.nonzero_count());
  const double l = static_cast<double>(len);
  const auto u = static_cast<std::uint64_t>(magnitude(e));
  const double binary_steps = static_cast<double>(std::bit_width(u) + std::popcount(u));
  return n * l * nnz <= binary_steps * l * l / 2 + l * nnz;
}

LaurentSeries pow_binary(LaurentSeries base, std::uint64_t e) {
  std::optional<LaurentSeries> acc;
  while (true) {
    if (e & 1) acc = acc ? mul(*acc, base) : base;
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return *acc;
}

}  // namespace

LaurentSeries pow(const LaurentSeries& a, std::int64_t e) {
  const auto v = a.valuation();
  if (e == 0) {
    const std::int64_t rel = v ? a.trunc() - *v : a.trunc() - a.offset();
    return LaurentSeries::one(a.ring(), rel);
  }
  if (!v) {
    if (e < 0) throw Error("negative power of a series that is zero through its truncation");
    return pow_binary(a, static_cast<std::uint64_t>(e));
  }
  const LaurentSeries base = a.normalized();
  if (e == 1) return base;
  if (prefer_repeated(base, e, base.size())) {
    LaurentSeries acc = e > 0 ? base : inverse(base);
    for (std::int64_t i = 1; i < magnitude(e); ++i) {
      acc = e > 0 ? mul(acc, base) : divide(acc, base);
    }
    return acc;
  }
  if (e > 0) return pow_binary(base, static_cast<std::uint64_t>(e));
  return pow_binary(inverse(base), static_cast<std::uint64_t>(-e));
}

LaurentSeries mul_pow(const LaurentSeries& acc, const LaurentSeries& base, std::int64_t e) {
  if (e == 0) return mul(acc, pow(base, 0));
  const auto v = base.valuation();
  if (!v) return mul(acc, pow(base, e));
  const LaurentSeries b = base.normalized();
  if (!prefer_repeated(b, e, std::max(acc.size(), b.size()))) return mul(acc, pow(b, e));
  LaurentSeries r = acc;
  for (std::int64_t i = 0; i < magnitude(e); ++i) r = e > 0 ? mul(r, b) : divide(r, b);
  return r;
}

LaurentSeries substitute_qpow(const LaurentSeries& a, std::int64_t d) {
  if (d < 1) throw Error("substitute_qpow needs d >= 1");
  if (d == 1) return a;
  const std::int64_t offset = a.offset() * d;
  const std::int64_t trunc = a.trunc() * d;
  return with_arith(a.ring(), [&](auto arith) {
    using V = typename decltype(arith)::value_type;
    const auto& src = coeffs_of<V>(a);
    std::vector<V> r(static_cast<std::size_t>(trunc - offset));
    for (std::size_t i = 0; i < src.size(); ++i) r[i * static_cast<std::size_t>(d)] = src[i];
    return make_series(a.ring(), offset, std::move(r));
  });
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.ring() != b.ring() || a.trunc() != b.trunc()) return false;
  const std::int64_t lo = std::min(a.offset(), b.offset());
  for (std::int64_t e = lo; e < a.trunc(); ++e) {
    if (a.coefficient(e) != b.coefficient(e)) return false;
  }
  return true;
}

}  // namespace qseries
